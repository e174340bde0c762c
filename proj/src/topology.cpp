#include "cycleprefix/topology.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace cycleprefix {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "index-out-of-range";
    case ErrorKind::SymbolPresent: return "symbol-present";
    case ErrorKind::SymbolOutOfAlphabet: return "symbol-out-of-alphabet";
    case ErrorKind::InvalidVertex: return "invalid-vertex";
    case ErrorKind::InvalidParams: return "invalid-params";
    case ErrorKind::ParameterDomain: return "parameter-domain";
    case ErrorKind::NonBijective: return "non-bijective";
    case ErrorKind::SameVertex: return "same-vertex";
    case ErrorKind::UndefinedAlpha: return "undefined-alpha";
    case ErrorKind::DomainError: return "domain-error";
    case ErrorKind::InstanceTooLarge: return "instance-too-large";
    case ErrorKind::Parse: return "parse-error";
  }
  return "unknown";
}

NetworkParams::NetworkParams(int delta, int dee, int r) : delta_(delta), dee_(dee), r_(r) {
  if (dee < 2) throw Error(ErrorKind::InvalidParams, "D must be at least 2, got " + std::to_string(dee));
  if (delta < dee)
    throw Error(ErrorKind::InvalidParams,
                "delta must be at least D (delta=" + std::to_string(delta) + ", D=" + std::to_string(dee) + ")");
  if (delta > kMaxDelta) throw Error(ErrorKind::InvalidParams, "delta too large");
  if (r < 0 || r > dee - 1)
    throw Error(ErrorKind::InvalidParams, "r must lie in 0..D-1, got " + std::to_string(r));
}

std::string NetworkParams::to_string() const {
  std::ostringstream os;
  os << "Gamma_" << delta_ << "(" << dee_;
  if (r_ > 0) os << ",-" << r_;
  os << ")";
  return os.str();
}

Vertex::Vertex(std::vector<Symbol> seq) : seq_(std::move(seq)) {
  if (seq_.empty()) throw Error(ErrorKind::InvalidVertex, "empty sequence");
  for (std::size_t i = 0; i < seq_.size(); ++i) {
    if (seq_[i] == 0) throw Error(ErrorKind::InvalidVertex, "symbol 0 is not in the alphabet");
    for (std::size_t j = 0; j < i; ++j)
      if (seq_[i] == seq_[j])
        throw Error(ErrorKind::InvalidVertex, "repeated symbol " + std::to_string(seq_[i]));
  }
}

Vertex Vertex::parse(std::string_view text) {
  std::vector<Symbol> seq;
  auto bad = [&] { return Error(ErrorKind::Parse, "cannot parse vertex '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  if (text.find('-') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') throw bad();
      seq.push_back(static_cast<Symbol>(c - '0'));
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find('-', start);
      if (end == std::string_view::npos) end = text.size();
      auto piece = text.substr(start, end - start);
      int value = 0;
      auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
      if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size() || value < 1 || value > 0xffff)
        throw bad();
      seq.push_back(static_cast<Symbol>(value));
      start = end + 1;
    }
  }
  return Vertex(std::move(seq));
}

int Vertex::position_of(Symbol s) const noexcept {
  for (std::size_t i = 0; i < seq_.size(); ++i)
    if (seq_[i] == s) return static_cast<int>(i) + 1;
  return 0;
}

std::string Vertex::to_string() const {
  bool digits = std::all_of(seq_.begin(), seq_.end(), [](Symbol s) { return s <= 9; });
  std::string out;
  for (std::size_t i = 0; i < seq_.size(); ++i) {
    if (!digits && i > 0) out += '-';
    out += std::to_string(seq_[i]);
  }
  return out;
}

std::string Vertex::to_string(const NetworkParams& params) const {
  if (params.alphabet_size() <= 9) return to_string();
  std::string out;
  for (std::size_t i = 0; i < seq_.size(); ++i) {
    if (i > 0) out += '-';
    out += std::to_string(seq_[i]);
  }
  return out;
}

void validate(const Vertex& x, const NetworkParams& params) {
  if (x.size() != params.dee())
    throw Error(ErrorKind::InvalidVertex, "vertex " + x.to_string() + " does not have length D=" +
                                              std::to_string(params.dee()));
  for (auto s : x.symbols())
    if (!params.in_alphabet(s))
      throw Error(ErrorKind::SymbolOutOfAlphabet,
                  "vertex " + x.to_string() + " uses symbol outside 1.." + std::to_string(params.alphabet_size()));
}

Vertex parse_vertex(std::string_view text, const NetworkParams& params) {
  Vertex v = Vertex::parse(text);
  validate(v, params);
  return v;
}

std::string ArcOp::to_string() const {
  return (kind == Kind::Rotation ? "R" : "S") + std::to_string(value);
}

Vertex standard_origin(const NetworkParams& params) {
  std::vector<Symbol> seq(static_cast<std::size_t>(params.dee()));
  for (int j = 0; j < params.dee(); ++j) seq[static_cast<std::size_t>(j)] = static_cast<Symbol>(j + 1);
  return Vertex(std::move(seq));
}

Vertex rotate(const Vertex& x, int k) {
  if (k < 2 || k > x.size())
    throw Error(ErrorKind::IndexOutOfRange,
                "rotation index " + std::to_string(k) + " outside 2.." + std::to_string(x.size()));
  std::vector<Symbol> seq(x.symbols().begin(), x.symbols().end());
  std::rotate(seq.begin(), seq.begin() + (k - 1), seq.begin() + k);
  return Vertex(std::move(seq));
}

Vertex shift(const Vertex& x, Symbol y, const NetworkParams& params) {
  if (!params.in_alphabet(y))
    throw Error(ErrorKind::SymbolOutOfAlphabet, "symbol " + std::to_string(y) + " not in 1.." +
                                                    std::to_string(params.alphabet_size()));
  if (x.contains(y))
    throw Error(ErrorKind::SymbolPresent, "symbol " + std::to_string(y) + " occurs in " + x.to_string());
  std::vector<Symbol> seq;
  seq.reserve(static_cast<std::size_t>(x.size()));
  seq.push_back(y);
  seq.insert(seq.end(), x.symbols().begin(), x.symbols().end() - 1);
  return Vertex(std::move(seq));
}

Vertex compose(Symbol i, const Vertex& x, const NetworkParams& params) {
  if (!params.in_alphabet(i))
    throw Error(ErrorKind::SymbolOutOfAlphabet, "symbol " + std::to_string(i) + " not in 1.." +
                                                    std::to_string(params.alphabet_size()));
  int pos = x.position_of(i);
  if (pos == 1) return x;
  if (pos > 1) return rotate(x, pos);
  return shift(x, i, params);
}

std::vector<Vertex> out_neighbors(const Vertex& x, const NetworkParams& params) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(params.degree()));
  for (int k = params.r() + 2; k <= x.size(); ++k) out.push_back(rotate(x, k));
  for (int y = 1; y <= params.alphabet_size(); ++y)
    if (!x.contains(static_cast<Symbol>(y))) out.push_back(shift(x, static_cast<Symbol>(y), params));
  return out;
}

std::vector<Vertex> in_neighbors(const Vertex& y, const NetworkParams& params) {
  if (params.r() != 0) throw Error(ErrorKind::ParameterDomain, "in_neighbors is defined for r = 0 only");
  validate(y, params);
  const int dee = params.dee();
  // M(12...D): Y_i = 2..i 1 (i+1)..D for i <= D, and 2..D i beyond.
  std::vector<Vertex> origin_preds;
  for (int i = 2; i <= params.alphabet_size(); ++i) {
    std::vector<Symbol> seq;
    if (i <= dee) {
      for (int s = 2; s <= i; ++s) seq.push_back(static_cast<Symbol>(s));
      seq.push_back(1);
      for (int s = i + 1; s <= dee; ++s) seq.push_back(static_cast<Symbol>(s));
    } else {
      for (int s = 2; s <= dee; ++s) seq.push_back(static_cast<Symbol>(s));
      seq.push_back(static_cast<Symbol>(i));
    }
    origin_preds.emplace_back(std::move(seq));
  }
  auto back = Relabeling::normalizing(y, params).inverse();
  std::vector<Vertex> out;
  out.reserve(origin_preds.size());
  for (const auto& v : origin_preds) out.push_back(back.apply(v));
  return out;
}

std::vector<Symbol> dead_angle(const Vertex& x, int r) {
  if (r < 0 || r > x.size() - 1)
    throw Error(ErrorKind::IndexOutOfRange, "dead angle needs 0 <= r <= D-1");
  return {x.symbols().begin(), x.symbols().begin() + r + 1};
}

std::optional<ArcOp> arc_between(const Vertex& src, const Vertex& dst, const NetworkParams& params) {
  if (src.size() != dst.size() || src.size() != params.dee()) return std::nullopt;
  Symbol head = dst.front();
  int pos = src.position_of(head);
  if (pos == 1) return std::nullopt;
  Vertex expected = pos > 1 ? rotate(src, pos) : shift(src, head, params);
  if (expected != dst) return std::nullopt;
  if (pos > 1) {
    if (pos < params.r() + 2) return std::nullopt;
    return ArcOp{ArcOp::Kind::Rotation, pos};
  }
  return ArcOp{ArcOp::Kind::Shift, head};
}

std::uint64_t vertex_count(const NetworkParams& params) {
  std::uint64_t n = 1;
  for (int j = 0; j < params.dee(); ++j) n *= static_cast<std::uint64_t>(params.alphabet_size() - j);
  return n;
}

Relabeling Relabeling::identity(const NetworkParams& params) {
  std::vector<Symbol> images(static_cast<std::size_t>(params.alphabet_size()));
  for (std::size_t s = 0; s < images.size(); ++s) images[s] = static_cast<Symbol>(s + 1);
  return Relabeling(std::move(images));
}

Relabeling Relabeling::from_images(std::vector<Symbol> images) {
  std::vector<bool> hit(images.size() + 1, false);
  for (auto s : images) {
    if (s < 1 || s > images.size() || hit[s])
      throw Error(ErrorKind::NonBijective, "relabeling is not a bijection on 1.." + std::to_string(images.size()));
    hit[s] = true;
  }
  return Relabeling(std::move(images));
}

Relabeling Relabeling::normalizing(const Vertex& y, const NetworkParams& params) {
  validate(y, params);
  std::vector<Symbol> images(static_cast<std::size_t>(params.alphabet_size()), 0);
  for (int j = 1; j <= y.size(); ++j) images[y.at(j) - 1u] = static_cast<Symbol>(j);
  Symbol next = static_cast<Symbol>(y.size() + 1);
  for (auto& img : images)
    if (img == 0) img = next++;
  return Relabeling(std::move(images));
}

Vertex Relabeling::apply(const Vertex& x) const {
  std::vector<Symbol> seq;
  seq.reserve(static_cast<std::size_t>(x.size()));
  for (auto s : x.symbols()) {
    if (s < 1 || s > images_.size())
      throw Error(ErrorKind::SymbolOutOfAlphabet, "relabeling does not cover symbol " + std::to_string(s));
    seq.push_back((*this)(s));
  }
  return Vertex(std::move(seq));
}

Relabeling Relabeling::inverse() const {
  std::vector<Symbol> inv(images_.size());
  for (std::size_t s = 0; s < images_.size(); ++s) inv[images_[s] - 1u] = static_cast<Symbol>(s + 1);
  return Relabeling(std::move(inv));
}

Relabeling Relabeling::then(const Relabeling& next) const {
  if (next.images_.size() != images_.size())
    throw Error(ErrorKind::NonBijective, "relabelings over different alphabets");
  std::vector<Symbol> out(images_.size());
  for (std::size_t s = 0; s < images_.size(); ++s) out[s] = next(images_[s]);
  return Relabeling(std::move(out));
}

}  // namespace cycleprefix
