#include "cycleprefix/routing.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

#include "cycleprefix/oracle.hpp"

namespace cycleprefix {

namespace {

void require_full_graph(const NetworkParams& params, const char* what) {
  if (params.r() != 0)
    throw Error(ErrorKind::ParameterDomain, std::string(what) + " is defined on Gamma_delta(D) only (r = 0)");
}

// Grows a walk by i o current, refusing symbols inside the current dead angle.
class Composer {
 public:
  Composer(Vertex start, const NetworkParams& params) : params_(params) { walk_.vertices.push_back(std::move(start)); }

  const Vertex& current() const { return walk_.vertices.back(); }

  bool in_dead_angle(Symbol s) const {
    int pos = current().position_of(s);
    return pos != 0 && pos <= params_.r() + 1;
  }

  void push(Symbol s) {
    if (in_dead_angle(s))
      throw Error(ErrorKind::DomainError, "symbol " + std::to_string(s) + " lies in the dead angle of " +
                                              current().to_string(params_));
    walk_.vertices.push_back(compose(s, current(), params_));
  }

  /// Smallest symbol of `pool` not yet used and outside the dead angle.
  std::optional<Symbol> pick(const std::vector<Symbol>& pool, const std::vector<Symbol>& used) const {
    std::optional<Symbol> best;
    for (auto s : pool) {
      if (in_dead_angle(s) || std::find(used.begin(), used.end(), s) != used.end()) continue;
      if (!best || s < *best) best = s;
    }
    return best;
  }

  Walk take() && { return std::move(walk_); }

 private:
  const NetworkParams& params_;
  Walk walk_;
};

std::vector<Symbol> slice(const Vertex& x, int first, int last) {
  std::vector<Symbol> out;
  for (int j = first; j <= last; ++j) out.push_back(x.at(j));
  return out;
}

// Drop closed sub-walks so every vertex appears once.
Path erase_loops(Walk walk) {
  Path out;
  std::unordered_map<Vertex, std::size_t> where;
  for (auto& v : walk.vertices) {
    if (auto it = where.find(v); it != where.end()) {
      for (std::size_t j = it->second + 1; j < out.vertices.size(); ++j) where.erase(out.vertices[j]);
      out.vertices.resize(it->second + 1);
      continue;
    }
    where.emplace(v, out.vertices.size());
    out.vertices.push_back(std::move(v));
  }
  return out;
}

// Standard origin -> target in at most D + r steps (D >= 2r + 2).
Walk route_from_origin(const Vertex& target, const NetworkParams& params) {
  const int dee = params.dee();
  const int r = params.r();
  Composer c(standard_origin(params), params);
  std::vector<Symbol> used;
  if (target.back() != 1) {
    // r insertions that keep clear of the last r + 1 target symbols, then
    // shift the whole target in from the back.
    auto preferred = slice(target, 1, dee - r - 1);
    auto blocked = slice(target, dee - r, dee);
    std::vector<Symbol> fallback;
    for (int s = 1; s <= params.alphabet_size(); ++s)
      if (std::find(blocked.begin(), blocked.end(), s) == blocked.end()) fallback.push_back(static_cast<Symbol>(s));
    for (int step = 0; step < r; ++step) {
      auto y = c.pick(preferred, used);
      if (!y) y = c.pick(fallback, used);
      if (!y) throw Error(ErrorKind::DomainError, "no admissible insertion symbol");
      used.push_back(*y);
      c.push(*y);
    }
    for (int j = dee; j >= 1; --j) c.push(target.at(j));
  } else {
    // Park up to r early target symbols in front of 1, then bring in
    // x_{D-1}, ..., x_1; symbol 1 drifts to the last position.
    auto pool = slice(target, 1, dee - r - 2);
    for (int step = 0; step < r; ++step) {
      auto y = c.pick(pool, used);
      if (!y) break;
      used.push_back(*y);
      c.push(*y);
    }
    for (int j = dee - 1; j >= 1; --j) c.push(target.at(j));
  }
  if (c.current() != target) throw Error(ErrorKind::DomainError, "route construction missed its target");
  return std::move(c).take();
}

// Standard origin -> target in exactly D + r steps (D >= 2r + 3).
Walk reach_from_origin(const Vertex& target, const NetworkParams& params) {
  const int dee = params.dee();
  const int r = params.r();
  Composer c(standard_origin(params), params);
  std::vector<Symbol> used;
  const bool ends_in_one = target.back() == 1;
  // x_D != 1: r insertions from x_1..x_{D-r-1}, then D shifts.
  // x_D == 1: r + 1 insertions from x_1..x_{D-r-2}, then D - 1 shifts.
  auto pool = slice(target, 1, ends_in_one ? dee - r - 2 : dee - r - 1);
  const int insertions = ends_in_one ? r + 1 : r;
  for (int step = 0; step < insertions; ++step) {
    auto y = c.pick(pool, used);
    if (!y) throw Error(ErrorKind::DomainError, "no admissible insertion symbol");
    used.push_back(*y);
    c.push(*y);
  }
  for (int j = ends_in_one ? dee - 1 : dee; j >= 1; --j) c.push(target.at(j));
  if (c.current() != target) throw Error(ErrorKind::DomainError, "reach construction missed its target");
  return std::move(c).take();
}

}  // namespace

HeaderSplit header_split(const Vertex& source, const Vertex& target) {
  if (source.size() != target.size())
    throw Error(ErrorKind::InvalidVertex, "vertices of different length");
  const int dee = target.size();
  int header_len = dee;
  if (int j = source.position_of(target.back()); j != 0) {
    bool prefix_in_target = true;
    for (int p = 1; p < j && prefix_in_target; ++p) prefix_in_target = target.contains(source.at(p));
    if (prefix_in_target) {
      // extend the tail leftwards while it stays a subsequence of source
      header_len = dee - 1;
      int pos = j;
      while (header_len > 0) {
        int q = source.position_of(target.at(header_len));
        if (q == 0 || q > pos) break;
        pos = q;
        --header_len;
      }
    }
  }
  HeaderSplit split{target, header_len, {}, {}};
  split.header.assign(target.symbols().begin(), target.symbols().begin() + header_len);
  split.tail.assign(target.symbols().begin() + header_len, target.symbols().end());
  return split;
}

int distance(const Vertex& x, const Vertex& y, const NetworkParams& params) {
  require_full_graph(params, "distance");
  validate(x, params);
  validate(y, params);
  return header_split(x, y).header_len;
}

Path shortest_path(const Vertex& x, const Vertex& y, const NetworkParams& params) {
  require_full_graph(params, "shortest_path");
  validate(x, params);
  validate(y, params);
  if (x == y) throw Error(ErrorKind::SameVertex, "shortest_path needs distinct endpoints");
  auto split = header_split(x, y);
  Path path{{x}};
  for (auto it = split.header.rbegin(); it != split.header.rend(); ++it)
    path.vertices.push_back(compose(*it, path.vertices.back(), params));
  return path;
}

int next_hop_distance_check(const Vertex& x, const Vertex& y, Symbol i, const NetworkParams& params) {
  require_full_graph(params, "next_hop_distance_check");
  if (x == y) throw Error(ErrorKind::SameVertex, "next_hop_distance_check needs d(x, y) >= 1");
  return distance(compose(i, x, params), y, params);
}

Path restricted_route(const Vertex& x, const Vertex& y, const NetworkParams& params) {
  validate(x, params);
  validate(y, params);
  if (params.dee() < 2 * params.r() + 2)
    throw Error(ErrorKind::ParameterDomain, "restricted routing needs D >= 2r + 2 in " + params.to_string());
  if (x == y) throw Error(ErrorKind::SameVertex, "restricted_route needs distinct endpoints");
  // relabel so the source is the standard origin
  auto sigma = Relabeling::normalizing(x, params);
  auto walk = route_from_origin(sigma.apply(y), params);
  return relabel(erase_loops(std::move(walk)), sigma.inverse());
}

Walk reach_walk(const Vertex& x, const Vertex& y, const NetworkParams& params) {
  validate(x, params);
  validate(y, params);
  if (params.dee() < 2 * params.r() + 3)
    throw Error(ErrorKind::ParameterDomain, "exact-length reachability needs D >= 2r + 3 in " + params.to_string());
  auto sigma = Relabeling::normalizing(x, params);
  return relabel(reach_from_origin(sigma.apply(y), params), sigma.inverse());
}

bool is_remote(const Vertex& x, const NetworkParams& params) {
  validate(x, params);
  const int dee = params.dee();
  if (x.at(dee - 1) != 1 || x.at(dee) != dee) return false;
  for (int i = 1; i <= dee - 2; ++i)
    if (x.at(i) > dee) return true;
  return false;
}

RemoteWitness remote_distance_witness(const NetworkParams& params) {
  const int dee = params.dee();
  if (dee < 2 * params.r() + 2)
    throw Error(ErrorKind::ParameterDomain, "remote-vertex distance needs D >= 2r + 2 in " + params.to_string());
  if (dee < 3) throw Error(ErrorKind::ParameterDomain, "no remote vertex exists for D = 2");
  std::vector<Symbol> seq{static_cast<Symbol>(dee + 1)};
  for (int s = 2; s <= dee - 2; ++s) seq.push_back(static_cast<Symbol>(s));
  seq.push_back(1);
  seq.push_back(static_cast<Symbol>(dee));
  Vertex remote(std::move(seq));
  auto table = oracle::bfs_distances(standard_origin(params), params);
  int d = table.at(remote);
  return {remote, d, d == dee + params.r()};
}

}  // namespace cycleprefix
