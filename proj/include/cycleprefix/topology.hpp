#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cycleprefix/error.hpp"

namespace cycleprefix {

/// Alphabet symbol. Symbols are the integers 1..delta+1; 0 is never a symbol.
using Symbol = std::uint16_t;

/// Parameters (delta, D, r) of the link-deleted cycle prefix digraph. r = 0
/// is the full digraph; r >= 1 deletes the partial rotations R_2..R_{r+1}.
class NetworkParams {
 public:
  static constexpr int kMaxDelta = 254;

  NetworkParams(int delta, int dee, int r = 0);

  int delta() const noexcept { return delta_; }
  int dee() const noexcept { return dee_; }
  int r() const noexcept { return r_; }

  int alphabet_size() const noexcept { return delta_ + 1; }
  int degree() const noexcept { return delta_ - r_; }
  bool in_alphabet(int s) const noexcept { return s >= 1 && s <= delta_ + 1; }

  /// Same (delta, D) with a different number of deleted rotations.
  NetworkParams with_r(int r) const { return NetworkParams(delta_, dee_, r); }

  std::string to_string() const;

  friend bool operator==(const NetworkParams&, const NetworkParams&) = default;

 private:
  int delta_;
  int dee_;
  int r_;
};

/// A D-permutation: D pairwise distinct symbols. Positions are 1-based in
/// every accessor that takes a position.
class Vertex {
 public:
  Vertex() = default;
  explicit Vertex(std::vector<Symbol> seq);
  Vertex(std::initializer_list<Symbol> seq) : Vertex(std::vector<Symbol>(seq)) {}

  /// Accepts plain digit strings ("1234") and hyphen-joined symbols
  /// ("10-3-1-2").
  static Vertex parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(seq_.size()); }
  Symbol at(int pos) const { return seq_.at(static_cast<std::size_t>(pos - 1)); }
  Symbol front() const { return seq_.front(); }
  Symbol back() const { return seq_.back(); }
  std::span<const Symbol> symbols() const noexcept { return seq_; }

  bool contains(Symbol s) const noexcept { return position_of(s) != 0; }
  /// 1-based position of `s`, or 0 when absent.
  int position_of(Symbol s) const noexcept;

  /// Digits when every symbol is a single digit, hyphen-joined otherwise.
  std::string to_string() const;
  /// Text format fixed by the instance: hyphens iff delta + 1 > 9.
  std::string to_string(const NetworkParams& params) const;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
  friend bool operator==(const Vertex&, const Vertex&) = default;

 private:
  std::vector<Symbol> seq_;
};

/// Throws InvalidVertex unless `x` is a vertex of the digraph given by params.
void validate(const Vertex& x, const NetworkParams& params);
Vertex parse_vertex(std::string_view text, const NetworkParams& params);

struct ArcOp {
  enum class Kind { Rotation, Shift };
  Kind kind;
  int value;  // k for R_k, the inserted symbol for S_y

  std::string to_string() const;
  friend bool operator==(const ArcOp&, const ArcOp&) = default;
};

Vertex standard_origin(const NetworkParams& params);

/// R_k: move the k-th symbol to the front, 2 <= k <= D.
Vertex rotate(const Vertex& x, int k);

/// S_y: prepend y (absent from x) and drop the last symbol.
Vertex shift(const Vertex& x, Symbol y, const NetworkParams& params);

/// i o X: rotate i to the front if present, shift it in otherwise. Returns x
/// itself when i = x_1.
Vertex compose(Symbol i, const Vertex& x, const NetworkParams& params);

/// Out-neighbours in Gamma_delta(D, -r): rotations R_{r+2}..R_D followed by
/// shifts in increasing symbol order.
std::vector<Vertex> out_neighbors(const Vertex& x, const NetworkParams& params);

/// In-neighbours M(y) in Gamma_delta(D) (r = 0 only), ordered as Y_2..Y_{delta+1}
/// after conjugating y to the standard origin.
std::vector<Vertex> in_neighbors(const Vertex& y, const NetworkParams& params);

/// The first r + 1 symbols of x.
std::vector<Symbol> dead_angle(const Vertex& x, int r);

/// The operation taking src to dst in Gamma_delta(D, -r), if (src, dst) is an arc.
std::optional<ArcOp> arc_between(const Vertex& src, const Vertex& dst, const NetworkParams& params);
inline bool is_arc(const Vertex& src, const Vertex& dst, const NetworkParams& params) {
  return arc_between(src, dst, params).has_value();
}

/// (delta+1)(delta)...(delta+2-D).
std::uint64_t vertex_count(const NetworkParams& params);

/// A permutation of the alphabet 1..delta+1, applied symbol-wise to vertices.
class Relabeling {
 public:
  static Relabeling identity(const NetworkParams& params);
  /// images[s - 1] is the image of symbol s. Throws NonBijective.
  static Relabeling from_images(std::vector<Symbol> images);
  /// sigma(y_j) = j; the remaining symbols go to D+1, D+2, ... in increasing order.
  static Relabeling normalizing(const Vertex& y, const NetworkParams& params);

  Symbol operator()(Symbol s) const { return images_.at(static_cast<std::size_t>(s - 1)); }
  Vertex apply(const Vertex& x) const;
  Relabeling inverse() const;
  /// x -> next(this(x)).
  Relabeling then(const Relabeling& next) const;
  int alphabet_size() const noexcept { return static_cast<int>(images_.size()); }

  friend bool operator==(const Relabeling&, const Relabeling&) = default;

 private:
  explicit Relabeling(std::vector<Symbol> images) : images_(std::move(images)) {}
  std::vector<Symbol> images_;
};

inline Vertex relabel(const Vertex& x, const Relabeling& sigma) { return sigma.apply(x); }

}  // namespace cycleprefix

template <>
struct std::hash<cycleprefix::Vertex> {
  std::size_t operator()(const cycleprefix::Vertex& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto s : v.symbols()) h = (h ^ s) * 1099511628211ull;
    return h;
  }
};
