#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "shidoku/board.hpp"

namespace shidoku {

class CycleParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bijection on {0, ..., N-1}. Text forms (cycle notation) use 1-based
/// points, matching cell indices and board values.
///
/// Composition: `a * b` is a∘b, the map i -> a(b(i)); the right factor acts
/// first.
template <std::size_t N>
class Permutation {
 public:
  using Image = std::array<std::uint8_t, N>;

  Permutation() {
    for (std::size_t i = 0; i < N; ++i) image_[i] = static_cast<std::uint8_t>(i);
  }

  /// `image[i]` is the 0-based image of point i. Throws std::invalid_argument
  /// unless `image` is a bijection.
  explicit Permutation(const Image& image) : image_(image) {
    unsigned seen = 0;
    for (auto p : image_) {
      if (p >= N || (seen & (1u << p))) {
        throw std::invalid_argument("permutation image is not a bijection");
      }
      seen |= 1u << p;
    }
  }

  static Permutation identity() { return Permutation(); }

  /// Builds from a 0-based point map.
  template <typename F>
  static Permutation from_map(F&& map) {
    Image image{};
    for (std::size_t i = 0; i < N; ++i) image[i] = static_cast<std::uint8_t>(map(i));
    return Permutation(image);
  }

  std::size_t operator()(std::size_t point) const { return image_[point]; }
  const Image& image() const { return image_; }

  bool is_identity() const { return *this == Permutation(); }

  Permutation inverse() const {
    Image inv{};
    for (std::size_t i = 0; i < N; ++i) inv[image_[i]] = static_cast<std::uint8_t>(i);
    return Permutation(inv, Unchecked{});
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    Image out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = a.image_[b.image_[i]];
    return Permutation(out, Unchecked{});
  }

  /// Smallest k >= 1 with p^k = id.
  std::size_t order() const {
    std::size_t k = 1;
    Permutation p = *this;
    while (!p.is_identity()) {
      p = p * *this;
      ++k;
    }
    return k;
  }

  auto operator<=>(const Permutation&) const = default;

 private:
  struct Unchecked {};
  Permutation(const Image& image, Unchecked) : image_(image) {}

  Image image_;
};

/// Permutation of the 16 cells.
using PositionPerm = Permutation<kCellCount>;
/// Permutation of the 4 values.
using Relabeling = Permutation<kValueCount>;

template <std::size_t N>
Permutation<N> compose(const Permutation<N>& a, const Permutation<N>& b) {
  return a * b;
}

template <std::size_t N>
Permutation<N> inverse(const Permutation<N>& a) {
  return a.inverse();
}

/// Disjoint cycles with 1-based points, each cycle starting at its smallest
/// point, cycles ordered by that point, fixed points omitted. The identity
/// prints as "".
template <std::size_t N>
std::string cycle_notation(const Permutation<N>& p);

/// Inverse of cycle_notation. Accepts "" and "()" for the identity and any
/// whitespace between points. Throws CycleParseError on an out-of-range or
/// repeated point or malformed text.
template <std::size_t N>
Permutation<N> parse_cycles(std::string_view text);

extern template std::string cycle_notation<kCellCount>(const PositionPerm&);
extern template std::string cycle_notation<kValueCount>(const Relabeling&);
extern template PositionPerm parse_cycles<kCellCount>(std::string_view);
extern template Relabeling parse_cycles<kValueCount>(std::string_view);

/// Cell permutation from a map on 1-based (row, column) coordinates: the
/// value in cell (i, j) moves to cell map(i, j).
PositionPerm position_from_grid_map(
    const std::function<std::pair<int, int>(int row, int column)>& map);

/// Quarter-turn clockwise: (row i, column j) -> (row j, column 5 - i).
PositionPerm gen_r();
/// Swap of the third and fourth rows.
PositionPerm gen_s();
/// Transpose: (row i, column j) -> (row j, column i).
PositionPerm gen_t();

/// Swaps two rows (1-based). Only swaps within a band are position
/// symmetries; use swap_bands for the others.
PositionPerm swap_rows(int a, int b);
PositionPerm swap_columns(int a, int b);
PositionPerm swap_bands();
PositionPerm swap_pillars();

/// True iff `x` maps every one of the 288 boards to a valid board.
bool is_position_symmetry(const PositionPerm& x);

/// A cell permutation together with a relabeling. Acting on a board B it
/// produces rel(pos(B)): cells move first, then values are relabeled.
struct SymmetryElement {
  PositionPerm pos;
  Relabeling rel;

  static SymmetryElement identity() { return {}; }
  static SymmetryElement position(const PositionPerm& p) { return {p, Relabeling()}; }
  static SymmetryElement relabel(const Relabeling& r) { return {PositionPerm(), r}; }

  bool is_identity() const { return pos.is_identity() && rel.is_identity(); }
  bool is_position_only() const { return rel.is_identity(); }
  bool is_relabel_only() const { return pos.is_identity(); }

  SymmetryElement inverse() const { return {pos.inverse(), rel.inverse()}; }

  friend SymmetryElement operator*(const SymmetryElement& a, const SymmetryElement& b) {
    return {a.pos * b.pos, a.rel * b.rel};
  }

  auto operator<=>(const SymmetryElement&) const = default;
};

inline SymmetryElement compose(const SymmetryElement& a, const SymmetryElement& b) { return a * b; }
inline SymmetryElement inverse(const SymmetryElement& a) { return a.inverse(); }

/// "pos=<cycles>; rel=<cycles>", the line format of group description files.
std::string to_string(const SymmetryElement& e);
/// Parses the format above. Either half may be omitted ("pos=(1 2)" is a
/// pure position element). Throws CycleParseError.
SymmetryElement parse_symmetry_element(std::string_view text);

struct SymmetryElementHash {
  std::size_t operator()(const SymmetryElement& e) const noexcept;
};

}  // namespace shidoku
