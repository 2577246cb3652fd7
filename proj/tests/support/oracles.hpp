#pragma once

// Slow reference computations for tests. Each one takes a different route
// from the library code it is compared against.

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <vector>

#include "shidoku/action.hpp"
#include "shidoku/board.hpp"
#include "shidoku/group.hpp"

namespace shidoku::oracle {

/// Region check written out by coordinates, independent of regions().
inline bool is_shidoku(const std::array<int, 16>& v) {
  auto distinct = [](std::array<int, 4> xs) {
    std::sort(xs.begin(), xs.end());
    return xs == std::array<int, 4>{1, 2, 3, 4};
  };
  for (int k = 0; k < 4; ++k) {
    if (!distinct({v[4 * k], v[4 * k + 1], v[4 * k + 2], v[4 * k + 3]})) return false;
    if (!distinct({v[k], v[4 + k], v[8 + k], v[12 + k]})) return false;
  }
  for (int top : {0, 2}) {
    for (int left : {0, 2}) {
      const int c = 4 * top + left;
      if (!distinct({v[c], v[c + 1], v[c + 4], v[c + 5]})) return false;
    }
  }
  return true;
}

/// Filtered exhaustive scan over the 24^4 grids whose rows are permutations
/// of 1..4 (every Shidoku board is one of them).
inline std::vector<std::array<int, 16>> brute_force_boards() {
  std::vector<std::array<int, 4>> rows;
  std::array<int, 4> p{1, 2, 3, 4};
  do rows.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::vector<std::array<int, 16>> out;
  for (const auto& a : rows)
    for (const auto& b : rows)
      for (const auto& c : rows)
        for (const auto& d : rows) {
          std::array<int, 16> v{};
          std::copy(a.begin(), a.end(), v.begin());
          std::copy(b.begin(), b.end(), v.begin() + 4);
          std::copy(c.begin(), c.end(), v.begin() + 8);
          std::copy(d.begin(), d.end(), v.begin() + 12);
          if (is_shidoku(v)) out.push_back(v);
        }
  std::sort(out.begin(), out.end());
  return out;
}

inline Board to_board(const std::array<int, 16>& v) {
  std::array<Value, 16> b{};
  for (int i = 0; i < 16; ++i) b[i] = static_cast<Value>(v[i]);
  return Board(b);
}

/// Closure by repeatedly multiplying every pair of known elements until
/// nothing new appears.
inline std::set<SymmetryElement> pairwise_closure(const std::vector<SymmetryElement>& gens) {
  std::set<SymmetryElement> known{SymmetryElement::identity()};
  known.insert(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<SymmetryElement> snapshot(known.begin(), known.end());
    for (const auto& a : snapshot)
      for (const auto& b : snapshot)
        if (known.insert(a * b).second) grew = true;
  }
  return known;
}

/// Classes from the definition {g x g^-1 : g in G}, over every element g.
inline std::vector<std::set<SymmetryElement>> definition_classes(
    const std::vector<SymmetryElement>& group) {
  std::vector<std::set<SymmetryElement>> out;
  std::set<SymmetryElement> done;
  for (const auto& x : group) {
    if (done.count(x)) continue;
    std::set<SymmetryElement> cls;
    for (const auto& g : group) cls.insert(g * x * g.inverse());
    done.insert(cls.begin(), cls.end());
    out.push_back(cls);
  }
  return out;
}

/// Orbits by applying every group element to every board.
inline std::set<std::set<Board>> orbits_by_elements(const std::vector<SymmetryElement>& group,
                                                    const BoardSet& boards) {
  std::set<std::set<Board>> out;
  for (const Board& b : boards) {
    std::set<Board> orbit;
    for (const auto& e : group) orbit.insert(apply(e, b));
    out.insert(orbit);
  }
  return out;
}

inline std::set<std::set<Board>> as_sets(const OrbitPartition& p) {
  std::set<std::set<Board>> out;
  for (const BoardSet& block : p.blocks()) out.insert(std::set<Board>(block.begin(), block.end()));
  return out;
}

/// Quarter turn read off a 4x4 grid of cell indices: rotating the grid
/// clockwise puts the cell that was at (row 4 - j, column i) at (i, j)
/// (0-based), so that cell's content moves to 4i + j.
inline std::array<int, 16> rotation_images() {
  int grid[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) grid[i][j] = 4 * i + j;
  std::array<int, 16> image{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) image[grid[3 - j][i]] = 4 * i + j;
  return image;
}

}  // namespace shidoku::oracle
