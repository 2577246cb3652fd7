#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "shidoku/board.hpp"
#include "shidoku/group.hpp"

namespace shidoku {

/// x(B): the value in cell i of B moves to cell x(i).
Board apply(const PositionPerm& x, const Board& board);
/// sigma(B): every value v becomes sigma(v).
Board apply(const Relabeling& sigma, const Board& board);
/// rel(pos(B)). With this convention apply(a * b, B) == apply(a, apply(b, B)).
Board apply(const SymmetryElement& e, const Board& board);

/// A partition of a board set into blocks, numbered in order of their
/// smallest board.
class OrbitPartition {
 public:
  OrbitPartition(BoardSet universe, std::vector<std::size_t> block_of_index);

  const BoardSet& universe() const { return universe_; }
  const std::vector<BoardSet>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  /// Block sizes in block order.
  std::vector<std::size_t> block_sizes() const;

  /// Throws std::out_of_range if `board` is not in the universe.
  std::size_t block_of(const Board& board) const;

  bool operator==(const OrbitPartition& other) const { return blocks_ == other.blocks_; }

 private:
  BoardSet universe_;
  std::vector<std::size_t> block_of_index_;
  std::vector<BoardSet> blocks_;
};

/// Orbits of the group generated by `gens`, by union-find over
/// (board, generator) applications. `boards` must be closed under the
/// generators (std::invalid_argument otherwise).
OrbitPartition orbits(std::span<const Generator> gens, const BoardSet& boards);
/// Orbits of `g` acting on `boards`, via g's generators.
OrbitPartition orbits(const SymmetryGroup& g, const BoardSet& boards);

/// Orbits of G4 on all 288 boards: the Type 1 (96) / Type 2 (192) split.
const OrbitPartition& full_partition();

/// True iff `g` induces exactly the same partition of the 288 boards as G4.
bool is_complete(const SymmetryGroup& g);

/// True iff e * e is the identity.
bool is_involution(const SymmetryElement& e);

struct OrbitGraphEdge {
  std::size_t from;
  std::size_t to;
  std::size_t generator;
};

/// Vertices are boards; one edge per (board, generator) pair with the
/// generator's index as its label. Self-loops are kept.
struct OrbitGraph {
  BoardSet vertices;
  std::vector<Generator> generators;
  std::vector<OrbitGraphEdge> edges;

  /// Weakly connected components, as lists of vertex indices.
  std::vector<std::vector<std::size_t>> components() const;
};

OrbitGraph orbit_graph(std::span<const Generator> gens, const BoardSet& boards);

}  // namespace shidoku
