#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shidoku/action.hpp"
#include "shidoku/board.hpp"
#include "shidoku/group.hpp"

namespace shidoku {

/// An orbit of boards under one factor of G4 (relabelings for S4-nests,
/// position symmetries for H4-nests) with its canonical representative.
struct Nest {
  std::string label;
  Board representative;
  BoardSet members;
};

enum class NestFactor { kS4, kH4 };

struct NestEdge {
  std::size_t from;
  std::size_t to;
  std::string generator;
  /// The symmetry from the other factor that carries the image of the
  /// source representative onto the target representative: a relabeling
  /// on S4-nest graphs, a position symmetry (as a word in r, s, t) on
  /// H4-nest graphs. Empty when no correction is needed.
  std::optional<std::string> auxiliary;
  bool involution = false;
};

/// Quotient graph: vertices are nests, one edge per (nest, generator).
struct NestGraph {
  NestFactor factor = NestFactor::kS4;
  std::vector<Nest> vertices;
  std::vector<Generator> generators;
  std::vector<NestEdge> edges;

  /// Components as lists of vertex indices, ordered by smallest index.
  std::vector<std::vector<std::size_t>> components() const;
  std::size_t component_count() const { return components().size(); }
  std::size_t vertex_index(const std::string& label) const;
  /// Target of the edge leaving `from_label` for `generator`.
  const Nest& target(const std::string& from_label, const std::string& generator) const;
};

/// The relabeling of `board` whose upper-left block reads 1 2 / 3 4.
Board s4_canonicalize(const Board& board);
/// The relabeling that s4_canonicalize applies.
Relabeling s4_canonicalizing_relabeling(const Board& board);

/// The twelve S4-nests A..L, each of 24 boards, in label order.
const std::vector<Nest>& s4_nests();

/// Induced action of position generators on the S4-nests.
NestGraph s4_nest_graph(std::span<const Generator> position_gens);

/// The H4-orbit representative with 1s at cells 1, 7, 10, 16, values a, b at
/// cells 6, 11 with a <= b, and c, d at cells 2, 5 with c < d. Built by
/// row/column swaps that place the 1s, then r2 if a > b, then t if c > d.
Board h4_canonicalize(const Board& board);

/// The position symmetry h4_canonicalize applies: h4_canonicalize(B) ==
/// apply(h4_canonicalizing_symmetry(B), B), always an element of H4.
PositionPerm h4_canonicalizing_symmetry(const Board& board);

/// True iff `board` has the representative form described above.
bool has_h4_representative_form(const Board& board);

/// The six H4-nests a..f, labeled in lexicographic order of their
/// representatives.
const std::vector<Nest>& h4_nests();

/// Induced action of relabeling generators on the H4-nests.
NestGraph h4_nest_graph(std::span<const Generator> relabel_gens);

/// H' x S4 is complete, decided on the S4-nest graph of H's generators:
/// exactly two components whose member unions are the Type 1 and Type 2
/// classes.
bool complete_via_s4_nests(std::span<const Generator> position_gens);
/// H4 x S' is complete, decided on the H4-nest graph of S's generators.
bool complete_via_h4_nests(std::span<const Generator> relabel_gens);

/// Golden representatives, row-major.
const std::vector<std::pair<std::string, Board>>& s4_nest_golden();
const std::vector<std::pair<std::string, Board>>& h4_nest_golden();

}  // namespace shidoku
