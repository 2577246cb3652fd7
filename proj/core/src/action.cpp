#include "shidoku/action.hpp"

#include <stdexcept>

#include "shidoku/standard_groups.hpp"
#include "shidoku/union_find.hpp"

namespace shidoku {

Board apply(const PositionPerm& x, const Board& board) {
  std::array<Value, kCellCount> out{};
  for (int i = 0; i < kCellCount; ++i) out[x(i)] = board.at_offset(i);
  return Board(out);
}

Board apply(const Relabeling& sigma, const Board& board) {
  std::array<Value, kCellCount> out{};
  for (int i = 0; i < kCellCount; ++i) {
    const Value v = board.at_offset(i);
    out[i] = (v >= 1 && v <= kValueCount) ? static_cast<Value>(sigma(v - 1) + 1) : v;
  }
  return Board(out);
}

Board apply(const SymmetryElement& e, const Board& board) {
  return apply(e.rel, apply(e.pos, board));
}

OrbitPartition::OrbitPartition(BoardSet universe, std::vector<std::size_t> block_of_index)
    : universe_(std::move(universe)), block_of_index_(std::move(block_of_index)) {
  if (block_of_index_.size() != universe_.size()) {
    throw std::invalid_argument("OrbitPartition: one block id per board required");
  }
  std::vector<std::vector<Board>> members;
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    const std::size_t b = block_of_index_[i];
    if (b >= members.size()) members.resize(b + 1);
    members[b].push_back(universe_[i]);
  }
  for (auto& m : members) blocks_.emplace_back(std::move(m));
}

std::vector<std::size_t> OrbitPartition::block_sizes() const {
  std::vector<std::size_t> sizes;
  for (const BoardSet& block : blocks_) sizes.push_back(block.size());
  return sizes;
}

std::size_t OrbitPartition::block_of(const Board& board) const {
  const auto idx = universe_.index_of(board);
  if (!idx) throw std::out_of_range("board " + board.to_string() + " is not in the partition");
  return block_of_index_[*idx];
}

OrbitPartition orbits(std::span<const Generator> gens, const BoardSet& boards) {
  UnionFind sets(boards.size());
  for (std::size_t i = 0; i < boards.size(); ++i) {
    for (const Generator& g : gens) {
      const auto j = boards.index_of(apply(g.element, boards[i]));
      if (!j) {
        throw std::invalid_argument("board set is not closed under generator " + g.name);
      }
      sets.unite(i, *j);
    }
  }
  return OrbitPartition(boards, sets.component_ids());
}

OrbitPartition orbits(const SymmetryGroup& g, const BoardSet& boards) {
  return orbits(g.generators(), boards);
}

const OrbitPartition& full_partition() {
  static const OrbitPartition partition = orbits(standard::g4(), all_boards());
  return partition;
}

bool is_complete(const SymmetryGroup& g) {
  return orbits(g, all_boards()) == full_partition();
}

bool is_involution(const SymmetryElement& e) { return (e * e).is_identity(); }

std::vector<std::vector<std::size_t>> OrbitGraph::components() const {
  UnionFind sets(vertices.size());
  for (const OrbitGraphEdge& edge : edges) sets.unite(edge.from, edge.to);
  const auto ids = sets.component_ids();
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t v = 0; v < ids.size(); ++v) {
    if (ids[v] >= out.size()) out.resize(ids[v] + 1);
    out[ids[v]].push_back(v);
  }
  return out;
}

OrbitGraph orbit_graph(std::span<const Generator> gens, const BoardSet& boards) {
  OrbitGraph graph{boards, {gens.begin(), gens.end()}, {}};
  graph.edges.reserve(boards.size() * gens.size());
  for (std::size_t i = 0; i < boards.size(); ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const auto j = boards.index_of(apply(gens[k].element, boards[i]));
      if (!j) {
        throw std::invalid_argument("board set is not closed under generator " + gens[k].name);
      }
      graph.edges.push_back({i, *j, k});
    }
  }
  return graph;
}

}  // namespace shidoku
