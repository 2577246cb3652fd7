#include "shidoku/nests.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "shidoku/standard_groups.hpp"
#include "shidoku/union_find.hpp"

namespace shidoku {

namespace {

Board board(std::string_view rows) { return Board::from_string(rows); }

// Offsets of the cells the H4 representative form constrains.
constexpr int kCellC = 1;   // cell 2
constexpr int kCellD = 4;   // cell 5
constexpr int kCellA = 5;   // cell 6
constexpr int kCellB = 10;  // cell 11
constexpr std::array<int, 4> kOnesOffsets{0, 6, 9, 15};  // cells 1, 7, 10, 16

std::size_t board_index(const Board& b) {
  const auto idx = all_boards().index_of(b);
  if (!idx) throw std::invalid_argument("not a Shidoku board: " + b.to_string());
  return *idx;
}

// Maps every one of the 288 boards to the index of its nest.
std::vector<std::size_t> nest_lookup(const std::vector<Nest>& nests) {
  std::vector<std::size_t> lookup(all_boards().size(), static_cast<std::size_t>(-1));
  for (std::size_t n = 0; n < nests.size(); ++n) {
    for (const Board& member : nests[n].members) lookup[board_index(member)] = n;
  }
  return lookup;
}

using AuxiliaryFinder =
    std::function<std::optional<std::string>(const Board& image, const Board& target)>;

NestGraph build_nest_graph(NestFactor factor, const std::vector<Nest>& nests,
                           std::span<const Generator> gens, const AuxiliaryFinder& auxiliary) {
  NestGraph graph{factor, nests, {gens.begin(), gens.end()}, {}};
  const auto lookup = nest_lookup(nests);
  for (std::size_t n = 0; n < nests.size(); ++n) {
    for (const Generator& g : gens) {
      const Board image = apply(g.element, nests[n].representative);
      const std::size_t to = lookup[board_index(image)];
      graph.edges.push_back(
          {n, to, g.name, auxiliary(image, nests[to].representative), is_involution(g.element)});
    }
  }
  return graph;
}

bool matches_full_partition(const NestGraph& graph) {
  const auto components = graph.components();
  const auto& full = full_partition();
  if (components.size() != full.block_count()) return false;
  for (const auto& component : components) {
    std::vector<Board> members;
    for (std::size_t v : component) {
      const auto& nest = graph.vertices[v].members;
      members.insert(members.end(), nest.begin(), nest.end());
    }
    const BoardSet merged(std::move(members));
    if (std::find(full.blocks().begin(), full.blocks().end(), merged) == full.blocks().end()) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::vector<std::size_t>> NestGraph::components() const {
  UnionFind sets(vertices.size());
  for (const NestEdge& edge : edges) sets.unite(edge.from, edge.to);
  const auto ids = sets.component_ids();
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t v = 0; v < ids.size(); ++v) {
    if (ids[v] >= out.size()) out.resize(ids[v] + 1);
    out[ids[v]].push_back(v);
  }
  return out;
}

std::size_t NestGraph::vertex_index(const std::string& label) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].label == label) return i;
  }
  throw std::out_of_range("no nest labeled '" + label + "'");
}

const Nest& NestGraph::target(const std::string& from_label, const std::string& generator) const {
  const std::size_t from = vertex_index(from_label);
  for (const NestEdge& edge : edges) {
    if (edge.from == from && edge.generator == generator) return vertices[edge.to];
  }
  throw std::out_of_range("no edge " + generator + " from nest " + from_label);
}

const std::vector<std::pair<std::string, Board>>& s4_nest_golden() {
  static const std::vector<std::pair<std::string, Board>> golden{
      {"A", board("1234341241232341")}, {"B", board("1234341221434321")},
      {"C", board("1243341221344321")}, {"D", board("1243342141322314")},
      {"E", board("1234342121434312")}, {"F", board("1243342121344312")},
      {"G", board("1234341243212143")}, {"H", board("1243341243212134")},
      {"I", board("1234341223414123")}, {"J", board("1234342143122143")},
      {"K", board("1243342143122134")}, {"L", board("1243342123144132")},
  };
  return golden;
}

const std::vector<std::pair<std::string, Board>>& h4_nest_golden() {
  static const std::vector<std::pair<std::string, Board>> golden{
      {"a", board("1234341221434321")}, {"b", board("1234431221433421")},
      {"c", board("1243431221343421")}, {"d", board("1324421331422431")},
      {"e", board("1342421321343421")}, {"f", board("1342421331242431")},
  };
  return golden;
}

Relabeling s4_canonicalizing_relabeling(const Board& b) {
  Relabeling::Image image{};
  // Upper-left block, row-major: cells 1, 2, 5, 6.
  constexpr std::array<int, 4> kBlock{0, 1, 4, 5};
  for (int k = 0; k < 4; ++k) image[b.at_offset(kBlock[k]) - 1] = static_cast<std::uint8_t>(k);
  return Relabeling(image);
}

Board s4_canonicalize(const Board& b) { return apply(s4_canonicalizing_relabeling(b), b); }

const std::vector<Nest>& s4_nests() {
  static const std::vector<Nest> nests = [] {
    std::map<Board, std::vector<Board>> by_rep;
    for (const Board& b : all_boards()) by_rep[s4_canonicalize(b)].push_back(b);
    std::vector<Nest> out;
    for (const auto& [label, golden] : s4_nest_golden()) {
      auto it = by_rep.find(golden);
      if (it == by_rep.end()) {
        throw std::logic_error("S4-nest representative " + label + " not found");
      }
      out.push_back({label, golden, BoardSet(it->second)});
    }
    if (out.size() != by_rep.size()) throw std::logic_error("unlabeled S4-nest");
    return out;
  }();
  return nests;
}

NestGraph s4_nest_graph(std::span<const Generator> position_gens) {
  for (const Generator& g : position_gens) {
    if (!g.element.is_position_only()) {
      throw std::invalid_argument("S4-nest graph generators must be position symmetries");
    }
  }
  return build_nest_graph(NestFactor::kS4, s4_nests(), position_gens,
                          [](const Board& image, const Board&) -> std::optional<std::string> {
                            const Relabeling sigma = s4_canonicalizing_relabeling(image);
                            if (sigma.is_identity()) return std::nullopt;
                            return cycle_notation(sigma);
                          });
}

PositionPerm h4_canonicalizing_symmetry(const Board& b) {
  PositionPerm x;
  auto current = [&] { return apply(x, b); };
  auto column_of_one = [](const Board& board, int row) {
    for (int column = 1; column <= kSide; ++column) {
      if (board[Cell::at(row, column)] == 1) return column;
    }
    throw std::invalid_argument("row without a 1: " + board.to_string());
  };

  // Move the 1 of row 1 to column 1.
  if (column_of_one(current(), 1) > 2) x = swap_pillars() * x;
  if (column_of_one(current(), 1) == 2) x = swap_columns(1, 2) * x;
  // Row 2's 1 is now in the right pillar; put it in column 3.
  if (column_of_one(current(), 2) == 4) x = swap_columns(3, 4) * x;
  // Rows 3 and 4 hold their 1s in columns 2 and 4; row 3 takes column 2.
  if (column_of_one(current(), 3) != 2) x = swap_rows(3, 4) * x;

  if (current().at_offset(kCellA) > current().at_offset(kCellB)) x = gen_r() * gen_r() * x;
  if (current().at_offset(kCellC) > current().at_offset(kCellD)) x = gen_t() * x;
  return x;
}

Board h4_canonicalize(const Board& b) { return apply(h4_canonicalizing_symmetry(b), b); }

bool has_h4_representative_form(const Board& b) {
  for (int i = 0; i < kCellCount; ++i) {
    const bool expect_one =
        std::find(kOnesOffsets.begin(), kOnesOffsets.end(), i) != kOnesOffsets.end();
    if ((b.at_offset(i) == 1) != expect_one) return false;
  }
  return b.at_offset(kCellA) <= b.at_offset(kCellB) && b.at_offset(kCellC) < b.at_offset(kCellD);
}

const std::vector<Nest>& h4_nests() {
  static const std::vector<Nest> nests = [] {
    const OrbitPartition partition = orbits(standard::h4(), all_boards());
    std::vector<Nest> out;
    for (const BoardSet& block : partition.blocks()) {
      const Board rep = h4_canonicalize(block.front());
      if (!block.contains(rep)) throw std::logic_error("H4 representative left its orbit");
      out.push_back({"", rep, block});
    }
    std::sort(out.begin(), out.end(),
              [](const Nest& a, const Nest& b) { return a.representative < b.representative; });
    const auto& golden = h4_nest_golden();
    if (out.size() != golden.size()) throw std::logic_error("unexpected number of H4-nests");
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].representative != golden[i].second) {
        throw std::logic_error("H4-nest representative " + golden[i].first + " mismatch");
      }
      out[i].label = golden[i].first;
    }
    return out;
  }();
  return nests;
}

NestGraph h4_nest_graph(std::span<const Generator> relabel_gens) {
  for (const Generator& g : relabel_gens) {
    if (!g.element.is_relabel_only()) {
      throw std::invalid_argument("H4-nest graph generators must be relabelings");
    }
  }
  // H4 elements ordered by word length, so the reported correction is a
  // shortest word.
  static const std::vector<SymmetryElement> by_length = [] {
    const SymmetryGroup& h = standard::h4();
    std::vector<SymmetryElement> out = h.elements();
    std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
      return h.word(a).size() < h.word(b).size();
    });
    return out;
  }();
  return build_nest_graph(
      NestFactor::kH4, h4_nests(), relabel_gens,
      [](const Board& image, const Board& target) -> std::optional<std::string> {
        if (image == target) return std::nullopt;
        for (const SymmetryElement& x : by_length) {
          if (apply(x, image) == target) return standard::h4().word(x);
        }
        throw std::logic_error("no position symmetry joins " + image.to_string() + " to " +
                               target.to_string());
      });
}

bool complete_via_s4_nests(std::span<const Generator> position_gens) {
  return matches_full_partition(s4_nest_graph(position_gens));
}

bool complete_via_h4_nests(std::span<const Generator> relabel_gens) {
  return matches_full_partition(h4_nest_graph(relabel_gens));
}

}  // namespace shidoku
