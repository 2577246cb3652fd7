#include "shidoku/action.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "shidoku/standard_groups.hpp"
#include "support/oracles.hpp"

namespace shidoku {
namespace {

using standard::position_group;

const Board kSymmetricBoard = Board::from_string("1243342143122134");
const Board kType1 = Board::from_string("1234341221434321");
const Board kType2 = Board::from_string("1234341223414123");

SymmetryGroup c3() { return generate({standard::relabel("(1 2 3)")}); }

std::multiset<std::size_t> sizes(const OrbitPartition& p) {
  const auto v = p.block_sizes();
  return {v.begin(), v.end()};
}

TEST(ApplyTest, TransposeOfSymmetricBoard) {
  EXPECT_EQ(apply(gen_t(), kSymmetricBoard).to_string(), "1342243142133124");
  const SymmetryElement undo{gen_t(), parse_cycles<4>("(2 3)")};
  EXPECT_EQ(apply(undo, kSymmetricBoard), kSymmetricBoard);
}

TEST(ApplyTest, ValueInCellEightMovesToCellFourteen) {
  const Board b = apply(gen_t(), kSymmetricBoard);
  EXPECT_EQ(b[Cell(14)], kSymmetricBoard[Cell(8)]);
}

TEST(ApplyTest, Identity) {
  for (const Board& b : all_boards()) EXPECT_EQ(apply(SymmetryElement::identity(), b), b);
}

TEST(ApplyTest, RelabelingReplacesValues) {
  EXPECT_EQ(apply(parse_cycles<4>("(1 2)"), kType1).to_string(), "2134342112434312");
}

TEST(ActionLawTest, CompositionOverGeneratorPairsAndAllBoards) {
  std::vector<SymmetryElement> gens;
  for (const auto& g : standard::position_generators()) gens.push_back(g.element);
  for (const auto& g : standard::relabel_generators()) gens.push_back(g.element);
  gens.push_back({gen_r(), parse_cycles<4>("(1 2 3)")});
  for (const auto& a : gens)
    for (const auto& b : gens)
      for (const Board& board : all_boards())
        ASSERT_EQ(apply(a * b, board), apply(a, apply(b, board)));
}

TEST(ActionLawTest, PositionSymmetriesOfH4PreserveValidity) {
  for (const auto& e : standard::h4().elements())
    for (const Board& b : all_boards()) ASSERT_TRUE(apply(e, b).is_valid());
}

TEST(OrbitsTest, FullGroup) {
  const OrbitPartition p = orbits(standard::g4(), all_boards());
  EXPECT_EQ(sizes(p), (std::multiset<std::size_t>{96, 192}));
  EXPECT_NE(p.block_of(kType1), p.block_of(kType2));
  EXPECT_EQ(p.blocks()[p.block_of(kType1)].size(), 96u);
  EXPECT_EQ(p.blocks()[p.block_of(kType2)].size(), 192u);
}

TEST(OrbitsTest, KnownGroups) {
  EXPECT_EQ(orbits(direct_product(position_group({"r", "t"}), standard::s4()), all_boards())
                .block_count(),
            5u);
  EXPECT_EQ(sizes(orbits(direct_product(position_group({"r", "s"}), c3()), all_boards())),
            (std::multiset<std::size_t>{96, 192}));
  EXPECT_EQ(sizes(orbits(direct_product(position_group({"s", "t"}), standard::s4()), all_boards())),
            (std::multiset<std::size_t>{96, 192}));
}

TEST(OrbitsTest, TrivialGroupGivesSingletons) {
  const OrbitPartition p = orbits(SymmetryGroup(), all_boards());
  EXPECT_EQ(p.block_count(), 288u);
  for (const auto& block : p.blocks()) EXPECT_EQ(block.size(), 1u);
}

TEST(OrbitsTest, MatchesElementwiseOrbits) {
  for (const SymmetryGroup& g :
       {direct_product(position_group({"r", "t"}), standard::s4()), standard::h4(), standard::s4(),
        direct_product(position_group({"r2", "s", "t"}), c3())}) {
    EXPECT_EQ(oracle::as_sets(orbits(g, all_boards())),
              oracle::orbits_by_elements(g.elements(), all_boards()));
  }
}

TEST(OrbitsTest, BlocksOrderedByMinimumAndSizesDivideOrder) {
  const SymmetryGroup g = direct_product(position_group({"r", "t"}), standard::s4());
  const OrbitPartition p = orbits(g, all_boards());
  for (std::size_t i = 0; i < p.block_count(); ++i) {
    EXPECT_EQ(g.order() % p.blocks()[i].size(), 0u);
    if (i > 0) EXPECT_LT(p.blocks()[i - 1].front(), p.blocks()[i].front());
    for (const Board& b : p.blocks()[i]) EXPECT_EQ(p.block_of(b), i);
  }
}

TEST(OrbitsTest, RefinementUnderSubgroups) {
  const OrbitPartition& full = full_partition();
  const OrbitPartition sub = orbits(position_group({"r", "t"}), all_boards());
  for (const BoardSet& block : sub.blocks()) {
    const std::size_t owner = full.block_of(block.front());
    for (const Board& b : block) EXPECT_EQ(full.block_of(b), owner);
  }
}

TEST(OrbitsTest, RejectsSetsNotClosedUnderGenerators) {
  const BoardSet one({kType1});
  EXPECT_THROW(orbits(standard::h4(), one), std::invalid_argument);
  EXPECT_THROW(full_partition().block_of(Board::from_string("1111111111111111")),
               std::out_of_range);
}

TEST(CompletenessTest, Examples) {
  EXPECT_TRUE(is_complete(standard::g4()));
  EXPECT_FALSE(is_complete(direct_product(position_group({"r", "t"}), standard::s4())));
  EXPECT_TRUE(is_complete(direct_product(standard::h4(), c3())));
  EXPECT_TRUE(is_complete(direct_product(position_group({"r2", "s", "t"}), c3())));
  EXPECT_FALSE(is_complete(standard::h4()));
  EXPECT_FALSE(is_complete(standard::s4()));
}

TEST(CompletenessTest, AgreesWithTwoOrbitsForSubgroups) {
  const std::vector<std::vector<std::string_view>> position_sets{
      {}, {"r"}, {"s"}, {"t"}, {"r", "s"}, {"r", "t"}, {"s", "t"}, {"r2", "s", "t"}, {"r", "s", "t"}};
  const std::vector<SymmetryGroup> relabel_groups{SymmetryGroup(), c3(), standard::s4()};
  for (const auto& names : position_sets) {
    for (const auto& rel : relabel_groups) {
      const SymmetryGroup g = direct_product(position_group(names), rel);
      EXPECT_EQ(is_complete(g), orbits(g, all_boards()).block_count() == 2);
    }
  }
}

TEST(OrbitGraphTest, FullGeneratorSet) {
  std::vector<Generator> gens = standard::position_generators();
  for (const auto& g : standard::relabel_generators()) gens.push_back(g);
  const OrbitGraph graph = orbit_graph(gens, all_boards());
  EXPECT_EQ(graph.vertices.size(), 288u);
  EXPECT_EQ(graph.edges.size(), 288u * 7u);
  const auto comps = graph.components();
  ASSERT_EQ(comps.size(), 2u);
  std::multiset<std::size_t> comp_sizes{comps[0].size(), comps[1].size()};
  EXPECT_EQ(comp_sizes, (std::multiset<std::size_t>{96, 192}));
}

TEST(OrbitGraphTest, EmptyAndRTGenerators) {
  EXPECT_EQ(orbit_graph({}, all_boards()).components().size(), 288u);
  std::vector<Generator> gens{standard::r(), standard::t()};
  for (const auto& g : standard::relabel_generators()) gens.push_back(g);
  EXPECT_EQ(orbit_graph(gens, all_boards()).components().size(), 5u);
}

TEST(OrbitGraphTest, ComponentsMatchOrbitBlocks) {
  const auto gens = standard::position_generators();
  const OrbitGraph graph = orbit_graph(gens, all_boards());
  const OrbitPartition p = orbits(gens, all_boards());
  const auto comps = graph.components();
  ASSERT_EQ(comps.size(), p.block_count());
  for (std::size_t k = 0; k < comps.size(); ++k) {
    for (std::size_t v : comps[k]) EXPECT_EQ(p.block_of(graph.vertices[v]), k);
  }
}

TEST(OrbitGraphTest, SelfLoopsKept) {
  const std::vector<Generator> gens{{"x", {gen_t(), parse_cycles<4>("(2 3)")}}};
  const OrbitGraph graph = orbit_graph(gens, all_boards());
  const auto loops = std::count_if(graph.edges.begin(), graph.edges.end(),
                                   [](const OrbitGraphEdge& e) { return e.from == e.to; });
  EXPECT_EQ(loops, 8);
  EXPECT_EQ(graph.edges.size(), 288u);
}

}  // namespace
}  // namespace shidoku
