#include "shidoku/burnside.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "shidoku/action.hpp"
#include "shidoku/standard_groups.hpp"

namespace shidoku {
namespace {

using standard::position_group;

const Board kSymmetricBoard = Board::from_string("1243342143122134");

PositionPerm from_word(std::string_view letters) {
  PositionPerm out;
  for (char ch : letters) out = out * (ch == 'r' ? gen_r() : ch == 's' ? gen_s() : gen_t());
  return out;
}

// Invariance by trying all 24 relabelings.
std::size_t invariant_by_search(const PositionPerm& x) {
  std::size_t n = 0;
  for (const Board& b : all_boards()) {
    const Board moved = apply(x, b);
    for (const auto& sigma : standard::s4().elements()) {
      if (apply(sigma.rel, moved) == b) {
        ++n;
        break;
      }
    }
  }
  return n;
}

TEST(RelabelRecoveryTest, Examples) {
  EXPECT_EQ(relabel_recovery(gen_t(), kSymmetricBoard), parse_cycles<4>("(2 3)"));
  for (const Board& b : all_boards()) {
    EXPECT_EQ(relabel_recovery(PositionPerm(), b), Relabeling());
    EXPECT_FALSE(relabel_recovery(gen_s(), b).has_value());
  }
}

TEST(RelabelRecoveryTest, RecoveredRelabelingUndoesTheMove) {
  for (const auto& x : standard::h4().elements()) {
    for (const Board& b : all_boards()) {
      const auto sigma = relabel_recovery(x.pos, b);
      if (sigma) ASSERT_EQ(apply(*sigma, apply(x.pos, b)), b);
    }
  }
}

TEST(RelabelRecoveryTest, AtMostOneRelabelingRecovers) {
  for (const auto& x : standard::h4().elements()) {
    for (const Board& b : all_boards()) {
      const Board moved = apply(x.pos, b);
      int hits = 0;
      for (const auto& sigma : standard::s4().elements()) hits += apply(sigma.rel, moved) == b;
      ASSERT_LE(hits, 1);
    }
  }
}

TEST(InvariantCountTest, TableValues) {
  EXPECT_EQ(invariant_count(PositionPerm()), 12u * 24u);
  EXPECT_EQ(invariant_count(gen_s()), 0u);
  EXPECT_EQ(invariant_count(gen_t()), 2u * 24u);
  EXPECT_EQ(invariant_count(from_word("st")), 0u);
  EXPECT_EQ(invariant_count(from_word("stst")), 0u);
}

TEST(InvariantCountTest, MatchesSearchOverRelabelingsForH4) {
  for (const auto& x : standard::h4().elements()) {
    EXPECT_EQ(invariant_count(x.pos), invariant_by_search(x.pos)) << to_string(x);
  }
}

TEST(FixedPointsTest, Examples) {
  EXPECT_EQ(fixed_points(SymmetryElement::identity()), 288u);
  const SymmetryElement t23{gen_t(), parse_cycles<4>("(2 3)")};
  EXPECT_EQ(apply(t23, kSymmetricBoard), kSymmetricBoard);
  // Frozen from an exhaustive scan.
  EXPECT_EQ(fixed_points(t23), 8u);
  EXPECT_EQ(fixed_points(SymmetryElement::position(gen_s())), 0u);
}

TEST(FixedPointsTest, SumOverRelabelingsIsInvariantCount) {
  for (const auto& x : standard::h4().elements()) {
    std::size_t total = 0;
    for (const auto& sigma : standard::s4().elements()) total += fixed_points({x.pos, sigma.rel});
    EXPECT_EQ(total, invariant_count(x.pos));
  }
}

TEST(BurnsideTest, OrbitCounts) {
  const SymmetryGroup st_s4 = direct_product(position_group({"s", "t"}), standard::s4());
  const BurnsideCount c = burnside(st_s4);
  EXPECT_EQ(c.group_order, 192u);
  EXPECT_EQ(c.fixed_point_total, 288u + 2u * 48u);
  EXPECT_EQ(c.orbit_count, 2u);
  EXPECT_EQ(burnside_orbit_count(standard::g4()), 2u);
  EXPECT_EQ(burnside_orbit_count(SymmetryGroup()), 288u);
  EXPECT_EQ(burnside_orbit_count(direct_product(position_group({"r", "t"}), standard::s4())), 5u);
}

TEST(BurnsideTest, AgreesWithOrbitBlocks) {
  const SymmetryGroup c3 = generate({standard::relabel("(1 2 3)")});
  const std::vector<std::vector<std::string_view>> position_sets{
      {}, {"r"}, {"s"}, {"t"}, {"r2"}, {"r", "t"}, {"s", "t"}, {"r", "s"}, {"r2", "s", "t"}, {"r", "s", "t"}};
  for (const auto& names : position_sets) {
    for (const SymmetryGroup& rel : {SymmetryGroup(), c3, standard::s4()}) {
      const SymmetryGroup g = direct_product(position_group(names), rel);
      const BurnsideCount c = burnside(g);
      EXPECT_EQ(c.orbit_count, orbits(g, all_boards()).block_count()) << g.label();
      EXPECT_EQ(c.fixed_point_total, c.group_order * c.orbit_count);
    }
  }
}

TEST(InvarianceTableTest, STRows) {
  const InvarianceTable table = invariance_table(position_group({"s", "t"}));
  ASSERT_EQ(table.rows.size(), 5u);
  auto count_for = [&](const PositionPerm& x) {
    for (const auto& row : table.rows)
      if (std::binary_search(row.cls.members.begin(), row.cls.members.end(), SymmetryElement::position(x)))
        return row.invariant_count;
    return std::size_t{999};
  };
  EXPECT_EQ(count_for(PositionPerm()), 288u);
  EXPECT_EQ(count_for(gen_s()), 0u);
  EXPECT_EQ(count_for(from_word("tst")), 0u);
  EXPECT_EQ(count_for(gen_t()), 48u);
  EXPECT_EQ(count_for(from_word("sts")), 48u);
  EXPECT_EQ(count_for(from_word("st")), 0u);
  EXPECT_EQ(count_for(from_word("ts")), 0u);
  EXPECT_EQ(count_for(from_word("stst")), 0u);
  const BurnsideCount c = table.with_full_relabeling();
  EXPECT_EQ(c.group_order, 192u);
  EXPECT_EQ(c.orbit_count, 2u);
}

TEST(InvarianceTableTest, TrivialGroup) {
  const InvarianceTable table = invariance_table(SymmetryGroup());
  ASSERT_EQ(table.rows.size(), 1u);
  EXPECT_EQ(table.rows[0].invariant_count, 288u);
  EXPECT_EQ(table.with_full_relabeling().orbit_count, 12u);
}

TEST(InvarianceTableTest, H4HasTwentyConstantRows) {
  const InvarianceTable table = invariance_table(standard::h4());
  ASSERT_EQ(table.rows.size(), 20u);
  std::size_t covered = 0;
  for (const auto& row : table.rows) {
    covered += row.cls.members.size();
    for (const auto& m : row.cls.members) EXPECT_EQ(invariant_by_search(m.pos), row.invariant_count);
  }
  EXPECT_EQ(covered, 128u);
  EXPECT_EQ(table.with_full_relabeling().orbit_count, 2u);
}

TEST(InvarianceTableTest, RejectsRelabelings) {
  EXPECT_THROW(invariance_table(standard::s4()), std::invalid_argument);
}

TEST(FixingLemmasTest, SymmetricBoard) {
  EXPECT_TRUE(check_fixing_lemmas(gen_t(), kSymmetricBoard));
  // Diagonal cells 1, 6, 11, 16 are fixed by t.
  for (int i : {1, 6, 11, 16}) EXPECT_EQ(gen_t()(Cell(i).offset()), static_cast<std::size_t>(i - 1));
  EXPECT_EQ(kSymmetricBoard[Cell(1)], 1);
  EXPECT_EQ(kSymmetricBoard[Cell(6)], 4);
  EXPECT_EQ(kSymmetricBoard[Cell(11)], 1);
  EXPECT_EQ(kSymmetricBoard[Cell(16)], 4);
}

TEST(FixingLemmasTest, IdentityAndExhaustiveOverH4) {
  for (const Board& b : all_boards()) EXPECT_TRUE(check_fixing_lemmas(PositionPerm(), b));
  std::size_t invariant_pairs = 0;
  for (const auto& x : standard::h4().elements()) {
    for (const Board& b : all_boards()) {
      if (!relabel_recovery(x.pos, b)) continue;
      ++invariant_pairs;
      ASSERT_TRUE(check_fixing_lemmas(x.pos, b)) << to_string(x) << " " << b.to_string();
    }
  }
  EXPECT_GT(invariant_pairs, 288u);
}

}  // namespace
}  // namespace shidoku
