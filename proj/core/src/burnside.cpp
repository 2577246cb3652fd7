#include "shidoku/burnside.hpp"

#include <algorithm>
#include <string>

#include "shidoku/action.hpp"

namespace shidoku {

namespace {

constexpr std::size_t kFactorial4 = 24;

}  // namespace

std::optional<Relabeling> relabel_recovery(const PositionPerm& x, const Board& board) {
  const Board moved = apply(x, board);
  // sigma(moved[j]) must equal board[j] for every cell j.
  std::array<std::uint8_t, kValueCount> image{};
  std::array<bool, kValueCount> set{};
  for (int j = 0; j < kCellCount; ++j) {
    const int from = moved.at_offset(j) - 1;
    const int to = board.at_offset(j) - 1;
    if (from < 0 || from >= kValueCount || to < 0 || to >= kValueCount) return std::nullopt;
    if (set[from]) {
      if (image[from] != to) return std::nullopt;
    } else {
      set[from] = true;
      image[from] = static_cast<std::uint8_t>(to);
    }
  }
  if (!std::all_of(set.begin(), set.end(), [](bool b) { return b; })) return std::nullopt;
  try {
    return Relabeling(image);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::size_t invariant_count(const PositionPerm& x) {
  std::size_t count = 0;
  for (const Board& board : all_boards()) {
    if (relabel_recovery(x, board)) ++count;
  }
  return count;
}

std::size_t fixed_points(const SymmetryElement& e) {
  std::size_t count = 0;
  for (const Board& board : all_boards()) {
    if (apply(e, board) == board) ++count;
  }
  return count;
}

BurnsideCount burnside(const SymmetryGroup& g) {
  BurnsideCount out;
  out.group_order = g.order();
  for (const SymmetryElement& e : g.elements()) out.fixed_point_total += fixed_points(e);
  if (out.fixed_point_total % out.group_order != 0) {
    throw BurnsideError("fixed-point total " + std::to_string(out.fixed_point_total) +
                        " is not divisible by group order " + std::to_string(out.group_order));
  }
  out.orbit_count = out.fixed_point_total / out.group_order;
  return out;
}

std::size_t burnside_orbit_count(const SymmetryGroup& g) { return burnside(g).orbit_count; }

BurnsideCount InvarianceTable::with_full_relabeling() const {
  BurnsideCount out;
  out.group_order = group.order() * kFactorial4;
  for (const InvarianceRow& row : rows) {
    out.fixed_point_total += row.cls.members.size() * row.invariant_count;
  }
  if (out.fixed_point_total % out.group_order != 0) {
    throw BurnsideError("invariance total " + std::to_string(out.fixed_point_total) +
                        " is not divisible by " + std::to_string(out.group_order));
  }
  out.orbit_count = out.fixed_point_total / out.group_order;
  return out;
}

InvarianceTable invariance_table(const SymmetryGroup& h) {
  if (!h.is_position_only()) {
    throw std::invalid_argument("invariance_table needs a position-only group");
  }
  InvarianceTable table{h, {}};
  for (ConjugacyClass& cls : conjugacy_classes(h)) {
    const std::size_t count = invariant_count(cls.representative.pos);
    for (const SymmetryElement& member : cls.members) {
      if (invariant_count(member.pos) != count) {
        throw std::logic_error("invariant count differs within conjugacy class of " +
                               cycle_notation(cls.representative.pos));
      }
    }
    table.rows.push_back({std::move(cls), count});
  }
  return table;
}

bool check_fixing_lemmas(const PositionPerm& x, const Board& board) {
  const auto sigma = relabel_recovery(x, board);
  if (!sigma) return true;

  for (int i = 0; i < kCellCount; ++i) {
    const int n = board.at_offset(i) - 1;
    if (static_cast<int>(x(i)) == i && static_cast<int>((*sigma)(n)) != n) return false;  // (i)
    if (static_cast<int>((*sigma)(n)) == n && board.at_offset(static_cast<int>(x(i))) != n + 1) {
      return false;  // (iii)
    }
  }
  for (const Region& region : regions()) {
    const bool fixed = std::all_of(region.begin(), region.end(),
                                   [&](int c) { return static_cast<int>(x(c)) == c; });
    if (fixed && !sigma->is_identity()) return false;  // (ii)
  }
  return true;
}

}  // namespace shidoku
