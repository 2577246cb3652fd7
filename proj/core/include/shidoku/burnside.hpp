#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "shidoku/board.hpp"
#include "shidoku/group.hpp"

namespace shidoku {

/// The relabeling sigma with sigma(x(B)) = B, if one exists. It is unique
/// when it exists: relabelings act freely on valid boards.
std::optional<Relabeling> relabel_recovery(const PositionPerm& x, const Board& board);

/// Number of boards invariant under `x` up to relabeling.
std::size_t invariant_count(const PositionPerm& x);

/// Number of boards B with apply(e, B) == B.
std::size_t fixed_points(const SymmetryElement& e);

/// Raised when the fixed-point total is not a multiple of the group order.
class BurnsideError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct BurnsideCount {
  std::size_t fixed_point_total = 0;
  std::size_t group_order = 0;
  std::size_t orbit_count = 0;
};

/// Orbit count as the average number of fixed points over all elements of
/// `g`, scanning every element against every board.
BurnsideCount burnside(const SymmetryGroup& g);
std::size_t burnside_orbit_count(const SymmetryGroup& g);

struct InvarianceRow {
  ConjugacyClass cls;
  std::size_t invariant_count = 0;
};

/// Per-class invariant counts for a position-only group. Counts are computed
/// for every class member and must agree within a class (std::logic_error
/// otherwise).
struct InvarianceTable {
  SymmetryGroup group;
  std::vector<InvarianceRow> rows;

  /// Burnside for group x S4 from the table: sum of |class| * count over
  /// rows, divided by |group| * 4!.
  BurnsideCount with_full_relabeling() const;
};

InvarianceTable invariance_table(const SymmetryGroup& h);

/// Checks the three fixing lemmas for an invariant pair (x, B) with its
/// recovered relabeling sigma:
///   (i)   x(i) = i and b_i = n  =>  sigma(n) = n
///   (ii)  x fixes every cell of some region  =>  sigma = id
///   (iii) sigma(n) = n and b_i = n  =>  b_{x(i)} = n
/// Returns true (vacuously) when B is not invariant under x.
bool check_fixing_lemmas(const PositionPerm& x, const Board& board);

}  // namespace shidoku
