#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "shidoku/group.hpp"

namespace shidoku {

/// One candidate H' x S' with H' generated by `position_gens` and S' by
/// `relabel_gens`.
struct SearchResult {
  std::vector<Generator> position_gens;
  std::vector<Generator> relabel_gens;
  std::size_t order = 0;
  std::size_t orbit_count = 0;
  bool complete = false;
  /// complete and order == minimal_order().
  bool minimal = false;

  /// "<s,t>", or "1" for the trivial factor.
  std::string position_label() const;
  std::string relabel_label() const;
  /// "<s,t> x <(1 2 3)>"; the secondary sort key.
  std::string label() const;
};

/// Size of the largest G4-orbit (192), a lower bound on the order of any
/// complete group.
std::size_t minimal_order();

/// {r, r2, s, t}.
std::vector<Generator> default_position_pool();
/// {(1 2), (2 3), (3 4), (1 4), (1 2 3)}.
std::vector<Generator> default_relabel_pool();

/// Evaluates H' x S' for every subset of each pool, including the empty
/// subset. Candidates generating the same element set are reported once,
/// under the subset with the fewest generators (ties: earliest in pool
/// order). Results are sorted by (order, label()). Throws
/// std::invalid_argument if a pool is empty or mixes factors.
std::vector<SearchResult> search_products(std::span<const Generator> position_pool,
                                          std::span<const Generator> relabel_pool);

/// The standing check that neither factor is complete on its own: true iff
/// `g` is not a single-factor group that is complete, and H4 and S4 are both
/// incomplete.
bool verify_no_single_factor(const SymmetryGroup& g);

}  // namespace shidoku
