#include "shidoku/search.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <tuple>

#include "shidoku/action.hpp"
#include "shidoku/board.hpp"
#include "shidoku/standard_groups.hpp"

namespace shidoku {

namespace {

std::string factor_label(const std::vector<Generator>& gens) {
  if (gens.empty()) return "1";
  std::string out = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i > 0) out += ',';
    out += gens[i].name;
  }
  return out + ">";
}

struct Factor {
  std::vector<Generator> gens;
  SymmetryGroup group;
};

// One entry per distinct subgroup, keeping the smallest generating subset.
// Subsets are visited by increasing size, then by mask, so the first hit wins.
std::vector<Factor> distinct_subgroups(std::span<const Generator> pool) {
  const std::size_t n = pool.size();
  std::vector<unsigned> masks((std::size_t{1} << n));
  for (unsigned m = 0; m < masks.size(); ++m) masks[m] = m;
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    return std::popcount(a) < std::popcount(b);
  });

  std::vector<Factor> out;
  for (unsigned mask : masks) {
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) gens.push_back(pool[i]);
    }
    SymmetryGroup group = generate(gens);
    const bool seen = std::any_of(out.begin(), out.end(),
                                  [&](const Factor& f) { return f.group == group; });
    if (!seen) out.push_back({std::move(gens), std::move(group)});
  }
  return out;
}

}  // namespace

std::string SearchResult::position_label() const { return factor_label(position_gens); }
std::string SearchResult::relabel_label() const { return factor_label(relabel_gens); }
std::string SearchResult::label() const { return position_label() + " x " + relabel_label(); }

std::size_t minimal_order() {
  const auto sizes = full_partition().block_sizes();
  return *std::max_element(sizes.begin(), sizes.end());
}

std::vector<Generator> default_position_pool() {
  return {standard::r(), standard::r2(), standard::s(), standard::t()};
}

std::vector<Generator> default_relabel_pool() {
  return {standard::relabel("(1 2)"), standard::relabel("(2 3)"), standard::relabel("(3 4)"),
          standard::relabel("(1 4)"), standard::relabel("(1 2 3)")};
}

std::vector<SearchResult> search_products(std::span<const Generator> position_pool,
                                          std::span<const Generator> relabel_pool) {
  if (position_pool.empty() || relabel_pool.empty()) {
    throw std::invalid_argument("search pools must be nonempty");
  }
  if (position_pool.size() > 16 || relabel_pool.size() > 16) {
    throw std::invalid_argument("search pools are limited to 16 generators each");
  }
  for (const Generator& g : position_pool) {
    if (!g.element.is_position_only()) {
      throw std::invalid_argument("position pool entry " + g.name + " relabels values");
    }
  }
  for (const Generator& g : relabel_pool) {
    if (!g.element.is_relabel_only()) {
      throw std::invalid_argument("relabel pool entry " + g.name + " moves cells");
    }
  }

  const auto positions = distinct_subgroups(position_pool);
  const auto relabels = distinct_subgroups(relabel_pool);
  const std::size_t lower_bound = minimal_order();

  std::vector<SearchResult> results;
  for (const Factor& h : positions) {
    for (const Factor& s : relabels) {
      std::vector<Generator> gens = h.gens;
      gens.insert(gens.end(), s.gens.begin(), s.gens.end());
      const OrbitPartition partition = orbits(gens, all_boards());

      SearchResult result;
      result.position_gens = h.gens;
      result.relabel_gens = s.gens;
      result.order = h.group.order() * s.group.order();
      result.orbit_count = partition.block_count();
      result.complete = partition == full_partition();
      result.minimal = result.complete && result.order == lower_bound;
      results.push_back(std::move(result));
    }
  }
  std::sort(results.begin(), results.end(), [](const SearchResult& a, const SearchResult& b) {
    return std::make_tuple(a.order, a.label()) < std::make_tuple(b.order, b.label());
  });
  return results;
}

bool verify_no_single_factor(const SymmetryGroup& g) {
  const bool single = g.is_position_only() || g.is_relabel_only();
  if (single && is_complete(g)) return false;
  return !is_complete(standard::h4()) && !is_complete(standard::s4());
}

}  // namespace shidoku
