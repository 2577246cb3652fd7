#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "shidoku/permutation.hpp"

namespace shidoku {

/// Order of the full symmetry group; every group built here divides it.
inline constexpr std::size_t kFullGroupOrder = 3072;

/// A symmetry element with a display name ("r", "(1 2 3)", ...). Names are
/// used to spell group elements as words.
struct Generator {
  std::string name;
  SymmetryElement element;

  bool operator==(const Generator&) const = default;
};

/// A finite group of symmetry elements with the generators it came from.
///
/// Elements are stored sorted. Each element carries a word over the
/// generator names; words are written so that the rightmost letter acts
/// first, and for groups built by generate() they are shortest words.
class SymmetryGroup {
 public:
  /// The trivial group.
  SymmetryGroup();

  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<SymmetryElement>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  bool contains(const SymmetryElement& e) const;
  std::size_t index_of(const SymmetryElement& e) const;
  /// Word spelling `e`; "id" for the identity. Throws std::out_of_range if
  /// `e` is not in the group.
  const std::string& word(const SymmetryElement& e) const;

  bool is_position_only() const;
  bool is_relabel_only() const;

  /// "<r,s,t>"-style label built from generator names.
  std::string label() const;

  bool operator==(const SymmetryGroup& other) const { return elements_ == other.elements_; }

 private:
  friend SymmetryGroup generate(std::vector<Generator> gens);
  friend SymmetryGroup direct_product(const SymmetryGroup& h, const SymmetryGroup& s);

  std::vector<Generator> generators_;
  std::vector<SymmetryElement> elements_;
  std::vector<std::string> words_;
};

/// Closure of `gens` under composition, by breadth-first search from the
/// identity. Throws std::length_error if the closure exceeds 3072 elements.
SymmetryGroup generate(std::vector<Generator> gens);

/// All pairs (x, sigma) for x in `h`, sigma in `s`. `h` must be position-only
/// and `s` relabel-only (std::invalid_argument otherwise).
SymmetryGroup direct_product(const SymmetryGroup& h, const SymmetryGroup& s);

/// Projection of `g` onto its position parts, as a position-only group.
SymmetryGroup position_projection(const SymmetryGroup& g);

struct ConjugacyClass {
  /// The member with the shortest word (ties: the smallest element).
  SymmetryElement representative;
  /// Sorted.
  std::vector<SymmetryElement> members;
};

/// Conjugacy classes of `g`, ordered by their smallest member.
std::vector<ConjugacyClass> conjugacy_classes(const SymmetryGroup& g);

bool is_subgroup(const SymmetryGroup& a, const SymmetryGroup& b);

class GroupFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Group description files:
///
///     generators:
///     pos=(2 5)(3 9)(4 13)(7 10)(8 14)(12 15); rel=
///     pos=; rel=(1 2 3)
///
/// Blank lines and lines starting with '#' are ignored. Generators are named
/// g1, g2, ... in file order. Position parts must be position symmetries.
std::vector<Generator> read_group_description(std::istream& is);
void write_group_description(std::ostream& os, std::span<const Generator> gens);

}  // namespace shidoku
