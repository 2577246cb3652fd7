#include "shidoku/group.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

namespace shidoku {

namespace {

const std::string kIdentityWord = "id";

std::string join_words(const std::string& left, const std::string& right) {
  if (left == kIdentityWord) return right;
  if (right == kIdentityWord) return left;
  return left + right;
}

}  // namespace

SymmetryGroup::SymmetryGroup() : elements_{SymmetryElement::identity()}, words_{kIdentityWord} {}

bool SymmetryGroup::contains(const SymmetryElement& e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

std::size_t SymmetryGroup::index_of(const SymmetryElement& e) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
  if (it == elements_.end() || *it != e) throw std::out_of_range("element is not in the group");
  return static_cast<std::size_t>(it - elements_.begin());
}

const std::string& SymmetryGroup::word(const SymmetryElement& e) const {
  return words_[index_of(e)];
}

bool SymmetryGroup::is_position_only() const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [](const SymmetryElement& e) { return e.is_position_only(); });
}

bool SymmetryGroup::is_relabel_only() const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [](const SymmetryElement& e) { return e.is_relabel_only(); });
}

std::string SymmetryGroup::label() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i > 0) out += ',';
    out += generators_[i].name;
  }
  return out + ">";
}

SymmetryGroup generate(std::vector<Generator> gens) {
  std::vector<SymmetryElement> found{SymmetryElement::identity()};
  std::vector<std::string> words{kIdentityWord};
  std::unordered_set<SymmetryElement, SymmetryElementHash> seen{SymmetryElement::identity()};

  for (std::size_t next = 0; next < found.size(); ++next) {
    for (const Generator& g : gens) {
      SymmetryElement product = g.element * found[next];
      if (!seen.insert(product).second) continue;
      if (found.size() == kFullGroupOrder) {
        throw std::length_error("group closure exceeds the full symmetry group order");
      }
      found.push_back(product);
      words.push_back(join_words(g.name, words[next]));
    }
  }

  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return found[a] < found[b]; });

  SymmetryGroup group;
  group.generators_ = std::move(gens);
  group.elements_.clear();
  group.words_.clear();
  for (std::size_t i : order) {
    group.elements_.push_back(found[i]);
    group.words_.push_back(std::move(words[i]));
  }
  return group;
}

SymmetryGroup direct_product(const SymmetryGroup& h, const SymmetryGroup& s) {
  if (!h.is_position_only()) {
    throw std::invalid_argument("direct_product: first factor must be position-only");
  }
  if (!s.is_relabel_only()) {
    throw std::invalid_argument("direct_product: second factor must be relabel-only");
  }
  // Both factors are sorted and the element order compares position parts
  // first, so the nested loop emits the product already sorted.
  SymmetryGroup group;
  group.elements_.clear();
  group.words_.clear();
  group.elements_.reserve(h.order() * s.order());
  for (std::size_t i = 0; i < h.order(); ++i) {
    for (std::size_t j = 0; j < s.order(); ++j) {
      group.elements_.push_back(h.elements_[i] * s.elements_[j]);
      group.words_.push_back(join_words(h.words_[i], s.words_[j]));
    }
  }
  group.generators_ = h.generators_;
  group.generators_.insert(group.generators_.end(), s.generators_.begin(), s.generators_.end());
  return group;
}

SymmetryGroup position_projection(const SymmetryGroup& g) {
  std::vector<Generator> gens;
  for (const Generator& gen : g.generators()) {
    if (gen.element.pos.is_identity()) continue;
    gens.push_back({gen.name, SymmetryElement::position(gen.element.pos)});
  }
  return generate(std::move(gens));
}

std::vector<ConjugacyClass> conjugacy_classes(const SymmetryGroup& g) {
  std::vector<SymmetryElement> conjugators;
  for (const Generator& gen : g.generators()) conjugators.push_back(gen.element);
  if (conjugators.empty() && g.order() > 1) conjugators = g.elements();

  std::vector<bool> assigned(g.order(), false);
  std::vector<ConjugacyClass> classes;
  for (std::size_t start = 0; start < g.order(); ++start) {
    if (assigned[start]) continue;
    std::vector<SymmetryElement> members{g.elements()[start]};
    assigned[start] = true;
    for (std::size_t next = 0; next < members.size(); ++next) {
      for (const SymmetryElement& c : conjugators) {
        SymmetryElement conj = c * members[next] * c.inverse();
        const std::size_t idx = g.index_of(conj);
        if (assigned[idx]) continue;
        assigned[idx] = true;
        members.push_back(conj);
      }
    }
    std::sort(members.begin(), members.end());
    const SymmetryElement rep = *std::min_element(
        members.begin(), members.end(), [&](const SymmetryElement& a, const SymmetryElement& b) {
          const auto la = g.word(a).size();
          const auto lb = g.word(b).size();
          return la != lb ? la < lb : a < b;
        });
    classes.push_back({rep, std::move(members)});
  }
  // Scanning in sorted element order means each class is opened at its
  // smallest member, so `classes` is already ordered.
  return classes;
}

bool is_subgroup(const SymmetryGroup& a, const SymmetryGroup& b) {
  return std::all_of(a.elements().begin(), a.elements().end(),
                     [&](const SymmetryElement& e) { return b.contains(e); });
}

std::vector<Generator> read_group_description(std::istream& is) {
  std::string line;
  bool header = false;
  std::vector<Generator> gens;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    const std::string content = line.substr(first, last - first + 1);
    if (!header) {
      if (content != "generators:") {
        throw GroupFormatError("line " + std::to_string(line_no) +
                               ": expected header 'generators:'");
      }
      header = true;
      continue;
    }
    SymmetryElement e;
    try {
      e = parse_symmetry_element(content);
    } catch (const CycleParseError& err) {
      throw GroupFormatError("line " + std::to_string(line_no) + ": " + err.what());
    }
    if (!is_position_symmetry(e.pos)) {
      throw GroupFormatError("line " + std::to_string(line_no) + ": '" + cycle_notation(e.pos) +
                             "' is not a position symmetry");
    }
    gens.push_back({"g" + std::to_string(gens.size() + 1), e});
  }
  if (!header) throw GroupFormatError("missing header 'generators:'");
  return gens;
}

void write_group_description(std::ostream& os, std::span<const Generator> gens) {
  os << "generators:\n";
  for (const Generator& g : gens) os << to_string(g.element) << '\n';
}

}  // namespace shidoku
