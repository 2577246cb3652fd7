#include "shidoku/standard_groups.hpp"

#include <stdexcept>
#include <string>

namespace shidoku::standard {

Generator r() { return {"r", SymmetryElement::position(gen_r())}; }
Generator r2() { return {"r2", SymmetryElement::position(gen_r() * gen_r())}; }
Generator s() { return {"s", SymmetryElement::position(gen_s())}; }
Generator t() { return {"t", SymmetryElement::position(gen_t())}; }

Generator relabel(std::string_view cycles) {
  const Relabeling sigma = parse_cycles<kValueCount>(cycles);
  return {cycle_notation(sigma), SymmetryElement::relabel(sigma)};
}

std::vector<Generator> position_generators() { return {r(), s(), t()}; }

std::vector<Generator> relabel_generators() {
  return {relabel("(1 2)"), relabel("(2 3)"), relabel("(3 4)"), relabel("(1 4)")};
}

SymmetryGroup position_group(const std::vector<std::string_view>& names) {
  std::vector<Generator> gens;
  for (std::string_view name : names) {
    if (name == "r") gens.push_back(r());
    else if (name == "r2") gens.push_back(r2());
    else if (name == "s") gens.push_back(s());
    else if (name == "t") gens.push_back(t());
    else throw std::invalid_argument("unknown position generator '" + std::string(name) + "'");
  }
  return generate(std::move(gens));
}

const SymmetryGroup& trivial() {
  static const SymmetryGroup group;
  return group;
}

const SymmetryGroup& h4() {
  static const SymmetryGroup group = generate(position_generators());
  return group;
}

const SymmetryGroup& s4() {
  static const SymmetryGroup group = generate(relabel_generators());
  return group;
}

const SymmetryGroup& g4() {
  static const SymmetryGroup group = direct_product(h4(), s4());
  return group;
}

std::optional<SymmetryGroup> from_shorthand(std::string_view name) {
  const SymmetryGroup c3 = generate({relabel("(1 2 3)")});
  if (name == "full") return g4();
  if (name == "H4") return h4();
  if (name == "S4") return s4();
  if (name == "st") return direct_product(position_group({"s", "t"}), s4());
  if (name == "rs") return direct_product(position_group({"r", "s"}), c3);
  if (name == "rt") return direct_product(position_group({"r", "t"}), s4());
  if (name == "r2st") return direct_product(position_group({"r2", "s", "t"}), c3);
  if (name == "c123") return direct_product(h4(), c3);
  if (name == "trivial") return trivial();
  return std::nullopt;
}

}  // namespace shidoku::standard
