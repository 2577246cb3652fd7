#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "shidoku/group.hpp"

// Named generators and the groups built from them.
namespace shidoku::standard {

Generator r();
Generator r2();
Generator s();
Generator t();

/// Relabeling generator named by its cycle notation, e.g. relabel("(1 2 3)").
Generator relabel(std::string_view cycles);

/// r, s, t.
std::vector<Generator> position_generators();
/// (1 2), (2 3), (3 4), (1 4).
std::vector<Generator> relabel_generators();

/// Position-only group generated by named letters drawn from
/// {"r", "r2", "s", "t"}.
SymmetryGroup position_group(const std::vector<std::string_view>& names);

const SymmetryGroup& trivial();
/// H4 = <r, s, t>, order 128.
const SymmetryGroup& h4();
/// S4 = <(1 2), (2 3), (3 4), (1 4)>, order 24.
const SymmetryGroup& s4();
/// G4 = H4 x S4, order 3072.
const SymmetryGroup& g4();

/// CLI shorthands:
///   full    H4 x S4
///   H4      H4 (position symmetries only)
///   S4      S4 (relabelings only)
///   st      <s,t> x S4
///   rs      <r,s> x <(1 2 3)>
///   rt      <r,t> x S4
///   r2st    <r2,s,t> x <(1 2 3)>
///   c123    H4 x <(1 2 3)>
///   trivial the trivial group
std::optional<SymmetryGroup> from_shorthand(std::string_view name);

}  // namespace shidoku::standard
