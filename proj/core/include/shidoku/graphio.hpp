#pragma once

#include <string>

#include "shidoku/action.hpp"
#include "shidoku/nests.hpp"

namespace shidoku {

/// A Graphviz DOT graph description.
struct DotDocument {
  std::string text;
};

/// Nodes are board strings in board order; edges follow the graph's edge
/// order and carry `label` = generator name. Involution edges are written
/// with `dir=none`. The graph name lists the generators.
DotDocument export_orbit_graph(const OrbitGraph& graph);

/// Nodes are nest labels. Edges carry `label` = generator and, when the
/// graph records one, the correcting symmetry from the other factor as
/// `relabel` (S4-nest graphs) or `position` (H4-nest graphs).
DotDocument export_nest_graph(const NestGraph& graph);

}  // namespace shidoku
