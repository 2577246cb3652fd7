#include "shidoku/graphio.hpp"

#include <sstream>

namespace shidoku {

namespace {

std::string quoted(const std::string& id) {
  std::string out = "\"";
  for (char ch : id) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + '"';
}

std::string generator_list(const std::vector<Generator>& gens) {
  std::string out = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i > 0) out += ',';
    out += gens[i].name;
  }
  return out + ">";
}

}  // namespace

DotDocument export_orbit_graph(const OrbitGraph& graph) {
  std::vector<bool> involution;
  for (const Generator& g : graph.generators) involution.push_back(is_involution(g.element));

  std::ostringstream os;
  os << "digraph " << quoted("orbits " + generator_list(graph.generators)) << " {\n";
  for (const Board& b : graph.vertices) os << "  " << quoted(b.to_string()) << ";\n";
  for (const OrbitGraphEdge& e : graph.edges) {
    os << "  " << quoted(graph.vertices[e.from].to_string()) << " -> "
       << quoted(graph.vertices[e.to].to_string()) << " [label="
       << quoted(graph.generators[e.generator].name);
    if (involution[e.generator]) os << ", dir=none";
    os << "];\n";
  }
  os << "}\n";
  return {os.str()};
}

DotDocument export_nest_graph(const NestGraph& graph) {
  const bool s4 = graph.factor == NestFactor::kS4;
  std::ostringstream os;
  os << "digraph "
     << quoted(std::string(s4 ? "s4-nests " : "h4-nests ") + generator_list(graph.generators))
     << " {\n";
  for (const Nest& n : graph.vertices) os << "  " << quoted(n.label) << ";\n";
  for (const NestEdge& e : graph.edges) {
    os << "  " << quoted(graph.vertices[e.from].label) << " -> "
       << quoted(graph.vertices[e.to].label) << " [label=" << quoted(e.generator);
    if (e.auxiliary) os << ", " << (s4 ? "relabel" : "position") << '=' << quoted(*e.auxiliary);
    if (e.involution) os << ", dir=none";
    os << "];\n";
  }
  os << "}\n";
  return {os.str()};
}

}  // namespace shidoku
