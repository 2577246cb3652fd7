#include "shidoku/graphio.hpp"

#include <gtest/gtest.h>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/connected_components.hpp>
#include <boost/graph/graphviz.hpp>
#include <boost/property_map/dynamic_property_map.hpp>

#include "shidoku/standard_groups.hpp"

namespace shidoku {
namespace {

struct VertexProps {
  std::string name;
};
struct EdgeProps {
  std::string label;
  std::string dir;
  std::string relabel;
  std::string position;
};
using Parsed = boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS, VertexProps, EdgeProps>;

// Re-reads exported DOT with Boost's Graphviz parser.
Parsed parse(const DotDocument& doc) {
  Parsed g;
  boost::dynamic_properties dp(boost::ignore_other_properties);
  dp.property("node_id", boost::get(&VertexProps::name, g));
  dp.property("label", boost::get(&EdgeProps::label, g));
  dp.property("dir", boost::get(&EdgeProps::dir, g));
  dp.property("relabel", boost::get(&EdgeProps::relabel, g));
  dp.property("position", boost::get(&EdgeProps::position, g));
  EXPECT_TRUE(boost::read_graphviz(doc.text, g, dp, "node_id"));
  return g;
}

std::size_t weak_components(const Parsed& g) {
  boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS> u(boost::num_vertices(g));
  for (auto [it, end] = boost::edges(g); it != end; ++it)
    boost::add_edge(boost::source(*it, g), boost::target(*it, g), u);
  std::vector<int> comp(boost::num_vertices(u));
  return static_cast<std::size_t>(boost::connected_components(u, comp.data()));
}

std::vector<Generator> all_generators() {
  auto gens = standard::position_generators();
  for (const auto& g : standard::relabel_generators()) gens.push_back(g);
  return gens;
}

TEST(OrbitGraphDotTest, FullGeneratorSet) {
  const OrbitGraph graph = orbit_graph(all_generators(), all_boards());
  const Parsed g = parse(export_orbit_graph(graph));
  EXPECT_EQ(boost::num_vertices(g), 288u);
  EXPECT_EQ(boost::num_edges(g), graph.edges.size());
  EXPECT_EQ(weak_components(g), 2u);
  EXPECT_EQ(weak_components(g), graph.components().size());
}

TEST(OrbitGraphDotTest, NodeIdsAreBoardStrings) {
  const OrbitGraph graph = orbit_graph(standard::position_generators(), all_boards());
  const Parsed g = parse(export_orbit_graph(graph));
  std::set<std::string> names;
  for (auto v : boost::make_iterator_range(boost::vertices(g))) names.insert(g[v].name);
  std::set<std::string> boards;
  for (const Board& b : all_boards()) boards.insert(b.to_string());
  EXPECT_EQ(names, boards);
}

TEST(OrbitGraphDotTest, EmptyGeneratorSet) {
  const Parsed g = parse(export_orbit_graph(orbit_graph({}, all_boards())));
  EXPECT_EQ(boost::num_vertices(g), 288u);
  EXPECT_EQ(boost::num_edges(g), 0u);
}

TEST(OrbitGraphDotTest, PositionGeneratorsGiveTheSixH4Nests) {
  const OrbitGraph graph = orbit_graph(standard::position_generators(), all_boards());
  const Parsed g = parse(export_orbit_graph(graph));
  EXPECT_EQ(weak_components(g), 6u);
}

TEST(OrbitGraphDotTest, InvolutionsAreUndirectedAndRotationIsNot) {
  const OrbitGraph graph = orbit_graph(standard::position_generators(), all_boards());
  const Parsed g = parse(export_orbit_graph(graph));
  std::map<std::string, std::set<std::string>> dirs;
  for (auto e : boost::make_iterator_range(boost::edges(g))) dirs[g[e].label].insert(g[e].dir);
  EXPECT_EQ(dirs["r"], (std::set<std::string>{""}));
  EXPECT_EQ(dirs["s"], (std::set<std::string>{"none"}));
  EXPECT_EQ(dirs["t"], (std::set<std::string>{"none"}));
}

TEST(OrbitGraphDotTest, SelfLoopsSurvive) {
  const std::vector<Generator> gens{{"x", {gen_t(), parse_cycles<4>("(2 3)")}}};
  const Parsed g = parse(export_orbit_graph(orbit_graph(gens, all_boards())));
  std::size_t loops = 0;
  for (auto e : boost::make_iterator_range(boost::edges(g))) loops += boost::source(e, g) == boost::target(e, g);
  EXPECT_EQ(loops, 8u);
}

TEST(OrbitGraphDotTest, ByteStable) {
  const OrbitGraph graph = orbit_graph(all_generators(), all_boards());
  EXPECT_EQ(export_orbit_graph(graph).text, export_orbit_graph(graph).text);
  const std::string text = export_orbit_graph(orbit_graph(standard::position_generators(), all_boards())).text;
  EXPECT_EQ(text.rfind("digraph \"orbits <r,s,t>\" {\n", 0), 0u);
}

TEST(NestGraphDotTest, S4NestsUnderSAndT) {
  const std::vector<Generator> gens{standard::s(), standard::t()};
  const NestGraph ng = s4_nest_graph(gens);
  const Parsed g = parse(export_nest_graph(ng));
  EXPECT_EQ(boost::num_vertices(g), 12u);
  EXPECT_EQ(boost::num_edges(g), 24u);
  EXPECT_EQ(weak_components(g), 2u);
  EXPECT_EQ(weak_components(g), ng.component_count());
  for (auto e : boost::make_iterator_range(boost::edges(g))) {
    if (g[e].label == "t") EXPECT_EQ(g[e].relabel, "(2 3)");
    if (g[e].label == "s") EXPECT_EQ(g[e].relabel, "");
  }
}

TEST(NestGraphDotTest, H4NestsUnderThreeCycle) {
  const NestGraph ng = h4_nest_graph(std::vector<Generator>{standard::relabel("(1 2 3)")});
  const Parsed g = parse(export_nest_graph(ng));
  EXPECT_EQ(boost::num_vertices(g), 6u);
  EXPECT_EQ(boost::num_edges(g), 6u);
  EXPECT_EQ(weak_components(g), 2u);
  // Every node has exactly one outgoing and one incoming directed edge.
  std::vector<int> in(6), out(6);
  for (auto e : boost::make_iterator_range(boost::edges(g))) {
    EXPECT_EQ(g[e].dir, "");
    ++out[boost::source(e, g)];
    ++in[boost::target(e, g)];
  }
  EXPECT_EQ(in, std::vector<int>(6, 1));
  EXPECT_EQ(out, std::vector<int>(6, 1));
}

TEST(NestGraphDotTest, PositionAttributeOnH4Edges) {
  const NestGraph ng = h4_nest_graph(standard::relabel_generators());
  const Parsed g = parse(export_nest_graph(ng));
  bool saw_self_loop_with_t = false;
  for (auto e : boost::make_iterator_range(boost::edges(g))) {
    if (g[boost::source(e, g)].name == "a" && g[e].label == "(2 3)") {
      EXPECT_EQ(boost::target(e, g), boost::source(e, g));
      saw_self_loop_with_t = g[e].position == "t";
    }
  }
  EXPECT_TRUE(saw_self_loop_with_t);
}

TEST(NestGraphDotTest, EmptyEdgeSets) {
  const Parsed s4 = parse(export_nest_graph(s4_nest_graph({})));
  EXPECT_EQ(boost::num_vertices(s4), 12u);
  EXPECT_EQ(boost::num_edges(s4), 0u);
  const Parsed h4 = parse(export_nest_graph(h4_nest_graph({})));
  EXPECT_EQ(boost::num_vertices(h4), 6u);
  EXPECT_EQ(boost::num_edges(h4), 0u);
}

}  // namespace
}  // namespace shidoku
