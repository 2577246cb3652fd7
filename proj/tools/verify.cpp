#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <set>
#include <sstream>

#include "shidoku/action.hpp"
#include "shidoku/burnside.hpp"
#include "shidoku/graphio.hpp"
#include "shidoku/nests.hpp"
#include "shidoku/search.hpp"
#include "shidoku/standard_groups.hpp"

namespace shidoku::cli {
namespace {

using standard::position_group;

PositionPerm word(std::string_view letters) {
  PositionPerm out;
  for (char ch : letters) out = out * (ch == 'r' ? gen_r() : ch == 's' ? gen_s() : gen_t());
  return out;
}

std::multiset<std::size_t> sizes(const OrbitPartition& p) {
  const auto v = p.block_sizes();
  return {v.begin(), v.end()};
}

std::size_t dot_node_lines(const DotDocument& doc) {
  std::istringstream is(doc.text);
  std::size_t n = 0;
  for (std::string line; std::getline(is, line);)
    if (line.rfind("  ", 0) == 0 && line.find("->") == std::string::npos) ++n;
  return n;
}

SymmetryGroup c3() { return generate({standard::relabel("(1 2 3)")}); }

std::vector<Generator> named(std::initializer_list<Generator> gens) { return gens; }

const Board kType1 = Board::from_string("1234341221434321");
const Board kType2 = Board::from_string("1234341223414123");
const Board kSymmetricBoard = Board::from_string("1243342143122134");

class Recorder {
 public:
  void check(std::string id, std::string description, const std::function<bool()>& body) {
    bool ok = false;
    try {
      ok = body();
    } catch (const std::exception&) {
      ok = false;
    }
    checks_.push_back({std::move(id), std::move(description), ok});
  }
  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::vector<Check> checks_;
};

void board_checks(Recorder& r) {
  r.check("board.count", "enumerate_all() has 288 boards", [] { return enumerate_all().size() == 288; });
  r.check("board.type1-valid", "Type 1 representative 1234/3412/2143/4321 is valid",
          [] { return kType1.is_valid(); });
  r.check("board.nest-A-valid", "nest A 1234/3412/4123/2341 is valid",
          [] { return Board::from_string("1234341241232341").is_valid(); });
  r.check("board.ones-configuration", "18 boards have 1s at cells 1, 7, 10, 16", [] {
    const std::array<Cell, 4> mask{Cell(1), Cell(7), Cell(10), Cell(16)};
    return count_with_ones_configuration(mask) == 18;
  });
}

void perm_checks(Recorder& r) {
  r.check("perm.t-cycles", "t = (2 5)(3 9)(4 13)(7 10)(8 14)(12 15)",
          [] { return cycle_notation(gen_t()) == "(2 5)(3 9)(4 13)(7 10)(8 14)(12 15)"; });
  r.check("perm.s-cycles", "s = (9 13)(10 14)(11 15)(12 16)",
          [] { return cycle_notation(gen_s()) == "(9 13)(10 14)(11 15)(12 16)"; });
  r.check("perm.parse-s", "parse_cycles of the C_s representative gives s",
          [] { return parse_cycles<16>("(9 13)(10 14)(11 15)(12 16)") == gen_s(); });
  r.check("perm.stst-cycles", "stst = (3 4)(7 8)(9 13)(10 14)(11 16)(12 15)",
          [] { return cycle_notation(word("stst")) == "(3 4)(7 8)(9 13)(10 14)(11 16)(12 15)"; });
  r.check("relation.r4", "r^4 = id", [] { return word("rrrr").is_identity(); });
  r.check("relation.s2", "s^2 = id", [] { return word("ss").is_identity(); });
  r.check("relation.t2", "t^2 = id", [] { return word("tt").is_identity(); });
  r.check("relation.trtr", "trtr = id", [] { return word("trtr").is_identity(); });
  r.check("relation.rsr2tsr3t", "r s r^2 t s r^3 t = id", [] { return word("rsrrtsrrrt").is_identity(); });
  r.check("relation.tstststs", "(ts)^4 = id", [] { return word("tstststs").is_identity(); });
  r.check("relation.srsr3srsr3", "(s r s r^3)^2 = id", [] { return word("srsrrrsrsrrr").is_identity(); });
  r.check("perm.generators-valid", "r, s, t map every board to a board", [] {
    return is_position_symmetry(gen_r()) && is_position_symmetry(gen_s()) && is_position_symmetry(gen_t());
  });
}

void group_checks(Recorder& r) {
  r.check("group.h4-order", "|<r,s,t>| = 128", [] { return standard::h4().order() == 128; });
  r.check("group.rt-order", "|<r,t>| = 8", [] { return position_group({"r", "t"}).order() == 8; });
  r.check("group.rs-order", "|<r,s>| = 64", [] { return position_group({"r", "s"}).order() == 64; });
  r.check("group.st-elements", "<s,t> = {id, s, t, st, ts, sts, tst, stst}", [] {
    std::set<PositionPerm> listed;
    for (auto w : {"", "s", "t", "st", "ts", "sts", "tst", "stst"}) listed.insert(word(w));
    std::set<PositionPerm> actual;
    const SymmetryGroup st = position_group({"s", "t"});
    for (const auto& e : st.elements()) actual.insert(e.pos);
    return listed.size() == 8 && listed == actual;
  });
  r.check("group.g4-order", "|H4 x S4| = 3072", [] { return standard::g4().order() == 3072; });
  r.check("group.st-s4-order", "|<s,t> x S4| = 192",
          [] { return direct_product(position_group({"s", "t"}), standard::s4()).order() == 192; });
  r.check("group.h4-c3-order", "|H4 x <(1 2 3)>| = 384",
          [] { return direct_product(standard::h4(), c3()).order() == 384; });
  r.check("group.st-classes", "<s,t> has classes {id}, {s,tst}, {t,sts}, {st,ts}, {stst}", [] {
    std::set<std::set<PositionPerm>> expected{{word("")},
                                              {word("s"), word("tst")},
                                              {word("t"), word("sts")},
                                              {word("st"), word("ts")},
                                              {word("stst")}};
    std::set<std::set<PositionPerm>> actual;
    for (const auto& c : conjugacy_classes(position_group({"s", "t"}))) {
      std::set<PositionPerm> members;
      for (const auto& m : c.members) members.insert(m.pos);
      actual.insert(members);
    }
    return actual == expected;
  });
  r.check("group.h4-classes", "H4 has 20 conjugacy classes",
          [] { return conjugacy_classes(standard::h4()).size() == 20; });
}

void action_checks(Recorder& r) {
  r.check("action.symmetric-transpose", "t maps board 1243342143122134 to 1342/2431/4213/3124",
          [] { return apply(gen_t(), kSymmetricBoard).to_string() == "1342243142133124"; });
  r.check("action.symmetric-invariant", "(t, (2 3)) fixes board 1243342143122134", [] {
    return apply(SymmetryElement{gen_t(), parse_cycles<4>("(2 3)")}, kSymmetricBoard) == kSymmetricBoard;
  });
  r.check("action.full-orbits", "G4 has orbits of sizes 96 and 192 separating the two types", [] {
    const OrbitPartition& p = full_partition();
    return sizes(p) == std::multiset<std::size_t>{96, 192} && p.block_of(kType1) != p.block_of(kType2) &&
           p.blocks()[p.block_of(kType1)].size() == 96;
  });
  r.check("action.rt-s4-orbits", "<r,t> x S4 has 5 orbits", [] {
    return orbits(direct_product(position_group({"r", "t"}), standard::s4()), all_boards()).block_count() == 5;
  });
  r.check("action.rs-c3-orbits", "<r,s> x <(1 2 3)> has orbits of sizes 96 and 192", [] {
    return sizes(orbits(direct_product(position_group({"r", "s"}), c3()), all_boards())) ==
           std::multiset<std::size_t>{96, 192};
  });
  r.check("action.st-s4-orbits", "<s,t> x S4 has orbits of sizes 96 and 192", [] {
    return sizes(orbits(direct_product(position_group({"s", "t"}), standard::s4()), all_boards())) ==
           std::multiset<std::size_t>{96, 192};
  });
  r.check("action.rt-s4-incomplete", "<r,t> x S4 is not complete",
          [] { return !is_complete(direct_product(position_group({"r", "t"}), standard::s4())); });
  r.check("action.rs-c3-complete", "<r,s> x <(1 2 3)> is complete",
          [] { return is_complete(direct_product(position_group({"r", "s"}), c3())); });
  r.check("action.st-s4-complete", "<s,t> x S4 is complete",
          [] { return is_complete(direct_product(position_group({"s", "t"}), standard::s4())); });
  r.check("action.h4-c3-complete", "H4 x <(1 2 3)> is complete",
          [] { return is_complete(direct_product(standard::h4(), c3())); });
  r.check("action.r2st-c3-complete", "<r2,s,t> x <(1 2 3)> is complete",
          [] { return is_complete(direct_product(position_group({"r2", "s", "t"}), c3())); });
  r.check("action.orbit-graph-full", "orbit graph of r, s, t, (1 2), (2 3), (3 4), (1 4) has components 96, 192", [] {
    std::vector<Generator> gens = standard::position_generators();
    for (const auto& g : standard::relabel_generators()) gens.push_back(g);
    const auto comps = orbit_graph(gens, all_boards()).components();
    return comps.size() == 2 && std::multiset<std::size_t>{comps[0].size(), comps[1].size()} ==
                                    std::multiset<std::size_t>{96, 192};
  });
  r.check("action.orbit-graph-rt", "orbit graph of <r,t> x S4 generators has 5 components", [] {
    std::vector<Generator> gens{standard::r(), standard::t()};
    for (const auto& g : standard::relabel_generators()) gens.push_back(g);
    return orbit_graph(gens, all_boards()).components().size() == 5;
  });
}

void burnside_checks(Recorder& r) {
  r.check("burnside.recover-symmetric", "the relabeling undoing t on board 1243342143122134 is (2 3)",
          [] { return relabel_recovery(gen_t(), kSymmetricBoard) == parse_cycles<4>("(2 3)"); });
  r.check("burnside.s-never-invariant", "no board is invariant under s", [] {
    return std::none_of(all_boards().begin(), all_boards().end(),
                        [](const Board& b) { return relabel_recovery(gen_s(), b).has_value(); });
  });
  r.check("burnside.table1", "invariant counts id 12*4!, s 0, t 2*4!, st 0, stst 0", [] {
    return invariant_count(PositionPerm()) == 288 && invariant_count(gen_s()) == 0 &&
           invariant_count(gen_t()) == 48 && invariant_count(word("st")) == 0 &&
           invariant_count(word("stst")) == 0;
  });
  r.check("burnside.table1-rows", "<s,t> table rows 288, 0, 48, 0, 0 over five classes", [] {
    const InvarianceTable table = invariance_table(position_group({"s", "t"}));
    std::multiset<std::size_t> counts;
    for (const auto& row : table.rows) counts.insert(row.invariant_count);
    return table.rows.size() == 5 && counts == std::multiset<std::size_t>{288, 0, 48, 0, 0};
  });
  r.check("burnside.symmetric-fixed", "(t, (2 3)) fixes at least one board", [] {
    return fixed_points(SymmetryElement{gen_t(), parse_cycles<4>("(2 3)")}) >= 1;
  });
  r.check("burnside.st-s4", "(1(288) + 2(0) + 2(48) + 2(0) + 1(0)) / (8 * 4!) = 2", [] {
    const BurnsideCount c = burnside(direct_product(position_group({"s", "t"}), standard::s4()));
    return c.fixed_point_total == 384 && c.group_order == 192 && c.orbit_count == 2;
  });
  r.check("burnside.g4", "Burnside count for G4 is 2", [] { return burnside_orbit_count(standard::g4()) == 2; });
  r.check("burnside.rt-s4", "Burnside count for <r,t> x S4 is 5", [] {
    return burnside_orbit_count(direct_product(position_group({"r", "t"}), standard::s4())) == 5;
  });
  r.check("burnside.h4-table", "H4 invariance table has 20 rows",
          [] { return invariance_table(standard::h4()).rows.size() == 20; });
  r.check("burnside.fixing-symmetric", "fixing lemmas hold for t on board 1243342143122134; diagonal reads 1, 4, 1, 4", [] {
    return check_fixing_lemmas(gen_t(), kSymmetricBoard) && kSymmetricBoard[Cell(1)] == 1 && kSymmetricBoard[Cell(6)] == 4 &&
           kSymmetricBoard[Cell(11)] == 1 && kSymmetricBoard[Cell(16)] == 4;
  });
}

void nest_checks(Recorder& r) {
  r.check("nests.symmetric-canonical", "board 1243342143122134 is its own S4 representative",
          [] { return s4_canonicalize(kSymmetricBoard) == kSymmetricBoard; });
  r.check("nests.type2-is-I", "the Type 2 representative is nest representative I", [] {
    return s4_canonicalize(kType2) == kType2 && s4_nests()[8].label == "I" &&
           s4_nests()[8].representative == kType2;
  });
  r.check("nests.s4-count", "twelve S4-nests of 24 boards each", [] {
    return s4_nests().size() == 12 &&
           std::all_of(s4_nests().begin(), s4_nests().end(), [](const Nest& n) { return n.members.size() == 24; });
  });
  r.check("nests.s4-representatives", "S4-nest representatives are the printed boards A-L", [] {
    const auto& golden = s4_nest_golden();
    for (std::size_t i = 0; i < golden.size(); ++i)
      if (s4_nests()[i].label != golden[i].first || s4_nests()[i].representative != golden[i].second) return false;
    return golden.size() == 12;
  });
  r.check("nests.s4-graph-st", "S4-nest graph of {s, t} has components of 8 and 4 nests", [] {
    const auto comps = s4_nest_graph(named({standard::s(), standard::t()})).components();
    return comps.size() == 2 &&
           std::multiset<std::size_t>{comps[0].size(), comps[1].size()} == std::multiset<std::size_t>{4, 8};
  });
  r.check("nests.s4-graph-rt", "S4-nest graph of {r, t} has 5 components",
          [] { return s4_nest_graph(named({standard::r(), standard::t()})).component_count() == 5; });
  r.check("nests.edge-A-t-C", "t carries nest A to nest C",
          [] { return s4_nest_graph(named({standard::t()})).target("A", "t").label == "C"; });
  r.check("nests.edge-C-s-H", "s carries nest C to nest H",
          [] { return s4_nest_graph(named({standard::s()})).target("C", "s").label == "H"; });
  r.check("nests.t-needs-23", "every t-edge needs the relabeling (2 3)", [] {
    const NestGraph g = s4_nest_graph(named({standard::t()}));
    return std::all_of(g.edges.begin(), g.edges.end(), [](const NestEdge& e) { return e.auxiliary == "(2 3)"; });
  });
  r.check("nests.h4-a-fixed", "representative a is its own H4 canonical form",
          [] { return h4_canonicalize(kType1) == kType1 && has_h4_representative_form(kType1); });
  r.check("nests.h4-sizes", "H4-nest sizes a 32, b 64, c 32, d 64, e 64, f 32", [] {
    const std::vector<std::size_t> expected{32, 64, 32, 64, 64, 32};
    const auto& nests = h4_nests();
    if (nests.size() != 6) return false;
    for (std::size_t i = 0; i < 6; ++i)
      if (nests[i].members.size() != expected[i] || nests[i].label != std::string(1, char('a' + i))) return false;
    return true;
  });
  r.check("nests.h4-representatives", "H4-nest representatives are the printed boards a-f", [] {
    const auto& golden = h4_nest_golden();
    for (std::size_t i = 0; i < golden.size(); ++i)
      if (h4_nests()[i].representative != golden[i].second) return false;
    return golden.size() == 6;
  });
  r.check("nests.r2st-equals-h4", "<r2,s,t>-orbits are the H4-nests", [] {
    const OrbitPartition p = orbits(position_group({"r2", "s", "t"}), all_boards());
    if (p.block_count() != h4_nests().size()) return false;
    for (const Nest& n : h4_nests()) {
      const std::size_t block = p.block_of(n.representative);
      if (p.blocks()[block] != n.members) return false;
    }
    return true;
  });
  r.check("nests.h4-edge-34", "(3 4) carries representative a onto representative c", [] {
    return apply(parse_cycles<4>("(3 4)"), h4_nests()[0].representative) == h4_nests()[2].representative;
  });
  r.check("nests.h4-edge-23", "t((2 3)(a)) = a", [] {
    const Board moved = apply(parse_cycles<4>("(2 3)"), h4_nests()[0].representative);
    return apply(gen_t(), moved) == h4_nests()[0].representative;
  });
  r.check("nests.h4-graph-12-23", "H4-nest graph of {(1 2), (2 3)} has 2 components", [] {
    return h4_nest_graph(named({standard::relabel("(1 2)"), standard::relabel("(2 3)")})).component_count() == 2;
  });
  r.check("nests.h4-graph-123", "H4-nest graph of {(1 2 3)} is two directed 3-cycles on {a,c,f} and {b,d,e}", [] {
    const NestGraph g = h4_nest_graph(named({standard::relabel("(1 2 3)")}));
    auto next = [&](const std::string& v) { return g.target(v, "(1 2 3)").label; };
    const std::set<std::string> first{"a", next("a"), next(next("a"))};
    const std::set<std::string> second{"b", next("b"), next(next("b"))};
    return g.component_count() == 2 && next(next(next("a"))) == "a" && next(next(next("b"))) == "b" &&
           first == std::set<std::string>{"a", "c", "f"} && second == std::set<std::string>{"b", "d", "e"};
  });
  r.check("nests.complete-st", "{s, t} on S4-nests gives a complete group",
          [] { return complete_via_s4_nests(named({standard::s(), standard::t()})); });
  r.check("nests.incomplete-rt", "{r, t} on S4-nests does not",
          [] { return !complete_via_s4_nests(named({standard::r(), standard::t()})); });
  r.check("nests.complete-123", "{(1 2 3)} on H4-nests gives a complete group",
          [] { return complete_via_h4_nests(named({standard::relabel("(1 2 3)")})); });
}

void search_checks(Recorder& r) {
  r.check("search.minimal-order", "minimal order is 192", [] { return minimal_order() == 192; });
  const auto results = std::make_shared<std::vector<SearchResult>>();
  auto find = [results](const SymmetryGroup& h, const SymmetryGroup& s) -> const SearchResult* {
    if (results->empty()) *results = search_products(default_position_pool(), default_relabel_pool());
    for (const SearchResult& res : *results)
      if (generate(res.position_gens) == h && generate(res.relabel_gens) == s) return &res;
    return nullptr;
  };
  r.check("search.st-s4", "search finds <s,t> x S4 of order 192, complete", [&] {
    const auto* res = find(position_group({"s", "t"}), standard::s4());
    return res && res->order == 192 && res->complete && res->minimal;
  });
  r.check("search.rs-c3", "search finds <r,s> x <(1 2 3)> of order 192, complete", [&] {
    const auto* res = find(position_group({"r", "s"}), c3());
    return res && res->order == 192 && res->complete && res->minimal;
  });
  r.check("search.r2st-c3", "search finds <r2,s,t> x <(1 2 3)> of order 192, complete", [&] {
    const auto* res = find(position_group({"r2", "s", "t"}), c3());
    return res && res->order == 192 && res->complete && res->minimal;
  });
  r.check("search.rt-s4", "search finds <r,t> x S4 of order 192, not complete", [&] {
    const auto* res = find(position_group({"r", "t"}), standard::s4());
    return res && res->order == 192 && !res->complete;
  });
  r.check("search.h4-c3", "search finds H4 x <(1 2 3)> of order 384, complete, not minimal", [&] {
    const auto* res = find(standard::h4(), c3());
    return res && res->order == 384 && res->complete && !res->minimal;
  });
  r.check("search.single-factors", "H4 and S4 alone are incomplete", [] {
    return !is_complete(standard::h4()) && !is_complete(standard::s4()) &&
           verify_no_single_factor(standard::g4());
  });
}

void graphio_checks(Recorder& r) {
  r.check("graphio.h4-orbit-graph", "orbit graph of r, s, t has 6 components, the H4-nests", [] {
    const OrbitGraph g = orbit_graph(standard::position_generators(), all_boards());
    const auto comps = g.components();
    if (comps.size() != 6) return false;
    for (const auto& comp : comps) {
      const Board& first = g.vertices[comp.front()];
      const auto nest = std::find_if(h4_nests().begin(), h4_nests().end(),
                                     [&](const Nest& n) { return n.members.contains(first); });
      if (nest == h4_nests().end() || nest->members.size() != comp.size()) return false;
    }
    return true;
  });
  r.check("graphio.dot-full", "DOT export of the full orbit graph has 288 nodes", [] {
    std::vector<Generator> gens = standard::position_generators();
    for (const auto& g : standard::relabel_generators()) gens.push_back(g);
    return dot_node_lines(export_orbit_graph(orbit_graph(gens, all_boards()))) == 288;
  });
  r.check("graphio.s4-nest-dot", "DOT export of the {s, t} S4-nest graph has 12 nodes", [] {
    return dot_node_lines(export_nest_graph(s4_nest_graph(named({standard::s(), standard::t()})))) == 12;
  });
  r.check("graphio.h4-nest-dot", "DOT export of the {(1 2 3)} H4-nest graph has 6 nodes", [] {
    return dot_node_lines(export_nest_graph(h4_nest_graph(named({standard::relabel("(1 2 3)")})))) == 6;
  });
}

}  // namespace

std::vector<Check> run_verification() {
  Recorder r;
  board_checks(r);
  perm_checks(r);
  group_checks(r);
  action_checks(r);
  burnside_checks(r);
  nest_checks(r);
  search_checks(r);
  graphio_checks(r);
  return r.take();
}

}  // namespace shidoku::cli
