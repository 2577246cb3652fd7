#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "shidoku/action.hpp"
#include "shidoku/burnside.hpp"
#include "shidoku/graphio.hpp"
#include "shidoku/nests.hpp"
#include "shidoku/search.hpp"
#include "shidoku/standard_groups.hpp"
#include "verify.hpp"

namespace shidoku::cli {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return "";
  const auto last = text.find_last_not_of(" \t\r");
  return std::string(text.substr(first, last - first + 1));
}

/// Relabeling cycles may be written compactly, "(123)" for "(1 2 3)".
std::string spread_digits(std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i > 0 && std::isdigit(static_cast<unsigned char>(text[i])) &&
        std::isdigit(static_cast<unsigned char>(text[i - 1])))
      out += ' ';
    out += text[i];
  }
  return out;
}

std::optional<Generator> standard_position(std::string_view name) {
  if (name == "r") return standard::r();
  if (name == "r2") return standard::r2();
  if (name == "s") return standard::s();
  if (name == "t") return standard::t();
  return std::nullopt;
}

Generator relabel_generator(std::string_view token) {
  const Relabeling sigma = parse_cycles<4>(spread_digits(token));
  return {cycle_notation(sigma), SymmetryElement::relabel(sigma)};
}

/// Splits "r,s,(1 2),(2 3)" at commas outside parentheses.
std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(trim(current));
      current.clear();
    } else {
      current += ch;
    }
  }
  if (!trim(current).empty() || !out.empty()) out.push_back(trim(current));
  for (const auto& token : out)
    if (token.empty()) throw UsageError("empty entry in generator list '" + std::string(text) + "'");
  return out;
}

enum class Accept { kPosition, kRelabel, kEither };

std::vector<Generator> parse_generator_list(std::string_view text, Accept accept) {
  std::vector<Generator> out;
  for (const std::string& token : split_list(text)) {
    if (auto g = standard_position(token)) {
      if (accept == Accept::kRelabel) throw UsageError("'" + token + "' is not a relabeling");
      out.push_back(*g);
    } else if (!token.empty() && token.front() == '(') {
      if (accept == Accept::kPosition) throw UsageError("'" + token + "' is not one of r, r2, s, t");
      out.push_back(relabel_generator(token));
    } else {
      throw UsageError("unknown generator '" + token + "'");
    }
  }
  return out;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return in;
}

/// Pool files: one generator per line, as `name: cycles`, bare `cycles`, or
/// (position pools) one of r, r2, s, t. '#' starts a comment line.
std::vector<Generator> read_pool(const std::string& path, Accept accept) {
  std::ifstream in = open_input(path);
  std::vector<Generator> out;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const std::string where = path + ":" + std::to_string(line_no) + ": ";
    std::string name;
    std::string cycles = text;
    if (const auto colon = text.find(':'); colon != std::string::npos) {
      name = trim(text.substr(0, colon));
      cycles = trim(text.substr(colon + 1));
    }
    try {
      if (accept == Accept::kPosition) {
        if (auto g = standard_position(cycles)) {
          if (!name.empty()) g->name = name;
          out.push_back(*g);
          continue;
        }
        const PositionPerm x = parse_cycles<16>(cycles);
        if (!is_position_symmetry(x)) throw UsageError(where + "not a position symmetry");
        out.push_back({name.empty() ? cycle_notation(x) : name, SymmetryElement::position(x)});
      } else {
        Generator g = relabel_generator(cycles);
        if (!name.empty()) g.name = name;
        out.push_back(g);
      }
    } catch (const CycleParseError& e) {
      throw UsageError(where + e.what());
    }
  }
  return out;
}

struct GroupSpec {
  std::string name;
  SymmetryGroup group;
};

GroupSpec resolve_group(const std::string& spec) {
  if (auto g = standard::from_shorthand(spec)) return {spec, *g};
  if (std::filesystem::is_regular_file(spec)) {
    std::ifstream in = open_input(spec);
    try {
      return {spec, generate(read_group_description(in))};
    } catch (const GroupFormatError& e) {
      throw UsageError(spec + ": " + e.what());
    }
  }
  throw UsageError("unknown group '" + spec +
                   "' (shorthands: full, H4, S4, st, rs, rt, r2st, c123, trivial; or a group file)");
}

std::string group_label(const GroupSpec& g) {
  return g.name + " " + g.group.label();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string pad(std::string text, std::size_t width) {
  if (text.size() < width) text.append(width - text.size(), ' ');
  return text;
}

// ---- subcommands ----

int cmd_enumerate(const std::string& format, const std::string& output, std::ostream& out) {
  const BoardSet& boards = all_boards();
  std::ostringstream text;
  if (format == "json") {
    json j;
    j["count"] = boards.size();
    j["boards"] = json::array();
    for (const Board& b : boards) j["boards"].push_back(b.to_string());
    text << j.dump(2) << '\n';
  } else {
    write_board_set(text, boards);
  }
  if (output.empty()) {
    out << text.str();
  } else {
    write_file(output, text.str());
  }
  return kExitOk;
}

int cmd_orbits(const std::string& spec, const std::string& format, std::ostream& out) {
  const GroupSpec g = resolve_group(spec);
  const OrbitPartition p = orbits(g.group, all_boards());
  const bool complete = p == full_partition();
  if (format == "json") {
    json j{{"group", g.name}, {"generators", g.group.label()}, {"order", g.group.order()},
           {"orbit_count", p.block_count()}, {"complete", complete}, {"blocks", json::array()}};
    for (const BoardSet& block : p.blocks())
      j["blocks"].push_back({{"size", block.size()}, {"min", block.front().to_string()}});
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "group: " << group_label(g) << '\n'
      << "order: " << g.group.order() << '\n'
      << "orbits: " << p.block_count() << '\n'
      << "complete: " << yes_no(complete) << '\n';
  for (std::size_t k = 0; k < p.block_count(); ++k) {
    out << "block " << k + 1 << ": size " << p.blocks()[k].size() << ", min "
        << p.blocks()[k].front().to_string() << '\n';
  }
  return kExitOk;
}

int cmd_burnside(const std::string& spec, const std::string& format, std::ostream& out) {
  const GroupSpec g = resolve_group(spec);
  const SymmetryGroup h = position_projection(g.group);
  const InvarianceTable table = invariance_table(h);
  const BurnsideCount count = burnside(g.group);
  const bool full_relabeling = direct_product(h, standard::s4()) == g.group;

  if (format == "json") {
    json rows = json::array();
    for (const InvarianceRow& row : table.rows) {
      rows.push_back({{"class", h.word(row.cls.representative)},
                      {"size", row.cls.members.size()},
                      {"representative", cycle_notation(row.cls.representative.pos)},
                      {"invariant", row.invariant_count}});
    }
    json j{{"group", g.name},
           {"order", count.group_order},
           {"position_order", h.order()},
           {"rows", rows},
           {"fixed_point_total", count.fixed_point_total},
           {"orbit_count", count.orbit_count}};
    out << j.dump(2) << '\n';
    return kExitOk;
  }

  std::vector<std::array<std::string, 4>> lines{{"Class", "Size", "Representative", "Invariant"}};
  for (const InvarianceRow& row : table.rows) {
    lines.push_back({"C_" + h.word(row.cls.representative), std::to_string(row.cls.members.size()),
                     row.cls.representative.is_identity() ? "()" : cycle_notation(row.cls.representative.pos),
                     std::to_string(row.invariant_count / 24) + " · 4! = " + std::to_string(row.invariant_count)});
  }
  std::array<std::size_t, 4> width{};
  for (const auto& line : lines)
    for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], line[c].size());

  out << "group: " << group_label(g) << '\n'
      << "order: " << count.group_order << '\n'
      << "position part: " << h.label() << ", order " << h.order() << '\n';
  for (const auto& line : lines) {
    out << pad(line[0], width[0] + 2) << pad(line[1], width[1] + 2) << pad(line[2], width[2] + 2) << line[3]
        << '\n';
  }
  if (full_relabeling) {
    out << "table: (";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      if (i > 0) out << " + ";
      out << table.rows[i].cls.members.size() << "(" << table.rows[i].invariant_count << ")";
    }
    const BurnsideCount via_table = table.with_full_relabeling();
    out << ") / (" << h.order() << " · 4!) = " << via_table.orbit_count << '\n';
  }
  out << "fixed points: " << count.fixed_point_total << '\n'
      << "orbits: " << count.fixed_point_total << " / " << count.group_order << " = " << count.orbit_count
      << '\n';
  return kExitOk;
}

NestFactor parse_factor(const std::string& factor) {
  if (factor == "s4") return NestFactor::kS4;
  if (factor == "h4") return NestFactor::kH4;
  throw UsageError("--factor must be s4 or h4");
}

int cmd_nests(const std::string& factor, const std::string& format, std::ostream& out) {
  const auto& nests = parse_factor(factor) == NestFactor::kS4 ? s4_nests() : h4_nests();
  if (format == "json") {
    json j = json::array();
    for (const Nest& n : nests)
      j.push_back({{"label", n.label}, {"size", n.members.size()}, {"representative", n.representative.to_string()}});
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  for (const Nest& n : nests) out << n.label << "  " << n.members.size() << "  " << n.representative.to_string() << '\n';
  return kExitOk;
}

int cmd_nest_graph(const std::string& factor_name, const std::optional<std::string>& gens_text,
                   const std::string& dot_path, const std::string& format, std::ostream& out) {
  const NestFactor factor = parse_factor(factor_name);
  NestGraph graph;
  bool complete = false;
  if (factor == NestFactor::kS4) {
    const auto gens = gens_text ? parse_generator_list(*gens_text, Accept::kPosition) : standard::position_generators();
    graph = s4_nest_graph(gens);
    complete = complete_via_s4_nests(gens);
  } else {
    const auto gens = gens_text ? parse_generator_list(*gens_text, Accept::kRelabel) : standard::relabel_generators();
    graph = h4_nest_graph(gens);
    complete = complete_via_h4_nests(gens);
  }
  if (!dot_path.empty()) write_file(dot_path, export_nest_graph(graph).text);

  const auto comps = graph.components();
  const char* aux_name = factor == NestFactor::kS4 ? "relabel" : "position";
  if (format == "json") {
    json j{{"factor", factor_name}, {"components", comps.size()}, {"complete", complete}};
    j["component_vertices"] = json::array();
    for (const auto& comp : comps) {
      json labels = json::array();
      for (std::size_t v : comp) labels.push_back(graph.vertices[v].label);
      j["component_vertices"].push_back(labels);
    }
    j["edges"] = json::array();
    for (const NestEdge& e : graph.edges) {
      json edge{{"from", graph.vertices[e.from].label}, {"to", graph.vertices[e.to].label}, {"generator", e.generator}};
      if (e.auxiliary) edge[aux_name] = *e.auxiliary;
      j["edges"].push_back(edge);
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "components: " << comps.size() << '\n';
  for (std::size_t k = 0; k < comps.size(); ++k) {
    out << "component " << k + 1 << ":";
    for (std::size_t v : comps[k]) out << ' ' << graph.vertices[v].label;
    out << '\n';
  }
  out << "complete: " << yes_no(complete) << '\n';
  for (const NestEdge& e : graph.edges) {
    out << graph.vertices[e.from].label << " -" << e.generator << "-> " << graph.vertices[e.to].label;
    if (e.auxiliary) out << "  " << aux_name << ' ' << *e.auxiliary;
    out << '\n';
  }
  return kExitOk;
}

int cmd_search(const std::string& position_pool, const std::string& relabel_pool, bool minimal_only,
               const std::string& format, std::ostream& out) {
  const auto ppool = position_pool.empty() ? default_position_pool() : read_pool(position_pool, Accept::kPosition);
  const auto rpool = relabel_pool.empty() ? default_relabel_pool() : read_pool(relabel_pool, Accept::kRelabel);
  if (ppool.empty() || rpool.empty()) throw UsageError("generator pools must not be empty");
  std::vector<SearchResult> results = search_products(ppool, rpool);
  if (minimal_only) std::erase_if(results, [](const SearchResult& r) { return !r.minimal; });

  if (format == "json") {
    json j = json::array();
    for (const SearchResult& r : results) {
      j.push_back({{"position_gens", r.position_label()},
                   {"relabel_gens", r.relabel_label()},
                   {"order", r.order},
                   {"orbits", r.orbit_count},
                   {"complete", r.complete},
                   {"minimal", r.minimal}});
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  std::vector<std::array<std::string, 6>> lines{
      {"position-gens", "relabel-gens", "order", "orbits", "complete", "minimal"}};
  for (const SearchResult& r : results) {
    lines.push_back({r.position_label(), r.relabel_label(), std::to_string(r.order), std::to_string(r.orbit_count),
                     yes_no(r.complete), yes_no(r.minimal)});
  }
  std::array<std::size_t, 6> width{};
  for (const auto& line : lines)
    for (std::size_t c = 0; c < 6; ++c) width[c] = std::max(width[c], line[c].size());
  for (const auto& line : lines) {
    for (std::size_t c = 0; c < 5; ++c) out << pad(line[c], width[c] + 2);
    out << line[5] << '\n';
  }
  return kExitOk;
}

int cmd_export(const std::optional<std::string>& gens_text, const std::string& output, std::ostream& out) {
  std::vector<Generator> gens;
  if (gens_text) {
    gens = parse_generator_list(*gens_text, Accept::kEither);
  } else {
    gens = standard::position_generators();
    for (const auto& g : standard::relabel_generators()) gens.push_back(g);
  }
  const std::string text = export_orbit_graph(orbit_graph(gens, all_boards())).text;
  if (output.empty()) {
    out << text;
  } else {
    write_file(output, text);
  }
  return kExitOk;
}

int cmd_verify(const std::string& format, std::ostream& out) {
  const std::vector<Check> checks = run_verification();
  const auto passed = static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.passed; }));
  if (format == "json") {
    json j{{"passed", passed}, {"total", checks.size()}, {"checks", json::array()}};
    for (const Check& c : checks)
      j["checks"].push_back({{"id", c.id}, {"description", c.description}, {"passed", c.passed}});
    out << j.dump(2) << '\n';
  } else {
    std::size_t width = 0;
    for (const Check& c : checks) width = std::max(width, c.id.size());
    for (const Check& c : checks)
      out << (c.passed ? "PASS  " : "FAIL  ") << pad(c.id, width + 2) << c.description << '\n';
    out << "passed " << passed << " of " << checks.size() << '\n';
  }
  return passed == checks.size() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shidoku symmetry groups: orbits, Burnside counts, nests and complete subgroups", "shidoku"};
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  std::string output;
  auto* enumerate = app.add_subcommand("enumerate", "Print all 288 boards in canonical order");
  enumerate->add_option("-o,--output", output, "Write to a file instead of stdout");
  add_format(enumerate);

  std::string group_spec;
  auto* orbits_cmd = app.add_subcommand("orbits", "Orbit report for a group");
  orbits_cmd->add_option("--group", group_spec, "Shorthand or group-description file")->required();
  add_format(orbits_cmd);

  auto* burnside_cmd = app.add_subcommand("burnside", "Invariance table and Burnside orbit count");
  burnside_cmd->add_option("--group", group_spec, "Shorthand or group-description file")->required();
  add_format(burnside_cmd);

  std::string factor;
  auto* nests_cmd = app.add_subcommand("nests", "List S4-nests or H4-nests");
  nests_cmd->add_option("--factor", factor, "s4 or h4")->required()->check(CLI::IsMember({"s4", "h4"}));
  add_format(nests_cmd);

  std::optional<std::string> gens;
  std::string dot_path;
  auto* nest_graph_cmd = app.add_subcommand("nest-graph", "Induced action on nests");
  nest_graph_cmd->add_option("--factor", factor, "s4 or h4")->required()->check(CLI::IsMember({"s4", "h4"}));
  nest_graph_cmd->add_option("--gens", gens, "Comma-separated generators, e.g. s,t or (12),(23)");
  nest_graph_cmd->add_option("--dot", dot_path, "Write the graph as DOT");
  add_format(nest_graph_cmd);

  std::string position_pool;
  std::string relabel_pool;
  bool minimal_only = false;
  auto* search_cmd = app.add_subcommand("search", "Search H' x S' products for complete groups");
  search_cmd->add_option("--position-pool", position_pool, "Position generator pool file");
  search_cmd->add_option("--relabel-pool", relabel_pool, "Relabeling generator pool file");
  search_cmd->add_flag("--minimal-only", minimal_only, "Only complete groups of order 192");
  add_format(search_cmd);

  auto* export_cmd = app.add_subcommand("export", "Write the orbit graph as DOT");
  export_cmd->add_option("--gens", gens, "Comma-separated generators (default r,s,t,(12),(23),(34),(14))");
  export_cmd->add_option("-o,--output", output, "Write to a file instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "Check every reproduced published value");
  add_format(verify_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(format, output, out);
    if (*orbits_cmd) return cmd_orbits(group_spec, format, out);
    if (*burnside_cmd) return cmd_burnside(group_spec, format, out);
    if (*nests_cmd) return cmd_nests(factor, format, out);
    if (*nest_graph_cmd) return cmd_nest_graph(factor, gens, dot_path, format, out);
    if (*search_cmd) return cmd_search(position_pool, relabel_pool, minimal_only, format, out);
    if (*export_cmd) return cmd_export(gens, output, out);
    if (*verify_cmd) return cmd_verify(format, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace shidoku::cli
