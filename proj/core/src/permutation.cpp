#include "shidoku/permutation.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "shidoku/action.hpp"

namespace shidoku {

template <std::size_t N>
std::string cycle_notation(const Permutation<N>& p) {
  std::string out;
  std::array<bool, N> visited{};
  for (std::size_t start = 0; start < N; ++start) {
    if (visited[start] || p(start) == start) continue;
    out += '(';
    std::size_t point = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      first = false;
      out += std::to_string(point + 1);
      visited[point] = true;
      point = p(point);
    } while (point != start);
    out += ')';
  }
  return out;
}

template <std::size_t N>
Permutation<N> parse_cycles(std::string_view text) {
  typename Permutation<N>::Image image{};
  for (std::size_t i = 0; i < N; ++i) image[i] = static_cast<std::uint8_t>(i);
  std::array<bool, N> used{};

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> CycleParseError {
    return CycleParseError("cannot parse cycles '" + std::string(text) + "': " + why);
  };

  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw fail("expected '('");
    ++pos;
    std::vector<std::size_t> cycle;
    skip_space();
    while (pos < text.size() && text[pos] != ')') {
      if (text[pos] == ',') {
        ++pos;
        skip_space();
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) throw fail("expected a number");
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > N) throw fail("point out of range");
        ++pos;
      }
      if (value < 1 || value > N) throw fail("point " + std::to_string(value) + " out of range");
      if (used[value - 1]) throw fail("point " + std::to_string(value) + " repeated");
      used[value - 1] = true;
      cycle.push_back(value - 1);
      skip_space();
    }
    if (pos >= text.size()) throw fail("unterminated cycle");
    ++pos;  // ')'
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      image[cycle[i]] = static_cast<std::uint8_t>(cycle[(i + 1) % cycle.size()]);
    }
    skip_space();
  }
  return Permutation<N>(image);
}

template std::string cycle_notation<kCellCount>(const PositionPerm&);
template std::string cycle_notation<kValueCount>(const Relabeling&);
template PositionPerm parse_cycles<kCellCount>(std::string_view);
template Relabeling parse_cycles<kValueCount>(std::string_view);

PositionPerm position_from_grid_map(
    const std::function<std::pair<int, int>(int row, int column)>& map) {
  return PositionPerm::from_map([&](std::size_t offset) {
    const Cell cell = Cell::from_offset(static_cast<int>(offset));
    const auto [row, column] = map(cell.row(), cell.column());
    return Cell::at(row, column).offset();
  });
}

PositionPerm gen_r() {
  return position_from_grid_map([](int i, int j) { return std::pair{j, kSide + 1 - i}; });
}

PositionPerm gen_s() { return swap_rows(3, 4); }

PositionPerm gen_t() {
  return position_from_grid_map([](int i, int j) { return std::pair{j, i}; });
}

namespace {

int swapped(int x, int a, int b) {
  if (x == a) return b;
  if (x == b) return a;
  return x;
}

}  // namespace

PositionPerm swap_rows(int a, int b) {
  return position_from_grid_map([=](int i, int j) { return std::pair{swapped(i, a, b), j}; });
}

PositionPerm swap_columns(int a, int b) {
  return position_from_grid_map([=](int i, int j) { return std::pair{i, swapped(j, a, b)}; });
}

PositionPerm swap_bands() {
  return position_from_grid_map([](int i, int j) { return std::pair{(i + 1) % kSide + 1, j}; });
}

PositionPerm swap_pillars() {
  return position_from_grid_map([](int i, int j) { return std::pair{i, (j + 1) % kSide + 1}; });
}

bool is_position_symmetry(const PositionPerm& x) {
  for (const Board& board : all_boards()) {
    if (!apply(x, board).is_valid()) return false;
  }
  return true;
}

std::string to_string(const SymmetryElement& e) {
  return "pos=" + cycle_notation(e.pos) + "; rel=" + cycle_notation(e.rel);
}

SymmetryElement parse_symmetry_element(std::string_view text) {
  SymmetryElement out;
  bool seen_pos = false;
  bool seen_rel = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view part = text.substr(start, end - start);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front()))) part.remove_prefix(1);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back()))) part.remove_suffix(1);
    if (!part.empty()) {
      if (part.starts_with("pos=") && !seen_pos) {
        out.pos = parse_cycles<kCellCount>(part.substr(4));
        seen_pos = true;
      } else if (part.starts_with("rel=") && !seen_rel) {
        out.rel = parse_cycles<kValueCount>(part.substr(4));
        seen_rel = true;
      } else {
        throw CycleParseError("expected 'pos=<cycles>' or 'rel=<cycles>', got '" +
                              std::string(part) + "'");
      }
    }
    start = end + 1;
  }
  if (!seen_pos && !seen_rel) throw CycleParseError("empty symmetry element");
  return out;
}

std::size_t SymmetryElementHash::operator()(const SymmetryElement& e) const noexcept {
  std::uint64_t code = 0;
  for (auto p : e.pos.image()) code = (code << 4) | p;
  std::uint64_t rel = 0;
  for (auto p : e.rel.image()) rel = (rel << 2) | p;
  return std::hash<std::uint64_t>{}(code ^ (rel * 0x9E3779B97F4A7C15ull));
}

}  // namespace shidoku
