#include "shidoku/board.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <ostream>

namespace shidoku {

namespace {

std::array<Region, 12> build_regions() {
  std::array<Region, 12> out{};
  for (int k = 0; k < kSide; ++k) {
    for (int j = 0; j < kSide; ++j) {
      out[k][j] = k * kSide + j;      // row k
      out[4 + k][j] = j * kSide + k;  // column k
    }
    const int top = (k / 2) * 2;
    const int left = (k % 2) * 2;
    for (int j = 0; j < kSide; ++j) {
      out[8 + k][j] = (top + j / 2) * kSide + left + j % 2;
    }
  }
  return out;
}

struct Search {
  std::array<Value, kCellCount> cells{};
  std::array<unsigned, kSide> row_used{};
  std::array<unsigned, kSide> column_used{};
  std::array<unsigned, kSide> block_used{};
  std::vector<Board> found;

  void fill(int offset) {
    if (offset == kCellCount) {
      found.emplace_back(cells);
      return;
    }
    const Cell cell = Cell::from_offset(offset);
    const int r = cell.row() - 1;
    const int c = cell.column() - 1;
    const int b = cell.block() - 1;
    const unsigned used = row_used[r] | column_used[c] | block_used[b];
    for (int v = 1; v <= kValueCount; ++v) {
      const unsigned bit = 1u << v;
      if (used & bit) continue;
      cells[offset] = static_cast<Value>(v);
      row_used[r] |= bit;
      column_used[c] |= bit;
      block_used[b] |= bit;
      fill(offset + 1);
      row_used[r] &= ~bit;
      column_used[c] &= ~bit;
      block_used[b] &= ~bit;
    }
  }
};

}  // namespace

const std::array<Region, 12>& regions() {
  static const std::array<Region, 12> table = build_regions();
  return table;
}

bool validate(std::span<const int> values) {
  if (values.size() != static_cast<std::size_t>(kCellCount)) return false;
  for (int v : values) {
    if (v < 1 || v > kValueCount) return false;
  }
  for (const Region& region : regions()) {
    unsigned seen = 0;
    for (int offset : region) seen |= 1u << values[offset];
    if (seen != 0b11110u) return false;
  }
  return true;
}

Board Board::from_string(std::string_view text) {
  if (text.size() != static_cast<std::size_t>(kCellCount)) {
    throw BoardFormatError("board text must have exactly 16 digits, got '" +
                           std::string(text) + "'");
  }
  std::array<Value, kCellCount> values{};
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch < '0' || ch > '9') {
      throw BoardFormatError("board text contains non-digit '" + std::string(1, ch) + "'");
    }
    values[i] = static_cast<Value>(ch - '0');
  }
  return Board(values);
}

bool Board::is_valid() const {
  std::array<int, kCellCount> as_int{};
  std::copy(values_.begin(), values_.end(), as_int.begin());
  return validate(as_int);
}

std::string Board::to_string() const {
  std::string out(kCellCount, '0');
  for (int i = 0; i < kCellCount; ++i) out[i] = static_cast<char>('0' + values_[i]);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Board& board) {
  return os << board.to_string();
}

BoardSet::BoardSet(std::vector<Board> boards) : boards_(std::move(boards)) {
  std::sort(boards_.begin(), boards_.end());
  boards_.erase(std::unique(boards_.begin(), boards_.end()), boards_.end());
}

bool BoardSet::contains(const Board& board) const {
  return std::binary_search(boards_.begin(), boards_.end(), board);
}

std::optional<std::size_t> BoardSet::index_of(const Board& board) const {
  auto it = std::lower_bound(boards_.begin(), boards_.end(), board);
  if (it == boards_.end() || *it != board) return std::nullopt;
  return static_cast<std::size_t>(std::distance(boards_.begin(), it));
}

BoardSet enumerate_all() {
  Search search;
  search.fill(0);
  // Values are tried in increasing order at each cell in index order, so the
  // output is already lexicographic.
  return BoardSet(std::move(search.found));
}

const BoardSet& all_boards() {
  static const BoardSet boards = enumerate_all();
  return boards;
}

int count_with_ones_configuration(std::span<const Cell> mask) {
  if (mask.size() != static_cast<std::size_t>(kValueCount)) return 0;
  unsigned rows = 0, columns = 0, blocks = 0;
  unsigned cells = 0;
  for (const Cell& cell : mask) {
    rows |= 1u << cell.row();
    columns |= 1u << cell.column();
    blocks |= 1u << cell.block();
    cells |= 1u << cell.offset();
  }
  if (rows != 0b11110u || columns != 0b11110u || blocks != 0b11110u) return 0;

  int count = 0;
  for (const Board& board : all_boards()) {
    unsigned ones = 0;
    for (int i = 0; i < kCellCount; ++i) {
      if (board.at_offset(i) == 1) ones |= 1u << i;
    }
    if (ones == cells) ++count;
  }
  return count;
}

void write_board_set(std::ostream& os, const BoardSet& boards) {
  for (const Board& board : boards) os << board.to_string() << '\n';
}

BoardSet read_board_set(std::istream& is) {
  const std::string text{std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
  if (text.empty()) return {};
  if (text.back() != '\n') throw BoardFormatError("board file must end with a newline");

  std::vector<Board> boards;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    Board board = Board::from_string(std::string_view(text).substr(start, end - start));
    if (!boards.empty() && !(boards.back() < board)) {
      throw BoardFormatError("board file is not strictly sorted at '" + board.to_string() + "'");
    }
    boards.push_back(board);
    start = end + 1;
  }
  return BoardSet(std::move(boards));
}

}  // namespace shidoku
