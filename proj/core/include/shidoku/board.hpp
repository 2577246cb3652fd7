#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace shidoku {

inline constexpr int kSide = 4;
inline constexpr int kCellCount = 16;
inline constexpr int kValueCount = 4;

/// A cell of the 4x4 grid. Indices are 1-based and row-major, so cell 1 is
/// the top-left corner and cell 16 the bottom-right one.
class Cell {
 public:
  constexpr explicit Cell(int index) : index_(index) {
    if (index < 1 || index > kCellCount) {
      throw std::out_of_range("cell index must be in 1..16");
    }
  }

  /// Cell at 1-based (row, column).
  static constexpr Cell at(int row, int column) {
    if (row < 1 || row > kSide || column < 1 || column > kSide) {
      throw std::out_of_range("row and column must be in 1..4");
    }
    return Cell((row - 1) * kSide + column);
  }

  static constexpr Cell from_offset(int offset) { return Cell(offset + 1); }

  constexpr int index() const { return index_; }
  constexpr int offset() const { return index_ - 1; }
  constexpr int row() const { return (index_ - 1) / kSide + 1; }
  constexpr int column() const { return (index_ - 1) % kSide + 1; }
  /// Blocks are numbered 1..4 row-major: 1 = upper-left, 4 = lower-right.
  constexpr int block() const { return ((row() - 1) / 2) * 2 + (column() - 1) / 2 + 1; }

  constexpr auto operator<=>(const Cell&) const = default;

 private:
  int index_;
};

/// The 12 regions (4 rows, 4 columns, 4 blocks) as lists of 0-based cell
/// offsets.
using Region = std::array<int, kSide>;
const std::array<Region, 12>& regions();

/// True iff `values` has 16 entries in 1..4 and every region holds each
/// value exactly once.
bool validate(std::span<const int> values);

using Value = std::uint8_t;

/// A 16-cell grid of values. Any 16-tuple of small integers is
/// representable; `is_valid()` reports whether it is a Shidoku board.
class Board {
 public:
  Board() = default;
  explicit Board(const std::array<Value, kCellCount>& values) : values_(values) {}

  /// Parses the 16-digit row-major text form, e.g. "1234341221434321".
  /// Throws BoardFormatError on wrong length or a non-digit character.
  static Board from_string(std::string_view text);

  Value operator[](Cell cell) const { return values_[cell.offset()]; }
  Value at_offset(int offset) const { return values_[offset]; }
  const std::array<Value, kCellCount>& values() const { return values_; }

  bool is_valid() const;
  std::string to_string() const;

  auto operator<=>(const Board&) const = default;

 private:
  std::array<Value, kCellCount> values_{};
};

std::ostream& operator<<(std::ostream& os, const Board& board);

class BoardFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Distinct boards kept in lexicographic order of their 16-tuples.
class BoardSet {
 public:
  using const_iterator = std::vector<Board>::const_iterator;

  BoardSet() = default;
  /// Sorts and removes duplicates.
  explicit BoardSet(std::vector<Board> boards);

  std::size_t size() const { return boards_.size(); }
  bool empty() const { return boards_.empty(); }
  const Board& operator[](std::size_t i) const { return boards_[i]; }
  const_iterator begin() const { return boards_.begin(); }
  const_iterator end() const { return boards_.end(); }
  const Board& front() const { return boards_.front(); }

  bool contains(const Board& board) const;
  std::optional<std::size_t> index_of(const Board& board) const;

  bool operator==(const BoardSet&) const = default;

 private:
  std::vector<Board> boards_;
};

/// Every Shidoku board, in lexicographic order. Always 288 of them.
BoardSet enumerate_all();

/// Shared cached copy of enumerate_all().
const BoardSet& all_boards();

/// Number of boards whose 1s occupy exactly `mask`. Masks that are not one
/// cell per row, column and block give 0.
int count_with_ones_configuration(std::span<const Cell> mask);

/// Newline-delimited board files: one 16-digit line per board, sorted,
/// trailing newline required.
void write_board_set(std::ostream& os, const BoardSet& boards);
/// Reads the format above. Entries are not checked with validate(); only
/// the text layout, the ordering and the trailing newline are enforced.
BoardSet read_board_set(std::istream& is);

}  // namespace shidoku
