#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace majd {

// Size bounds. Single-tableau operations are cheap; exhaustive per-shape
// sweeps enumerate every filling and are capped separately.
inline constexpr int kMaxTableauSize = 20;
inline constexpr int kMaxEnumSize = 9;

// 1-indexed, French convention: row 1 is the bottom row.
struct Cell {
  int col = 0;
  int row = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Weakly decreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // Parses "3,3,3". Empty input gives the empty partition.
  static Partition parse(std::string_view text);

  int size() const { return size_; }
  int row_count() const { return static_cast<int>(parts_.size()); }
  int col_count() const { return parts_.empty() ? 0 : parts_[0]; }

  // 1-indexed; 0 when the row/column is absent.
  int row_length(int row) const;
  int col_length(int col) const;

  bool contains(Cell c) const;
  const std::vector<int>& parts() const { return parts_; }

  // All cells, bottom row first, left to right.
  std::vector<Cell> cells() const;

  std::string to_text() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// All partitions of n, in descending lexicographic order of parts.
std::vector<Partition> partitions_of(int n);

}  // namespace majd
