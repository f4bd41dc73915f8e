#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "majd/partition.hpp"

namespace majd {

// Rows bottom-first; rows[r][c] is the label at Cell{c+1, r+1}.
using Filling = std::vector<std::vector<int>>;

// True iff the filling is a bijection onto 1..n that increases left-to-right
// in rows and bottom-to-top in columns.
bool is_standard(const Partition& shape, const Filling& rows);

class StandardTableau {
 public:
  StandardTableau() = default;
  // Throws std::invalid_argument unless the filling is standard.
  StandardTableau(Partition shape, Filling rows);

  // Parses "1,2,5/3,6,7/4,8,9" (rows bottom-to-top, '/'-separated).
  static StandardTableau parse(std::string_view text);

  const Partition& shape() const { return shape_; }
  int size() const { return shape_.size(); }
  int at(Cell c) const;
  Cell cell_of(int label) const;
  const Filling& rows() const { return rows_; }

  // Bottom row first, left to right.
  std::vector<int> reading_word() const;
  std::string to_text() const;

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
    return a.rows_ == b.rows_;
  }

 private:
  Partition shape_;
  Filling rows_;
  std::vector<Cell> pos_;  // pos_[label-1]
};

// Removes the cell containing n (always an outer corner).
StandardTableau delete_max(const StandardTableau& t);

// All SYT of the shape, sorted lexicographically by reading word.
// Bounded to n <= kMaxEnumSize.
std::vector<StandardTableau> enumerate_syt(const Partition& shape);

// Hook length formula; independent of enumerate_syt. Bounded to
// n <= kMaxTableauSize to keep the arithmetic exact.
std::uint64_t count_syt(const Partition& shape);

}  // namespace majd
