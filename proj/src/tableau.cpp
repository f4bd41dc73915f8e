#include "majd/tableau.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace majd {

bool is_standard(const Partition& shape, const Filling& rows) {
  const int n = shape.size();
  if (static_cast<int>(rows.size()) != shape.row_count()) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int r = 0; r < shape.row_count(); ++r) {
    if (static_cast<int>(rows[r].size()) != shape.parts()[r]) return false;
    for (int c = 0; c < static_cast<int>(rows[r].size()); ++c) {
      int v = rows[r][c];
      if (v < 1 || v > n || seen[v]) return false;
      seen[v] = true;
      if (c > 0 && rows[r][c - 1] >= v) return false;
      if (r > 0 && rows[r - 1][c] >= v) return false;
    }
  }
  return true;
}

StandardTableau::StandardTableau(Partition shape, Filling rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (shape_.size() > kMaxTableauSize)
    throw std::invalid_argument("tableau size exceeds supported bound (n <= 20)");
  if (!is_standard(shape_, rows_))
    throw std::invalid_argument("filling is not a standard Young tableau");
  pos_.resize(shape_.size());
  for (int r = 0; r < shape_.row_count(); ++r)
    for (int c = 0; c < static_cast<int>(rows_[r].size()); ++c)
      pos_[rows_[r][c] - 1] = Cell{c + 1, r + 1};
}

StandardTableau StandardTableau::parse(std::string_view text) {
  Filling rows;
  std::size_t pos = 0;
  while (pos <= text.size() && !text.empty()) {
    std::size_t slash = text.find('/', pos);
    std::string_view row_text =
        text.substr(pos, slash == std::string_view::npos ? slash : slash - pos);
    std::vector<int> row;
    std::size_t p = 0;
    while (p < row_text.size()) {
      std::size_t comma = row_text.find(',', p);
      std::string_view tok =
          row_text.substr(p, comma == std::string_view::npos ? comma : comma - p);
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw std::invalid_argument("bad tableau entry: '" + std::string(tok) + "'");
      row.push_back(value);
      if (comma == std::string_view::npos) break;
      p = comma + 1;
    }
    rows.push_back(std::move(row));
    if (slash == std::string_view::npos) break;
    pos = slash + 1;
  }
  std::vector<int> parts;
  for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
  return StandardTableau(Partition(std::move(parts)), std::move(rows));
}

int StandardTableau::at(Cell c) const {
  if (!shape_.contains(c)) throw std::invalid_argument("cell outside diagram");
  return rows_[c.row - 1][c.col - 1];
}

Cell StandardTableau::cell_of(int label) const {
  if (label < 1 || label > size()) throw std::invalid_argument("label out of range");
  return pos_[label - 1];
}

std::vector<int> StandardTableau::reading_word() const {
  std::vector<int> word;
  word.reserve(size());
  for (const auto& row : rows_) word.insert(word.end(), row.begin(), row.end());
  return word;
}

std::string StandardTableau::to_text() const {
  std::string out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) out += '/';
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) out += ',';
      out += std::to_string(rows_[r][c]);
    }
  }
  return out;
}

StandardTableau delete_max(const StandardTableau& t) {
  const int n = t.size();
  if (n == 0) throw std::invalid_argument("delete_max on empty tableau");
  Cell c = t.cell_of(n);
  Filling rows = t.rows();
  rows[c.row - 1].pop_back();
  if (rows[c.row - 1].empty()) rows.pop_back();
  std::vector<int> parts;
  for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
  return StandardTableau(Partition(std::move(parts)), std::move(rows));
}

namespace {

void enumerate_rec(const Partition& shape, int label, Filling& rows,
                   std::vector<StandardTableau>& out) {
  const int n = shape.size();
  if (label > n) {
    out.emplace_back(shape, rows);
    return;
  }
  for (int r = 0; r < shape.row_count(); ++r) {
    int filled = static_cast<int>(rows[r].size());
    if (filled >= shape.parts()[r]) continue;
    if (r > 0 && static_cast<int>(rows[r - 1].size()) <= filled) continue;
    rows[r].push_back(label);
    enumerate_rec(shape, label + 1, rows, out);
    rows[r].pop_back();
  }
}

}  // namespace

std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
  if (shape.size() > kMaxEnumSize)
    throw std::domain_error("enumerate_syt: shape exceeds exhaustive bound (n <= 9)");
  std::vector<StandardTableau> out;
  Filling rows(shape.row_count());
  enumerate_rec(shape, 1, rows, out);
  std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
    return a.reading_word() < b.reading_word();
  });
  return out;
}

std::uint64_t count_syt(const Partition& shape) {
  const int n = shape.size();
  if (n > kMaxTableauSize)
    throw std::domain_error("count_syt: shape exceeds supported bound (n <= 20)");
  unsigned __int128 numerator = 1;
  for (int i = 2; i <= n; ++i) numerator *= static_cast<unsigned>(i);
  unsigned __int128 denominator = 1;
  for (int r = 1; r <= shape.row_count(); ++r) {
    for (int c = 1; c <= shape.parts()[r - 1]; ++c) {
      int arm = shape.parts()[r - 1] - c;
      int leg = shape.col_length(c) - r;
      denominator *= static_cast<unsigned>(arm + leg + 1);
    }
  }
  return static_cast<std::uint64_t>(numerator / denominator);
}

}  // namespace majd
