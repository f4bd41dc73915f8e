#include "majd/partition.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace majd {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw std::invalid_argument("bad partition part: '" + std::string(tok) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

int Partition::row_length(int row) const {
  if (row < 1 || row > row_count()) return 0;
  return parts_[row - 1];
}

int Partition::col_length(int col) const {
  if (col < 1 || col > col_count()) return 0;
  int len = 0;
  while (len < row_count() && parts_[len] >= col) ++len;
  return len;
}

bool Partition::contains(Cell c) const {
  return c.row >= 1 && c.row <= row_count() && c.col >= 1 && c.col <= parts_[c.row - 1];
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  out.reserve(size_);
  for (int r = 1; r <= row_count(); ++r)
    for (int c = 1; c <= parts_[r - 1]; ++c) out.push_back({c, r});
  return out;
}

std::string Partition::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    partitions_rec(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> acc;
  partitions_rec(n, n, acc, out);
  return out;
}

}  // namespace majd
