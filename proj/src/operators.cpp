#include "majd/operators.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace majd {

namespace {

StandardTableau exchange(const StandardTableau& t, int a) {
  Cell ca = t.cell_of(a);
  Cell cb = t.cell_of(a + 1);
  Filling rows = t.rows();
  rows[ca.row - 1][ca.col - 1] = a + 1;
  rows[cb.row - 1][cb.col - 1] = a;
  if (!is_standard(t.shape(), rows))
    throw std::logic_error("swap produced a non-standard filling");
  return StandardTableau(t.shape(), std::move(rows));
}

void check_kd(const StandardTableau& t, int k, int d) {
  if (k < 1 || k > t.size()) throw std::invalid_argument("label k out of range");
  if (d < 1) throw std::invalid_argument("d must be positive");
}

}  // namespace

StandardTableau swap_labels(const StandardTableau& t, int a, int k) {
  if (a < 1 || a + 1 >= k || k > t.size())
    throw std::invalid_argument("swap_labels: need 1 <= a, a+1 < k <= n");
  LatticePath path = build_path(t, k);
  if (side_of(path, t.cell_of(a)) == side_of(path, t.cell_of(a + 1))) return t;
  return exchange(t, a);
}

StandardTableau psi_k_d(const StandardTableau& t, int k, int d) {
  check_kd(t, k, d);
  if (k < 2) return t;
  const int lo = std::max(k - d, 1);
  LatticePath path = build_path(t, k);
  return cycle_blocks(t, blocks(t, path, lo));
}

StandardTableau psi_k_d_via_swaps(const StandardTableau& t, int k, int d, SwapMode mode) {
  check_kd(t, k, d);
  if (k < 2) return t;
  const int lo = std::max(k - d, 1);
  StandardTableau cur = t;
  if (mode == SwapMode::RecomputedPath) {
    for (int a = lo; a <= k - 2; ++a) cur = swap_labels(cur, a, k);
    return cur;
  }
  LatticePath path = build_path(t, k);
  for (int a = lo; a <= k - 2; ++a) {
    if (side_of(path, cur.cell_of(a)) != side_of(path, cur.cell_of(a + 1)))
      cur = exchange(cur, a);
  }
  return cur;
}

PipelineTrace psi_pipeline(const StandardTableau& t, int d) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  const int n = t.size();
  PipelineTrace trace;
  trace.d = d;
  trace.stages.push_back({0, t, std::nullopt, std::nullopt});
  for (int i = 0; i < n; ++i) {
    const int k = n - i;
    const StandardTableau& cur = trace.stages.back().after;
    PipelineStage stage;
    stage.k = k;
    stage.path = build_path(cur, k);
    if (k >= 2) {
      stage.block_partition = blocks(cur, *stage.path, std::max(k - d, 1));
      stage.after = cycle_blocks(cur, *stage.block_partition);
    } else {
      stage.after = cur;
    }
    trace.stages.push_back(std::move(stage));
  }
  return trace;
}

namespace {

using InverseTable = std::unordered_map<std::string, StandardTableau>;

const InverseTable& phi_table(const Partition& shape, int k) {
  static std::map<std::pair<std::string, int>, InverseTable> cache;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(shape.to_text(), k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  InverseTable table;
  const int d = std::max(shape.size() - 1, 1);
  for (const StandardTableau& s : enumerate_syt(shape)) {
    StandardTableau image = psi_k_d(s, k, d);
    if (!table.emplace(image.to_text(), s).second)
      throw std::logic_error("phi_k: psi_k is not injective on this shape");
  }
  return cache.emplace(std::move(key), std::move(table)).first->second;
}

}  // namespace

StandardTableau phi_k(const StandardTableau& t, int k) {
  if (k < 1 || k > t.size()) throw std::invalid_argument("label k out of range");
  if (t.size() > kMaxEnumSize)
    throw std::domain_error("phi_k: shape exceeds enumeration-inverse bound (n <= 9)");
  const InverseTable& table = phi_table(t.shape(), k);
  auto it = table.find(t.to_text());
  if (it == table.end()) throw std::logic_error("phi_k: no preimage found");
  return it->second;
}

StandardTableau phi_k_d(const StandardTableau& t, int k, int d) {
  check_kd(t, k, d);
  StandardTableau s = phi_k(t, k);
  const int hi = k - d;  // labels 1..k-d are cycled back
  if (hi < 2) return s;
  LatticePath path = build_path(s, k);
  return cycle_blocks(s, blocks_range(s, path, 1, hi));
}

}  // namespace majd
