#include "majd/stats.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace majd {

int maj_tab(const StandardTableau& t) {
  int total = 0;
  for (int i = 1; i < t.size(); ++i)
    if (t.cell_of(i + 1).row > t.cell_of(i).row) total += i;
  return total;
}

AttackAssignment hs_attack_assignment(const StandardTableau& t) {
  const int n = t.size();
  AttackAssignment out;
  if (n == 0) return out;
  PipelineTrace trace = psi_pipeline(t, std::max(n - 1, 1));
  std::set<Cell> cells_seen;
  for (int j = n; j >= 1; --j) {
    const StandardTableau& stage = trace.stage(n - j);
    AttackEntry entry;
    entry.j = j;
    entry.cell = stage.cell_of(j);
    entry.path = build_path(stage, j);
    if (!cells_seen.insert(entry.cell).second)
      throw std::logic_error("hs_attack_assignment: cell visited twice");
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<WeightedPair> hs_inversion_set(const StandardTableau& t) {
  std::vector<WeightedPair> pairs;
  for (const AttackEntry& entry : hs_attack_assignment(t)) {
    const int ell = t.at(entry.cell);
    for (Cell c : t.shape().cells()) {
      if (c == entry.cell) continue;
      const int label = t.at(c);
      if (label < ell && side_of(entry.path, c) == RegionSide::Under)
        pairs.push_back({label, ell, 1});
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

long long inv_hs(const StandardTableau& t) {
  return static_cast<long long>(hs_inversion_set(t).size());
}

long long maj_d_transform(const StandardTableau& t, int d) {
  return maj_tab(psi_pipeline(t, d).result());
}

WeightedResult maj_d_weighted(const StandardTableau& t, int d, WeightReading reading) {
  const int n = t.size();
  PipelineTrace trace = psi_pipeline(t, d);
  WeightedResult result;
  for (int k = n; k >= 2; --k) {
    const StandardTableau& stage = trace.stage(n - k);  // T_{n-k}
    const LatticePath& path = *trace.stages[n - k + 1].path;
    const int m = std::max(k - d, 1);
    StageWeights sw;
    sw.k = k;
    sw.ell = t.at(stage.cell_of(k));
    if (reading == WeightReading::CellLabel) {
      for (Cell c : t.shape().cells()) {
        if (side_of(path, c) != RegionSide::Under) continue;
        const int s = t.at(c);
        if (s == m)
          sw.pairs.push_back({m, sw.ell, m});
        else if (s > m && s < sw.ell)
          sw.pairs.push_back({s, sw.ell, 1});
      }
      std::sort(sw.pairs.begin(), sw.pairs.end());
    } else {
      if (side_of(path, stage.cell_of(m)) == RegionSide::Under)
        sw.pairs.push_back({m, sw.ell, m});
      const int s_lo = reading == WeightReading::BoundA ? n - k + 1 : m + 1;
      const int s_hi = reading == WeightReading::BoundA ? sw.ell - 1 : k - 1;
      for (int s = std::max(s_lo, 1); s <= std::min(s_hi, n); ++s) {
        if (s == m) continue;  // the weighted pair above
        if (side_of(path, stage.cell_of(s)) == RegionSide::Under)
          sw.pairs.push_back({s, sw.ell, 1});
      }
    }
    for (const WeightedPair& p : sw.pairs) {
      result.value += p.weight;
      result.pairs.push_back(p);
    }
    result.per_stage.push_back(std::move(sw));
  }
  std::sort(result.pairs.begin(), result.pairs.end());
  return result;
}

long long naive_weighted(const StandardTableau& t, int d) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  long long total = 0;
  for (const WeightedPair& p : hs_inversion_set(t)) {
    const int gap = p.high - p.low;
    if (gap > d) continue;
    total += gap == d ? p.low : 1;
  }
  return total;
}

bool descent_lemma_check(const StandardTableau& t, int d) {
  const int n = t.size();
  if (n < 2) throw std::invalid_argument("descent_lemma_check: need n >= 2");
  if (d < 1) throw std::invalid_argument("d must be positive");
  const int m = std::max(n - d, 1);
  LatticePath path = build_path(t, n);
  const bool under = side_of(path, t.cell_of(m)) == RegionSide::Under;
  const StandardTableau image = psi_pipeline(t, d).result();
  const bool descent = image.cell_of(n).row > image.cell_of(n - 1).row;
  return under == descent;
}

bool recursion_check(const StandardTableau& t, int d) {
  const int n = t.size();
  if (d < 1) throw std::invalid_argument("d must be positive");
  if (n <= 1) return true;
  LatticePath path = build_path(t, n);
  const int m = std::max(n - d, 1);
  const long long bonus =
      side_of(path, t.cell_of(m)) == RegionSide::Under ? n - 1 : 0;
  const StandardTableau reduced = delete_max(psi_k_d(t, n, d));
  return maj_d_transform(t, d) == maj_d_transform(reduced, d) + bonus;
}

}  // namespace majd
