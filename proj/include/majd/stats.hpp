#pragma once

#include <vector>

#include "majd/operators.hpp"

namespace majd {

struct WeightedPair {
  int low = 0;
  int high = 0;
  long long weight = 0;
  friend bool operator==(const WeightedPair&, const WeightedPair&) = default;
  friend auto operator<=>(const WeightedPair& a, const WeightedPair& b) {
    // reporting order: by (high, low)
    if (auto c = a.high <=> b.high; c != 0) return c;
    if (auto c = a.low <=> b.low; c != 0) return c;
    return a.weight <=> b.weight;
  }
};

// Sum of i with i+1 in a strictly higher row than i.
int maj_tab(const StandardTableau& t);

struct AttackEntry {
  Cell cell;
  int j = 0;           // the stage at which this cell holds its own label
  LatticePath path;    // pi(Psi_{j+1} o ... o Psi_n(t), j)
};

// One entry per cell, j descending from n to 1.
using AttackAssignment = std::vector<AttackEntry>;

AttackAssignment hs_attack_assignment(const StandardTableau& t);

// Pairs (i, l) of original labels: l labels a cell, i < l labels a cell under
// that cell's associated path. All weight 1; sorted by (high, low).
std::vector<WeightedPair> hs_inversion_set(const StandardTableau& t);
long long inv_hs(const StandardTableau& t);

// maj of the final pipeline tableau: the definitional maj_d.
long long maj_d_transform(const StandardTableau& t, int d);

// Readings of the weight-1 rule in the per-stage weighting. BoundA and
// BoundB pick stage labels s from a range (n-k < s < l resp. m < s < k,
// with m = max(k-d, 1)) and test whether s's stage cell is under the path.
// CellLabel instead walks the cells under the path and takes their labels
// in the *original* tableau, keeping those with m < s < l.
enum class WeightReading { BoundA, BoundB, CellLabel };

// Selected by the exhaustive sweep against maj_d_transform (see the
// weighted-vs-transform verification suite): CellLabel is the only reading
// that matches pointwise.
inline constexpr WeightReading kDefaultReading = WeightReading::CellLabel;

struct StageWeights {
  int k = 0;    // pipeline stage
  int ell = 0;  // original label of k's stage cell
  std::vector<WeightedPair> pairs;
};

struct WeightedResult {
  long long value = 0;
  std::vector<WeightedPair> pairs;       // sorted by (high, low)
  std::vector<StageWeights> per_stage;   // k descending
};

WeightedResult maj_d_weighted(const StandardTableau& t, int d,
                              WeightReading reading = kDefaultReading);

// Kadell weights applied directly to the fixed inversion set: 0 beyond the
// band, i on the j-i = d diagonal, 1 inside. Not equidistributed with maj.
long long naive_weighted(const StandardTableau& t, int d);

// max(n-d,1) under pi(t,n)  <=>  n-1,n descend in Psi^{(d)}(t).
bool descent_lemma_check(const StandardTableau& t, int d);

// maj_d(t) = maj_d(delete_max(psi_n_d(t))) + (n-1 when max(n-d,1) is under).
bool recursion_check(const StandardTableau& t, int d);

}  // namespace majd
