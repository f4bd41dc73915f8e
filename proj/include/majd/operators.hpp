#pragma once

#include <optional>
#include <vector>

#include "majd/path.hpp"

namespace majd {

enum class SwapMode { FixedPath, RecomputedPath };

// Swap_{a,k}: exchanges a and a+1 iff pi(t,k) separates them. Recomputes the
// path on the given input. Requires a+1 < k <= n.
StandardTableau swap_labels(const StandardTableau& t, int a, int k);

// Block cycling of labels max(k-d,1)..k-1 around pi(t,k).
StandardTableau psi_k_d(const StandardTableau& t, int k, int d);

// The same operator realized as the ascending chain Swap_{a,k},
// a = max(k-d,1)..k-2. FixedPath classifies against pi(t,k) computed once;
// RecomputedPath recomputes the path inside every swap.
StandardTableau psi_k_d_via_swaps(const StandardTableau& t, int k, int d, SwapMode mode);

struct PipelineStage {
  int k = 0;  // operator applied to produce `after`; 0 for the input stage
  StandardTableau after;
  std::optional<LatticePath> path;  // pi(previous stage, k)
  std::optional<BlockPartition> block_partition;
};

// T_0 = t, T_{i+1} = Psi_{n-i}^{(d)}(T_i); stages[i].after = T_i.
struct PipelineTrace {
  int d = 0;
  std::vector<PipelineStage> stages;

  const StandardTableau& stage(int i) const { return stages[i].after; }
  const StandardTableau& result() const { return stages.back().after; }
};

PipelineTrace psi_pipeline(const StandardTableau& t, int d);

// Exact inverse of Psi_k (= psi_k_d with d = n-1), realized by table
// inversion over enumerate_syt and memoized per (shape, k).
StandardTableau phi_k(const StandardTableau& t, int k);

// Inverse of psi_k_d: phi_k followed by cycling labels 1..k-d around the
// path of the intermediate tableau.
StandardTableau phi_k_d(const StandardTableau& t, int k, int d);

}  // namespace majd
