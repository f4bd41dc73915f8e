#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "majd/dist.hpp"

namespace majd {

// Optional distribution cache hook; the key is a stable description of the
// computation. Absent hooks mean no caching.
struct DistCacheHooks {
  std::function<std::optional<DistPolynomial>(const std::string& key)> load;
  std::function<void(const std::string& key, const DistPolynomial&)> store;
};

struct SuiteResult {
  std::string name;
  bool pass = false;
  long long checks = 0;
  std::vector<std::string> counterexamples;  // replayable inputs
  std::string note;
  double seconds = 0.0;
};

struct SweepBounds {
  int max_n_dist = 8;       // distribution sweeps
  int max_n_pointwise = 7;  // pointwise operator round-trips
  int jobs = 1;
};

SuiteResult verify_perm_equidist(const SweepBounds& b, const DistCacheHooks& cache = {});
SuiteResult verify_tab_equidist(const SweepBounds& b, const DistCacheHooks& cache = {});
SuiteResult verify_maj_eq_inv(const SweepBounds& b);
SuiteResult verify_weighted_vs_transform(const SweepBounds& b);
SuiteResult verify_recursion(const SweepBounds& b);
SuiteResult verify_descent_lemma(const SweepBounds& b);
SuiteResult verify_swapchain_equivalence(const SweepBounds& b);
SuiteResult verify_inverse_roundtrip(const SweepBounds& b);
SuiteResult verify_foata(const SweepBounds& b);
SuiteResult verify_oracle_counts(int max_n = kMaxEnumSize);
SuiteResult verify_paper_fixtures();
SuiteResult verify_figure4_search();

// All suites by registry name; throws std::invalid_argument for unknown names.
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const SweepBounds& b,
                      const DistCacheHooks& cache = {});

// The worked nine-cell tableau used throughout the path examples.
StandardTableau worked_tableau_s();

}  // namespace majd
