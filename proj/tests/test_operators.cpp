#include <set>
#include <stdexcept>

#include "doctest.h"
#include "majd/operators.hpp"
#include "majd/tableau.hpp"

using namespace majd;

namespace {
const StandardTableau& worked() {
  static const StandardTableau s = StandardTableau::parse("1,2,5/3,6,7/4,8,9");
  return s;
}
}  // namespace

TEST_CASE("psi_9 on the worked example") {
  CHECK(psi_k_d(worked(), 9, 8).to_text() == "1,4,5/2,6,8/3,7,9");
  CHECK(psi_k_d(worked(), 1, 3) == worked());  // k < 2 is the identity
}

TEST_CASE("swap_labels needs a separated pair") {
  const StandardTableau t = StandardTableau::parse("1,3/2,4");
  // pi(t,4) separates 2 and 3, so Swap_{2,4} exchanges them.
  CHECK(swap_labels(t, 2, 4).to_text() == "1,2/3,4");
  CHECK_THROWS_AS(swap_labels(t, 3, 4), std::invalid_argument);  // a+1 = k
}

TEST_CASE("swap chains realize block cycling in both modes") {
  for (const char* text : {"1,2,5/3,6,7/4,8,9", "1,2,3/4,5/6", "1,3,5/2,4,6"}) {
    const StandardTableau t = StandardTableau::parse(text);
    const int n = t.size();
    for (int k = 2; k <= n; ++k) {
      for (int d = 1; d <= n; ++d) {
        const StandardTableau cycled = psi_k_d(t, k, d);
        CHECK(psi_k_d_via_swaps(t, k, d, SwapMode::FixedPath) == cycled);
        CHECK(psi_k_d_via_swaps(t, k, d, SwapMode::RecomputedPath) == cycled);
      }
    }
  }
}

TEST_CASE("pipeline records every stage with its path") {
  const PipelineTrace trace = psi_pipeline(worked(), 8);
  REQUIRE(trace.stages.size() == 10);
  CHECK(trace.stage(0) == worked());
  CHECK(trace.stage(1).to_text() == "1,4,5/2,6,8/3,7,9");
  CHECK(trace.stages[1].k == 9);
  REQUIRE(trace.stages[2].path.has_value());
  CHECK(trace.stages[2].path->heights == std::vector<int>{0, 1, 1});
  REQUIRE(trace.stages[2].block_partition.has_value());
  CHECK(trace.stages[2].block_partition->to_text() == "{1},{2},{3,4,5},{6},{7}");
}

TEST_CASE("phi_k inverts psi_k and phi_k_d inverts psi_k_d") {
  for (const Partition& shape :
       {Partition::parse("3,2"), Partition::parse("2,2,1"), Partition::parse("4,1")}) {
    const auto family = enumerate_syt(shape);
    const int n = shape.size();
    for (int k = 1; k <= n; ++k) {
      CHECK(phi_k(psi_k_d(family[0], k, n - 1 > 0 ? n - 1 : 1), k) == family[0]);
      for (int d = 1; d <= n; ++d) {
        std::set<std::string> images;
        for (const StandardTableau& t : family) {
          const StandardTableau image = psi_k_d(t, k, d);
          CHECK(phi_k_d(image, k, d) == t);
          images.insert(image.to_text());
        }
        CHECK(images.size() == family.size());
      }
    }
  }
}

TEST_CASE("pipeline images stay standard") {
  for (const StandardTableau& t : enumerate_syt(Partition::parse("3,3"))) {
    for (int d = 1; d <= 6; ++d) {
      const PipelineTrace trace = psi_pipeline(t, d);
      for (const PipelineStage& stage : trace.stages)
        CHECK(is_standard(stage.after.shape(), stage.after.rows()));
    }
  }
}
