#include "doctest.h"
#include "majd/path.hpp"

using namespace majd;

namespace {
const StandardTableau& worked() {
  static const StandardTableau s = StandardTableau::parse("1,2,5/3,6,7/4,8,9");
  return s;
}
}  // namespace

TEST_CASE("path from the cell of 9") {
  const LatticePath path = build_path(worked(), 9);
  CHECK(path.k == 9);
  CHECK(path.x0 == 2);
  CHECK(path.y0 == 2);
  CHECK(path.step_text() == "LDLD");
  CHECK(path.heights == std::vector<int>{1, 2, 2});
}

TEST_CASE("region classification under the path of 9") {
  const LatticePath path = build_path(worked(), 9);
  for (int label : {1, 2, 5, 6, 7})
    CHECK(side_of(path, worked().cell_of(label)) == RegionSide::Under);
  for (int label : {3, 4, 8, 9})
    CHECK(side_of(path, worked().cell_of(label)) == RegionSide::Above);
}

TEST_CASE("path heights extend rightward at the starting level") {
  // 9 sits at (3,2); columns right of the start keep y0.
  const StandardTableau t = StandardTableau::parse("1,2,3,4/5,6,9/7,8");
  const LatticePath path = build_path(t, 9);
  CHECK(path.y0 == 1);
  REQUIRE(path.heights.size() == 4);
  CHECK(path.heights[3] == 1);
  CHECK(side_of(path, Cell{4, 1}) == RegionSide::Under);
}

TEST_CASE("block partition of the worked example") {
  const LatticePath path = build_path(worked(), 9);
  const BlockPartition bp = blocks(worked(), path, 1);
  CHECK(bp.to_text() == "{1},{2,3,4},{5},{6},{7,8}");
  CHECK(bp.runs.size() == 5);
}

TEST_CASE("blocks_range stops at the requested hi") {
  const LatticePath path = build_path(worked(), 9);
  CHECK(blocks_range(worked(), path, 1, 4).to_text() == "{1},{2,3,4}");
  CHECK(blocks_range(worked(), path, 5, 8).to_text() == "{5},{6},{7,8}");
}

TEST_CASE("cycling the blocks produces the printed image") {
  const LatticePath path = build_path(worked(), 9);
  const StandardTableau image = cycle_blocks(worked(), blocks(worked(), path, 1));
  CHECK(image.to_text() == "1,4,5/2,6,8/3,7,9");
}

TEST_CASE("singleton blocks cycle to the identity") {
  const StandardTableau t = StandardTableau::parse("1,3/2,4");
  const LatticePath path = build_path(t, 4);
  const BlockPartition bp = blocks(t, path, 3);
  CHECK(cycle_blocks(t, bp) == t);
}
