#pragma once

#include <string>
#include <utility>
#include <vector>

#include "majd/tableau.hpp"

namespace majd {

enum class Step { Left, Down };
enum class RegionSide { Under, Above };

// Staircase from the lower-left corner of k's cell down to the origin.
// Cell (c,r) occupies [c-1,c] x [r-1,r]; heights[c-1] is the path's y-level
// over column c, extended rightward at y0 for columns right of the start.
struct LatticePath {
  int k = 0;
  int x0 = 0;
  int y0 = 0;
  std::vector<Step> steps;
  std::vector<int> heights;

  std::string step_text() const;  // e.g. "LDLD"
};

// At each corner, move toward the larger of the northwest and southeast
// neighbor labels; stop when both are missing.
LatticePath build_path(const StandardTableau& t, int k);

RegionSide side_of(const LatticePath& path, Cell c);

// Maximal runs of consecutive labels: each run starts on the anchor side
// (the side of lo) and continues with labels on the opposite side.
struct BlockPartition {
  int lo = 0;
  int hi = 0;
  int k = 0;
  std::vector<std::pair<int, int>> runs;  // inclusive label ranges

  std::string to_text() const;  // "{1},{2,3,4},{5}"
};

// Blocks over {lo,...,path.k - 1}.
BlockPartition blocks(const StandardTableau& t, const LatticePath& path, int lo);
// Blocks over {lo,...,hi} with hi < path.k.
BlockPartition blocks_range(const StandardTableau& t, const LatticePath& path, int lo, int hi);

// Within each run, a moves to a+1's cell, ..., a+m moves to a's cell.
StandardTableau cycle_blocks(const StandardTableau& t, const BlockPartition& bp);

}  // namespace majd
