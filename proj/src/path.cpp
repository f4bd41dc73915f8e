#include "majd/path.hpp"

#include <stdexcept>

namespace majd {

std::string LatticePath::step_text() const {
  std::string out;
  out.reserve(steps.size());
  for (Step s : steps) out += (s == Step::Left ? 'L' : 'D');
  return out;
}

LatticePath build_path(const StandardTableau& t, int k) {
  if (k < 1 || k > t.size()) throw std::invalid_argument("build_path: label out of range");
  const Partition& shape = t.shape();
  Cell start = t.cell_of(k);
  LatticePath path;
  path.k = k;
  path.x0 = start.col - 1;
  path.y0 = start.row - 1;
  path.heights.assign(shape.col_count(), 0);
  for (int a = path.x0 + 1; a <= shape.col_count(); ++a) path.heights[a - 1] = path.y0;

  int x = path.x0, y = path.y0;
  while (true) {
    Cell nw{x, y + 1};      // left of the corner
    Cell se{x + 1, y};      // below the corner
    const bool has_nw = x >= 1 && shape.contains(nw);
    const bool has_se = y >= 1 && shape.contains(se);
    if (!has_nw && !has_se) break;
    bool go_left;
    if (has_nw && has_se)
      go_left = t.at(nw) > t.at(se);
    else
      go_left = has_nw;
    if (go_left) {
      path.steps.push_back(Step::Left);
      path.heights[x - 1] = y;
      --x;
    } else {
      path.steps.push_back(Step::Down);
      --y;
    }
  }
  if (x != 0 || y != 0) throw std::logic_error("build_path: did not terminate at origin");
  return path;
}

RegionSide side_of(const LatticePath& path, Cell c) {
  if (c.col < 1 || c.col > static_cast<int>(path.heights.size()))
    throw std::invalid_argument("side_of: cell column outside shape");
  return c.row <= path.heights[c.col - 1] ? RegionSide::Under : RegionSide::Above;
}

std::string BlockPartition::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (i) out += ',';
    out += '{';
    for (int v = runs[i].first; v <= runs[i].second; ++v) {
      if (v > runs[i].first) out += ',';
      out += std::to_string(v);
    }
    out += '}';
  }
  return out;
}

BlockPartition blocks_range(const StandardTableau& t, const LatticePath& path, int lo, int hi) {
  if (lo < 1 || lo > hi) throw std::invalid_argument("blocks: need 1 <= lo <= hi");
  if (hi >= path.k) throw std::invalid_argument("blocks: need hi < k");
  BlockPartition bp;
  bp.lo = lo;
  bp.hi = hi;
  bp.k = path.k;
  const RegionSide anchor = side_of(path, t.cell_of(lo));
  for (int a = lo; a <= hi; ++a) {
    if (side_of(path, t.cell_of(a)) == anchor)
      bp.runs.emplace_back(a, a);
    else
      bp.runs.back().second = a;
  }
  return bp;
}

BlockPartition blocks(const StandardTableau& t, const LatticePath& path, int lo) {
  return blocks_range(t, path, lo, path.k - 1);
}

StandardTableau cycle_blocks(const StandardTableau& t, const BlockPartition& bp) {
  Filling rows = t.rows();
  for (auto [a, b] : bp.runs) {
    for (int v = a; v < b; ++v) {
      Cell c = t.cell_of(v + 1);
      rows[c.row - 1][c.col - 1] = v;
    }
    Cell ca = t.cell_of(a);
    rows[ca.row - 1][ca.col - 1] = b;
  }
  if (!is_standard(t.shape(), rows))
    throw std::logic_error("cycle_blocks: rotation broke standardness");
  return StandardTableau(t.shape(), std::move(rows));
}

}  // namespace majd
