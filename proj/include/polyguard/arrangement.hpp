#pragma once

#include <utility>
#include <vector>

#include "polyguard/predicates.hpp"

namespace polyguard {

// A face region in its own plane coordinates: one outer loop (CCW) plus holes
// (CW). Loops are simple; a hole may touch the outer loop at single vertices.
struct RegionPolygon {
  std::vector<Vec2> outer;
  std::vector<std::vector<Vec2>> holes;
};

enum class RegionSide { Inside, Boundary, Outside };

// Exact point-vs-loop classification by crossing parity.
RegionSide loop_side(const std::vector<Vec2>& loop, const Vec2& p);
RegionSide region_side(const RegionPolygon& region, const Vec2& p);

struct ArrCell {
  int dim;                  // 2, 1 or 0
  Vec2 sample;              // exact point in the open cell
  bool on_region_boundary;  // sample lies on the region boundary
};

struct Arrangement2D {
  std::vector<ArrCell> cells;  // every cell meeting the closed region
  int count2 = 0;              // cells strictly inside the region
  int count1 = 0;
  int count0 = 0;
};

// Planar subdivision induced by the segments and the region boundary, clipped
// to the region. Overlapping collinear segments are merged before
// subdivision; degenerate (point) segments become isolated vertices. Every
// 2-cell sample is strictly inside its cell; 1-cell samples are midpoints;
// 0-cell samples are the vertices themselves.
Arrangement2D arrangement_2d(const std::vector<std::pair<Vec2, Vec2>>& segments,
                             const RegionPolygon& region);

}  // namespace polyguard
