#pragma once

#include <cstddef>
#include <vector>

#include "hkcones/cones.hpp"

namespace hkcones {

struct FanWall {
  const WallData* wall;
  Ray ray;
};

/// Rank-2 wall arrangement inside the movable cone, sorted counterclockwise.
struct FanGeometry {
  const HKModel* model = nullptr;
  Cone2D eff;
  Cone2D mov;
  std::vector<FanWall> walls;
  /// Number of walls clockwise of the ample class.
  std::size_t ample_index = 0;
  /// mov.lo, wall rays, mov.hi with repeats removed; sector i is
  /// (boundaries[i], boundaries[i + 1]).
  std::vector<Ray> boundaries;
  std::size_t nef_sector = 0;
  bool truncated_lo = false;
  bool truncated_hi = false;

  static FanGeometry build(const HKModel& model);

  Cone2D sector(std::size_t i) const { return Cone2D{boundaries[i], boundaries[i + 1]}; }
  std::size_t sector_count() const { return boundaries.size() - 1; }

  /// Sector holding a movable class; on a shared ray the sector nearer Nef wins.
  std::size_t sector_containing(const DivisorClass& x) const;

  /// Strictly past the outermost wall on a side whose wall sequence is cut off.
  bool beyond_truncation(const DivisorClass& x) const;

  /// TruncationExceeded if x is beyond the truncation and the model does not
  /// declare its outer chambers stable.
  void check_truncation(const DivisorClass& x) const;
};

}  // namespace hkcones
