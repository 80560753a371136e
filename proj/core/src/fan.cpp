#include "hkcones/fan.hpp"

#include <algorithm>

#include "hkcones/error.hpp"

namespace hkcones {

FanGeometry FanGeometry::build(const HKModel& model) {
  require_rank2(model, "fan geometry");
  FanGeometry f{&model, effective_cone_rank2(model), movable_cone_rank2(model), {}, 0, {}, 0, false, false};

  for (const auto& w : model.walls) {
    if (w.kind == WallKind::Fibration) continue;
    if (!f.mov.contains(w.normal)) continue;
    f.walls.push_back({&w, Ray(w.normal)});
  }
  std::stable_sort(f.walls.begin(), f.walls.end(), [](const FanWall& a, const FanWall& b) {
    return cross(a.ray.direction(), b.ray.direction()).sign() > 0;
  });
  for (const auto& w : f.walls) {
    if (cross(w.ray.direction(), model.ample).sign() > 0) ++f.ample_index;
  }

  f.boundaries.push_back(f.mov.lo);
  for (const auto& w : f.walls) {
    if (!(w.ray == f.boundaries.back())) f.boundaries.push_back(w.ray);
  }
  if (!(f.mov.hi == f.boundaries.back())) f.boundaries.push_back(f.mov.hi);

  for (std::size_t i = 0; i + 1 < f.boundaries.size(); ++i) {
    if (f.sector(i).contains_interior(model.ample)) f.nef_sector = i;
  }

  const auto flip_in = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) {
      if (f.walls[i].wall->kind == WallKind::Flip) return true;
    }
    return false;
  };
  // An irrational movable boundary can only be reached through infinitely
  // many flips; a finite list of them is necessarily a truncation.
  f.truncated_lo = !f.mov.lo.is_rational() && flip_in(0, f.ample_index);
  f.truncated_hi = !f.mov.hi.is_rational() && flip_in(f.ample_index, f.walls.size());
  return f;
}

std::size_t FanGeometry::sector_containing(const DivisorClass& x) const {
  for (std::size_t i = 0; i < sector_count(); ++i) {
    if (sector(i).contains_interior(x)) return i;
  }
  for (std::size_t j = 0; j < boundaries.size(); ++j) {
    if (!on_ray(boundaries[j], x)) continue;
    if (j == 0) return 0;
    if (j == boundaries.size() - 1) return sector_count() - 1;
    return j <= nef_sector ? j : j - 1;
  }
  fail(ErrorCode::NotMovable, x.to_string() + " is outside the movable cone");
}

bool FanGeometry::beyond_truncation(const DivisorClass& x) const {
  if (walls.empty()) return false;
  if (truncated_lo && cross(x, walls.front().ray.direction()).sign() > 0) return true;
  if (truncated_hi && cross(walls.back().ray.direction(), x).sign() > 0) return true;
  return false;
}

void FanGeometry::check_truncation(const DivisorClass& x) const {
  if (!model->fan_stabilized && beyond_truncation(x)) {
    fail(ErrorCode::TruncationExceeded, x.to_string() + " lies beyond the last declared wall");
  }
}

}  // namespace hkcones
