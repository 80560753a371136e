#include "hkcones/walk.hpp"

#include <algorithm>

#include "hkcones/error.hpp"
#include "hkcones/fan.hpp"
#include "hkcones/zariski.hpp"

namespace hkcones {

namespace {

bool is_movable(const HKModel& model, const DivisorClass& d) {
  if (!in_closed_positive_cone(model, d)) return false;
  return std::all_of(model.exceptionals.begin(), model.exceptionals.end(),
                     [&](const ExceptionalClass& e) { return model.pairing(d, e.ray).sign() >= 0; });
}

void push_unique(std::vector<LocusComponent>& out, LocusComponent c) {
  const bool seen = std::any_of(out.begin(), out.end(), [&](const LocusComponent& x) { return x.label == c.label; });
  if (!seen) out.push_back(std::move(c));
}

LocusComponent exceptional_component(const HKModel& model, const std::string& name) {
  return {name, model.dim - 1, true};
}

LocusComponent center_component(const HKModel& model, const std::string& label, int dim, WallKind kind) {
  return {label, dim, kind == WallKind::Divisorial || model.find_exceptional(label) != nullptr};
}

ZariskiDecomposition big_decomposition(const HKModel& model, const DivisorClass& d) {
  ZariskiDecomposition z = [&] {
    try {
      return decompose(model, d);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NotPseudoEffective) fail(ErrorCode::NotBig, d.to_string() + " is not big");
      throw;
    }
  }();
  if (!in_open_positive_cone(model, z.positive)) fail(ErrorCode::NotBig, d.to_string() + " is not big");
  return z;
}

}  // namespace

WalkTrace walk_rank2(const HKModel& model, const DivisorClass& d) {
  require_rank2(model, "walk");
  if (d.is_zero() || !is_movable(model, d)) fail(ErrorCode::NotMovable, d.to_string() + " is not movable");
  if (!in_open_positive_cone(model, d)) fail(ErrorCode::NotBig, d.to_string() + " is not big");

  const FanGeometry fan = FanGeometry::build(model);
  fan.check_truncation(d);

  std::vector<CrossedWall> crossed;
  std::optional<std::string> on_wall;
  for (const auto& w : fan.walls) {
    const int side_d = cross(w.ray.direction(), d).sign();
    const int side_a = cross(w.ray.direction(), model.ample).sign();
    if (side_d != 0 && side_d == -side_a) {
      crossed.push_back({w.wall->name, w.wall->center_label, w.wall->center_dim});
    }
    if (!on_wall && on_ray(w.ray, d)) on_wall = w.wall->name;
  }
  // fan order runs counterclockwise; from the counterclockwise side the walk goes backwards
  if (cross(d, model.ample).sign() < 0) std::reverse(crossed.begin(), crossed.end());

  return WalkTrace{std::move(crossed), fan.sector(fan.sector_containing(d)), fan.sector(fan.nef_sector),
                   std::move(on_wall)};
}

BaseLocusReport base_loci(const HKModel& model, const DivisorClass& d) {
  const ZariskiDecomposition z = big_decomposition(model, d);
  const std::vector<std::string> null = null_set(model, z);

  BaseLocusReport r;
  if (model.rank() == 2) {
    const WalkTrace trace = walk_rank2(model, z.positive);
    for (const auto& term : z.negative) push_unique(r.b_minus, exceptional_component(model, term.name));
    for (const auto& c : trace.crossed) {
      const WallData* w = model.find_wall(c.wall);
      push_unique(r.b_minus, center_component(model, c.center_label, c.center_dim, w->kind));
    }
    for (const auto& name : null) push_unique(r.b_plus, exceptional_component(model, name));
    for (const auto& c : r.b_minus) push_unique(r.b_plus, c);
    if (trace.terminal_on_wall) {
      const WallData* w = model.find_wall(*trace.terminal_on_wall);
      push_unique(r.b_plus, center_component(model, w->center_label, w->center_dim, w->kind));
    }
  } else {
    r.partial = true;
    for (const auto& term : z.negative) push_unique(r.b_minus, exceptional_component(model, term.name));
    for (const auto& w : model.walls) {
      if (w.kind == WallKind::Fibration) continue;
      const int s = model.pairing(z.positive, w.curve.dual_divisor).sign();
      if (s == 0) push_unique(r.b_plus, center_component(model, w.center_label, w.center_dim, w.kind));
      if (s < 0) push_unique(r.b_minus, center_component(model, w.center_label, w.center_dim, w.kind));
    }
    for (const auto& name : null) push_unique(r.b_plus, exceptional_component(model, name));
    for (const auto& c : r.b_minus) push_unique(r.b_plus, c);
  }
  r.b = r.b_minus;
  r.stable = labels_of(r.b_plus) == labels_of(r.b_minus);
  return r;
}

InstabilityWitness is_unstable(const HKModel& model, const DivisorClass& d) {
  const BaseLocusReport r = base_loci(model, d);
  InstabilityWitness out;
  out.unstable = !r.stable;
  if (!out.unstable) return out;

  const ZariskiDecomposition z = decompose(model, d);
  if (model.rank() == 2) {
    out.witness = walk_rank2(model, z.positive).terminal_on_wall;
  } else {
    for (const auto& w : model.walls) {
      if (w.kind != WallKind::Fibration && model.pairing(z.positive, w.curve.dual_divisor).is_zero()) {
        out.witness = w.name;
        break;
      }
    }
  }
  if (!out.witness) {
    for (const auto& name : null_set(model, z)) {
      if (!z.in_support(name)) {
        out.witness = name;
        break;
      }
    }
  }
  return out;
}

std::vector<std::string> labels_of(const std::vector<LocusComponent>& components) {
  std::vector<std::string> out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(c.label);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hkcones
