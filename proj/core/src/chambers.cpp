#include "hkcones/chambers.hpp"

#include <algorithm>
#include <map>

#include "hkcones/error.hpp"
#include "hkcones/fan.hpp"
#include "hkcones/zariski.hpp"

namespace hkcones {

BZChamber bz_chamber(const HKModel& model, const DivisorClass& d) {
  ZariskiDecomposition z;
  try {
    z = decompose(model, d);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotPseudoEffective) fail(ErrorCode::NotBig, d.to_string() + " is not big");
    throw;
  }
  if (!in_open_positive_cone(model, z.positive)) fail(ErrorCode::NotBig, d.to_string() + " is not big");
  BZChamber c;
  c.neg_set = z.support();
  c.null_set = null_set(model, z);
  c.stable_codim1 = c.neg_set == c.null_set;
  return c;
}

bool ChamberPiece::contains(const DivisorClass& x) const {
  if (on_ray(lo, x)) return include_lo;
  if (on_ray(hi, x)) return include_hi;
  if (lo == hi) return false;
  return cross(lo.direction(), x).sign() > 0 && cross(x, hi.direction()).sign() > 0;
}

bool StabilityChamber::contains(const DivisorClass& x) const {
  return std::any_of(pieces.begin(), pieces.end(), [&](const ChamberPiece& p) { return p.contains(x); });
}

int StabilityChamber::max_dim() const {
  int out = 0;
  for (const auto& c : components) out = std::max(out, c.dim);
  return out;
}

namespace {

struct Cell {
  Ray lo;
  Ray hi;
  bool is_ray;
  std::vector<LocusComponent> b_plus;
};

std::string chamber_name(const std::vector<std::string>& labels) {
  if (labels.empty()) return "Amp";
  std::string out = "SC{";
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + labels[i];
  return out + "}";
}

}  // namespace

std::vector<StabilityChamber> stability_chambers_rank2(const HKModel& model) {
  const FanGeometry fan = FanGeometry::build(model);

  std::vector<Ray> critical;
  for (const auto& r : fan.boundaries) {
    if (fan.eff.contains_interior(r.direction())) critical.push_back(r);
  }

  std::vector<Cell> cells;
  Ray prev = fan.eff.lo;
  const auto add_sector = [&](const Ray& hi) {
    const DivisorClass rep = prev.direction() + hi.direction();
    cells.push_back({prev, hi, false, base_loci(model, rep).b_plus});
  };
  for (const auto& c : critical) {
    add_sector(c);
    cells.push_back({c, c, true, base_loci(model, c.direction()).b_plus});
    prev = c;
  }
  add_sector(fan.eff.hi);

  // consecutive cells with equal B+ merge into one convex piece
  std::vector<std::pair<ChamberPiece, std::vector<LocusComponent>>> pieces;
  for (const auto& cell : cells) {
    if (!pieces.empty() && labels_of(pieces.back().second) == labels_of(cell.b_plus)) {
      pieces.back().first.hi = cell.hi;
      pieces.back().first.include_hi = cell.is_ray;
      continue;
    }
    pieces.push_back({ChamberPiece{cell.lo, cell.hi, cell.is_ray, cell.is_ray}, cell.b_plus});
  }

  std::map<std::vector<std::string>, StabilityChamber> grouped;
  for (auto& [piece, components] : pieces) {
    const auto key = labels_of(components);
    auto it = grouped.find(key);
    if (it == grouped.end()) it = grouped.emplace(key, StabilityChamber{chamber_name(key), {}, components}).first;
    it->second.pieces.push_back(piece);
  }

  std::vector<StabilityChamber> out;
  for (auto& [key, chamber] : grouped) out.push_back(std::move(chamber));
  std::stable_sort(out.begin(), out.end(), [](const StabilityChamber& a, const StabilityChamber& b) {
    return a.components.size() < b.components.size();
  });
  return out;
}

MoriChamber mori_chamber(const HKModel& model, const DivisorClass& d) {
  require_rank2(model, "Mori chamber");
  const ZariskiDecomposition z = decompose(model, d);
  const FanGeometry fan = FanGeometry::build(model);

  if (z.negative.empty()) {
    if (d.is_zero()) fail(ErrorCode::NotBig, "the zero class has no Mori chamber");
    // infinitely many chambers accumulate past a truncation, stabilized or not
    if (fan.beyond_truncation(d)) {
      fail(ErrorCode::TruncationExceeded, d.to_string() + " lies beyond the last declared wall");
    }
    const Cone2D sector = fan.sector(fan.sector_containing(d));
    return MoriChamber{{sector.lo, sector.hi}, {}, sector};
  }

  MoriChamber m{{}, z.support(), fan.mov};
  std::vector<DivisorClass> gens;
  for (const Ray& r : {fan.mov.lo, fan.mov.hi}) {
    const bool orthogonal = std::all_of(z.negative.begin(), z.negative.end(), [&](const NegativeTerm& t) {
      return model.pairing(r.direction(), model.find_exceptional(t.name)->ray).is_zero();
    });
    if (orthogonal) {
      m.face_rays.push_back(r);
      gens.push_back(r.direction());
    }
  }
  for (const auto& t : z.negative) gens.push_back(model.find_exceptional(t.name)->ray);
  m.cone = hull_rank2(gens);
  return m;
}

DestabReport destabilizing_numbers(const HKModel& model, const DivisorClass& d, const DivisorClass& ample) {
  require_rank2(model, "destabilizing numbers");
  if (!membership(model, ample).ample) fail(ErrorCode::NotAmple, ample.to_string() + " is not ample");
  if (!membership(model, d).big) fail(ErrorCode::NotBig, d.to_string() + " is not big");

  const FanGeometry fan = FanGeometry::build(model);
  const auto point = [&](const Scalar& lambda) { return d - lambda * ample; };
  // lambda at which D - lambda A meets the ray r, if it does so on the positive side
  const auto meet = [&](const Ray& r) -> std::optional<Scalar> {
    const Scalar den = cross(r.direction(), ample);
    if (den.is_zero()) return std::nullopt;
    Scalar lambda = cross(r.direction(), d) / den;
    if (!on_ray(r, point(lambda))) return std::nullopt;
    return lambda;
  };

  DestabReport report;
  for (const Ray& r : {fan.eff.lo, fan.eff.hi}) {
    const auto lambda = meet(r);
    if (lambda && lambda->sign() > 0 && (!report.boundary_lambda || *lambda < *report.boundary_lambda)) {
      report.boundary_lambda = lambda;
    }
  }
  if (!report.boundary_lambda && cross(d, ample).is_zero()) {
    std::size_t i = 0;
    while (ample[i].is_zero()) ++i;
    report.boundary_lambda = d[i] / ample[i];
  }
  if (!report.boundary_lambda) fail(ErrorCode::NotBig, "segment never leaves the big cone");
  const Scalar exit = *report.boundary_lambda;

  std::vector<Scalar> critical;
  for (const auto& r : fan.boundaries) {
    const auto lambda = meet(r);
    if (lambda && *lambda < exit) critical.push_back(*lambda);
  }
  std::sort(critical.begin(), critical.end());
  critical.erase(std::unique(critical.begin(), critical.end()), critical.end());

  const Scalar half = Scalar(Rational(1, 2));
  for (std::size_t i = 0; i < critical.size(); ++i) {
    const Scalar& lambda = critical[i];
    if (lambda.sign() < 0) continue;
    const Scalar left = i > 0 ? critical[i - 1] : lambda - Scalar(1);
    const Scalar right = i + 1 < critical.size() ? critical[i + 1] : exit;
    const auto before = base_loci(model, point((left + lambda) * half)).b_plus;
    const auto after = base_loci(model, point((lambda + right) * half)).b_plus;
    if (labels_of(before) == labels_of(after)) continue;
    report.jumps.push_back({lambda, lambda.is_rational(), before, after});
  }
  return report;
}

}  // namespace hkcones
