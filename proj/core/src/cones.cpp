#include "hkcones/cones.hpp"

#include <algorithm>

#include "hkcones/chambers.hpp"
#include "hkcones/error.hpp"
#include "hkcones/zariski.hpp"

namespace hkcones {

namespace {

std::size_t first_nonzero(const DivisorClass& x) {
  std::size_t i = 0;
  while (i < x.size() && x[i].is_zero()) ++i;
  return i;
}

bool positively_proportional(const DivisorClass& x, const DivisorClass& y) {
  if (x.size() != y.size()) return false;
  const std::size_t pivot = first_nonzero(x);
  if (pivot == x.size() || y[pivot].is_zero()) return false;
  const Scalar t = y[pivot] / x[pivot];
  return t.sign() > 0 && t * x == y;
}

DivisorClass normalize(const DivisorClass& x) {
  const std::size_t pivot = first_nonzero(x);
  if (pivot == x.size()) fail(ErrorCode::InvalidFixture, "the zero class does not span a ray");
  const Scalar& lead = x[pivot];
  DivisorClass scaled = x;
  for (std::size_t i = 0; i < x.size(); ++i) scaled[i] = x[i] / lead;
  const int orientation = lead.sign();
  if (!scaled.is_rational()) return Scalar(orientation) * scaled;

  mpz_class lcm_den = 1;
  for (const auto& c : scaled.coords()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.as_rational().denominator().get_mpz_t());
  }
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& c : scaled.coords()) {
    const Rational r = c.as_rational() * Rational(lcm_den, mpz_class(1));
    ints.push_back(r.numerator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  std::vector<Scalar> out;
  out.reserve(ints.size());
  for (const auto& v : ints) out.emplace_back(Rational(mpz_class(v / g * orientation), mpz_class(1)));
  return DivisorClass(std::move(out));
}

Scalar evaluate(const HKModel& model, PairingKind kind, const DivisorClass& x, const DivisorClass& y) {
  if (kind == PairingKind::Bbf) return model.pairing(x, y);
  return x[0] * y[0] + x[1] * y[1];
}

}  // namespace

Ray::Ray(const DivisorClass& direction) : direction_(normalize(direction)) {}

Cone2D Cone2D::spanned_by(const DivisorClass& a, const DivisorClass& b) {
  const int s = cross(a, b).sign();
  if (s == 0) fail(ErrorCode::InvalidFixture, "cone generators " + a.to_string() + ", " + b.to_string() + " are dependent");
  return s > 0 ? Cone2D{Ray(a), Ray(b)} : Cone2D{Ray(b), Ray(a)};
}

bool Cone2D::contains(const DivisorClass& x) const {
  return cross(lo.direction(), x).sign() >= 0 && cross(x, hi.direction()).sign() >= 0;
}

bool Cone2D::contains_interior(const DivisorClass& x) const {
  return cross(lo.direction(), x).sign() > 0 && cross(x, hi.direction()).sign() > 0;
}

bool on_ray(const Ray& r, const DivisorClass& x) { return positively_proportional(r.direction(), x); }

Cone2D hull_rank2(const std::vector<DivisorClass>& generators) {
  if (generators.empty()) fail(ErrorCode::InvalidFixture, "hull of no generators");
  const DivisorClass* lo = nullptr;
  const DivisorClass* hi = nullptr;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    const bool lowest = std::all_of(generators.begin(), generators.end(), [&](const DivisorClass& s) {
      const int c = cross(g, s).sign();
      return s.is_zero() || c > 0 || (c == 0 && positively_proportional(g, s));
    });
    const bool highest = std::all_of(generators.begin(), generators.end(), [&](const DivisorClass& s) {
      const int c = cross(s, g).sign();
      return s.is_zero() || c > 0 || (c == 0 && positively_proportional(g, s));
    });
    if (lowest && lo == nullptr) lo = &g;
    if (highest && hi == nullptr) hi = &g;
  }
  if (lo == nullptr || hi == nullptr) fail(ErrorCode::InvalidFixture, "generators do not span a salient cone");
  return Cone2D::spanned_by(*lo, *hi);
}

Cone2D clip_rank2(const HKModel& model, const Cone2D& cone, const DivisorClass& functional) {
  const DivisorClass& lo = cone.lo.direction();
  const DivisorClass& hi = cone.hi.direction();
  const Scalar l_lo = model.pairing(lo, functional);
  const Scalar l_hi = model.pairing(hi, functional);
  if (l_lo.sign() >= 0 && l_hi.sign() >= 0) return cone;
  if (l_lo.sign() <= 0 && l_hi.sign() <= 0) {
    fail(ErrorCode::InvalidFixture, "cone collapses under the constraint from " + functional.to_string());
  }
  const DivisorClass cut = abs(l_hi) * lo + abs(l_lo) * hi;
  return l_lo.sign() < 0 ? Cone2D{Ray(cut), cone.hi} : Cone2D{cone.lo, Ray(cut)};
}

PairingKind parse_pairing_kind(const std::string& text) {
  if (text == "bbf") return PairingKind::Bbf;
  if (text == "curve") return PairingKind::Curve;
  fail(ErrorCode::ParseError, "pairing must be 'bbf' or 'curve', got '" + text + "'");
}

void require_rank2(const HKModel& model, const char* what) {
  if (model.rank() != 2) {
    fail(ErrorCode::RankUnsupported, std::string(what) + " needs a rank-2 lattice, got rank " + std::to_string(model.rank()));
  }
}

Cone2D dual_cone_rank2(const HKModel& model, const Cone2D& cone, PairingKind kind) {
  require_rank2(model, "dual cone");
  const auto perpendicular = [&](const DivisorClass& r, const DivisorClass& other) {
    const DivisorClass covector = kind == PairingKind::Bbf ? model.lattice.degrees(r) : r;
    DivisorClass s{-covector[1], covector[0]};
    if (evaluate(model, kind, s, other).sign() < 0) s = -s;
    return s;
  };
  const DivisorClass& lo = cone.lo.direction();
  const DivisorClass& hi = cone.hi.direction();
  return Cone2D::spanned_by(perpendicular(lo, hi), perpendicular(hi, lo));
}

std::pair<Ray, Ray> positive_cone_boundary_rank2(const HKModel& model) {
  require_rank2(model, "positive cone boundary");
  const Matrix<Rational>& g = model.lattice.gram();
  std::vector<DivisorClass> lines;
  if (!g(1, 1).is_zero()) {
    // q(e0 + t e1) = g11 t^2 + 2 g01 t + g00
    const auto roots = quad_roots(g(1, 1), Rational(2) * g(0, 1), g(0, 0));
    if (!roots) fail(ErrorCode::InvalidFixture, "form is not hyperbolic");
    lines.push_back(DivisorClass{Scalar(1), roots->first});
    lines.push_back(DivisorClass{Scalar(1), roots->second});
  } else if (!g(0, 0).is_zero()) {
    // q(t e0 + e1) = g00 t^2 + 2 g01 t
    const auto roots = quad_roots(g(0, 0), Rational(2) * g(0, 1), g(1, 1));
    lines.push_back(DivisorClass{roots->first, Scalar(1)});
    lines.push_back(DivisorClass{roots->second, Scalar(1)});
  } else {
    lines.push_back(DivisorClass::basis(2, 0));
    lines.push_back(DivisorClass::basis(2, 1));
  }
  if (lines[0] == lines[1]) fail(ErrorCode::SingularForm, "isotropic lines coincide");
  for (auto& l : lines) {
    if (model.pairing(l, model.ample).sign() < 0) l = -l;
  }
  const Cone2D cone = Cone2D::spanned_by(lines[0], lines[1]);
  return {cone.lo, cone.hi};
}

Cone2D positive_cone_rank2(const HKModel& model) {
  auto [lo, hi] = positive_cone_boundary_rank2(model);
  return Cone2D{std::move(lo), std::move(hi)};
}

Cone2D effective_cone_rank2(const HKModel& model) {
  const Cone2D pos = positive_cone_rank2(model);
  std::vector<DivisorClass> gens{pos.lo.direction(), pos.hi.direction()};
  for (const auto& e : model.exceptionals) gens.push_back(e.ray);
  return hull_rank2(gens);
}

Cone2D movable_cone_rank2(const HKModel& model) {
  Cone2D cone = positive_cone_rank2(model);
  for (const auto& e : model.exceptionals) cone = clip_rank2(model, cone, e.ray);
  return cone;
}

Cone2D nef_cone_rank2(const HKModel& model) {
  Cone2D cone = movable_cone_rank2(model);
  for (const auto& w : model.walls) {
    if (w.kind == WallKind::Fibration) continue;
    cone = clip_rank2(model, cone, w.curve.dual_divisor);
  }
  return cone;
}

Membership membership(const HKModel& model, const DivisorClass& d) {
  Membership m;
  if (d.size() != model.rank()) fail(ErrorCode::DimensionMismatch, "class " + d.to_string() + " has the wrong rank");
  try {
    const ZariskiDecomposition z = decompose(model, d);
    m.pseudo_effective = true;
    m.big = in_open_positive_cone(model, z.positive);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotPseudoEffective) throw;
  }

  m.movable = in_closed_positive_cone(model, d);
  bool strictly_movable = in_open_positive_cone(model, d);
  for (const auto& e : model.exceptionals) {
    const int s = model.pairing(d, e.ray).sign();
    m.movable = m.movable && s >= 0;
    strictly_movable = strictly_movable && s > 0;
  }
  m.nef = m.movable;
  m.ample = strictly_movable;
  for (const auto& w : model.walls) {
    if (w.kind == WallKind::Fibration) continue;
    const int s = model.pairing(d, w.curve.dual_divisor).sign();
    m.nef = m.nef && s >= 0;
    m.ample = m.ample && s > 0;
  }
  return m;
}

Cone2D amp_k(const HKModel& model, int k) {
  require_rank2(model, "amp_k");
  if (k < 1 || k > model.dim) {
    fail(ErrorCode::ParseError, "k must lie in [1, " + std::to_string(model.dim) + "], got " + std::to_string(k));
  }
  std::vector<DivisorClass> rays;
  for (const auto& chamber : stability_chambers_rank2(model)) {
    if (chamber.max_dim() >= k) continue;
    for (const auto& piece : chamber.pieces) {
      rays.push_back(piece.lo.direction());
      rays.push_back(piece.hi.direction());
    }
  }
  return hull_rank2(rays);
}

}  // namespace hkcones
