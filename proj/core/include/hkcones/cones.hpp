#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hkcones/model.hpp"

namespace hkcones {

/// A ray in N^1, stored in normal form: primitive integer coordinates when the
/// direction is rational, otherwise scaled so the first nonzero coordinate is +1 or -1.
class Ray {
 public:
  explicit Ray(const DivisorClass& direction);

  const DivisorClass& direction() const noexcept { return direction_; }
  bool is_rational() const { return direction_.is_rational(); }
  std::string to_string() const { return direction_.to_string(); }

  friend bool operator==(const Ray&, const Ray&) = default;

 private:
  DivisorClass direction_;
};

/// Salient two-dimensional cone with rays in counterclockwise order
/// (cross(lo, hi) > 0 in the fixed basis).
struct Cone2D {
  Ray lo;
  Ray hi;

  /// Orders the two generators; fails unless they are independent.
  static Cone2D spanned_by(const DivisorClass& a, const DivisorClass& b);

  bool contains(const DivisorClass& x) const;
  bool contains_interior(const DivisorClass& x) const;
  friend bool operator==(const Cone2D&, const Cone2D&) = default;
};

/// Same ray (positive multiple), rank 2.
bool on_ray(const Ray& r, const DivisorClass& x);

/// Smallest closed cone containing the given nonzero rank-2 vectors; they
/// must lie in an open half-plane.
Cone2D hull_rank2(const std::vector<DivisorClass>& generators);

/// Part of a rank-2 cone where q(x, functional) >= 0. Fails when empty.
Cone2D clip_rank2(const HKModel& model, const Cone2D& cone, const DivisorClass& functional);

enum class PairingKind { Bbf, Curve };

PairingKind parse_pairing_kind(const std::string& text);

/// Dual cone. With Bbf the pairing is q; with Curve the input rays are curve
/// classes in dual-basis (degree) coordinates and the pairing is the
/// evaluation D . C.
Cone2D dual_cone_rank2(const HKModel& model, const Cone2D& cone, PairingKind kind);

/// The two isotropic rays bounding the positive cone on the ample side,
/// counterclockwise.
std::pair<Ray, Ray> positive_cone_boundary_rank2(const HKModel& model);
Cone2D positive_cone_rank2(const HKModel& model);

/// Closure of the effective cone: hull of the positive cone and the
/// exceptional rays.
Cone2D effective_cone_rank2(const HKModel& model);
/// Closed movable cone: positive cone cut by q(-, E) >= 0.
Cone2D movable_cone_rank2(const HKModel& model);
/// Nef cone: movable cone cut by every declared wall curve.
Cone2D nef_cone_rank2(const HKModel& model);

struct Membership {
  bool pseudo_effective = false;
  bool big = false;
  bool movable = false;
  bool nef = false;
  bool ample = false;
};

Membership membership(const HKModel& model, const DivisorClass& d);

/// Closure of the cone of classes whose augmented base locus has dimension
/// below k, assembled from the stability chambers.
Cone2D amp_k(const HKModel& model, int k);

void require_rank2(const HKModel& model, const char* what);

}  // namespace hkcones
