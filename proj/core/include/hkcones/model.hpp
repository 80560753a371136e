#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hkcones/lattice.hpp"

namespace hkcones {

/// A prime exceptional divisor, stored as a primitive ray generator together
/// with the multiplier taking the ray to the actual prime class.
struct ExceptionalClass {
  std::string name;
  DivisorClass ray;
  Rational prime_multiple{1};

  DivisorClass prime_class() const { return Scalar(prime_multiple) * ray; }

  friend bool operator==(const ExceptionalClass&, const ExceptionalClass&) = default;
};

enum class WallKind { Flip, Divisorial, Fibration };

std::string_view to_string(WallKind kind) noexcept;
WallKind parse_wall_kind(std::string_view text);

/// A wall of the nef/movable decomposition: the contractible curve it carries,
/// a representative class lying on the wall, and the locus swept by the curve.
struct WallData {
  std::string name;
  DivisorClass normal;
  CurveClass curve;
  std::string center_label;
  int center_dim = 0;
  WallKind kind = WallKind::Flip;

  friend bool operator==(const WallData&, const WallData&) = default;
};

struct HKModel {
  std::string name;
  int dim = 0;
  std::vector<std::string> basis;
  NSLattice lattice;
  DivisorClass ample;
  std::vector<ExceptionalClass> exceptionals;
  std::vector<WallData> walls;
  /// Wall names ordered from one movable boundary to the other (rank 2 only).
  std::vector<std::string> fan;
  /// Outermost chambers keep their base loci beyond the last listed wall.
  bool fan_stabilized = false;

  int half_dim() const noexcept { return dim / 2; }
  std::size_t rank() const noexcept { return lattice.rank(); }
  const ExceptionalClass* find_exceptional(std::string_view name) const;
  const WallData* find_wall(std::string_view name) const;

  Scalar pairing(const DivisorClass& x, const DivisorClass& y) const { return lattice.pairing(x, y); }
  Scalar square(const DivisorClass& x) const { return lattice.square(x); }

  friend bool operator==(const HKModel&, const HKModel&) = default;
};

struct Violation {
  std::string code;
  std::string location;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const noexcept { return violations.empty(); }
  bool has(std::string_view code) const;
};

ValidationReport validate(const HKModel& model);

/// Throws InvalidFixture listing the first violations when validation fails.
void require_valid(const HKModel& model);

std::vector<std::string> builtin_names();

/// One of hilb2-s1, hilb2-s2, hilb2-s3, fano-cubic-scroll, k3-two-curves,
/// k3n-mixed; UnknownFixture otherwise.
HKModel builtin(std::string_view name);

}  // namespace hkcones
