#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hkcones/walk.hpp"

namespace hkcones {

struct BZChamber {
  std::vector<std::string> neg_set;
  std::vector<std::string> null_set;
  bool stable_codim1 = true;

  friend bool operator==(const BZChamber&, const BZChamber&) = default;
};

BZChamber bz_chamber(const HKModel& model, const DivisorClass& d);

/// A convex piece of a stability chamber. lo == hi for a lone ray.
struct ChamberPiece {
  Ray lo;
  Ray hi;
  bool include_lo = false;
  bool include_hi = false;

  bool contains(const DivisorClass& x) const;

  friend bool operator==(const ChamberPiece&, const ChamberPiece&) = default;
};

struct StabilityChamber {
  std::string name;
  std::vector<ChamberPiece> pieces;
  std::vector<LocusComponent> components;

  bool contains(const DivisorClass& x) const;
  /// Largest component dimension, 0 when B+ is empty.
  int max_dim() const;
  std::vector<std::string> labels() const { return labels_of(components); }

  friend bool operator==(const StabilityChamber&, const StabilityChamber&) = default;
};

/// Big cone partitioned by B+, sorted by component count then labels.
std::vector<StabilityChamber> stability_chambers_rank2(const HKModel& model);

struct MoriChamber {
  std::vector<Ray> face_rays;
  std::vector<std::string> exceptional_generators;
  Cone2D cone;

  friend bool operator==(const MoriChamber&, const MoriChamber&) = default;
};

MoriChamber mori_chamber(const HKModel& model, const DivisorClass& d);

struct DestabJump {
  Scalar lambda;
  bool rational = true;
  std::vector<LocusComponent> before;
  std::vector<LocusComponent> after;

  friend bool operator==(const DestabJump&, const DestabJump&) = default;
};

struct DestabReport {
  std::vector<DestabJump> jumps;
  /// Where D - lambda A leaves the big cone.
  std::optional<Scalar> boundary_lambda;

  friend bool operator==(const DestabReport&, const DestabReport&) = default;
};

DestabReport destabilizing_numbers(const HKModel& model, const DivisorClass& d, const DivisorClass& ample);

}  // namespace hkcones
