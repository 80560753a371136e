#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hkcones/cones.hpp"

namespace hkcones {

struct CrossedWall {
  std::string wall;
  std::string center_label;
  int center_dim = 0;

  friend bool operator==(const CrossedWall&, const CrossedWall&) = default;
};

struct WalkTrace {
  /// Walls strictly between the class and the nef cone, nearest to the class first.
  std::vector<CrossedWall> crossed;
  Cone2D start_chamber;
  Cone2D terminal_chamber;
  std::optional<std::string> terminal_on_wall;

  friend bool operator==(const WalkTrace&, const WalkTrace&) = default;
};

/// Rank-2 wall walk from a movable big class to the nef cone.
WalkTrace walk_rank2(const HKModel& model, const DivisorClass& d);

struct LocusComponent {
  std::string label;
  int dim = 0;
  bool divisorial = false;

  friend bool operator==(const LocusComponent&, const LocusComponent&) = default;
};

struct BaseLocusReport {
  std::vector<LocusComponent> b_plus;
  std::vector<LocusComponent> b_minus;
  std::vector<LocusComponent> b;
  bool stable = true;
  /// Rank >= 3: only divisorial parts and declared walls orthogonal to P(D).
  bool partial = false;

  friend bool operator==(const BaseLocusReport&, const BaseLocusReport&) = default;
};

BaseLocusReport base_loci(const HKModel& model, const DivisorClass& d);

struct InstabilityWitness {
  bool unstable = false;
  std::optional<std::string> witness;
};

InstabilityWitness is_unstable(const HKModel& model, const DivisorClass& d);

/// Sorted labels, for comparing component sets.
std::vector<std::string> labels_of(const std::vector<LocusComponent>& components);

}  // namespace hkcones
