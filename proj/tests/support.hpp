#pragma once

#include <random>
#include <string>
#include <vector>

#include "hkcones/chambers.hpp"
#include "hkcones/cones.hpp"
#include "hkcones/model.hpp"
#include "hkcones/walk.hpp"
#include "hkcones/zariski.hpp"

namespace hktest {

using namespace hkcones;

inline Scalar S(const std::string& text) { return parse_scalar(text); }

/// Class from scalar strings, e.g. cls({"3/2", "-1"}).
DivisorClass cls(std::initializer_list<const char*> coords);

/// Random rational p/q with |p| <= num_bound, 1 <= q <= den_bound.
Rational random_rational(std::mt19937_64& rng, long num_bound, long den_bound);

/// Random valid fixture of rank 2..4 with up to 6 exceptional rays pairing
/// non-negatively with each other. No walls.
HKModel random_model(std::mt19937_64& rng);

/// A class of the closed positive cone plus a non-negative combination of
/// prime exceptionals; pseudo-effective by construction.
DivisorClass random_pseudo_effective(const HKModel& model, std::mt19937_64& rng);

/// Big classes of a rank-2 fixture: positive combinations of the effective
/// cone's boundary rays (possibly irrational) mixed with integer samples.
std::vector<DivisorClass> random_big_classes(const HKModel& model, std::mt19937_64& rng, int count);

/// True when every generator of `inner` lies in `outer`.
bool cone_contains(const Cone2D& outer, const Cone2D& inner);

bool subset_of(const std::vector<std::string>& a, const std::vector<std::string>& b);

std::vector<std::string> divisorial_labels(const std::vector<LocusComponent>& cs);

}  // namespace hktest

namespace hktest {

/// Big classes for any rank: rank 2 uses random_big_classes, otherwise
/// pseudo-effective samples filtered by bigness.
std::vector<DivisorClass> random_big_classes_any_rank(const HKModel& model, std::mt19937_64& rng, int count);

/// Checks the base-locus identities at one big class. Returns a description
/// of the first failure, empty when everything holds.
std::string locus_property_failure(const HKModel& model, const DivisorClass& d);

}  // namespace hktest
