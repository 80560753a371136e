#pragma once

#include <string>
#include <vector>

#include "hkcones/model.hpp"

namespace hkcones {

struct NegativeTerm {
  std::string name;
  /// Coefficient on the prime class (ray times prime multiple), strictly positive.
  Scalar coefficient;

  friend bool operator==(const NegativeTerm&, const NegativeTerm&) = default;
};

/// D = positive + sum of coefficient * prime class over the support.
struct ZariskiDecomposition {
  DivisorClass positive;
  /// Support of the negative part, in the fixture's declaration order.
  std::vector<NegativeTerm> negative;

  DivisorClass negative_class(const HKModel& model) const;
  std::vector<std::string> support() const;
  bool in_support(const std::string& name) const;

  friend bool operator==(const ZariskiDecomposition&, const ZariskiDecomposition&) = default;
};

/// Closed / open positive cone on the side of the model's ample class.
bool in_closed_positive_cone(const HKModel& model, const DivisorClass& x);
bool in_open_positive_cone(const HKModel& model, const DivisorClass& x);

/// Divisorial Zariski decomposition over the declared exceptional divisors,
/// by a monotone active-set iteration: the support starts at the exceptionals
/// pairing negatively with D and grows until the positive part pairs
/// non-negatively with every exceptional.
///
/// NotPseudoEffective when the fixpoint has a negative coefficient or a
/// positive part outside the closed positive cone; IncompleteExceptionalData
/// when the active support is not negative definite.
ZariskiDecomposition decompose(const HKModel& model, const DivisorClass& d);

/// Independent oracle: tries every negative definite subset of exceptionals
/// as the support and keeps the unique candidate meeting all the defining
/// conditions. Limited to 12 exceptionals.
ZariskiDecomposition brute_force_decompose(const HKModel& model, const DivisorClass& d);

/// Exceptionals orthogonal to the positive part.
std::vector<std::string> null_set(const HKModel& model, const ZariskiDecomposition& z);

}  // namespace hkcones
