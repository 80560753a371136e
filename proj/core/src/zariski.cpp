#include "hkcones/zariski.hpp"

#include <algorithm>

#include "hkcones/error.hpp"
#include "hkcones/linalg.hpp"

namespace hkcones {

DivisorClass ZariskiDecomposition::negative_class(const HKModel& model) const {
  DivisorClass total = DivisorClass::zero(model.rank());
  for (const auto& term : negative) {
    const ExceptionalClass* e = model.find_exceptional(term.name);
    if (e == nullptr) fail(ErrorCode::InvalidFixture, "unknown exceptional '" + term.name + "'");
    total += term.coefficient * e->prime_class();
  }
  return total;
}

std::vector<std::string> ZariskiDecomposition::support() const {
  std::vector<std::string> out;
  out.reserve(negative.size());
  for (const auto& term : negative) out.push_back(term.name);
  return out;
}

bool ZariskiDecomposition::in_support(const std::string& name) const {
  return std::any_of(negative.begin(), negative.end(), [&](const NegativeTerm& t) { return t.name == name; });
}

bool in_closed_positive_cone(const HKModel& model, const DivisorClass& x) {
  return model.square(x).sign() >= 0 && model.pairing(x, model.ample).sign() >= 0;
}

bool in_open_positive_cone(const HKModel& model, const DivisorClass& x) {
  return model.square(x).sign() > 0 && model.pairing(x, model.ample).sign() > 0;
}

namespace {

struct Candidate {
  DivisorClass positive;
  std::vector<Scalar> coefficients;  // aligned with the subset
};

Matrix<Rational> support_gram(const HKModel& model, const std::vector<std::size_t>& subset) {
  Matrix<Rational> g(subset.size(), subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i) {
    const DivisorClass ei = model.exceptionals[subset[i]].prime_class();
    for (std::size_t j = 0; j < subset.size(); ++j) {
      g(i, j) = model.pairing(ei, model.exceptionals[subset[j]].prime_class()).as_rational();
    }
  }
  return g;
}

// Solves q(D - sum b_j E_j, E_i) = 0 for i in the subset; the Gram must be invertible.
Candidate orthogonal_part(const HKModel& model, const DivisorClass& d, const std::vector<std::size_t>& subset,
                          const Matrix<Rational>& gram) {
  Candidate c{d, {}};
  if (subset.empty()) return c;
  Matrix<Scalar> m(subset.size(), subset.size());
  std::vector<Scalar> rhs(subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = 0; j < subset.size(); ++j) m(i, j) = Scalar(gram(i, j));
    rhs[i] = model.pairing(d, model.exceptionals[subset[i]].prime_class());
  }
  auto solution = solve_linear(std::move(m), std::move(rhs));
  if (!solution) fail(ErrorCode::IncompleteExceptionalData, "singular support Gram matrix");
  c.coefficients = std::move(*solution);
  for (std::size_t j = 0; j < subset.size(); ++j) {
    c.positive -= c.coefficients[j] * model.exceptionals[subset[j]].prime_class();
  }
  return c;
}

ZariskiDecomposition assemble(const HKModel& model, const std::vector<std::size_t>& subset, Candidate c) {
  ZariskiDecomposition z;
  z.positive = std::move(c.positive);
  std::vector<std::pair<std::size_t, Scalar>> terms;
  for (std::size_t j = 0; j < subset.size(); ++j) {
    if (!c.coefficients[j].is_zero()) terms.emplace_back(subset[j], std::move(c.coefficients[j]));
  }
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [index, coef] : terms) z.negative.push_back({model.exceptionals[index].name, std::move(coef)});
  return z;
}

void check_input(const HKModel& model, const DivisorClass& d) {
  if (d.size() != model.rank()) {
    fail(ErrorCode::DimensionMismatch, "class " + d.to_string() + " does not match rank " + std::to_string(model.rank()));
  }
}

}  // namespace

ZariskiDecomposition decompose(const HKModel& model, const DivisorClass& d) {
  check_input(model, d);
  if (!d.is_zero() && model.pairing(d, model.ample).sign() < 0) {
    fail(ErrorCode::NotPseudoEffective, d.to_string() + " pairs negatively with the ample class");
  }
  const std::size_t count = model.exceptionals.size();
  std::vector<bool> active(count, false);
  std::vector<std::size_t> subset;
  for (std::size_t i = 0; i < count; ++i) {
    if (model.pairing(d, model.exceptionals[i].ray).sign() < 0) {
      active[i] = true;
      subset.push_back(i);
    }
  }

  Candidate current{d, {}};
  for (std::size_t round = 0; round <= count; ++round) {
    const Matrix<Rational> gram = support_gram(model, subset);
    if (!subset.empty() && !is_negative_definite(gram)) {
      // Either D lies outside the declared effective cone, or a decomposition
      // exists that the active set cannot reach; only the latter blames the data.
      try {
        brute_force_decompose(model, d);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::NotPseudoEffective) {
          fail(ErrorCode::NotPseudoEffective, d.to_string() + " is outside the declared effective cone");
        }
      }
      fail(ErrorCode::IncompleteExceptionalData,
           "active support for " + d.to_string() + " is not negative definite");
    }
    current = orthogonal_part(model, d, subset, gram);
    bool grew = false;
    for (std::size_t i = 0; i < count; ++i) {
      if (active[i]) continue;
      if (model.pairing(current.positive, model.exceptionals[i].ray).sign() < 0) {
        active[i] = true;
        subset.push_back(i);
        grew = true;
      }
    }
    if (!grew) break;
  }

  for (const auto& b : current.coefficients) {
    if (b.sign() < 0) fail(ErrorCode::NotPseudoEffective, d.to_string() + " needs a negative coefficient");
  }
  if (!in_closed_positive_cone(model, current.positive)) {
    fail(ErrorCode::NotPseudoEffective, "positive part of " + d.to_string() + " leaves the positive cone");
  }
  return assemble(model, subset, std::move(current));
}

ZariskiDecomposition brute_force_decompose(const HKModel& model, const DivisorClass& d) {
  check_input(model, d);
  const std::size_t count = model.exceptionals.size();
  if (count > 12) fail(ErrorCode::RankUnsupported, "subset enumeration is limited to 12 exceptionals");

  std::vector<ZariskiDecomposition> found;
  for (unsigned mask = 0; mask < (1U << count); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < count; ++i) {
      if ((mask >> i) & 1U) subset.push_back(i);
    }
    const Matrix<Rational> gram = support_gram(model, subset);
    if (!subset.empty() && !is_negative_definite(gram)) continue;
    Candidate c = orthogonal_part(model, d, subset, gram);
    const bool positive_coefficients =
        std::all_of(c.coefficients.begin(), c.coefficients.end(), [](const Scalar& b) { return b.sign() > 0; });
    if (!positive_coefficients) continue;
    bool movable = in_closed_positive_cone(model, c.positive);
    for (std::size_t i = 0; movable && i < count; ++i) {
      movable = model.pairing(c.positive, model.exceptionals[i].ray).sign() >= 0;
    }
    if (!movable) continue;
    found.push_back(assemble(model, subset, std::move(c)));
  }
  if (found.empty()) fail(ErrorCode::NotPseudoEffective, "no decomposition of " + d.to_string());
  if (found.size() > 1) {
    fail(ErrorCode::IncompleteExceptionalData, std::to_string(found.size()) + " competing decompositions of " +
                                                   d.to_string());
  }
  return std::move(found.front());
}

std::vector<std::string> null_set(const HKModel& model, const ZariskiDecomposition& z) {
  std::vector<std::string> out;
  for (const auto& e : model.exceptionals) {
    if (model.pairing(z.positive, e.ray).is_zero()) out.push_back(e.name);
  }
  return out;
}

}  // namespace hkcones
