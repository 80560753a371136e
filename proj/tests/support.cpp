#include "support.hpp"

#include <algorithm>

namespace hktest {

DivisorClass cls(std::initializer_list<const char*> coords) {
  std::vector<Scalar> out;
  for (const char* c : coords) out.push_back(parse_scalar(c));
  return DivisorClass(std::move(out));
}

Rational random_rational(std::mt19937_64& rng, long num_bound, long den_bound) {
  std::uniform_int_distribution<long> num(-num_bound, num_bound);
  std::uniform_int_distribution<long> den(1, den_bound);
  return Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

namespace {

long pick(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

DivisorClass random_vector(std::mt19937_64& rng, std::size_t rank, long bound) {
  std::vector<Scalar> v;
  for (std::size_t i = 0; i < rank; ++i) v.emplace_back(Rational(pick(rng, -bound, bound)));
  return DivisorClass(std::move(v));
}

}  // namespace

HKModel random_model(std::mt19937_64& rng) {
  for (;;) {
    const std::size_t rho = static_cast<std::size_t>(pick(rng, 2, 4));
    Matrix<Rational> g(rho, rho);
    for (std::size_t i = 0; i < rho; ++i) {
      g(i, i) = i == 0 ? Rational(pick(rng, 1, 8)) : Rational(pick(rng, -8, -1));
      for (std::size_t j = 0; j < i; ++j) g(i, j) = g(j, i) = Rational(pick(rng, -3, 3));
    }
    NSLattice lattice(g);
    try {
      if (lattice.signature() != std::pair<int, int>(1, static_cast<int>(rho) - 1)) continue;
    } catch (const Error&) {
      continue;
    }

    HKModel m;
    m.name = "random";
    m.dim = 2 * static_cast<int>(pick(rng, 1, 3));
    for (std::size_t i = 0; i < rho; ++i) m.basis.push_back("e" + std::to_string(i));
    m.lattice = lattice;
    for (int tries = 0; tries < 200 && m.ample.size() == 0; ++tries) {
      DivisorClass a = random_vector(rng, rho, 4);
      if (m.lattice.square(a).sign() > 0) m.ample = a;
    }
    if (m.ample.size() == 0) continue;

    const long target = pick(rng, 0, 6);
    for (int tries = 0; tries < 400 && static_cast<long>(m.exceptionals.size()) < target; ++tries) {
      DivisorClass v = random_vector(rng, rho, 3);
      if (v.is_zero() || m.square(v).sign() >= 0) continue;
      const int s = m.pairing(v, m.ample).sign();
      if (s == 0) continue;
      if (s < 0) v = -v;
      const DivisorClass ray = Ray(v).direction();
      const bool compatible = std::all_of(m.exceptionals.begin(), m.exceptionals.end(), [&](const ExceptionalClass& e) {
        return !(e.ray == ray) && m.pairing(e.ray, ray).sign() >= 0;
      });
      if (!compatible) continue;
      static const char* multiples[] = {"1", "2", "1/2", "1", "3"};
      m.exceptionals.push_back({"E" + std::to_string(m.exceptionals.size()), ray,
                                Rational::parse(multiples[pick(rng, 0, 4)])});
    }
    if (!validate(m).valid()) continue;
    return m;
  }
}

DivisorClass random_pseudo_effective(const HKModel& model, std::mt19937_64& rng) {
  DivisorClass d = DivisorClass::zero(model.rank());
  if (pick(rng, 0, 9) > 0) {
    for (int tries = 0; tries < 500; ++tries) {
      DivisorClass x = random_vector(rng, model.rank(), 6);
      if (in_closed_positive_cone(model, x) && !x.is_zero()) {
        d = x;
        break;
      }
    }
    if (d.is_zero()) d = model.ample;
  }
  for (const auto& e : model.exceptionals) {
    if (pick(rng, 0, 2) == 0) continue;
    const Rational c = abs(random_rational(rng, 7, 4));
    d += Scalar(c) * e.prime_class();
  }
  return d;
}

std::vector<DivisorClass> random_big_classes(const HKModel& model, std::mt19937_64& rng, int count) {
  const Cone2D eff = effective_cone_rank2(model);
  std::vector<DivisorClass> out;
  while (static_cast<int>(out.size()) < count) {
    if (out.size() % 2 == 0) {
      const Rational u = abs(random_rational(rng, 20, 7)) + Rational(1, 50);
      const Rational v = abs(random_rational(rng, 20, 7)) + Rational(1, 50);
      out.push_back(Scalar(u) * eff.lo.direction() + Scalar(v) * eff.hi.direction());
    } else {
      DivisorClass x = random_vector(rng, model.rank(), 60);
      if (membership(model, x).big) out.push_back(x);
    }
  }
  return out;
}

bool cone_contains(const Cone2D& outer, const Cone2D& inner) {
  return outer.contains(inner.lo.direction()) && outer.contains(inner.hi.direction());
}

bool subset_of(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  return std::all_of(a.begin(), a.end(), [&](const std::string& x) { return std::find(b.begin(), b.end(), x) != b.end(); });
}

std::vector<std::string> divisorial_labels(const std::vector<LocusComponent>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) {
    if (c.divisorial) out.push_back(c.label);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hktest

namespace hktest {

std::vector<DivisorClass> random_big_classes_any_rank(const HKModel& model, std::mt19937_64& rng, int count) {
  if (model.rank() == 2) return random_big_classes(model, rng, count);
  std::vector<DivisorClass> out;
  while (static_cast<int>(out.size()) < count) {
    DivisorClass x = random_pseudo_effective(model, rng);
    if (in_open_positive_cone(model, decompose(model, x).positive)) out.push_back(std::move(x));
  }
  return out;
}

std::string locus_property_failure(const HKModel& model, const DivisorClass& d) {
  const std::string at = " at " + d.to_string();
  const BaseLocusReport r = base_loci(model, d);
  const ZariskiDecomposition z = decompose(model, d);
  const auto plus = labels_of(r.b_plus);
  const auto minus = labels_of(r.b_minus);
  if (r.b != r.b_minus) return "B differs from B-" + at;
  if (!subset_of(minus, plus)) return "B- not inside B+" + at;

  std::vector<std::string> neg = z.support();
  std::sort(neg.begin(), neg.end());
  std::vector<std::string> null = null_set(model, z);
  std::sort(null.begin(), null.end());
  if (divisorial_labels(r.b_minus) != neg) return "divisorial part of B- is not Neg" + at;
  if (divisorial_labels(r.b_plus) != null) return "divisorial part of B+ is not Null" + at;

  for (const auto& c : r.b_plus) {
    if (c.dim < model.half_dim()) return "component " + c.label + " below half dimension" + at;
  }
  if (model.rank() == 2 && !r.b_plus.empty()) {
    const auto div = divisorial_labels(r.b_plus);
    if (!div.empty() && div.size() != r.b_plus.size()) return "mixed divisorial and small components" + at;
  }
  if (r.stable != (plus == minus)) return "stable flag disagrees with B+ = B-" + at;
  return {};
}

}  // namespace hktest
