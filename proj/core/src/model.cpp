#include "hkcones/model.hpp"

#include <algorithm>
#include <set>

#include "hkcones/error.hpp"

namespace hkcones {

std::string_view to_string(WallKind kind) noexcept {
  switch (kind) {
    case WallKind::Flip: return "flip";
    case WallKind::Divisorial: return "divisorial";
    case WallKind::Fibration: return "fibration";
  }
  return "flip";
}

WallKind parse_wall_kind(std::string_view text) {
  if (text == "flip") return WallKind::Flip;
  if (text == "divisorial") return WallKind::Divisorial;
  if (text == "fibration") return WallKind::Fibration;
  fail(ErrorCode::ParseError, "unknown wall kind '" + std::string(text) + "'");
}

const ExceptionalClass* HKModel::find_exceptional(std::string_view wanted) const {
  for (const auto& e : exceptionals) {
    if (e.name == wanted) return &e;
  }
  return nullptr;
}

const WallData* HKModel::find_wall(std::string_view wanted) const {
  for (const auto& w : walls) {
    if (w.name == wanted) return &w;
  }
  return nullptr;
}

bool ValidationReport::has(std::string_view code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.code == code; });
}

namespace {

class Checker {
 public:
  void add(std::string code, std::string location, std::string message) {
    report.violations.push_back({std::move(code), std::move(location), std::move(message)});
  }
  ValidationReport report;
};

bool same_ray(const DivisorClass& x, const DivisorClass& y) {
  // proportional with a positive factor
  const std::size_t n = x.size();
  std::size_t pivot = 0;
  while (pivot < n && x[pivot].is_zero()) ++pivot;
  if (pivot == n || y[pivot].is_zero()) return false;
  const Scalar t = y[pivot] / x[pivot];
  if (t.sign() <= 0) return false;
  return t * x == y;
}

}  // namespace

ValidationReport validate(const HKModel& model) {
  Checker check;
  const std::size_t rank = model.rank();
  const int n = model.half_dim();

  if (model.dim <= 0 || model.dim % 2 != 0) {
    check.add("OddDimension", "dim", "dimension must be a positive even integer, got " + std::to_string(model.dim));
  }
  if (rank == 0) {
    check.add("DimensionMismatch", "gram", "empty Gram matrix");
    return check.report;
  }
  if (!model.basis.empty() && model.basis.size() != rank) {
    check.add("DimensionMismatch", "basis", "basis has " + std::to_string(model.basis.size()) + " names for rank " +
                                                std::to_string(rank));
  }

  bool form_ok = true;
  if (!model.lattice.is_symmetric()) {
    check.add("SymmetryViolation", "gram", "Gram matrix is not symmetric");
    form_ok = false;
  } else {
    const Inertia in = inertia(model.lattice.gram());
    if (in.zero > 0) {
      check.add("SingularForm", "gram", "Gram matrix is degenerate");
      form_ok = false;
    } else if (in.positive != 1 || in.negative != static_cast<int>(rank) - 1) {
      check.add("SignatureViolation", "gram",
                "signature is (" + std::to_string(in.positive) + ", " + std::to_string(in.negative) +
                    "), expected (1, " + std::to_string(rank - 1) + ")");
      form_ok = false;
    }
  }

  const auto sized = [&](const DivisorClass& c, const std::string& where) {
    if (c.size() == rank) return true;
    check.add("DimensionMismatch", where, "class " + c.to_string() + " has wrong length");
    return false;
  };

  const bool ample_ok = sized(model.ample, "ample");
  if (form_ok && ample_ok && model.square(model.ample).sign() <= 0) {
    check.add("AmpleNotPositive", "ample", "ample class must have positive square");
  }
  const bool can_pair = form_ok && ample_ok;

  std::set<std::string> names;
  for (std::size_t i = 0; i < model.exceptionals.size(); ++i) {
    const auto& e = model.exceptionals[i];
    const std::string where = "exceptionals[" + std::to_string(i) + "] " + e.name;
    if (!names.insert(e.name).second) check.add("DuplicateName", where, "name used twice");
    if (!sized(e.ray, where)) continue;
    if (!e.ray.is_rational()) check.add("IrrationalClass", where, "exceptional rays must be rational");
    if (e.prime_multiple.sign() <= 0) check.add("NonPositiveMultiple", where, "prime multiple must be positive");
    if (!form_ok) continue;
    if (model.square(e.ray).sign() >= 0) {
      check.add("NonNegativeExceptional", where, "exceptional ray must have negative square, got " +
                                                     model.square(e.ray).to_string());
    }
    if (can_pair && model.pairing(model.ample, e.ray).sign() <= 0) {
      check.add("ExceptionalOrientation", where, "exceptional ray must pair positively with the ample class");
    }
    for (std::size_t j = 0; j < i; ++j) {
      const auto& f = model.exceptionals[j];
      if (f.ray.size() != rank) continue;
      if (same_ray(e.ray, f.ray)) check.add("DuplicateExceptionalRay", where, "same ray as " + f.name);
      if (model.pairing(e.ray, f.ray).sign() < 0) {
        check.add("ExceptionalOverlap", where, "distinct prime divisors must pair non-negatively; " + f.name);
      }
    }
  }

  std::set<std::string> wall_names;
  for (std::size_t i = 0; i < model.walls.size(); ++i) {
    const auto& w = model.walls[i];
    const std::string where = "walls[" + std::to_string(i) + "] " + w.name;
    if (!wall_names.insert(w.name).second) check.add("DuplicateName", where, "wall name used twice");
    if (w.center_dim < n || w.center_dim > 2 * n - 1) {
      check.add("CenterDimension", where, "center dimension " + std::to_string(w.center_dim) + " outside [" +
                                              std::to_string(n) + ", " + std::to_string(2 * n - 1) + "]");
    }
    if (w.kind == WallKind::Divisorial) {
      if (model.find_exceptional(w.center_label) == nullptr) {
        check.add("UnknownCenter", where, "divisorial wall center '" + w.center_label + "' is not a declared exceptional");
      }
      if (w.center_dim != 2 * n - 1) check.add("CenterDimension", where, "divisorial center must be a divisor");
    }
    const bool normal_ok = sized(w.normal, where + ".normal");
    const bool curve_ok = sized(w.curve.dual_divisor, where + ".curve_dual");
    if (!normal_ok || !curve_ok || !form_ok) continue;
    if (!w.normal.is_rational() || !w.curve.dual_divisor.is_rational()) {
      check.add("IrrationalClass", where, "wall data must be rational");
    }
    if (!model.pairing(w.normal, w.curve.dual_divisor).is_zero()) {
      check.add("WallNormalMismatch", where, "wall class is not orthogonal to the wall curve");
    }
    if (w.kind == WallKind::Fibration) continue;
    if (model.square(w.curve.dual_divisor).sign() >= 0) {
      check.add("NonNegativeWallCurve", where, "wall curve must have negative square");
    }
    if (can_pair) {
      if (model.pairing(model.ample, w.curve.dual_divisor).sign() <= 0) {
        check.add("WallOrientation", where, "ample class must pair positively with the wall curve");
      }
      if (model.square(w.normal).sign() < 0 || model.pairing(model.ample, w.normal).sign() <= 0) {
        check.add("NormalOutsidePositiveCone", where, "wall class must lie in the closed positive cone");
      }
    }
  }

  if (!model.fan.empty() && rank != 2) {
    check.add("FanRank", "fan", "a wall fan is only meaningful in rank 2");
  }
  std::vector<const WallData*> fan_walls;
  for (const auto& name : model.fan) {
    const WallData* w = model.find_wall(name);
    if (w == nullptr) {
      check.add("UnknownFanWall", "fan", "no wall named '" + name + "'");
    } else {
      fan_walls.push_back(w);
    }
  }
  if (rank == 2 && fan_walls.size() == model.fan.size()) {
    int orientation = 0;
    for (std::size_t i = 1; i < fan_walls.size(); ++i) {
      if (fan_walls[i]->normal.size() != 2 || fan_walls[i - 1]->normal.size() != 2) break;
      const int s = cross(fan_walls[i - 1]->normal, fan_walls[i]->normal).sign();
      if (s == 0 || (orientation != 0 && s != orientation)) {
        check.add("FanOrder", "fan", "walls are not in strictly monotone angular order at " + fan_walls[i]->name);
        break;
      }
      orientation = s;
    }
    for (const auto& w : model.walls) {
      if (w.kind == WallKind::Fibration) continue;
      if (std::find(model.fan.begin(), model.fan.end(), w.name) == model.fan.end()) {
        check.add("WallNotInFan", "fan", "wall '" + w.name + "' is missing from the fan");
      }
    }
  }
  return check.report;
}

void require_valid(const HKModel& model) {
  const ValidationReport report = validate(model);
  if (report.valid()) return;
  std::string message = "fixture '" + model.name + "' is invalid:";
  for (std::size_t i = 0; i < report.violations.size() && i < 5; ++i) {
    const auto& v = report.violations[i];
    message += " [" + v.code + " at " + v.location + ": " + v.message + "]";
  }
  fail(ErrorCode::InvalidFixture, message);
}

// ------------------------------------------------------------- fixtures

namespace {

Scalar q(const char* text) { return Scalar(Rational::parse(text)); }

DivisorClass cls(std::initializer_list<const char*> coords) {
  std::vector<Scalar> out;
  for (const char* c : coords) out.push_back(q(c));
  return DivisorClass(std::move(out));
}

Matrix<Rational> diag(std::initializer_list<long> entries) {
  Matrix<Rational> m(entries.size(), entries.size());
  std::size_t i = 0;
  for (long e : entries) {
    m(i, i) = Rational(e);
    ++i;
  }
  return m;
}

WallData wall(std::string name, DivisorClass normal, DivisorClass curve_dual, std::string center, int dim,
              WallKind kind) {
  WallData w;
  w.name = std::move(name);
  w.normal = std::move(normal);
  w.curve = CurveClass{std::move(curve_dual), w.name};
  w.center_label = std::move(center);
  w.center_dim = dim;
  w.kind = kind;
  return w;
}

HKModel hilb2(int degree) {
  HKModel m;
  m.name = "hilb2-s" + std::to_string(degree);
  m.dim = 4;
  m.basis = {"H", "δ"};
  m.lattice = NSLattice(diag({2L * degree, -2L}));
  m.exceptionals.push_back({"E", cls({"0", "1"}), Rational(2)});
  const WallData hilbert_chow = wall("W_hc", cls({"1", "0"}), cls({"0", "1/2"}), "E", 3, WallKind::Divisorial);
  switch (degree) {
    case 1:
      m.ample = cls({"4", "-1"});
      m.walls = {wall("W_plane", cls({"3", "-2"}), cls({"1", "-3/2"}), "P²", 2, WallKind::Flip), hilbert_chow};
      m.fan = {"W_plane", "W_hc"};
      break;
    case 2:
      m.ample = cls({"4", "-1"});
      m.exceptionals.push_back({"ι(E)", cls({"2", "-3"}), Rational(2)});
      m.walls = {wall("W_iota", cls({"3", "-4"}), cls({"1", "-3/2"}), "ι(E)", 3, WallKind::Divisorial),
                 hilbert_chow};
      m.fan = {"W_iota", "W_hc"};
      break;
    default:
      m.ample = cls({"3", "-1"});
      m.exceptionals.push_back({"D", cls({"1", "-2"}), Rational(1)});
      m.walls = {wall("W_D", cls({"2", "-3"}), cls({"1/2", "-1"}), "D", 3, WallKind::Divisorial), hilbert_chow};
      m.fan = {"W_D", "W_hc"};
      break;
  }
  return m;
}

HKModel fano_cubic_scroll() {
  HKModel m;
  m.name = "fano-cubic-scroll";
  m.dim = 4;
  m.basis = {"g", "τ"};
  m.lattice = NSLattice(Matrix<Rational>{{Rational(6), Rational(6)}, {Rational(6), Rational(2)}});
  m.ample = cls({"1", "0"});
  m.walls = {
      wall("α3∨", cls({"-7", "39"}), cls({"-3/2", "8"}), "P", 2, WallKind::Flip),
      wall("α2∨", cls({"-1", "9"}), cls({"-1/2", "2"}), "S", 2, WallKind::Flip),
      wall("α1∨", cls({"1", "3"}), cls({"-1/2", "1"}), "P∨", 2, WallKind::Flip),
      wall("α1", cls({"7", "-3"}), cls({"3/2", "-1"}), "P", 2, WallKind::Flip),
      wall("α2", cls({"17", "-9"}), cls({"7/2", "-2"}), "S", 2, WallKind::Flip),
      wall("α3", cls({"71", "-39"}), cls({"29/2", "-8"}), "P∨", 2, WallKind::Flip),
  };
  for (const auto& w : m.walls) m.fan.push_back(w.name);
  m.fan_stabilized = true;
  return m;
}

HKModel k3_two_curves() {
  HKModel m;
  m.name = "k3-two-curves";
  m.dim = 2;
  m.basis = {"C1", "C2"};
  m.lattice = NSLattice(Matrix<Rational>{{Rational(-2), Rational(3)}, {Rational(3), Rational(-2)}});
  m.ample = cls({"1", "1"});
  m.exceptionals = {{"C1", cls({"1", "0"}), Rational(1)}, {"C2", cls({"0", "1"}), Rational(1)}};
  m.walls = {wall("W_C1", cls({"3", "2"}), cls({"1", "0"}), "C1", 1, WallKind::Divisorial),
             wall("W_C2", cls({"2", "3"}), cls({"0", "1"}), "C2", 1, WallKind::Divisorial)};
  m.fan = {"W_C1", "W_C2"};
  return m;
}

HKModel k3n_mixed() {
  HKModel m;
  m.name = "k3n-mixed";
  m.dim = 4;
  m.basis = {"A", "C", "δ"};
  m.lattice = NSLattice(diag({4, -2, -2}));
  m.ample = cls({"4", "-1", "-1"});
  m.exceptionals = {{"E", cls({"0", "0", "1"}), Rational(2)}, {"C_S", cls({"0", "1", "0"}), Rational(1)}};
  const DivisorClass a_tilde = cls({"1", "0", "0"});
  m.walls = {wall("W_hc", a_tilde, cls({"0", "0", "1/2"}), "E", 3, WallKind::Divisorial),
             wall("W_plane", a_tilde, cls({"0", "1", "-1/2"}), "C^[2]", 2, WallKind::Flip),
             wall("W_CS", a_tilde, cls({"0", "1", "0"}), "C_S", 3, WallKind::Divisorial)};
  return m;
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"fano-cubic-scroll", "hilb2-s1", "hilb2-s2", "hilb2-s3", "k3-two-curves", "k3n-mixed"};
}

HKModel builtin(std::string_view name) {
  if (name == "hilb2-s1") return hilb2(1);
  if (name == "hilb2-s2") return hilb2(2);
  if (name == "hilb2-s3") return hilb2(3);
  if (name == "fano-cubic-scroll") return fano_cubic_scroll();
  if (name == "k3-two-curves") return k3_two_curves();
  if (name == "k3n-mixed") return k3n_mixed();
  fail(ErrorCode::UnknownFixture, "no built-in fixture named '" + std::string(name) + "'");
}

}  // namespace hkcones
