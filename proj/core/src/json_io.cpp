#include "hkcones/json_io.hpp"

#include <fstream>
#include <sstream>

#include "hkcones/error.hpp"

namespace hkcones::json {

namespace {

Json rational_json(const Rational& r) { return r.to_string(); }

Rational rational_from(const Json& j) {
  const Scalar s = scalar_from_json(j);
  if (!s.is_rational()) fail(ErrorCode::ParseError, "expected a rational, got " + s.to_string());
  return s.as_rational();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) fail(ErrorCode::ParseError, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) fail(ErrorCode::ParseError, std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

bool bool_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_boolean()) fail(ErrorCode::ParseError, std::string("field '") + key + "' must be a boolean");
  return v.get<bool>();
}

std::vector<std::string> strings(const Json& j) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& s : j) {
    if (!s.is_string()) fail(ErrorCode::ParseError, "expected a string");
    out.push_back(s.get<std::string>());
  }
  return out;
}

template <class T, class F>
std::vector<T> array_of(const Json& j, F&& read) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "expected an array");
  std::vector<T> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(read(item));
  return out;
}

template <class T>
Json array_json(const std::vector<T>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

Json string_array(const std::vector<std::string>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x);
  return out;
}

}  // namespace

Json to_json(const Scalar& x) {
  if (x.is_rational()) return rational_json(x.a());
  Json out = Json::object();
  out["a"] = rational_json(x.a());
  out["b"] = rational_json(x.b());
  if (x.m().fits_slong_p()) {
    out["m"] = x.m().get_si();
  } else {
    out["m"] = x.m().get_str();
  }
  out["approx"] = x.to_double();
  return out;
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(Rational(j.get<long>()));
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_object()) {
    const Json& m = field(j, "m");
    mpz_class radicand;
    if (m.is_string()) {
      if (radicand.set_str(m.get<std::string>(), 10) != 0) fail(ErrorCode::ParseError, "bad radicand");
    } else if (m.is_number_integer()) {
      radicand = m.get<long>();
    } else {
      fail(ErrorCode::ParseError, "bad radicand");
    }
    if (radicand <= 0) fail(ErrorCode::ParseError, "radicand must be positive");
    return Scalar(rational_from(field(j, "a")), rational_from(field(j, "b")), radicand);
  }
  fail(ErrorCode::ParseError, "not an exact scalar: " + j.dump());
}

Json to_json(const DivisorClass& x) { return array_json(x.coords()); }

DivisorClass class_from_json(const Json& j) {
  return DivisorClass(array_of<Scalar>(j, [](const Json& s) { return scalar_from_json(s); }));
}

Json to_json(const Ray& r) { return to_json(r.direction()); }

Ray ray_from_json(const Json& j) { return Ray(class_from_json(j)); }

Json to_json(const Cone2D& c) {
  Json out = Json::object();
  out["lo"] = to_json(c.lo);
  out["hi"] = to_json(c.hi);
  return out;
}

Cone2D cone_from_json(const Json& j) { return Cone2D{ray_from_json(field(j, "lo")), ray_from_json(field(j, "hi"))}; }

Json to_json(const HKModel& model) {
  Json out = Json::object();
  out["name"] = model.name;
  out["dim"] = model.dim;
  out["basis"] = string_array(model.basis);
  Json gram = Json::array();
  const auto& g = model.lattice.gram();
  for (std::size_t r = 0; r < g.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < g.cols(); ++c) row.push_back(rational_json(g(r, c)));
    gram.push_back(std::move(row));
  }
  out["gram"] = std::move(gram);
  out["ample"] = to_json(model.ample);
  Json exceptionals = Json::array();
  for (const auto& e : model.exceptionals) {
    Json x = Json::object();
    x["name"] = e.name;
    x["ray"] = to_json(e.ray);
    x["prime_multiple"] = rational_json(e.prime_multiple);
    exceptionals.push_back(std::move(x));
  }
  out["exceptionals"] = std::move(exceptionals);
  Json walls = Json::array();
  for (const auto& w : model.walls) {
    Json x = Json::object();
    x["name"] = w.name;
    x["normal"] = to_json(w.normal);
    x["curve_dual"] = to_json(w.curve.dual_divisor);
    if (!w.curve.label.empty()) x["curve_label"] = w.curve.label;
    Json center = Json::object();
    center["label"] = w.center_label;
    center["dim"] = w.center_dim;
    x["center"] = std::move(center);
    x["kind"] = std::string(to_string(w.kind));
    walls.push_back(std::move(x));
  }
  out["walls"] = std::move(walls);
  out["fan"] = string_array(model.fan);
  out["fan_stabilized"] = model.fan_stabilized;
  return out;
}

HKModel model_from_json(const Json& j) {
  try {
    HKModel m;
    m.name = j.contains("name") ? string_field(j, "name") : std::string("fixture");
    m.dim = int_field(j, "dim");
    m.basis = strings(field(j, "basis"));
    const Json& gram = field(j, "gram");
    if (!gram.is_array()) fail(ErrorCode::ParseError, "gram must be an array of rows");
    const std::size_t n = gram.size();
    Matrix<Rational> g(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      if (!gram[r].is_array() || gram[r].size() != n) fail(ErrorCode::ParseError, "gram must be square");
      for (std::size_t c = 0; c < n; ++c) g(r, c) = rational_from(gram[r][c]);
    }
    m.lattice = NSLattice(std::move(g));
    m.ample = class_from_json(field(j, "ample"));
    if (j.contains("exceptionals")) {
      m.exceptionals = array_of<ExceptionalClass>(j.at("exceptionals"), [](const Json& x) {
        ExceptionalClass e;
        e.name = string_field(x, "name");
        e.ray = class_from_json(field(x, "ray"));
        e.prime_multiple = x.contains("prime_multiple") ? rational_from(x.at("prime_multiple")) : Rational(1);
        return e;
      });
    }
    if (j.contains("walls")) {
      m.walls = array_of<WallData>(j.at("walls"), [](const Json& x) {
        WallData w;
        w.name = string_field(x, "name");
        w.normal = class_from_json(field(x, "normal"));
        w.curve.dual_divisor = class_from_json(field(x, "curve_dual"));
        if (x.contains("curve_label")) w.curve.label = string_field(x, "curve_label");
        const Json& center = field(x, "center");
        w.center_label = string_field(center, "label");
        w.center_dim = int_field(center, "dim");
        w.kind = parse_wall_kind(string_field(x, "kind"));
        return w;
      });
    }
    if (j.contains("fan")) m.fan = strings(j.at("fan"));
    if (j.contains("fan_stabilized")) m.fan_stabilized = bool_field(j, "fan_stabilized");
    return m;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::IncompatibleRadicals) {
      fail(ErrorCode::InvalidFixture, e.what());
    }
    throw;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidFixture, e.what());
  }
}

HKModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::UnknownFixture, "cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::ParseError, path + ": " + e.what());
  }
  return model_from_json(j);
}

Json to_json(const ValidationReport& r) {
  Json out = Json::object();
  out["valid"] = r.valid();
  Json vs = Json::array();
  for (const auto& v : r.violations) {
    Json x = Json::object();
    x["code"] = v.code;
    x["location"] = v.location;
    x["message"] = v.message;
    vs.push_back(std::move(x));
  }
  out["violations"] = std::move(vs);
  return out;
}

ValidationReport validation_from_json(const Json& j) {
  ValidationReport r;
  r.violations = array_of<Violation>(field(j, "violations"), [](const Json& x) {
    return Violation{string_field(x, "code"), string_field(x, "location"), string_field(x, "message")};
  });
  return r;
}

Json to_json(const ZariskiDecomposition& z) {
  Json out = Json::object();
  out["positive"] = to_json(z.positive);
  Json neg = Json::array();
  for (const auto& t : z.negative) {
    Json x = Json::object();
    x["name"] = t.name;
    x["coefficient"] = to_json(t.coefficient);
    neg.push_back(std::move(x));
  }
  out["negative"] = std::move(neg);
  return out;
}

ZariskiDecomposition zariski_from_json(const Json& j) {
  ZariskiDecomposition z;
  z.positive = class_from_json(field(j, "positive"));
  z.negative = array_of<NegativeTerm>(field(j, "negative"), [](const Json& x) {
    return NegativeTerm{string_field(x, "name"), scalar_from_json(field(x, "coefficient"))};
  });
  return z;
}

Json to_json(const Membership& m) {
  Json out = Json::object();
  out["pseudo_effective"] = m.pseudo_effective;
  out["big"] = m.big;
  out["movable"] = m.movable;
  out["nef"] = m.nef;
  out["ample"] = m.ample;
  return out;
}

Membership membership_from_json(const Json& j) {
  return Membership{bool_field(j, "pseudo_effective"), bool_field(j, "big"), bool_field(j, "movable"),
                    bool_field(j, "nef"), bool_field(j, "ample")};
}

Json to_json(const LocusComponent& c) {
  Json out = Json::object();
  out["label"] = c.label;
  out["dim"] = c.dim;
  out["divisorial"] = c.divisorial;
  return out;
}

LocusComponent component_from_json(const Json& j) {
  return LocusComponent{string_field(j, "label"), int_field(j, "dim"), bool_field(j, "divisorial")};
}

Json to_json(const std::vector<LocusComponent>& cs) { return array_json(cs); }

std::vector<LocusComponent> components_from_json(const Json& j) {
  return array_of<LocusComponent>(j, [](const Json& x) { return component_from_json(x); });
}

Json to_json(const BaseLocusReport& r) {
  Json out = Json::object();
  out["b_plus"] = to_json(r.b_plus);
  out["b_minus"] = to_json(r.b_minus);
  out["b"] = to_json(r.b);
  out["stable"] = r.stable;
  out["partial"] = r.partial;
  return out;
}

BaseLocusReport loci_from_json(const Json& j) {
  BaseLocusReport r;
  r.b_plus = components_from_json(field(j, "b_plus"));
  r.b_minus = components_from_json(field(j, "b_minus"));
  r.b = components_from_json(field(j, "b"));
  r.stable = bool_field(j, "stable");
  r.partial = bool_field(j, "partial");
  return r;
}

Json to_json(const WalkTrace& t) {
  Json out = Json::object();
  Json crossed = Json::array();
  for (const auto& c : t.crossed) {
    Json x = Json::object();
    x["wall"] = c.wall;
    x["center_label"] = c.center_label;
    x["center_dim"] = c.center_dim;
    crossed.push_back(std::move(x));
  }
  out["crossed"] = std::move(crossed);
  out["start_chamber"] = to_json(t.start_chamber);
  out["terminal_chamber"] = to_json(t.terminal_chamber);
  out["terminal_on_wall"] = t.terminal_on_wall ? Json(*t.terminal_on_wall) : Json(nullptr);
  return out;
}

WalkTrace walk_from_json(const Json& j) {
  WalkTrace t{array_of<CrossedWall>(field(j, "crossed"),
                                    [](const Json& x) {
                                      return CrossedWall{string_field(x, "wall"), string_field(x, "center_label"),
                                                         int_field(x, "center_dim")};
                                    }),
              cone_from_json(field(j, "start_chamber")), cone_from_json(field(j, "terminal_chamber")),
              std::nullopt};
  const Json& w = field(j, "terminal_on_wall");
  if (!w.is_null()) t.terminal_on_wall = w.get<std::string>();
  return t;
}

Json to_json(const BZChamber& c) {
  Json out = Json::object();
  out["neg_set"] = string_array(c.neg_set);
  out["null_set"] = string_array(c.null_set);
  out["stable_codim1"] = c.stable_codim1;
  return out;
}

BZChamber bz_from_json(const Json& j) {
  return BZChamber{strings(field(j, "neg_set")), strings(field(j, "null_set")), bool_field(j, "stable_codim1")};
}

Json to_json(const StabilityChamber& c) {
  Json out = Json::object();
  out["name"] = c.name;
  Json pieces = Json::array();
  for (const auto& p : c.pieces) {
    Json x = Json::object();
    x["lo"] = to_json(p.lo);
    x["hi"] = to_json(p.hi);
    x["include_lo"] = p.include_lo;
    x["include_hi"] = p.include_hi;
    pieces.push_back(std::move(x));
  }
  out["pieces"] = std::move(pieces);
  out["components"] = to_json(c.components);
  return out;
}

StabilityChamber chamber_from_json(const Json& j) {
  StabilityChamber c;
  c.name = string_field(j, "name");
  c.pieces = array_of<ChamberPiece>(field(j, "pieces"), [](const Json& x) {
    return ChamberPiece{ray_from_json(field(x, "lo")), ray_from_json(field(x, "hi")), bool_field(x, "include_lo"),
                        bool_field(x, "include_hi")};
  });
  c.components = components_from_json(field(j, "components"));
  return c;
}

Json to_json(const std::vector<StabilityChamber>& cs) { return array_json(cs); }

std::vector<StabilityChamber> chambers_from_json(const Json& j) {
  return array_of<StabilityChamber>(j, [](const Json& x) { return chamber_from_json(x); });
}

Json to_json(const MoriChamber& m) {
  Json out = Json::object();
  out["face_rays"] = array_json(m.face_rays);
  out["exceptional_generators"] = string_array(m.exceptional_generators);
  out["cone"] = to_json(m.cone);
  return out;
}

MoriChamber mori_from_json(const Json& j) {
  return MoriChamber{array_of<Ray>(field(j, "face_rays"), [](const Json& x) { return ray_from_json(x); }),
                     strings(field(j, "exceptional_generators")), cone_from_json(field(j, "cone"))};
}

Json to_json(const DestabReport& r) {
  Json out = Json::object();
  Json jumps = Json::array();
  for (const auto& jump : r.jumps) {
    Json x = Json::object();
    x["lambda"] = to_json(jump.lambda);
    x["rational"] = jump.rational;
    x["before"] = to_json(jump.before);
    x["after"] = to_json(jump.after);
    jumps.push_back(std::move(x));
  }
  out["jumps"] = std::move(jumps);
  out["boundary_lambda"] = r.boundary_lambda ? to_json(*r.boundary_lambda) : Json(nullptr);
  return out;
}

DestabReport destab_from_json(const Json& j) {
  DestabReport r;
  r.jumps = array_of<DestabJump>(field(j, "jumps"), [](const Json& x) {
    return DestabJump{scalar_from_json(field(x, "lambda")), bool_field(x, "rational"),
                      components_from_json(field(x, "before")), components_from_json(field(x, "after"))};
  });
  const Json& b = field(j, "boundary_lambda");
  if (!b.is_null()) r.boundary_lambda = scalar_from_json(b);
  return r;
}

}  // namespace hkcones::json
