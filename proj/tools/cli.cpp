#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "hkcones/chambers.hpp"
#include "hkcones/cones.hpp"
#include "hkcones/error.hpp"
#include "hkcones/json_io.hpp"
#include "hkcones/svg.hpp"
#include "hkcones/walk.hpp"
#include "hkcones/zariski.hpp"

namespace hkcones::cli {

namespace fs = std::filesystem;
using json::Json;

namespace {

const std::vector<std::string> kVerbs = {"validate", "zariski", "membership", "dual",  "ampk", "chambers",
                                         "mori",     "destab",  "walk",       "loci",  "fan-svg", "fixtures"};
const std::set<std::string> kNeedsClass = {"zariski", "membership", "mori", "destab", "walk", "loci"};
// flags whose value may start with '-' (negative coordinates)
const std::set<std::string> kValueFlags = {"--class", "--ample", "--k", "--cone"};

struct Options {
  std::string verb;
  std::string fixture;
  std::string klass;
  std::string ample;
  std::optional<int> k;
  std::string pairing = "bbf";
  std::string cone = "mov";
  std::string out;
  bool all_fixtures = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<fs::path> fixture_dirs() {
  std::vector<fs::path> dirs;
  const char* env = std::getenv("HKCONES_FIXTURE_DIR");
  if (env == nullptr) return dirs;
  std::stringstream ss(env);
  std::string item;
  while (std::getline(ss, item, ':')) {
    if (!item.empty()) dirs.emplace_back(item);
  }
  return dirs;
}

HKModel resolve_fixture(const std::string& name) {
  const auto names = builtin_names();
  if (std::find(names.begin(), names.end(), name) != names.end()) return builtin(name);
  std::error_code ec;
  if (fs::is_regular_file(name, ec)) return json::load_model(name);
  for (const auto& dir : fixture_dirs()) {
    for (const fs::path candidate : {dir / name, dir / (name + ".json")}) {
      if (fs::is_regular_file(candidate, ec)) return json::load_model(candidate.string());
    }
  }
  fail(ErrorCode::UnknownFixture, "no built-in fixture, file or fixture-dir entry named '" + name + "'");
}

// name -> source, sorted by name; built-ins shadow directory entries
std::vector<std::pair<std::string, std::string>> all_fixtures() {
  std::vector<std::pair<std::string, std::string>> out;
  std::set<std::string> seen;
  for (const auto& n : builtin_names()) {
    out.emplace_back(n, "builtin");
    seen.insert(n);
  }
  for (const auto& dir : fixture_dirs()) {
    std::error_code ec;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir, ec)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      const std::string stem = f.stem().string();
      if (seen.insert(stem).second) out.emplace_back(stem, f.string());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

DivisorClass parse_class(const std::string& text) {
  std::vector<Scalar> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) coords.push_back(parse_scalar(item));
  if (coords.empty()) fail(ErrorCode::ParseError, "empty class '" + text + "'");
  return DivisorClass(std::move(coords));
}

DivisorClass checked_class(const HKModel& model, const std::string& text, const char* flag) {
  DivisorClass d = parse_class(text);
  if (d.size() != model.rank()) {
    fail(ErrorCode::DimensionMismatch, std::string(flag) + " has " + std::to_string(d.size()) +
                                           " coordinates but the lattice has rank " + std::to_string(model.rank()));
  }
  return d;
}

Cone2D named_cone(const HKModel& model, const std::string& spec) {
  if (spec == "nef") return nef_cone_rank2(model);
  if (spec == "mov") return movable_cone_rank2(model);
  if (spec == "eff") return effective_cone_rank2(model);
  if (spec == "pos") return positive_cone_rank2(model);
  if (spec == "curves") {
    require_rank2(model, "curve cone");
    std::vector<DivisorClass> gens;
    for (const auto& w : model.walls) {
      if (w.kind != WallKind::Fibration) gens.push_back(model.lattice.degrees(w.curve.dual_divisor));
    }
    return hull_rank2(gens);
  }
  const auto semi = spec.find(';');
  if (semi == std::string::npos) {
    fail(ErrorCode::ParseError, "--cone expects nef|mov|eff|pos|curves or 'a,b;c,d', got '" + spec + "'");
  }
  require_rank2(model, "explicit cone");
  return Cone2D::spanned_by(checked_class(model, spec.substr(0, semi), "--cone"),
                            checked_class(model, spec.substr(semi + 1), "--cone"));
}

Json error_json(const Error& e) {
  Json j = Json::object();
  j["code"] = std::string(to_string(e.code()));
  j["message"] = e.what();
  return j;
}

// Result of one verb on one fixture. Throws Error on failure.
Json execute(const Options& o, const HKModel& model) {
  if (o.verb == "validate") return json::to_json(validate(model));
  require_valid(model);

  std::optional<DivisorClass> d;
  if (kNeedsClass.count(o.verb)) d = checked_class(model, o.klass, "--class");

  if (o.verb == "zariski") return json::to_json(decompose(model, *d));
  if (o.verb == "membership") return json::to_json(membership(model, *d));
  if (o.verb == "dual") {
    const PairingKind kind = parse_pairing_kind(o.pairing);
    const Cone2D input = named_cone(model, o.cone);
    Json j = Json::object();
    j["cone"] = json::to_json(input);
    j["dual"] = json::to_json(dual_cone_rank2(model, input, kind));
    return j;
  }
  if (o.verb == "ampk") return json::to_json(amp_k(model, *o.k));
  if (o.verb == "chambers") return json::to_json(stability_chambers_rank2(model));
  if (o.verb == "mori") return json::to_json(mori_chamber(model, *d));
  if (o.verb == "destab") {
    const DivisorClass a = o.ample.empty() ? model.ample : checked_class(model, o.ample, "--ample");
    return json::to_json(destabilizing_numbers(model, *d, a));
  }
  if (o.verb == "walk") return json::to_json(walk_rank2(model, *d));
  if (o.verb == "loci") {
    Json j = json::to_json(base_loci(model, *d));
    const InstabilityWitness w = is_unstable(model, *d);
    j["witness"] = w.witness ? Json(*w.witness) : Json(nullptr);
    return j;
  }
  throw UsageError("verb '" + o.verb + "' does not run on a single fixture");
}

Json envelope(const Options& o) {
  Json j = Json::object();
  j["schema"] = 1;
  j["command"] = o.verb;
  return j;
}

void add_inputs(Json& j, const Options& o) {
  if (!o.klass.empty()) j["class"] = o.klass;
  if (!o.ample.empty()) j["ample"] = o.ample;
  if (o.k) j["k"] = *o.k;
  if (o.verb == "dual") {
    j["pairing"] = o.pairing;
    j["cone_spec"] = o.cone;
  }
}

std::vector<std::string> normalize_args(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (kValueFlags.count(args[i]) && i + 1 < args.size()) {
      out.push_back(args[i] + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

void validate_options(const Options& o) {
  if (o.verb == "fixtures") return;
  if (o.all_fixtures && !o.fixture.empty()) throw UsageError("--fixture and --all-fixtures are exclusive");
  if (!o.all_fixtures && o.fixture.empty()) throw UsageError("--fixture is required for '" + o.verb + "'");
  if (o.verb == "fan-svg" && o.all_fixtures) throw UsageError("fan-svg renders one fixture; drop --all-fixtures");
  if (kNeedsClass.count(o.verb) && o.klass.empty()) throw UsageError("--class is required for '" + o.verb + "'");
  if (o.verb == "ampk" && !o.k) throw UsageError("--k is required for 'ampk'");
}

int emit(const Options& o, const std::string& text, std::ostream& out, std::ostream& err) {
  if (o.out.empty()) {
    out << text;
    return 0;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) {
    err << "error: cannot write --out " << o.out << "\n";
    return 2;
  }
  f << text;
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Cones, Zariski decompositions and base loci on hyper-Kahler fixtures", "hkcones"};
  app.add_option("verb", o.verb, "One of: validate zariski membership dual ampk chambers mori destab walk loci fan-svg fixtures")
      ->required()
      ->check(CLI::IsMember(kVerbs));
  app.add_option("--fixture", o.fixture, "Built-in fixture name, JSON path, or name under HKCONES_FIXTURE_DIR");
  app.add_option("--class", o.klass, "Divisor class coordinates, comma separated");
  app.add_option("--ample", o.ample, "Ample direction for destab (default: the fixture's ample class)");
  app.add_option("--k", o.k, "Index k for ampk");
  app.add_option("--pairing", o.pairing, "Pairing for dual: bbf or curve")->check(CLI::IsMember({"bbf", "curve"}));
  app.add_option("--cone", o.cone, "Cone for dual: nef, mov, eff, pos, curves or 'a,b;c,d'");
  app.add_option("--out", o.out, "Write the report to this file");
  app.add_flag("--all-fixtures", o.all_fixtures, "Run on every known fixture");

  std::vector<std::string> args = normalize_args(raw_args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
    validate_options(o);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  Json report = envelope(o);

  if (o.verb == "fixtures") {
    Json list = Json::array();
    for (const auto& [name, source] : all_fixtures()) {
      Json entry = Json::object();
      entry["name"] = name;
      entry["source"] = source;
      try {
        const HKModel m = resolve_fixture(source == "builtin" ? name : source);
        entry["dim"] = m.dim;
        entry["rank"] = m.rank();
        entry["valid"] = validate(m).valid();
      } catch (const Error& e) {
        entry["error"] = error_json(e);
      }
      list.push_back(std::move(entry));
    }
    report["fixtures"] = std::move(list);
    return emit(o, report.dump(2) + "\n", out, err);
  }

  if (o.all_fixtures) {
    add_inputs(report, o);
    Json results = Json::array();
    for (const auto& [name, source] : all_fixtures()) {
      Json entry = Json::object();
      entry["fixture"] = name;
      try {
        entry["result"] = execute(o, resolve_fixture(source == "builtin" ? name : source));
      } catch (const Error& e) {
        entry["error"] = error_json(e);
      }
      results.push_back(std::move(entry));
    }
    report["results"] = std::move(results);
    return emit(o, report.dump(2) + "\n", out, err);
  }

  report["fixture"] = o.fixture;
  add_inputs(report, o);
  try {
    const HKModel model = resolve_fixture(o.fixture);
    if (o.verb == "fan-svg") {
      require_valid(model);
      return emit(o, fan_svg(model, stability_chambers_rank2(model)), out, err);
    }
    report["result"] = execute(o, model);
    const bool invalid = o.verb == "validate" && !report["result"]["valid"].get<bool>();
    const int written = emit(o, report.dump(2) + "\n", out, err);
    if (written != 0) return written;
    return invalid ? 1 : 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    report["error"] = error_json(e);
    const int code = e.is_input_error() ? 2 : 1;
    const int written = emit(o, report.dump(2) + "\n", out, err);
    return written != 0 ? written : code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hkcones::cli
