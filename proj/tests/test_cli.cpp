#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "hkcones/json_io.hpp"
#include "hkcones/svg.hpp"
#include "support.hpp"

using namespace hktest;
using hkcones::json::Json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hkcones::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = hay.find(needle); at != std::string::npos; at = hay.find(needle, at + 1)) ++n;
  return n;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("hkcones_cli_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, LociExample) {
  const Outcome o = run({"loci", "--fixture", "fano-cubic-scroll", "--class", "7,-3"});
  ASSERT_EQ(o.code, 0) << o.err;
  const Json j = o.json();
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["command"], "loci");
  ASSERT_EQ(j["result"]["b_plus"].size(), 1U);
  EXPECT_EQ(j["result"]["b_plus"][0]["label"], "P");
  EXPECT_EQ(j["result"]["b_plus"][0]["dim"], 2);
  EXPECT_EQ(j["result"]["stable"], false);
  EXPECT_EQ(j.begin().key(), "schema");
}

TEST(Cli, ZariskiExamples) {
  const Outcome ok = run({"zariski", "--fixture", "hilb2-s1", "--class", "1,1"});
  ASSERT_EQ(ok.code, 0) << ok.err;
  const auto z = hkcones::json::zariski_from_json(ok.json()["result"]);
  EXPECT_EQ(z.positive, cls({"1", "0"}));
  ASSERT_EQ(z.negative.size(), 1U);
  EXPECT_EQ(z.negative[0].name, "E");
  EXPECT_EQ(z.negative[0].coefficient, Rational(1, 2));

  const Outcome bad = run({"zariski", "--fixture", "hilb2-s1", "--class", "-1,0"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.json()["error"]["code"], "NotPseudoEffective");
}

TEST(Cli, UsageErrors) {
  const Outcome unknown_flag = run({"zariski", "--fixture", "hilb2-s1", "--colour", "1,1"});
  EXPECT_EQ(unknown_flag.code, 2);
  EXPECT_NE(unknown_flag.err.find("--colour"), std::string::npos) << unknown_flag.err;

  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"zariski", "--fixture", "hilb2-s1", "--class", "1,x"}).code, 2);
  EXPECT_EQ(run({"zariski", "--fixture", "hilb2-s1", "--class", "1,2,3"}).code, 2);
  EXPECT_EQ(run({"zariski", "--fixture", "no-such-fixture", "--class", "1,1"}).code, 2);
  EXPECT_EQ(run({"ampk", "--fixture", "hilb2-s1", "--k", "zero"}).code, 2);
  EXPECT_EQ(run({"dual", "--fixture", "hilb2-s1", "--pairing", "cup"}).code, 2);
  EXPECT_EQ(run({"fan-svg", "--all-fixtures"}).code, 2);
}

TEST(Cli, DomainErrors) {
  EXPECT_EQ(run({"walk", "--fixture", "hilb2-s1", "--class", "1,1"}).json()["error"]["code"], "NotMovable");
  EXPECT_EQ(run({"loci", "--fixture", "hilb2-s1", "--class", "0,1"}).code, 1);
  EXPECT_EQ(run({"chambers", "--fixture", "k3n-mixed"}).code, 1);
  EXPECT_EQ(run({"fan-svg", "--fixture", "k3n-mixed"}).code, 1);
}

TEST(Cli, RoundTrips) {
  const Outcome ch = run({"chambers", "--fixture", "fano-cubic-scroll"});
  ASSERT_EQ(ch.code, 0);
  const auto parsed = hkcones::json::chambers_from_json(ch.json()["result"]);
  EXPECT_EQ(parsed, stability_chambers_rank2(builtin("fano-cubic-scroll")));
  EXPECT_EQ(hkcones::json::to_json(parsed), ch.json()["result"]);

  const Outcome de = run({"destab", "--fixture", "fano-cubic-scroll", "--class", "4,-2", "--ample", "1,0"});
  ASSERT_EQ(de.code, 0);
  const auto report = hkcones::json::destab_from_json(de.json()["result"]);
  EXPECT_EQ(report.jumps.size(), 2U);
  EXPECT_EQ(*report.boundary_lambda, S("2-2/3*sqrt(6)"));
  EXPECT_EQ(hkcones::json::to_json(report), de.json()["result"]);

  const Outcome wk = run({"walk", "--fixture", "fano-cubic-scroll", "--class", "20,-11"});
  ASSERT_EQ(wk.code, 0);
  EXPECT_EQ(hkcones::json::walk_from_json(wk.json()["result"]), walk_rank2(builtin("fano-cubic-scroll"), cls({"20", "-11"})));

  const Outcome lo = run({"loci", "--fixture", "k3n-mixed", "--class", "1,0,0"});
  ASSERT_EQ(lo.code, 0);
  EXPECT_EQ(hkcones::json::loci_from_json(lo.json()["result"]), base_loci(builtin("k3n-mixed"), cls({"1", "0", "0"})));

  for (const auto& n : builtin_names()) {
    const HKModel m = builtin(n);
    EXPECT_EQ(hkcones::json::model_from_json(hkcones::json::to_json(m)), m) << n;
  }
}

TEST(Cli, OtherVerbs) {
  EXPECT_EQ(run({"validate", "--fixture", "hilb2-s2"}).json()["result"]["valid"], true);
  const Json mem = run({"membership", "--fixture", "fano-cubic-scroll", "--class", "1,0"}).json();
  EXPECT_EQ(mem["result"]["ample"], true);
  const Json ak = run({"ampk", "--fixture", "hilb2-s1", "--k", "3"}).json();
  EXPECT_EQ(hkcones::json::cone_from_json(ak["result"]), movable_cone_rank2(builtin("hilb2-s1")));
  const Json du = run({"dual", "--fixture", "hilb2-s1", "--cone", "mov"}).json();
  EXPECT_EQ(hkcones::json::cone_from_json(du["result"]["dual"]), effective_cone_rank2(builtin("hilb2-s1")));
  const Json mo = run({"mori", "--fixture", "hilb2-s1", "--class", "1,1"}).json();
  EXPECT_EQ(hkcones::json::mori_from_json(mo["result"]).exceptional_generators, std::vector<std::string>{"E"});
  const Json fx = run({"fixtures"}).json();
  EXPECT_EQ(fx["fixtures"].size(), builtin_names().size());
}

TEST(Cli, Deterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"chambers", "--fixture", "fano-cubic-scroll"},
        std::vector<std::string>{"fan-svg", "--fixture", "fano-cubic-scroll"},
        std::vector<std::string>{"loci", "--all-fixtures", "--class", "1,0"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

TEST(Cli, FanSvg) {
  const Outcome s1 = run({"fan-svg", "--fixture", "hilb2-s1"});
  ASSERT_EQ(s1.code, 0);
  EXPECT_EQ(s1.out.rfind("<svg", 0), 0U);
  EXPECT_EQ(count(s1.out, "fill-opacity"), 1U);
  EXPECT_EQ(count(s1.out, "<rect x=\"640\""), 3U);
  for (const char* label : {">δ<", ">H<", ">3H-2δ<", ">H-δ<"}) EXPECT_NE(s1.out.find(label), std::string::npos) << label;

  const Outcome ht = run({"fan-svg", "--fixture", "fano-cubic-scroll"});
  ASSERT_EQ(ht.code, 0);
  EXPECT_EQ(count(ht.out, "<rect x=\"640\""), 6U);
  EXPECT_EQ(count(ht.out, "SC{P,P∨,S}:"), 1U);

  const std::string empty = fan_svg(builtin("hilb2-s1"), {});
  EXPECT_EQ(count(empty, "<line"), 2U);
  EXPECT_EQ(count(empty, "<path"), 0U);
  EXPECT_EQ(count(empty, "<rect x=\"640\""), 0U);
}

TEST(Cli, OutFile) {
  const auto path = scratch("fan.svg");
  const Outcome o = run({"fan-svg", "--fixture", "hilb2-s3", "--out", path.string()});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_TRUE(o.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), fan_svg(builtin("hilb2-s3"), stability_chambers_rank2(builtin("hilb2-s3"))));
}

TEST(Cli, FixtureDirectoryAndPaths) {
  HKModel m = builtin("hilb2-s1");
  m.name = "custom-s1";
  const auto path = scratch("custom-s1.json");
  std::ofstream(path) << hkcones::json::to_json(m).dump(2);

  const Outcome by_path = run({"zariski", "--fixture", path.string(), "--class", "1,1"});
  ASSERT_EQ(by_path.code, 0) << by_path.err;

  ::setenv("HKCONES_FIXTURE_DIR", ("/nonexistent:" + path.parent_path().string()).c_str(), 1);
  const Outcome by_name = run({"zariski", "--fixture", "custom-s1", "--class", "1,1"});
  ::unsetenv("HKCONES_FIXTURE_DIR");
  ASSERT_EQ(by_name.code, 0) << by_name.err;
  EXPECT_EQ(by_name.json()["result"], by_path.json()["result"]);

  const auto broken = scratch("broken.json");
  std::ofstream(broken) << "{ not json";
  EXPECT_EQ(run({"validate", "--fixture", broken.string()}).code, 2);
}

TEST(Cli, AllFixtures) {
  const Outcome o = run({"loci", "--all-fixtures", "--class", "2,1"});
  ASSERT_EQ(o.code, 0) << o.err;
  const Json j = o.json();
  std::vector<std::string> names;
  for (const auto& r : j["results"]) names.push_back(r["fixture"]);
  EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
  EXPECT_EQ(names.size(), builtin_names().size());
  for (const auto& r : j["results"]) {
    // rank-3 fixture rejects a rank-2 class; every other gets a report
    EXPECT_EQ(r.contains("error"), r["fixture"] == "k3n-mixed") << r.dump();
  }
}
