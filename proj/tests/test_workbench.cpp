#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "wolfkit/catalog.hpp"
#include "wolfkit/errors.hpp"
#include "wolfkit/workbench.hpp"

using namespace wolfkit;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "wolfkit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_workbench(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("wolfkit_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Json, RationalStringsAndLocations) {
  EXPECT_EQ(rational_from_json(Json("-3/4"), "/x"), Rational(-3, 4));
  try {
    matrix_from_json(Json::parse(R"([["1","2"],["3"]])"), "/space/gram");
    FAIL();
  } catch (const UsageError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("/space/gram/1", 0), 0u) << e.what();
  }
  try {
    rational_from_json(Json("1/0"), "/A/0/0");
    FAIL();
  } catch (const UsageError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("/A/0/0", 0), 0u);
  }
}

TEST(Json, InstanceRoundTrip) {
  CatalogEntry b6 = b6_wolf_group();
  Instance inst{b6.space, b6.generators, std::nullopt, "b6"};
  Json j = instance_to_json(inst);
  Instance back = parse_instance(j);
  ASSERT_EQ(back.generators.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(back.generators[i], inst.generators[i]);
  EXPECT_EQ(back.space->gram(), b6.space->gram());
  EXPECT_EQ(instance_to_json(back), j);
}

TEST(Json, AlgebraInstance) {
  Instance inst = parse_instance_text(R"({"version": 1, "algebra": {"dim": 3,
      "brackets": [{"i": 2, "j": 1, "result": ["0", "0", "-1"]}],
      "form": [["0","0","0"],["0","0","0"],["0","0","0"]]}})");
  ASSERT_TRUE(inst.algebra);
  EXPECT_EQ(inst.algebra->algebra.bracket(0, 1), (Matrix{{0}, {0}, {1}}));
}

TEST(Json, SchemaErrors) {
  EXPECT_THROW(parse_instance_text("{"), UsageError);
  EXPECT_THROW(parse_instance_text(R"({"version": 2})"), UsageError);
  EXPECT_THROW(parse_instance_text(R"({"version": 1, "space": {"gram": [["1","1"],["0","1"]]}, "generators": []})"),
               UsageError);
}

TEST(Workbench, CheckB6Passes) {
  CliRun r = run({"check", "b6"});
  EXPECT_EQ(r.code, kExitPass) << r.err;
  EXPECT_NE(r.out.find("transitivity_evidence: transitive"), std::string::npos);
}

TEST(Workbench, CorruptedSquareFailsWithWitness) {
  std::string path = temp_file("square.json", R"({"version": 1,
    "space": {"gram": [["1","0"],["0","1"]]},
    "generators": [{"A": [["0","1"],["-1","0"]], "v": ["1","0"]}]})");
  CliRun r = run({"--format", "json", "check", path});
  EXPECT_EQ(r.code, kExitCheckFailure);
  Json j = Json::parse(r.out);
  const Json& sq = j["sections"]["certificate"][0];
  EXPECT_EQ(sq["name"], "square_zero");
  EXPECT_EQ(sq["status"], "fail");
  EXPECT_EQ(sq["witness"], Json::parse(R"([["-1","0"],["0","-1"]])"));
}

TEST(Workbench, MalformedJsonIsInputError) {
  std::string path = temp_file("malformed.json", "{\"version\": 1,");
  CliRun r = run({"check", path});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("line"), std::string::npos) << r.err;
}

TEST(Workbench, UnknownOptionIsInputError) {
  EXPECT_EQ(run({"check"}).code, kExitInputError);
  EXPECT_EQ(run({"frobnicate", "b6"}).code, kExitInputError);
  EXPECT_EQ(run({"--format", "xml", "check", "b6"}).code, kExitInputError);
}

TEST(Workbench, AnalyzeSignatures) {
  CliRun b6 = run({"--format", "json", "analyze", "b6"});
  ASSERT_EQ(b6.code, kExitPass) << b6.out;
  Json j = Json::parse(b6.out);
  auto find = [](const Json& sec, const std::string& name) {
    for (const auto& e : sec)
      if (e["name"] == name) return e;
    return Json();
  };
  EXPECT_EQ(find(j["sections"]["orbit"], "signature")["detail"], "(3,3,0)");
  EXPECT_EQ(find(j["sections"]["butterfly"], "butterfly")["status"], "pass");

  Json h = Json::parse(run({"--format", "json", "analyze", "h3-isotropic"}).out);
  EXPECT_EQ(find(h["sections"]["orbit"], "signature")["detail"], "(0,0,3)");
  EXPECT_EQ(find(h["sections"]["butterfly"], "butterfly")["status"], "skip");

  Json t = Json::parse(run({"--format", "json", "analyze", "translations:3,1"}).out);
  EXPECT_NE(find(t["sections"]["butterfly"], "butterfly")["detail"].get<std::string>().find("abelian"),
            std::string::npos);
}

TEST(Workbench, PerturbedFormFailsInvariance) {
  std::string path = temp_file("perturbed.json", R"({"version": 1, "algebra": {"dim": 3,
      "brackets": [{"i": 1, "j": 2, "result": ["0", "0", "1"]}],
      "form": [["0","0","0"],["0","0","0"],["0","0","1"]]}})");
  CliRun r = run({"--format", "json", "analyze", path});
  EXPECT_EQ(r.code, kExitCheckFailure);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["sections"]["form"][0]["name"], "bi_invariance");
  EXPECT_EQ(j["sections"]["form"][0]["status"], "fail");
  EXPECT_TRUE(j["sections"]["form"][0].contains("witness"));
}

TEST(Workbench, DegenerateAbstractAlgebra) {
  std::string path = temp_file("h3abstract.json", R"({"version": 1, "algebra": {"dim": 3,
      "brackets": [{"i": 1, "j": 2, "result": ["0", "0", "1"]}],
      "form": [["0","0","0"],["0","0","0"],["0","0","0"]]}})");
  EXPECT_EQ(run({"analyze", path}).code, kExitPass);
  EXPECT_EQ(run({"check", path}).code, kExitInputError);
  EXPECT_EQ(run({"trivialize", path}).code, kExitInputError);
}

TEST(Workbench, NonDegenerateAbstractAlgebraIsRealized) {
  // same content as an abstract algebra
  MetricNilAlgebra b6 = canonical_b6();
  Instance inst;
  inst.algebra = b6;
  std::string apath = temp_file("b6alg.json", instance_to_json(inst).dump());
  EXPECT_EQ(run({"check", apath}).code, kExitPass);
  EXPECT_EQ(run({"trivialize", apath}).code, kExitPass);
}

TEST(Workbench, TrivializeWritesFile) {
  auto out = std::filesystem::temp_directory_path() / "wolfkit_test_triv.json";
  CliRun r = run({"trivialize", "translations:2,0,1", "-o", out.string()});
  ASSERT_EQ(r.code, kExitPass);
  std::ifstream f(out);
  Json j = Json::parse(f);
  EXPECT_EQ(j["pi"].size(), 1u);
  EXPECT_EQ(j["sigma"].size(), 2u);
  EXPECT_EQ(j["history"].size(), 1u);
}

TEST(Workbench, TrivializeB6HasPointBase) {
  CliRun r = run({"trivialize", "b6"});
  ASSERT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("base dimension 0"), std::string::npos);
}

TEST(Workbench, BetaCommand) {
  CliRun r = run({"beta", "translations:2,0,1", "--q", "3/2,0", "--p", "0,0"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out, "t = [[3/2]]\n");
  EXPECT_EQ(run({"beta", "translations:2,0,1", "--q", "0,1", "--p", "0,0"}).code, kExitCheckFailure);
  EXPECT_EQ(run({"beta", "translations:2,0,1", "--q", "0", "--p", "0,0"}).code, kExitInputError);
}

TEST(Workbench, CatalogEmitRoundTrip) {
  for (const char* name : {"b6", "h3-isotropic", "translations:4,2,2"}) {
    std::string emitted = run({"catalog", "emit", name}).out;
    std::string path = temp_file(std::string("emit_") + name + ".json", emitted);
    CliRun direct = run({"--format", "json", "analyze", name});
    CliRun reparsed = run({"--format", "json", "analyze", path});
    EXPECT_EQ(direct.code, reparsed.code);
    EXPECT_EQ(direct.out, reparsed.out) << name;
  }
}

TEST(Workbench, CocycleCatalogEntry) {
  std::string path = temp_file("omega.json", R"({"version": 1,
    "n": {"dim": 3, "brackets": []},
    "omega": [{"i": 1, "j": 2, "result": ["0","0","1"]},
              {"i": 1, "j": 3, "result": ["0","-1","0"]},
              {"i": 2, "j": 3, "result": ["1","0","0"]}]})");
  CliRun r = run({"check", "b-n-omega:" + path});
  EXPECT_EQ(r.code, kExitPass) << r.err;
}

TEST(Workbench, Deterministic) {
  CliRun a = run({"--format", "json", "--seed", "7", "analyze", "b6"});
  CliRun b = run({"--format", "json", "--seed", "7", "analyze", "b6"});
  EXPECT_EQ(a.out, b.out);
}
