#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "classaut_cli/commands.hpp"
#include "classaut_cli/report.hpp"

using namespace classaut;
using namespace classaut::cli;
using nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(int (*cmd)(const Options&, std::ostream&, std::ostream&), const Options& opts) {
  std::ostringstream out, err;
  const int status = cmd(opts, out, err);
  return {status, out.str(), err.str()};
}

Options builtin(std::string names) {
  Options o;
  o.builtins = {std::move(names)};
  return o;
}

}  // namespace

TEST(CliHomcount, Examples) {
  Options o;
  o.domain = "2,2,2";
  o.codomain = "2";
  auto r = run(run_homcount, o);
  EXPECT_EQ(r.status, kExitPass);
  EXPECT_EQ(json::parse(r.out)["count"], 8);

  o.domain = "4,2";
  o.codomain = "8,2";
  EXPECT_EQ(json::parse(run(run_homcount, o).out)["count"], 32);

  o.domain = "";
  o.codomain = "8";
  EXPECT_EQ(json::parse(run(run_homcount, o).out)["count"], 1);

  o.domain = "6";
  r = run(run_homcount, o);
  EXPECT_EQ(r.status, kExitInputError);
  EXPECT_NE(r.err.find("BAD_INVARIANTS"), std::string::npos);
  o.domain = "two";
  EXPECT_EQ(run(run_homcount, o).status, kExitInputError);
}

TEST(CliAnalyze, G44Report) {
  Options o = builtin("paper32");
  o.group = "G44";
  const auto r = run(run_analyze, o);
  ASSERT_EQ(r.status, kExitPass) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["autc_order"], 32);
  EXPECT_EQ(j["autz_order"], 8);
  EXPECT_EQ(j["inn_order"], 16);
  EXPECT_EQ(j["nilpotency_class"], 3);
  EXPECT_EQ(j["flags"]["autc_eq_inn"], false);
  EXPECT_FALSE(j.contains("duration_ms"));
  for (const char* key : {"name", "order", "center_invariants", "derived_invariants", "central_quotient_invariants",
                          "abelianization_invariants", "nilpotency_class", "frattini_order", "rank", "class_sizes",
                          "inn_order", "autz_order", "autzz_order", "autc_order", "flags", "verdicts"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(CliAnalyze, CaminaOrder64AndAbelianShortForm) {
  Options o = builtin("paper64");
  o.group = "G183_13";
  json j = json::parse(run(run_analyze, o).out);
  EXPECT_EQ(j["flags"]["camina_class2"], true);
  EXPECT_EQ(j["flags"]["autc_eq_autz"], true);

  o = builtin("controls");
  o.group = "C8";
  const auto r = run(run_analyze, o);
  EXPECT_EQ(r.status, kExitPass);
  j = json::parse(r.out);
  EXPECT_EQ(j["abelian"], true);
  EXPECT_EQ(j["autc_order"], 1);
  EXPECT_FALSE(j.contains("flags"));
}

TEST(CliAnalyze, Errors) {
  Options o = builtin("paper32");
  o.group = "G99";
  EXPECT_EQ(run(run_analyze, o).status, kExitInputError);
  o.group = "G45";
  const auto r = run(run_analyze, o);
  EXPECT_EQ(r.status, kExitInputError);
  EXPECT_NE(r.err.find("missing-source"), std::string::npos);
  o = builtin("paper64");
  o.group = "G144_9";
  o.max_order = 32;
  EXPECT_NE(run(run_analyze, o).err.find("TOO_LARGE"), std::string::npos);
  o = builtin("nonsense");
  o.group = "G44";
  EXPECT_EQ(run(run_analyze, o).status, kExitInputError);
}

TEST(CliVerify, AdneyYenAcrossAllBuiltins) {
  Options o = builtin("all");
  o.check = "adney-yen";
  const auto r = run(run_verify, o);
  EXPECT_EQ(r.status, kExitPass);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["violations"], 0);
  EXPECT_EQ(j["catalogs"].size(), 3u);
}

TEST(CliVerify, Order32CheckAndMissingSource) {
  Options o = builtin("paper32");
  o.check = "thm4.2";
  const auto r = run(run_verify, o);
  EXPECT_EQ(r.status, kExitPass);
  const json j = json::parse(r.out);
  std::vector<std::string> unequal;
  for (const auto& g : j["groups"]) {
    if (g["verdicts"][0]["lhs"] == false) unequal.push_back(g["name"]);
  }
  EXPECT_EQ(unequal, std::vector<std::string>{"G44"});
  ASSERT_EQ(j["missing"].size(), 1u);
  EXPECT_EQ(j["missing"][0]["name"], "G45");
  EXPECT_EQ(j["missing"][0]["status"], "missing-source");
}

TEST(CliVerify, NonClassTwoEntryIsNotApplicableForMorigi) {
  // A class-3 group smuggled in under a class-2 name.
  const auto path = std::filesystem::temp_directory_path() / "classaut_corrupt.cat";
  std::ofstream(path) << "[group]\nname = G43\norder = 16\ngenerators = x, y\nrelators = x^8, y^2, (xy)^2\n";
  Options o;
  o.catalog_paths = {path.string()};
  o.check = "morigi";
  const auto r = run(run_verify, o);
  EXPECT_EQ(r.status, kExitPass);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["groups"][0]["verdicts"][0]["applicable"], false);
  std::filesystem::remove(path);
}

TEST(CliVerify, JobsDoNotChangeOutput) {
  Options o = builtin("all");
  o.jobs = 1;
  const auto serial = run(run_verify, o);
  o.jobs = 4;
  const auto parallel = run(run_verify, o);
  EXPECT_EQ(serial.status, kExitPass);
  EXPECT_EQ(serial.out, parallel.out);
  Options b = builtin("paper32,paper64");
  b.jobs = 3;
  const auto batch3 = run(run_batch, b);
  b.jobs = 1;
  EXPECT_EQ(run(run_batch, b).out, batch3.out);
}

TEST(CliVerify, FormatsDeriveFromTheSameResults) {
  Options o = builtin("controls");
  o.check = "thm3.2";
  o.format = Format::kCsv;
  const auto csv = run(run_verify, o);
  EXPECT_EQ(csv.out.rfind("catalog,group,check", 0), 0u);
  EXPECT_NE(csv.out.find("controls,D8,thm3.2,true,true,true,true"), std::string::npos);
  o.format = Format::kMarkdown;
  const auto md = run(run_verify, o);
  EXPECT_NE(md.out.find("| controls | D8 | thm3.2 | true | true | true | true |"), std::string::npos);
  o.check = "thm7.7";
  EXPECT_EQ(run(run_verify, o).status, kExitInputError);
}

TEST(CliBatch, ReportsAreConsistent) {
  const auto r = run(run_batch, builtin("all"));
  ASSERT_EQ(r.status, kExitPass) << r.err;
  const json j = json::parse(r.out);
  for (const auto& rep : j["reports"]) {
    if (rep["abelian"] == true) continue;
    const auto inn = rep["inn_order"].get<std::size_t>();
    const auto autc = rep["autc_order"].get<std::size_t>();
    const auto autz = rep["autz_order"].get<std::size_t>();
    EXPECT_EQ(autc % inn, 0u) << rep["name"];
    if (rep["flags"]["autz_eq_inn"].get<bool>()) EXPECT_EQ(autz, inn) << rep["name"];
    for (const auto& v : rep["verdicts"]) {
      if (v["check"] == "thm3.1" && v["applicable"] == true) {
        EXPECT_EQ(v["lhs"], rep["flags"]["autc_eq_autz"]) << rep["name"];
      }
    }
  }
  Options md = builtin("paper32");
  md.format = Format::kMarkdown;
  EXPECT_NE(run(run_batch, md).out.find("| G44 | 32 |"), std::string::npos);
  md.format = Format::kCsv;
  EXPECT_NE(run(run_batch, md).out.find("\nG44,paper32,32,false,C2,C4,"), std::string::npos);
}

TEST(CliChecks, Parsing) {
  EXPECT_EQ(parse_checks("all").size(), 11u);
  const auto two = parse_checks("thm4.2,morigi");
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].name(), "thm4.2");
  EXPECT_EQ(two[1].name(), "morigi");
}
