#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gentle/cli.hpp"

using gentle::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    path = std::string("cli_test_") + std::to_string(counter++) + ".gq";
    std::ofstream f(path);
    f << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
  static int counter;
};
int TempFile::counter = 0;

const char* kFixture =
    "vertices: 0 1\n"
    "arrow a0: 0 -> 1\n"
    "arrow a1: 1 -> 0 deg 1\n"
    "rel a1 a0\n";  // the graded 2-cycle, Lambda(1,2,0,1)

} // namespace

TEST_CASE("normal-form builtins") {
  Run r = cli({"normal-form", "--lambda", "1", "2", "0", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "Gamma(1,1,0)\n");

  Run r2 = cli({"normal-form", "--lambda", "1", "2", "0", "0"});
  CHECK(r2.out == "Gamma(1,1,1)\n");

  Run r3 = cli({"normal-form", "--gamma-prime", "3", "1"});
  CHECK(r3.out == "GammaPrime(3,1)\n");

  Run r4 = cli({"normal-form", "--gamma", "2", "3", "-1"});
  CHECK(r4.out == "Gamma(3,2,1)\n");
}

TEST_CASE("normal-form from a file and JSON output") {
  TempFile f(kFixture);
  Run r = cli({"normal-form", f.path});
  CHECK(r.code == 0);
  CHECK(r.out == "Gamma(1,1,0)\n");

  Run rj = cli({"normal-form", f.path, "--json"});
  CHECK(rj.code == 0);
  auto j = nlohmann::json::parse(rj.out);
  CHECK(j["kind"] == "Gamma");
  CHECK(j["literal"] == "Gamma(1,1,0)");
}

TEST_CASE("normal-form requires exactly one source") {
  TempFile f(kFixture);
  Run r = cli({"normal-form", f.path, "--gamma", "1", "1", "0"});
  CHECK(r.code == 2);
  Run r2 = cli({"normal-form"});
  CHECK(r2.code == 2);
}

TEST_CASE("analyze text and JSON") {
  TempFile f(kFixture);
  Run r = cli({"analyze", f.path});
  CHECK(r.code == 0);
  CHECK(r.out.find("gentle: true") != std::string::npos);
  CHECK(r.out.find("signed_cycle_degree: 1") != std::string::npos);
  CHECK(r.out.find("finite_global_dimension: true") != std::string::npos);

  Run rj = cli({"analyze", f.path, "--json"});
  auto j = nlohmann::json::parse(rj.out);
  CHECK(j["gentle"]["is_gentle"] == true);
  CHECK(j["clock"]["cw_relations"] == 1);
  CHECK(j["signed_cycle_degree"] == 1);
}

TEST_CASE("analyze reports parse diagnostics with exit 2") {
  TempFile f("vertices: 1\narrow a: 1 -> 9\n");
  Run r = cli({"analyze", f.path});
  CHECK(r.code == 2);
  CHECK(r.err.find("UnknownVertex") != std::string::npos);
}

TEST_CASE("equiv decides the stated examples") {
  Run r = cli({"equiv", "Gamma(1,2,3)", "Gamma(2,1,-3)"});
  CHECK(r.code == 0);
  CHECK(r.out == "derived-equivalent: true\n");
  Run r2 = cli({"equiv", "Gamma(1,1,1)", "GammaPrime(2,1)"});
  CHECK(r2.out == "derived-equivalent: false\n");
  Run r3 = cli({"equiv", "GammaPrime(3,2)", "GammaPrime(3,2)"});
  CHECK(r3.out == "derived-equivalent: true\n");
  Run bad = cli({"equiv", "Gamma(1)", "Gamma(1,1,0)"});
  CHECK(bad.code == 2);
}

TEST_CASE("summary text output") {
  Run r = cli({"summary", "--gamma", "2", "1", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(3 total)") != std::string::npos);
  Run rj = cli({"summary", "--gamma-prime", "3", "2", "--json"});
  auto j = nlohmann::json::parse(rj.out);
  CHECK(j["total_components"] == 4);
  Run rl = cli({"summary", "--lambda", "1", "2", "0", "0"});
  CHECK(rl.out.find("(3 total)") != std::string::npos);
  Run degenerate = cli({"summary", "--lambda", "1", "2", "0", "1"});
  CHECK(degenerate.code == 1);
  CHECK(degenerate.err.find("DegenerateBoundary") != std::string::npos);
}

TEST_CASE("hom table") {
  Run r = cli({"hom", "--gamma", "1", "1", "1", "--x", "M(0;1,0)", "--y", "M(0;1,0)",
               "--shifts", "0..2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("n = 0: 1") != std::string::npos);
  Run rj = cli({"hom", "--gamma", "0", "2", "1", "--x", "M(0;2,0)", "--y", "M(0;2,0)",
                "--shifts", "0..0", "--json"});
  CHECK(rj.code == 0);
  auto j = nlohmann::json::parse(rj.out);
  CHECK(j[0]["dim"] == 1);
}

TEST_CASE("ar-window writes DOT and JSON files") {
  Run r = cli({"ar-window", "--gamma", "2", "1", "1", "--center", "M(0;4,1)",
               "--radius", "2", "--dot", "win.dot", "--json", "win.json"});
  CHECK(r.code == 0);
  std::ifstream dot("win.dot");
  REQUIRE(dot.good());
  std::stringstream buf;
  buf << dot.rdbuf();
  CHECK(buf.str().rfind("digraph", 0) == 0);
  std::ifstream js("win.json");
  REQUIRE(js.good());
  auto j = nlohmann::json::parse(js);
  CHECK(j["meta"]["params"]["p"] == 2);
  CHECK(j["nodes"].size() > 0);
  std::remove("win.dot");
  std::remove("win.json");

  Run missing = cli({"ar-window", "--gamma", "2", "1", "1", "--center", "M(0;4,1)"});
  CHECK(missing.code == 2);
}

TEST_CASE("verify runs and is deterministic per seed") {
  Run a = cli({"verify", "--gamma", "1", "1", "1", "--samples", "25", "--seed", "9"});
  Run b = cli({"verify", "--gamma", "1", "1", "1", "--samples", "25", "--seed", "9"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("tau^1 = Sigma^-1") != std::string::npos);
  Run c = cli({"verify", "--gamma", "1", "1", "1", "--samples", "25", "--seed", "10"});
  CHECK(c.code == 0);
  CHECK(a.out != c.out);  // different draws show in the report
}

TEST_CASE("check-conjecture on the fixture") {
  TempFile f(kFixture);
  Run r = cli({"check-conjecture", f.path});
  CHECK(r.code == 0);
  CHECK(r.out.find("agree") != std::string::npos);
  Run rj = cli({"check-conjecture", f.path, "--json"});
  auto j = nlohmann::json::parse(rj.out);
  CHECK(j["agree"] == true);
  CHECK(j["normal_form"] == "Gamma(1,1,0)");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(cli({"no-such-command"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"analyze"}).code == 2);
}
