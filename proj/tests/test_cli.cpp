#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#ifndef FINLOC_CLI_PATH
#error "FINLOC_CLI_PATH must name the CLI binary"
#endif

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(FINLOC_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

fs::path dir() {
  static const fs::path d = [] {
    fs::path p = fs::temp_directory_path() / ("finloc_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return d;
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path p = dir() / name;
  std::ofstream(p) << text;
  return p.string();
}

const char* kTwo = R"({"elements": ["0","1"], "leq": [["0","1"]]})";
const char* kChain3 = R"({"elements": ["0","m","1"], "leq": [["0","m"],["m","1"]]})";

}  // namespace

TEST_CASE("coproduct with 2 is the unit") {
  const std::string two = write("two.json", kTwo);
  const Run r = run("coproduct --left " + two + " --right " + two);
  CHECK(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("frame").at("elements").size() == 2);
}

TEST_CASE("pt of the three-element chain is the Sierpinski space") {
  const Run r = run("pt --frame " + write("chain3.json", kChain3));
  CHECK(r.status == 0);
  const Json s = Json::parse(r.out).at("space");
  CHECK(s.at("points").size() == 2);
  CHECK(s.at("opens").size() == 3);
}

TEST_CASE("validate exit codes") {
  CHECK(run("validate poset " + write("chain.json", kTwo)).status == 0);
  const Run bad = run("validate poset " + write("cycle.json", R"({"elements": ["a","b"], "leq": [["a","b"],["b","a"]]})"));
  CHECK(bad.status == 1);
  CHECK(Json::parse(bad.out).at("error") == "CycleError");
  CHECK(run("validate poset " + write("broken.json", "{not json")).status == 2);
  CHECK(run("validate poset " + (dir() / "missing.json").string()).status == 2);
  CHECK(run("no-such-command").status == 2);
}

TEST_CASE("pstop commands") {
  const std::string xi = write("xi.json", R"({"points": ["1","2"], "lim": {"1": ["1"], "2": ["1","2"]}})");
  const Run tau = run("pstop tau --space " + xi);
  CHECK(tau.status == 0);
  CHECK(Json::parse(tau.out).at("opens").size() == 3);
  const Run chk = run("pstop check --space " + xi);
  CHECK(Json::parse(chk.out).at("topological") == true);
  const Run meet = run("pstop meet --left " + xi + " --right " + xi);
  CHECK(Json::parse(meet.out) == Json::parse(R"({"points": ["1","2"], "lim": {"1": ["1"], "2": ["1","2"]}})"));
}

TEST_CASE("lift commands") {
  const std::string e2d = write("e2d.json", R"({"source": {"points": [], "opens": [[]]},
    "target": {"points": ["0","1"], "opens": [[],["0"],["1"],["0","1"]]}, "map": {}})");
  const std::string gens = write("gens.json", R"({"generators": [{"source": {"points": [], "opens": [[]]},
    "target": {"points": ["*"], "opens": [[],["*"]]}, "map": {}}]})");
  const Run f = run("lift factorize --map " + e2d + " --gens " + gens + " --steps 1");
  CHECK(f.status == 0);
  const Json t = Json::parse(f.out);
  CHECK(t.at("verdict") == "COMPLETE");
  CHECK(t.at("stages").size() == 1);
}

TEST_CASE("check group report") {
  const Run r = run("check pstop-lemmas --max-points 3");
  CHECK(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("failures") == 0);
  CHECK(j.at("suites").size() == 10);
  CHECK_FALSE(j.at("suites")[0].contains("wall_ms"));
  CHECK(run("check lifting --suite SubspaceLemma").status == 2);
}
