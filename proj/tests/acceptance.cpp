// Runs the acceptance criteria at their time targets and prints one PASS/FAIL
// line per criterion. Exit status is nonzero when any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "finloc/suites.hpp"

#ifndef FINLOC_CLI_PATH
#error "FINLOC_CLI_PATH must name the CLI binary"
#endif

namespace {

namespace s = finloc::suites;
using Clock = std::chrono::steady_clock;

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> suites;  // citations; a group name in `group` runs the whole group
  std::string group;
  double target_s;
};

struct Outcome {
  bool ok = false;
  double seconds = 0;
  std::string detail;
};

Outcome run_criterion(const Criterion& c, const s::SuiteOptions& o) {
  const auto t0 = Clock::now();
  std::vector<s::SuiteReport> reports;
  if (!c.group.empty()) {
    reports = s::run_group(c.group, o);
  } else {
    std::vector<const s::Suite*> list;
    for (const auto& name : c.suites) list.push_back(&s::find_suite(name));
    reports = s::run_suites(list, o);
  }
  Outcome out;
  out.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  std::size_t cases = 0, failures = 0;
  for (const auto& r : reports) {
    cases += r.cases;
    failures += r.failure_count;
    if (!r.passed()) out.detail += " " + r.citation + ":" + r.failures.front().what;
  }
  out.ok = failures == 0 && cases > 0 && out.seconds < c.target_s;
  out.detail = std::to_string(cases) + " cases, " + std::to_string(failures) + " failures" + out.detail;
  return out;
}

std::string capture(const std::string& cmd, int& status) {
  std::string text;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) {
    status = -1;
    return text;
  }
  std::array<char, 65536> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) text.append(buf.data(), n);
  status = pclose(p);
  return text;
}

Outcome determinism() {
  const auto t0 = Clock::now();
  const std::string cmd = std::string(FINLOC_CLI_PATH) + " check all --seed 7";
  int a = 0, b = 0;
  const std::string first = capture(cmd, a);
  const std::string second = capture(cmd + " --jobs 1", b);
  Outcome out;
  out.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  out.ok = a == 0 && b == 0 && !first.empty() && first == second;
  out.detail = std::to_string(first.size()) + " bytes, " + (first == second ? "identical" : "different");
  return out;
}

}  // namespace

int main() {
  s::SuiteOptions o;
  o.jobs = std::max(1u, std::thread::hardware_concurrency());

  const std::vector<Criterion> criteria{
      {1, "frame coproduct universal property", {"CoproductUniversal"}, "", 60},
      {2, "unit law 2 (x) L = L", {"CoproductUnit"}, "", 5},
      {3, "spatial products, |O(S) (x) O(S)| = 6", {"LocSpatialProducts"}, "", 60},
      {4, "distributivity over products", {"ProductDistributeLocale"}, "", 60},
      {5, "Galois laws and dualities", {"GaloisAdjoint"}, "", 30},
      {6, "nucleus generation from 1000 prenuclei", {"NucleusGeneration"}, "", 10},
      {7, "pushouts of locales", {"LocPushout"}, "", 120},
      {8, "Omega / pt", {"PtOmegaUnit", "SpatialFrames", "OmegaPtAdjunction"}, "", 60},
      {9, "pseudotopology lemmas", {}, "pstop-lemmas", 120},
      {10, "lifting adjunction, pushout-product symmetry", {"PushProdAndPullPowerLemma", "PushProdSymmetry"}, "", 120},
      {11, "bounded small object argument", {"CellComplexSOA"}, "", 60},
  };

  bool all = true;
  auto print = [&](int id, const std::string& title, const Outcome& r, double target) {
    all = all && r.ok;
    std::printf("%s [%2d] %s: %.2f s (target %.0f s), %s\n", r.ok ? "PASS" : "FAIL", id, title.c_str(), r.seconds, target,
                r.detail.c_str());
    std::fflush(stdout);
  };
  for (const auto& c : criteria) print(c.id, c.title, run_criterion(c, o), c.target_s);
  print(12, "determinism of check all --seed 7", determinism(), 600);
  return all ? 0 : 1;
}
