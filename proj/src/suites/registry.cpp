#include <atomic>
#include <chrono>
#include <thread>

#include "finloc/suites.hpp"

namespace finloc::suites {

void SuiteContext::check(bool ok, const std::string& what, const io::Json& witness) {
  ++cases_;
  if (ok) return;
  ++failure_count_;
  if (failures_.size() < kMaxRecordedFailures) failures_.push_back(Failure{what, witness});
}

void SuiteContext::error(const std::string& what, const std::exception& e) {
  io::Json w{{"error", e.what()}};
  if (const auto* fe = dynamic_cast<const Error*>(&e)) w["kind"] = fe->kind();
  check(false, what, w);
}

void SuiteContext::merge(const SuiteContext& other) {
  cases_ += other.cases_;
  failure_count_ += other.failure_count_;
  for (const Failure& f : other.failures_)
    if (failures_.size() < kMaxRecordedFailures) failures_.push_back(f);
  if (corpus_.empty()) corpus_ = other.corpus_;
}

void parallel_cases(SuiteContext& ctx, std::size_t count, std::size_t jobs,
                    const std::function<void(std::size_t, SuiteContext&)>& body) {
  std::vector<SuiteContext> local(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i, local[i]);
      } catch (const std::exception& e) {
        local[i].error("case " + std::to_string(i) + " raised", e);
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(jobs, count));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const SuiteContext& c : local) ctx.merge(c);
}

const std::vector<Suite>& registry() {
  static const std::vector<Suite> all = [] {
    std::vector<Suite> out;
    register_frames(out);
    register_colimits(out);
    register_spatial(out);
    register_pstop(out);
    register_lifting(out);
    return out;
  }();
  return all;
}

const std::vector<std::string>& group_names() {
  static const std::vector<std::string> names{"frames", "colimits", "spatial", "pstop-lemmas", "lifting"};
  return names;
}

const Suite& find_suite(const std::string& citation) {
  for (const Suite& s : registry())
    if (s.citation == citation) return s;
  throw InputError("unknown suite '" + citation + "'");
}

SuiteReport run_suite(const Suite& s, const SuiteOptions& options) {
  SuiteContext ctx;
  const auto start = std::chrono::steady_clock::now();
  try {
    s.run(options, ctx);
  } catch (const std::exception& e) {
    ctx.error("suite raised", e);
  }
  const auto stop = std::chrono::steady_clock::now();
  SuiteReport r;
  r.citation = s.citation;
  r.group = s.group;
  r.corpus = ctx.corpus();
  r.cases = ctx.cases();
  r.failure_count = ctx.failure_count();
  r.failures = ctx.failures();
  r.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return r;
}

std::vector<SuiteReport> run_suites(const std::vector<const Suite*>& suites, const SuiteOptions& options) {
  std::vector<SuiteReport> out(suites.size());
  std::atomic<std::size_t> next{0};
  // Suites run side by side; each one gets the full job budget for its own cases.
  auto worker = [&] {
    for (std::size_t i = next++; i < suites.size(); i = next++) out[i] = run_suite(*suites[i], options);
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(options.jobs, suites.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return out;
}

std::vector<SuiteReport> run_group(const std::string& group, const SuiteOptions& options) {
  std::vector<const Suite*> chosen;
  for (const Suite& s : registry())
    if (group == "all" || s.group == group) chosen.push_back(&s);
  if (chosen.empty()) throw InputError("unknown suite group '" + group + "'");
  return run_suites(chosen, options);
}

io::Json report_json(const std::vector<SuiteReport>& reports, const SuiteOptions& options, bool timing) {
  io::Json suites = io::Json::array();
  std::size_t failures = 0, cases = 0;
  for (const SuiteReport& r : reports) {
    io::Json witnesses = io::Json::array();
    for (const Failure& f : r.failures) witnesses.push_back(io::Json{{"what", f.what}, {"witness", f.witness}});
    io::Json j{{"citation", r.citation},
               {"group", r.group},
               {"corpus", r.corpus},
               {"cases", r.cases},
               {"failures", r.failure_count},
               {"witnesses", witnesses}};
    if (timing) j["wall_ms"] = r.wall_ms;
    suites.push_back(std::move(j));
    failures += r.failure_count;
    cases += r.cases;
  }
  return io::Json{{"seed", options.seed},
                  {"options",
                   {{"max_points", options.max_points},
                    {"max_frame_size", options.max_frame_size},
                    {"steps", options.steps}}},
                  {"suites", suites},
                  {"cases", cases},
                  {"failures", failures}};
}

}  // namespace finloc::suites
