#pragma once

// Verification suites keyed by citation string. Each suite instantiates one
// lemma or law exhaustively (or on a seeded random sample) and records every
// counterexample with a serialized witness.

#include <cstdint>
#include <functional>
#include <mutex>
#include <string>
#include <vector>

#include "finloc/json_io.hpp"

namespace finloc::suites {

struct SuiteOptions {
  std::uint64_t seed = 7;
  std::size_t max_points = 3;      // pstop carriers
  std::size_t max_frame_size = 4;  // frame corpus; cocone targets go one larger
  std::size_t steps = 3;           // small object argument bound
  std::size_t jobs = 1;
};

struct Failure {
  std::string what;
  io::Json witness;
};

/// Case and failure accumulator handed to a suite body.
class SuiteContext {
 public:
  /// Counts one case; records a failure when !ok.
  void check(bool ok, const std::string& what, const io::Json& witness = io::Json::object());
  /// Counts one case that raised; the error text becomes the witness.
  void error(const std::string& what, const std::exception& e);
  void set_corpus(std::string description) { corpus_ = std::move(description); }

  std::size_t cases() const noexcept { return cases_; }
  std::size_t failure_count() const noexcept { return failure_count_; }
  const std::vector<Failure>& failures() const noexcept { return failures_; }
  const std::string& corpus() const noexcept { return corpus_; }

  /// Appends another context's cases and failures, in order.
  void merge(const SuiteContext& other);

  static constexpr std::size_t kMaxRecordedFailures = 16;

 private:
  std::size_t cases_ = 0;
  std::size_t failure_count_ = 0;
  std::vector<Failure> failures_;
  std::string corpus_;
};

/// Runs body(i, ctx_i) for i in [0, count) on up to `jobs` threads, then
/// merges the per-index contexts in index order so reports stay deterministic.
void parallel_cases(SuiteContext& ctx, std::size_t count, std::size_t jobs,
                    const std::function<void(std::size_t, SuiteContext&)>& body);

struct Suite {
  std::string citation;
  std::string group;
  std::function<void(const SuiteOptions&, SuiteContext&)> run;
};

struct SuiteReport {
  std::string citation;
  std::string group;
  std::string corpus;
  std::size_t cases = 0;
  std::size_t failure_count = 0;
  std::vector<Failure> failures;
  double wall_ms = 0;

  bool passed() const noexcept { return failure_count == 0; }
};

/// Every registered suite, grouped and in a fixed order.
const std::vector<Suite>& registry();

/// Group names accepted by `check`: frames, colimits, spatial, pstop-lemmas, lifting.
const std::vector<std::string>& group_names();

/// Throws InputError for unknown citations.
const Suite& find_suite(const std::string& citation);

SuiteReport run_suite(const Suite& s, const SuiteOptions& options);

/// Runs the suites of one group ("all" runs everything), suites in parallel
/// up to options.jobs; results come back in registry order.
std::vector<SuiteReport> run_group(const std::string& group, const SuiteOptions& options);

std::vector<SuiteReport> run_suites(const std::vector<const Suite*>& suites, const SuiteOptions& options);

/// Canonical report; wall times are included only when `timing` is set.
io::Json report_json(const std::vector<SuiteReport>& reports, const SuiteOptions& options, bool timing);

// Group registration, one per translation unit.
void register_frames(std::vector<Suite>& out);
void register_colimits(std::vector<Suite>& out);
void register_spatial(std::vector<Suite>& out);
void register_pstop(std::vector<Suite>& out);
void register_lifting(std::vector<Suite>& out);

}  // namespace finloc::suites
