// finloc: command-line front end. Every command prints one JSON document on
// stdout. Exit status: 0 success, 1 verification failure, 2 input error.

#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "finloc/colimits.hpp"
#include "finloc/json_io.hpp"
#include "finloc/lifting.hpp"
#include "finloc/poset.hpp"
#include "finloc/pstop.hpp"
#include "finloc/spatial.hpp"
#include "finloc/suites.hpp"

namespace {

using finloc::io::Json;
namespace io = finloc::io;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

struct Output {
  std::string json_out;

  int emit(const Json& j, int status = kOk) const {
    const std::string text = j.dump(2) + "\n";
    std::cout << text;
    if (!json_out.empty()) {
      std::ofstream f(json_out, std::ios::binary);
      if (!f) throw finloc::InputError("cannot write '" + json_out + "'");
      f << text;
    }
    return status;
  }
};

int diagnose(const std::string& kind, const std::string& message, int status) {
  std::cerr << Json{{"error", kind}, {"message", message}}.dump() << "\n";
  return status;
}

Json read(const std::string& path) { return io::read_json_file(path); }

finloc::PsSpace ps_or_space(const Json& j) {
  if (j.contains("lim")) return io::psspace_from_json(j);
  return finloc::as_pseudotopology(io::space_from_json(j));
}

Json error_json(const finloc::Error& e) {
  return Json{{"valid", false}, {"error", e.kind()}, {"message", e.what()}};
}

// A structure that fails its invariants is a verification failure (exit 1);
// a document that is not even well-formed is an input error (exit 2).
int validate(const Output& out, const std::string& kind, const std::string& path) {
  const Json j = read(path);
  try {
    Json canonical;
    if (kind == "poset") canonical = io::poset_to_json(io::poset_from_json(j));
    else if (kind == "space") canonical = io::space_to_json(io::space_from_json(j));
    else if (kind == "frame") canonical = io::frame_to_json(*io::frame_from_json(j));
    else if (kind == "hom") canonical = io::hom_to_json(io::hom_from_json(j));
    else if (kind == "map") canonical = io::map_to_json(io::map_from_json(j));
    else if (kind == "pspace") canonical = io::psspace_to_json(io::psspace_from_json(j));
    else if (kind == "square") canonical = io::square_to_json(io::square_from_json(j));
    else throw finloc::InputError("unknown structure kind '" + kind + "'");
    return out.emit(Json{{"valid", true}, {"kind", kind}, {"canonical", canonical}});
  } catch (const finloc::InputError&) {
    throw;
  } catch (const finloc::Error& e) {
    Json r = error_json(e);
    r["kind"] = kind;
    return out.emit(r, kFailed);
  }
}

Json downsets_json(const finloc::FinitePoset& p) {
  const finloc::DownsetFamily fam = finloc::downsets(p);
  Json sets = Json::array();
  for (finloc::Mask u : fam.downsets) {
    std::vector<std::string> labels;
    finloc::for_each_bit(u, [&](std::size_t i) { labels.push_back(p.label(i)); });
    std::sort(labels.begin(), labels.end());
    sets.push_back(labels);
  }
  const finloc::FrameRef frame = finloc::frame_from_poset(finloc::downset_order(fam));
  return Json{{"poset", io::poset_to_json(p)}, {"count", fam.downsets.size()}, {"downsets", sets},
              {"frame", io::frame_to_json(*frame)}};
}

int run_check(const Output& out, const std::string& group, const std::string& suite, const finloc::suites::SuiteOptions& o,
              bool timing) {
  namespace s = finloc::suites;
  std::vector<s::SuiteReport> reports;
  if (!suite.empty()) {
    const s::Suite& found = s::find_suite(suite);
    if (group != "all" && found.group != group)
      throw finloc::InputError("suite '" + suite + "' is not in group '" + group + "'");
    reports = s::run_suites({&found}, o);
  } else {
    reports = s::run_group(group, o);
  }
  bool passed = true;
  for (const auto& r : reports) passed = passed && r.passed();
  return out.emit(s::report_json(reports, o, timing), passed ? kOk : kFailed);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite frames, locales, pseudotopologies and lifting problems"};
  app.require_subcommand(1);
  Output out;
  app.add_option("--json-out", out.json_out, "Also write the JSON result to this file");

  finloc::suites::SuiteOptions options;
  options.jobs = std::max(1u, std::thread::hardware_concurrency());
  bool timing = false;
  std::string suite;

  std::string kind, path, left, right, f_path, g_path, gens_path;
  std::size_t steps = 3;

  auto* validate_cmd = app.add_subcommand("validate", "Check a structure and print its canonical form");
  validate_cmd->add_option("kind", kind, "poset | space | frame | hom | map | pspace | square")->required()
      ->check(CLI::IsMember({"poset", "space", "frame", "hom", "map", "pspace", "square"}));
  validate_cmd->add_option("file", path, "JSON file")->required();

  auto* downsets_cmd = app.add_subcommand("downsets", "Downset frame of a poset");
  downsets_cmd->add_option("--poset", path, "Poset JSON")->required();

  auto* omega_cmd = app.add_subcommand("omega", "Frame of opens of a finite space");
  omega_cmd->add_option("--space", path, "Space JSON")->required();

  auto* pt_cmd = app.add_subcommand("pt", "Space of points of a finite frame");
  pt_cmd->add_option("--frame", path, "Frame JSON")->required();

  auto* coproduct_cmd = app.add_subcommand("coproduct", "Frame coproduct L (x) M");
  coproduct_cmd->add_option("--left", left, "Frame JSON")->required();
  coproduct_cmd->add_option("--right", right, "Frame JSON")->required();

  auto* copair_cmd = app.add_subcommand("copair", "Mediating hom L (x) M -> N of a cocone");
  copair_cmd->add_option("--f", f_path, "Hom L -> N")->required();
  copair_cmd->add_option("--g", g_path, "Hom M -> N")->required();

  auto* pushout_cmd = app.add_subcommand("pushout-loc", "Pushout of locales given by frame homs B -> A <- C");
  pushout_cmd->add_option("--f", f_path, "Hom B -> A")->required();
  pushout_cmd->add_option("--g", g_path, "Hom C -> A")->required();

  auto* pstop_cmd = app.add_subcommand("pstop", "Finite pseudotopological spaces");
  pstop_cmd->require_subcommand(1);
  auto* tau_cmd = pstop_cmd->add_subcommand("tau", "Topological modification");
  tau_cmd->add_option("--space", path, "Pseudotopology JSON")->required();
  auto* meet_cmd = pstop_cmd->add_subcommand("meet", "Infimum of two pseudotopologies on one carrier");
  auto* join_cmd = pstop_cmd->add_subcommand("join", "Supremum of two pseudotopologies on one carrier");
  for (auto* c : {meet_cmd, join_cmd}) {
    c->add_option("--left", left, "Pseudotopology JSON")->required();
    c->add_option("--right", right, "Pseudotopology JSON")->required();
  }
  auto* pcheck_cmd = pstop_cmd->add_subcommand("check", "Properties of a pseudotopology, or continuity of a map");
  auto* pcheck_space = pcheck_cmd->add_option("--space", path, "Pseudotopology or space JSON");
  auto* pcheck_map = pcheck_cmd->add_option("--map", f_path, "{\"source\", \"target\", \"map\"} with pseudotopologies");
  pcheck_space->excludes(pcheck_map);

  auto* lift_cmd = app.add_subcommand("lift", "Lifting problems and the bounded small object argument");
  lift_cmd->require_subcommand(1);
  auto* lcheck_cmd = lift_cmd->add_subcommand("check", "Diagonals of a commuting square");
  lcheck_cmd->add_option("--square", path, "Square JSON")->required();
  auto* factorize_cmd = lift_cmd->add_subcommand("factorize", "Bounded cell-complex factorization");
  factorize_cmd->add_option("--map", f_path, "Map JSON")->required();
  factorize_cmd->add_option("--gens", gens_path, "Generating maps JSON")->required();
  factorize_cmd->add_option("--steps", steps, "Attachment step bound");

  auto* check_cmd = app.add_subcommand("check", "Run verification suites");
  std::string group = "all";
  check_cmd->add_option("group", group, "frames | colimits | spatial | pstop-lemmas | lifting | all")
      ->check(CLI::IsMember({"frames", "colimits", "spatial", "pstop-lemmas", "lifting", "all"}));
  check_cmd->add_option("--suite", suite, "Run a single suite by citation key");
  check_cmd->add_option("--max-points", options.max_points, "Largest carrier for pseudotopology corpora");
  check_cmd->add_option("--max-frame-size", options.max_frame_size, "Largest frame in frame corpora");
  check_cmd->add_option("--steps", options.steps, "Step bound for factorization suites");
  check_cmd->add_option("--seed", options.seed, "Seed for randomized suites");
  check_cmd->add_option("--jobs", options.jobs, "Worker threads")->check(CLI::PositiveNumber);
  check_cmd->add_flag("--timing", timing, "Include wall times in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return diagnose("UsageError", e.what(), kInputError);
  }

  try {
    if (*validate_cmd) return validate(out, kind, path);
    if (*downsets_cmd) return out.emit(downsets_json(io::poset_from_json(read(path))));
    if (*omega_cmd) {
      const finloc::OmegaFrame o = finloc::omega(io::space_from_json(read(path)));
      return out.emit(Json{{"space", io::space_to_json(o.space)}, {"frame", io::frame_to_json(*o.frame)}});
    }
    if (*pt_cmd) {
      const finloc::PointSpace p = finloc::pt(io::frame_from_json(read(path)));
      return out.emit(Json{{"space", io::space_to_json(p.space)}, {"points", p.points.size()}});
    }
    if (*coproduct_cmd) {
      const finloc::TensorFrame t = finloc::coproduct(io::frame_from_json(read(left)), io::frame_from_json(read(right)));
      return out.emit(io::tensor_to_json(t));
    }
    if (*copair_cmd) {
      const finloc::FrameHom f = io::hom_from_json(read(f_path));
      const finloc::FrameHom g = io::hom_from_json(read(g_path));
      const finloc::TensorFrame t = finloc::coproduct(f.source(), g.source());
      const finloc::FrameHom h = finloc::copair(t, f, g);
      return out.emit(Json{{"tensor", io::tensor_to_json(t)}, {"copair", io::hom_to_json(h)},
                           {"mediators", finloc::count_mediating_homs(t, f, g)}});
    }
    if (*pushout_cmd) {
      return out.emit(io::pushout_to_json(finloc::pushout_loc(io::hom_from_json(read(f_path)), io::hom_from_json(read(g_path)))));
    }
    if (*tau_cmd) return out.emit(io::space_to_json(finloc::top_modification(ps_or_space(read(path)))));
    if (*meet_cmd || *join_cmd) {
      const finloc::PsSpace a = ps_or_space(read(left));
      const finloc::PsSpace b = ps_or_space(read(right));
      return out.emit(io::psspace_to_json(*meet_cmd ? finloc::ps_meet(a, b) : finloc::ps_join(a, b)));
    }
    if (*pcheck_cmd) {
      if (!f_path.empty()) {
        const Json j = read(f_path);
        const finloc::PsSpace xi = ps_or_space(j.at("source"));
        const finloc::PsSpace zeta = ps_or_space(j.at("target"));
        finloc::PointMap f(xi.size());
        for (std::size_t x = 0; x < xi.size(); ++x) f[x] = zeta.index_of(j.at("map").at(xi.label(x)).get<std::string>());
        const finloc::ContinuityVerdict v = finloc::check_continuity(f, xi, zeta);
        Json r{{"continuous", v.continuous}, {"ultrafilter_continuous", finloc::continuous_on_ultrafilters(f, xi, zeta)}};
        if (v.witness) {
          std::vector<std::string> base;
          finloc::for_each_bit(v.witness->base, [&](std::size_t i) { base.push_back(xi.label(i)); });
          std::sort(base.begin(), base.end());
          r["witness_filter_base"] = base;
        }
        return out.emit(r);
      }
      if (path.empty()) throw finloc::InputError("pstop check needs --space or --map");
      const finloc::PsSpace xi = ps_or_space(read(path));
      return out.emit(Json{{"space", io::psspace_to_json(xi)},
                           {"topological", finloc::is_topological(xi)},
                           {"hausdorff", finloc::ps_hausdorff(xi)},
                           {"compact", finloc::compact_at(xi, xi.universe(), xi.universe())},
                           {"tau", io::space_to_json(finloc::top_modification(xi))}});
    }
    if (*lcheck_cmd) {
      const finloc::LiftingSquare sq = io::square_from_json(read(path));
      Json lifts = Json::array();
      for (const finloc::PointMap& h : finloc::enumerate_lifts(sq))
        lifts.push_back(io::point_map_to_json(sq.left.target(), sq.right.source(), h));
      return out.emit(Json{{"square", io::square_to_json(sq)}, {"count", lifts.size()}, {"has_lift", !lifts.empty()},
                           {"diagonals", lifts}});
    }
    if (*factorize_cmd) {
      const finloc::Arrow f = io::map_from_json(read(f_path));
      const std::vector<finloc::Arrow> gens = io::generators_from_json(read(gens_path));
      return out.emit(io::trace_to_json(finloc::bounded_factorize(f, gens, steps), gens));
    }
    if (*check_cmd) return run_check(out, group, suite, options, timing);
  } catch (const finloc::InputError& e) {
    return diagnose(e.kind(), e.what(), kInputError);
  } catch (const finloc::Error& e) {
    return diagnose(e.kind(), e.what(), kInputError);
  } catch (const nlohmann::json::exception& e) {
    return diagnose("InputError", e.what(), kInputError);
  }
  return kInputError;
}
