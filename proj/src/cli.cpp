#include "gitstab/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "gitstab/connectivity.hpp"
#include "gitstab/errors.hpp"
#include "gitstab/harness.hpp"
#include "gitstab/serialize.hpp"

namespace gitstab::cli {

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("GIT_TOPO_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw ValidationError("GIT_TOPO_SEED must be an unsigned integer");
  }
  return 0;
}

/// Family parameters shared by analyze, homotopy and verify.
struct FamilyOptions {
  std::string arrows;
  std::string dim;
  std::string theta;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t samples = 0;
  std::size_t parents = 0;
};

struct Options {
  FamilyOptions family;
  std::string convention;
  std::string json_path;
  std::optional<std::size_t> max_q;
  bool assume_free_action = false;

  // check
  std::string input;
  bool mle = false;
  bool stabilize = false;
  std::string epsilon = "1/1000";

  // verify
  std::uint64_t trials = 1000;
  std::int64_t bound = 9;
  std::optional<std::uint64_t> seed;
  std::uint64_t paths = 0;
  std::uint64_t path_samples = 256;
  unsigned workers = 1;
  std::int64_t grid = 2;
  bool expect_degenerate = false;
  bool degenerates = false;
};

void add_quiver_options(CLI::App* app, FamilyOptions& f) {
  app->add_option("--arrows", f.arrows, "comma-separated arrows s->t, 1-indexed")->required();
  app->add_option("--dim", f.dim, "dimension vector, comma-separated")->required();
  app->add_option("--theta", f.theta, "stability parameter, comma-separated (use --theta=-1,1 for a leading minus)")
      ->required();
}

void add_control_options(CLI::App* app, FamilyOptions& f) {
  app->add_option("--n", f.n, "state dimension")->required();
  app->add_option("--m", f.m, "input dimension")->required();
}

void add_dag_options(CLI::App* app, FamilyOptions& f) {
  app->add_option("--samples", f.samples, "number of observations n")->required();
  app->add_option("--parents", f.parents, "number of parent vertices k")->required();
}

FamilySpec build_family(const std::string& name, const FamilyOptions& f) {
  if (name == "quiver") {
    const auto dims = parse_int_list(f.dim);
    std::vector<std::size_t> dim;
    for (auto d : dims) {
      if (d < 0) throw ValidationError("dimension vector entries must be non-negative");
      dim.push_back(static_cast<std::size_t>(d));
    }
    return QuiverSpec(dim.size(), parse_arrows(f.arrows), dim, parse_int_list(f.theta));
  }
  if (name == "kronecker") return QuiverSpec(2, {{0, 1}, {0, 1}}, {1, 1}, {1, -1});
  if (name == "control") {
    if (f.n == 0 || f.m == 0) throw ValidationError("control family needs --n >= 1 and --m >= 1");
    return ControlSpec{f.n, f.m};
  }
  if (f.samples == 0 || f.parents == 0) throw ValidationError("DAG family needs --samples >= 1 and --parents >= 1");
  return DagSpec{f.samples, f.parents};
}

OrbitConvention resolve_convention(const std::string& flag, const FamilySpec& f) {
  return flag.empty() ? default_convention(family_of(f)) : parse_orbit_convention(flag);
}

void write_json(const std::string& path, const Json& j) {
  if (path.empty()) return;
  std::ofstream os(path);
  if (!os) throw ValidationError("cannot open '" + path + "' for writing");
  os << canonical_dump(j) << "\n";
}

void require_free_action(const Options& o) {
  if (!o.assume_free_action) {
    throw ValidationError(
        "the quotient homotopy table is only valid when G acts freely on the stable locus; this cannot be checked "
        "here. Pass --assume-free-action to attest it");
  }
}

int run_analyze(const std::string& family_name, const Options& o, std::ostream& out) {
  const FamilySpec family = build_family(family_name, o.family);
  const OrbitConvention conv = resolve_convention(o.convention, family);
  if (o.max_q) require_free_action(o);
  const auto report = analyze(family, conv, o.max_q);
  out << render_text(report);
  write_json(o.json_path, report_to_json(report));
  return kOk;
}

int run_homotopy(const std::string& family_name, const Options& o, std::ostream& out) {
  require_free_action(o);
  const FamilySpec family = build_family(family_name, o.family);
  const OrbitConvention conv = resolve_convention(o.convention, family);
  const auto report = analyze(family, conv, o.max_q.value_or(0));
  out << "quotient homotopy (" << to_string(conv) << " convention, d_min = "
      << (report.d_min ? std::to_string(*report.d_min) : std::string("none")) << "):\n";
  Json table = Json::array();
  for (const auto& e : report.homotopy) {
    out << "  q=" << e.q << ": " << e.group.pretty() << "\n";
    table.push_back({{"q", e.q}, {"group", e.group.str()}});
  }
  for (const auto& n : report.notes) out << "note: " << n << "\n";
  Json j = {{"family", family_to_json(family)},
            {"convention", to_string(conv)},
            {"d_min", report.d_min ? Json(*report.d_min) : Json(nullptr)},
            {"homotopy", table},
            {"notes", report.notes}};
  write_json(o.json_path, j);
  return kOk;
}

int run_check(const Options& o, std::ostream& out) {
  std::ifstream is(o.input);
  if (!is) throw ValidationError("cannot read instance file '" + o.input + "'");
  Json doc;
  try {
    doc = Json::parse(is);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("instance file is not valid JSON: ") + e.what());
  }
  const ModelInstance x = instance_from_json(doc);
  const StabilityStatus st = status(x);
  Json j = status_to_json(st);
  out << "verdict: " << to_string(st.verdict) << "\n" << "reason: " << st.reason << "\n";
  if (st.invariant_subspace_dim) out << "invariant subspace dimension r = " << *st.invariant_subspace_dim << "\n";
  if (st.parent_rank) out << "parent block rank = " << *st.parent_rank << "\n";
  if (st.destabilizing_support) {
    out << "destabilizing support:";
    for (auto v : *st.destabilizing_support) out << " " << v + 1;
    out << "\n";
  }
  const auto* dag = std::get_if<DagInstance>(&x);
  if ((o.mle || o.stabilize) && dag == nullptr) throw ValidationError("--mle and --stabilize apply to DAG samples only");
  if (o.mle) {
    if (!st.is_stable()) throw PreconditionError("--mle needs a stable sample: the normal equations are singular");
    const auto beta = dag_solve_mle(*dag);
    Json b = Json::array();
    out << "beta:";
    for (const auto& v : beta) {
      out << " " << v;
      b.push_back(v.str());
    }
    out << "\n";
    j["mle"] = b;
  }
  if (o.stabilize) {
    const Rational eps = Rational::parse(o.epsilon);
    const DagInstance repaired = dag_stabilize(*dag, eps);
    const StabilityStatus after = dag_status(repaired);
    out << "stabilized (epsilon = " << eps << "): " << to_string(after.verdict) << "\n";
    j["stabilized"] = instance_to_json(repaired);
    j["stabilized_status"] = status_to_json(after);
    j["epsilon"] = eps.str();
  }
  write_json(o.json_path, j);
  return kOk;
}

void print_counters(std::ostream& out, const std::string& label, const HarnessReport& r) {
  out << label << ": trials_run=" << r.trials_run << " unstable_hits=" << r.unstable_hits
      << " paths_run=" << r.paths_run << " path_failures=" << r.path_failures
      << " oracle_mismatches=" << r.oracle_mismatches;
  if (r.stabilized_stable != 0) out << " stabilized_stable=" << r.stabilized_stable;
  if (r.paths_skipped) out << " (paths skipped)";
  out << " elapsed_ms=" << r.elapsed.count() << "\n";
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
}

int run_verify(const std::string& family_name, const Options& o, std::ostream& out) {
  TrialConfig cfg;
  cfg.family = build_family(family_name, o.family);
  cfg.convention = resolve_convention(o.convention, cfg.family);
  cfg.trials = o.trials;
  cfg.entry_bound = o.bound;
  cfg.seed = o.seed ? *o.seed : default_seed();
  cfg.paths = o.paths;
  cfg.path_samples = o.path_samples;
  cfg.workers = std::max(1U, o.workers);
  if (cfg.entry_bound <= 0) throw ValidationError("--bound must be positive");
  if (cfg.path_samples == 0) throw ValidationError("--path-samples must be positive");

  Json j = {{"config", trial_config_to_json(cfg)}};
  bool failed = false;

  if (family_name == "kronecker") {
    const auto grid = kronecker_oracle_check(o.grid);
    print_counters(out, "kronecker grid (radius " + std::to_string(o.grid) + ")", grid);
    j["kronecker_grid"] = harness_report_to_json(grid);
    j["grid_radius"] = o.grid;
    failed = failed || grid.oracle_mismatches != 0;
  }
  if (cfg.trials > 0) {
    const auto generic = sample_generic_points(cfg);
    print_counters(out, "generic sampling", generic);
    j["generic"] = harness_report_to_json(generic);
    if (!o.expect_degenerate) failed = failed || generic.unstable_hits != 0;
  }
  if (cfg.paths > 0) {
    const auto paths = sample_path_stability(cfg);
    print_counters(out, "path sampling", paths);
    j["paths"] = harness_report_to_json(paths);
    failed = failed || paths.path_failures != 0;
  }
  if (o.degenerates) {
    const auto deg = detect_constructed_degenerates(cfg);
    print_counters(out, "constructed degenerates", deg);
    j["degenerates"] = harness_report_to_json(deg);
    failed = failed || deg.oracle_mismatches != 0;
  }
  j["expect_degenerate"] = o.expect_degenerate;
  j["passed"] = !failed;
  out << (failed ? "FAILED" : "passed") << "\n";
  write_json(o.json_path, j);
  return failed ? kHarnessFailure : kOk;
}

void report_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << canonical_dump(Json{{"error", {{"kind", kind}, {"message", message}}}}) << "\n";
}

}  // namespace

std::vector<Arrow> parse_arrows(const std::string& text) {
  std::vector<Arrow> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto sep = item.find("->");
    if (sep == std::string::npos) throw ValidationError("arrow '" + item + "' must look like s->t");
    const auto s = parse_int_list(item.substr(0, sep));
    const auto t = parse_int_list(item.substr(sep + 2));
    if (s.size() != 1 || t.size() != 1 || s[0] < 1 || t[0] < 1) {
      throw ValidationError("arrow '" + item + "' must use positive 1-indexed vertices");
    }
    out.push_back({static_cast<std::size_t>(s[0] - 1), static_cast<std::size_t>(t[0] - 1)});
  }
  return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw ValidationError("'" + item + "' is not an integer");
    out.push_back(v);
  }
  if (out.empty()) throw ValidationError("expected a comma-separated integer list");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stability, destabilizing strata and stable-locus connectivity for three GIT model families",
               "gitstab"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--orbit-convention", o.convention, "centralizer or parabolic (default depends on family)")
        ->check(CLI::IsMember({"centralizer", "parabolic"}));
    sub->add_option("--json", o.json_path, "write canonical JSON to this path");
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "enumerate strata and compute d_min and connectivity");
  analyze_cmd->require_subcommand(1);
  auto* homotopy_cmd = app.add_subcommand("homotopy", "quotient homotopy table");
  homotopy_cmd->require_subcommand(1);
  auto* verify_cmd = app.add_subcommand("verify", "seeded randomized verification harness");
  verify_cmd->require_subcommand(1);
  auto* check_cmd = app.add_subcommand("check", "stability verdict for an instance file");
  check_cmd->add_option("file", o.input, "instance JSON file")->required();
  check_cmd->add_flag("--mle", o.mle, "solve the normal equations (DAG, stable samples)");
  check_cmd->add_flag("--stabilize", o.stabilize, "emit an epsilon-stabilized sample (DAG)");
  check_cmd->add_option("--epsilon", o.epsilon, "stabilization parameter p/q");
  check_cmd->add_option("--json", o.json_path, "write canonical JSON to this path");

  std::vector<std::pair<CLI::App*, std::string>> family_cmds;
  for (auto* parent : {analyze_cmd, homotopy_cmd, verify_cmd}) {
    std::vector<std::string> names = {"quiver", "control", "dag"};
    if (parent == verify_cmd) names.emplace_back("kronecker");
    for (const auto& name : names) {
      auto* sub = parent->add_subcommand(name, name + " family");
      if (name == "quiver") add_quiver_options(sub, o.family);
      if (name == "control") add_control_options(sub, o.family);
      if (name == "dag") add_dag_options(sub, o.family);
      add_common(sub);
      if (parent == analyze_cmd) {
        sub->add_option("--max-q", o.max_q, "also tabulate quotient homotopy up to this degree");
        sub->add_flag("--assume-free-action", o.assume_free_action, "attest that G acts freely on the stable locus");
      }
      if (parent == homotopy_cmd) {
        sub->add_option("--max-q", o.max_q, "largest degree to tabulate")->required();
        sub->add_flag("--assume-free-action", o.assume_free_action, "attest that G acts freely on the stable locus");
      }
      if (parent == verify_cmd) {
        sub->add_option("--trials", o.trials, "generic-point trials");
        sub->add_option("--bound", o.bound, "integer entries are drawn from [-bound, bound]");
        sub->add_option("--seed", o.seed, "seed (default: GIT_TOPO_SEED or 0)");
        sub->add_option("--paths", o.paths, "number of quadratic paths");
        sub->add_option("--path-samples", o.path_samples, "parameters sampled per path");
        sub->add_option("--workers", o.workers, "worker threads");
        sub->add_flag("--expect-degenerate", o.expect_degenerate, "non-stable generic draws do not fail the run");
        if (name == "dag") sub->add_flag("--degenerates", o.degenerates, "run the constructed rank-deficient suite");
        if (name == "kronecker") sub->add_option("--grid", o.grid, "exhaustive grid radius");
      }
      family_cmds.emplace_back(sub, name);
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "usage", e.what());
    return kInvalidInput;
  }

  try {
    if (check_cmd->parsed()) return run_check(o, out);
    for (const auto& [sub, name] : family_cmds) {
      if (!sub->parsed()) continue;
      if (sub->get_parent() == analyze_cmd) return run_analyze(name, o, out);
      if (sub->get_parent() == homotopy_cmd) return run_homotopy(name, o, out);
      return run_verify(name, o, out);
    }
    report_error(err, "usage", "no subcommand given");
    return kInvalidInput;
  } catch (const Error& e) {
    report_error(err, e.kind(), e.what());
    return kInvalidInput;
  } catch (const std::exception& e) {
    report_error(err, "internal", e.what());
    return kInternalError;
  }
}

}  // namespace gitstab::cli
