#include "gitstab/serialize.hpp"

#include "gitstab/errors.hpp"

namespace gitstab {

namespace {

const Json& require(const Json& j, const std::string& key, const std::string& context) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(context + ": missing field '" + key + "'");
  return j.at(key);
}

template <class T>
T get_as(const Json& j, const std::string& field) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError("field '" + field + "' has the wrong type");
  }
}

std::size_t get_count(const Json& j, const std::string& field) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    throw ParseError("field '" + field + "' must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

std::vector<std::size_t> get_counts(const Json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError("field '" + field + "' must be an array");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_count(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<Weight> get_weights(const Json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError("field '" + field + "' must be an array");
  std::vector<Weight> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) throw ParseError("field '" + field + "[" + std::to_string(i) + "]' must be an integer");
    out.push_back(j[i].get<Weight>());
  }
  return out;
}

Json arrows_to_json(const std::vector<Arrow>& arrows) {
  Json out = Json::array();
  for (const auto& a : arrows) out.push_back(Json::array({a.source + 1, a.target + 1}));
  return out;
}

std::vector<Arrow> arrows_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("field 'arrows' must be an array of [source, target] pairs");
  std::vector<Arrow> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string field = "arrows[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 2) throw ParseError("field '" + field + "' must be a [source, target] pair");
    const auto s = get_count(j[i][0], field), t = get_count(j[i][1], field);
    if (s == 0 || t == 0) throw ParseError("field '" + field + "' uses 1-indexed vertices");
    out.push_back({s - 1, t - 1});
  }
  return out;
}

QuiverSpec quiver_from_json(const Json& j) {
  const auto vertices = get_count(require(j, "vertices", "quiver"), "vertices");
  return QuiverSpec(vertices, arrows_from_json(require(j, "arrows", "quiver")),
                    get_counts(require(j, "dim", "quiver"), "dim"), get_weights(require(j, "theta", "quiver"), "theta"));
}

Json quiver_to_json(const QuiverSpec& q) {
  Json dims = Json::array(), theta = Json::array();
  for (auto d : q.dim_vector()) dims.push_back(d);
  for (auto t : q.theta()) theta.push_back(t);
  return {{"family", "quiver"},
          {"vertices", q.vertex_count()},
          {"arrows", arrows_to_json(q.arrows())},
          {"dim", dims},
          {"theta", theta}};
}

Family family_tag_from_json(const Json& j) {
  const auto tag = get_as<std::string>(require(j, "family", "instance"), "family");
  if (tag == "quiver") return Family::Quiver;
  if (tag == "control") return Family::Control;
  if (tag == "dag") return Family::Dag;
  throw ParseError("field 'family' must be one of quiver, control, dag (got '" + tag + "')");
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "stable") return Verdict::Stable;
  if (s == "not_stable") return Verdict::NotStable;
  if (s == "unstable") return Verdict::Unstable;
  throw ParseError("unknown verdict '" + s + "'");
}

std::vector<std::string> strings_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError("field '" + field + "' must be an array");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(get_as<std::string>(x, field));
  return out;
}

}  // namespace

std::string canonical_dump(const Json& j) { return j.dump(); }

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j, const std::string& field) {
  if (!j.is_string()) throw ParseError("field '" + field + "' must be a rational string \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError("field '" + field + "': " + e.what());
  }
}

Json complex_to_json(const ComplexRational& z) {
  if (z.im().is_zero()) return rational_to_json(z.re());
  return Json::array({z.re().str(), z.im().str()});
}

ComplexRational complex_from_json(const Json& j, const std::string& field) {
  if (j.is_array()) {
    if (j.size() != 2) throw ParseError("field '" + field + "' must be \"p/q\" or [re, im]");
    return {rational_from_json(j[0], field + ".re"), rational_from_json(j[1], field + ".im")};
  }
  return ComplexRational(rational_from_json(j, field));
}

Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix matrix_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError("field '" + field + "' must be a nested array of rationals");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw ParseError("field '" + field + "' has ragged or missing rows");
    for (std::size_t c = 0; c < cols; ++c) {
      m(i, c) = rational_from_json(j[i][c], field + "[" + std::to_string(i) + "][" + std::to_string(c) + "]");
    }
  }
  return m;
}

Json family_to_json(const FamilySpec& f) {
  if (const auto* q = std::get_if<QuiverSpec>(&f)) return quiver_to_json(*q);
  if (const auto* c = std::get_if<ControlSpec>(&f)) return {{"family", "control"}, {"n", c->n}, {"m", c->m}};
  const auto& d = std::get<DagSpec>(f);
  return {{"family", "dag"}, {"n", d.n}, {"k", d.k}};
}

FamilySpec family_from_json(const Json& j) {
  switch (family_tag_from_json(j)) {
    case Family::Quiver:
      return quiver_from_json(j);
    case Family::Control:
      return ControlSpec{get_count(require(j, "n", "control"), "n"), get_count(require(j, "m", "control"), "m")};
    case Family::Dag:
      return DagSpec{get_count(require(j, "n", "dag"), "n"), get_count(require(j, "k", "dag"), "k")};
  }
  throw ParseError("unreachable family tag");
}

Json instance_to_json(const ModelInstance& x) {
  if (const auto* r = std::get_if<ThinQuiverRep>(&x)) {
    Json j = quiver_to_json(r->spec());
    Json values = Json::array();
    for (const auto& v : r->values()) values.push_back(complex_to_json(v));
    j["values"] = values;
    return j;
  }
  if (const auto* c = std::get_if<ControlInstance>(&x)) {
    return {{"family", "control"}, {"n", c->n()}, {"m", c->m()}, {"A", matrix_to_json(c->a())},
            {"B", matrix_to_json(c->b())}};
  }
  const auto& d = std::get<DagInstance>(x);
  return {{"family", "dag"}, {"n", d.n()}, {"k", d.k()}, {"Y", matrix_to_json(d.samples())}};
}

ModelInstance instance_from_json(const Json& j) {
  switch (family_tag_from_json(j)) {
    case Family::Quiver: {
      QuiverSpec spec = quiver_from_json(j);
      const Json& values = require(j, "values", "quiver");
      if (!values.is_array()) throw ParseError("field 'values' must be an array");
      std::vector<ComplexRational> vals;
      for (std::size_t i = 0; i < values.size(); ++i) {
        vals.push_back(complex_from_json(values[i], "values[" + std::to_string(i) + "]"));
      }
      return ThinQuiverRep(std::move(spec), std::move(vals));
    }
    case Family::Control: {
      const auto n = get_count(require(j, "n", "control"), "n");
      const auto m = get_count(require(j, "m", "control"), "m");
      auto a = matrix_from_json(require(j, "A", "control"), "A");
      auto b = matrix_from_json(require(j, "B", "control"), "B");
      if (a.rows() != n || a.cols() != n) throw ParseError("field 'A' must be n x n");
      if (b.rows() != n || b.cols() != m) throw ParseError("field 'B' must be n x m");
      return ControlInstance(std::move(a), std::move(b));
    }
    case Family::Dag: {
      const auto n = get_count(require(j, "n", "dag"), "n");
      const auto k = get_count(require(j, "k", "dag"), "k");
      auto y = matrix_from_json(require(j, "Y", "dag"), "Y");
      if (y.rows() != n || y.cols() != k + 1) throw ParseError("field 'Y' must be n x (k+1)");
      return DagInstance(k, std::move(y));
    }
  }
  throw ParseError("unreachable family tag");
}

Json one_ps_to_json(const OnePS& lambda) { return {{"gl", lambda.gl_weights}, {"torus", lambda.torus_weights}}; }

OnePS one_ps_from_json(const Json& j) {
  OnePS out;
  const Json& gl = require(j, "gl", "one-parameter subgroup");
  if (!gl.is_array()) throw ParseError("field 'gl' must be an array of weight lists");
  for (std::size_t i = 0; i < gl.size(); ++i) out.gl_weights.push_back(get_weights(gl[i], "gl"));
  out.torus_weights = get_weights(require(j, "torus", "one-parameter subgroup"), "torus");
  return out;
}

Json stratum_to_json(const StratumClass& s) {
  Json descriptor;
  if (const auto* d = std::get_if<std::vector<std::size_t>>(&s.descriptor)) {
    descriptor = *d;
  } else {
    descriptor = std::get<std::size_t>(s.descriptor);
  }
  return {{"family", to_string(s.family)},
          {"descriptor", descriptor},
          {"representative", one_ps_to_json(s.representative)},
          {"m", s.m},
          {"orbit_dim", s.orbit_dim},
          {"value", s.value},
          {"convention", to_string(s.convention)}};
}

StratumClass stratum_from_json(const Json& j) {
  StratumClass s;
  s.family = family_tag_from_json(j);
  const Json& d = require(j, "descriptor", "stratum");
  if (d.is_array()) {
    s.descriptor = get_counts(d, "descriptor");
  } else {
    s.descriptor = get_count(d, "descriptor");
  }
  s.representative = one_ps_from_json(require(j, "representative", "stratum"));
  s.m = get_count(require(j, "m", "stratum"), "m");
  s.orbit_dim = get_count(require(j, "orbit_dim", "stratum"), "orbit_dim");
  s.value = get_as<std::int64_t>(require(j, "value", "stratum"), "value");
  s.convention = parse_orbit_convention(get_as<std::string>(require(j, "convention", "stratum"), "convention"));
  return s;
}

Json status_to_json(const StabilityStatus& s) {
  Json j = {{"family", to_string(s.family)}, {"verdict", to_string(s.verdict)}, {"reason", s.reason}};
  if (s.invariant_subspace_dim) j["invariant_subspace_dim"] = *s.invariant_subspace_dim;
  if (s.parent_rank) j["parent_rank"] = *s.parent_rank;
  if (s.destabilizing_support) {
    Json support = Json::array();
    for (auto v : *s.destabilizing_support) support.push_back(v + 1);
    j["destabilizing_support"] = support;
  }
  return j;
}

StabilityStatus status_from_json(const Json& j) {
  StabilityStatus s{family_tag_from_json(j),
                    verdict_from_string(get_as<std::string>(require(j, "verdict", "status"), "verdict")),
                    get_as<std::string>(require(j, "reason", "status"), "reason"),
                    {},
                    {},
                    {}};
  if (j.contains("invariant_subspace_dim")) s.invariant_subspace_dim = get_count(j["invariant_subspace_dim"], "invariant_subspace_dim");
  if (j.contains("parent_rank")) s.parent_rank = get_count(j["parent_rank"], "parent_rank");
  if (j.contains("destabilizing_support")) {
    auto support = get_counts(j["destabilizing_support"], "destabilizing_support");
    for (auto& v : support) {
      if (v == 0) throw ParseError("field 'destabilizing_support' uses 1-indexed vertices");
      --v;
    }
    s.destabilizing_support = std::move(support);
  }
  return s;
}

Json report_to_json(const ConnectivityReport& r) {
  Json strata = Json::array();
  for (const auto& s : r.strata) strata.push_back(stratum_to_json(s));
  Json homotopy = Json::array();
  for (const auto& e : r.homotopy) homotopy.push_back({{"q", e.q}, {"group", e.group.str()}});
  Json j = {{"family", family_to_json(r.family)},
            {"convention", to_string(r.convention)},
            {"strata", strata},
            {"homotopy", homotopy},
            {"notes", r.notes},
            {"convention_dependent",
             Json::array({"connectivity", "d_min", "homotopy", "strata[].orbit_dim", "strata[].value",
                          "strata[].convention", "thresholds", "notes"})}};
  j["d_min"] = r.d_min ? Json(*r.d_min) : Json(nullptr);
  if (r.connectivity) {
    j["connectivity"] = *r.connectivity;
  } else {
    j["connectivity"] = r.d_min ? "no_information" : "contractible";
  }
  if (r.thresholds) {
    j["thresholds"] = {{"path_connected_min_samples", r.thresholds->path_connected_min_samples},
                       {"simply_connected_min_samples", r.thresholds->simply_connected_min_samples}};
  }
  return j;
}

ConnectivityReport report_from_json(const Json& j) {
  ConnectivityReport r;
  r.family = family_from_json(require(j, "family", "report"));
  r.convention = parse_orbit_convention(get_as<std::string>(require(j, "convention", "report"), "convention"));
  for (const auto& s : require(j, "strata", "report")) r.strata.push_back(stratum_from_json(s));
  for (const auto& e : require(j, "homotopy", "report")) {
    r.homotopy.push_back({get_count(require(e, "q", "homotopy"), "q"),
                          AbelianGroup::parse(get_as<std::string>(require(e, "group", "homotopy"), "group"))});
  }
  r.notes = strings_from_json(require(j, "notes", "report"), "notes");
  const Json& d = require(j, "d_min", "report");
  if (!d.is_null()) r.d_min = get_as<std::int64_t>(d, "d_min");
  const Json& c = require(j, "connectivity", "report");
  if (c.is_number_integer()) r.connectivity = c.get<std::int64_t>();
  if (j.contains("thresholds")) {
    const Json& t = j["thresholds"];
    r.thresholds = ConnectivityThresholds{
        get_count(require(t, "path_connected_min_samples", "thresholds"), "path_connected_min_samples"),
        get_count(require(t, "simply_connected_min_samples", "thresholds"), "simply_connected_min_samples")};
  }
  return r;
}

Json trial_config_to_json(const TrialConfig& cfg) {
  return {{"family", family_to_json(cfg.family)},
          {"trials", cfg.trials},
          {"seed", cfg.seed},
          {"entry_bound", cfg.entry_bound},
          {"paths", cfg.paths},
          {"path_samples", cfg.path_samples},
          {"convention", to_string(cfg.convention)},
          {"workers", cfg.workers}};
}

TrialConfig trial_config_from_json(const Json& j) {
  TrialConfig cfg;
  cfg.family = family_from_json(require(j, "family", "config"));
  cfg.trials = get_as<std::uint64_t>(require(j, "trials", "config"), "trials");
  cfg.seed = get_as<std::uint64_t>(require(j, "seed", "config"), "seed");
  cfg.entry_bound = get_as<std::int64_t>(require(j, "entry_bound", "config"), "entry_bound");
  cfg.paths = get_as<std::uint64_t>(require(j, "paths", "config"), "paths");
  cfg.path_samples = get_as<std::uint64_t>(require(j, "path_samples", "config"), "path_samples");
  cfg.convention = parse_orbit_convention(get_as<std::string>(require(j, "convention", "config"), "convention"));
  cfg.workers = get_as<unsigned>(require(j, "workers", "config"), "workers");
  return cfg;
}

Json harness_report_to_json(const HarnessReport& r) {
  return {{"trials_run", r.trials_run},
          {"unstable_hits", r.unstable_hits},
          {"paths_run", r.paths_run},
          {"path_failures", r.path_failures},
          {"oracle_mismatches", r.oracle_mismatches},
          {"stabilized_stable", r.stabilized_stable},
          {"paths_skipped", r.paths_skipped},
          {"notes", r.notes},
          {"elapsed_ms", static_cast<std::int64_t>(r.elapsed.count())}};
}

HarnessReport harness_report_from_json(const Json& j) {
  HarnessReport r;
  r.trials_run = get_as<std::uint64_t>(require(j, "trials_run", "harness"), "trials_run");
  r.unstable_hits = get_as<std::uint64_t>(require(j, "unstable_hits", "harness"), "unstable_hits");
  r.paths_run = get_as<std::uint64_t>(require(j, "paths_run", "harness"), "paths_run");
  r.path_failures = get_as<std::uint64_t>(require(j, "path_failures", "harness"), "path_failures");
  r.oracle_mismatches = get_as<std::uint64_t>(require(j, "oracle_mismatches", "harness"), "oracle_mismatches");
  r.stabilized_stable = get_as<std::uint64_t>(require(j, "stabilized_stable", "harness"), "stabilized_stable");
  r.paths_skipped = get_as<bool>(require(j, "paths_skipped", "harness"), "paths_skipped");
  r.notes = strings_from_json(require(j, "notes", "harness"), "notes");
  r.elapsed = std::chrono::milliseconds(get_as<std::int64_t>(require(j, "elapsed_ms", "harness"), "elapsed_ms"));
  return r;
}

}  // namespace gitstab
