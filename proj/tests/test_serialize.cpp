#include <gtest/gtest.h>

#include "gitstab/errors.hpp"
#include "gitstab/serialize.hpp"

using namespace gitstab;

namespace {

QuiverSpec kronecker() { return QuiverSpec(2, {{0, 1}, {0, 1}}, {1, 1}, {1, -1}); }

std::vector<FamilySpec> families() {
  return {kronecker(),
          QuiverSpec(3, {{0, 1}, {1, 2}, {0, 2}}, {2, 1, 1}, {1, -1, -1}),
          QuiverSpec(1, {}, {1}, {0}),
          ControlSpec{3, 2},
          ControlSpec{1, 1},
          DagSpec{10, 3},
          DagSpec{2, 3}};
}

template <class T, class To, class From>
void expect_round_trip(const T& value, To to, From from) {
  const Json j = to(value);
  const std::string text = canonical_dump(j);
  const T back = from(Json::parse(text));
  EXPECT_EQ(back, value);
  EXPECT_EQ(canonical_dump(to(back)), text);
}

std::string error_of(const std::string& text) {
  try {
    instance_from_json(Json::parse(text));
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

bool has_float(const Json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& x : j)
      if (has_float(x)) return true;
  return false;
}

}  // namespace

TEST(Canonical, SortedKeysAndNoFloats) {
  const Json j = report_to_json(analyze(ControlSpec{3, 2}, OrbitConvention::Parabolic, 2));
  const std::string text = canonical_dump(j);
  EXPECT_FALSE(has_float(j));
  EXPECT_EQ(text.find('\n'), std::string::npos);
  EXPECT_EQ(text.find(": "), std::string::npos);
  EXPECT_LT(text.find("\"connectivity\""), text.find("\"convention\""));
  EXPECT_LT(text.find("\"convention\""), text.find("\"d_min\""));
}

TEST(RoundTrip, Reports) {
  for (const auto& f : families()) {
    for (auto conv : {OrbitConvention::Centralizer, OrbitConvention::Parabolic}) {
      for (std::optional<std::size_t> q : {std::optional<std::size_t>(), std::optional<std::size_t>(7)}) {
        expect_round_trip(analyze(f, conv, q), report_to_json, report_from_json);
      }
    }
  }
}

TEST(RoundTrip, FamiliesStrataAndOnePS) {
  for (const auto& f : families()) {
    expect_round_trip(f, family_to_json, family_from_json);
    for (const auto& s : enumerate_strata(f, default_convention(family_of(f)))) {
      expect_round_trip(s, stratum_to_json, stratum_from_json);
      expect_round_trip(s.representative, one_ps_to_json, one_ps_from_json);
    }
  }
}

TEST(RoundTrip, InstancesAndStatuses) {
  for (const auto& f : families()) {
    if (const auto* q = std::get_if<QuiverSpec>(&f); q && !q->is_thin()) continue;
    for (std::uint64_t i = 0; i < 20; ++i) {
      CounterRng rng(1, 400, i);
      const ModelInstance x = random_instance(f, rng, 9);
      expect_round_trip(x, instance_to_json, instance_from_json);
      expect_round_trip(status(x), status_to_json, status_from_json);
    }
  }
  const ComplexRational z(Rational::parse("-3/4"), Rational(2));
  const ModelInstance gaussian = ThinQuiverRep(kronecker(), {z, ComplexRational(Rational::parse("5/3"))});
  expect_round_trip(gaussian, instance_to_json, instance_from_json);
}

TEST(RoundTrip, HarnessArtifacts) {
  TrialConfig cfg;
  cfg.family = DagSpec{10, 3};
  cfg.trials = 50;
  cfg.seed = 0xFFFFFFFFFFFFFFFFULL;
  cfg.paths = 2;
  cfg.convention = OrbitConvention::Centralizer;
  cfg.workers = 2;
  const Json cj = trial_config_to_json(cfg);
  const TrialConfig back = trial_config_from_json(Json::parse(canonical_dump(cj)));
  EXPECT_EQ(canonical_dump(trial_config_to_json(back)), canonical_dump(cj));
  EXPECT_EQ(back.seed, cfg.seed);

  HarnessReport r;
  r.trials_run = 9;
  r.unstable_hits = 2;
  r.notes = {"a note"};
  r.paths_skipped = true;
  const HarnessReport rb = harness_report_from_json(Json::parse(canonical_dump(harness_report_to_json(r))));
  EXPECT_TRUE(rb.same_result(r));
}

TEST(ReportJson, Fields) {
  const Json k = report_to_json(analyze(kronecker(), OrbitConvention::Parabolic));
  EXPECT_EQ(k["d_min"], 4);
  EXPECT_EQ(k["connectivity"], 2);
  EXPECT_EQ(k["convention"], "parabolic");
  EXPECT_EQ(k["strata"][0]["descriptor"], Json::array({1, 0}));
  EXPECT_EQ(k["strata"][0]["m"], 2);

  const Json c = report_to_json(analyze(ControlSpec{3, 2}, OrbitConvention::Centralizer));
  EXPECT_EQ(c["connectivity"], "no_information");
  EXPECT_EQ(c["d_min"], 0);

  const Json d = report_to_json(analyze(DagSpec{10, 3}, OrbitConvention::Centralizer, 2));
  EXPECT_EQ(d["homotopy"][2]["group"], "Z^2");
  EXPECT_EQ(d["thresholds"]["path_connected_min_samples"], 5);

  const Json e = report_to_json(analyze(QuiverSpec(1, {}, {1}, {0}), OrbitConvention::Parabolic));
  EXPECT_TRUE(e["d_min"].is_null());
  EXPECT_EQ(e["connectivity"], "contractible");
}

TEST(InstanceJson, ErrorsNameTheField) {
  EXPECT_NE(error_of(R"({"family":"control","n":2,"m":1,"A":[["1","0"],["0","1/0"]],"B":[["1"],["0"]]})").find("A"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"family":"control","n":2,"m":1,"A":[["1","0"],["0","1"]],"B":[["x"],["0"]]})").find("B"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"family":"control","n":2,"m":1,"A":[["1","0"],["0","1"]]})").find("'B'"), std::string::npos);
  EXPECT_NE(error_of(R"({"family":"control","n":3,"m":1,"A":[["1","0"],["0","1"]],"B":[["1"],["0"]]})").find("'A'"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"family":"dag","n":2,"k":1,"Y":[["1",0.5],["0","1"]]})").find("Y"), std::string::npos);
  EXPECT_NE(error_of(R"({"family":"dag","n":2,"k":1,"Y":[["1","2"],["0"]]})").find("Y"), std::string::npos);
  EXPECT_NE(error_of(R"({"family":"graph"})").find("family"), std::string::npos);
  EXPECT_NE(error_of(R"({"family":"quiver","vertices":2,"arrows":[[0,1]],"dim":[1,1],"theta":[1,-1],"values":["1"]})")
                .find("arrows[0]"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"family":"quiver","vertices":2,"arrows":[[1,2]],"dim":[1,1],"theta":[1,1],"values":["1"]})")
                .find("admissible"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"family":"quiver","vertices":2,"arrows":[[1,2]],"dim":[1,1],"theta":[1,-1],"values":[[1,2]]})")
                .find("values[0]"),
            std::string::npos);
}

TEST(InstanceJson, ComplexForms) {
  const auto x = instance_from_json(Json::parse(
      R"({"family":"quiver","vertices":2,"arrows":[[1,2],[1,2]],"dim":[1,1],"theta":[1,-1],"values":["3/2",["0","-1"]]})"));
  const auto& r = std::get<ThinQuiverRep>(x);
  EXPECT_EQ(r.values()[0], ComplexRational(Rational::parse("3/2")));
  EXPECT_EQ(r.values()[1], ComplexRational(Rational(0), Rational(-1)));
}
