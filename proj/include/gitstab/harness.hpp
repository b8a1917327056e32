#pragma once

// Seeded randomized and exhaustive checks that stability verdicts, strata and
// connectivity claims agree with each other. All sampling is over integer
// entries so every verdict is exact. Results are evidence, not proof.

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "gitstab/families.hpp"
#include "gitstab/random.hpp"

namespace gitstab {

struct TrialConfig {
  FamilySpec family = ControlSpec{3, 2};
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::int64_t entry_bound = 9;
  std::uint64_t paths = 0;
  std::uint64_t path_samples = 256;
  OrbitConvention convention = OrbitConvention::Parabolic;
  unsigned workers = 1;
};

struct HarnessReport {
  std::uint64_t trials_run = 0;
  std::uint64_t unstable_hits = 0;
  std::uint64_t paths_run = 0;
  std::uint64_t path_failures = 0;
  std::uint64_t oracle_mismatches = 0;
  std::uint64_t stabilized_stable = 0;
  bool paths_skipped = false;
  std::vector<std::string> notes;
  std::chrono::milliseconds elapsed{0};

  /// Counter-wise sum; notes are concatenated.
  HarnessReport& operator+=(const HarnessReport& o);
  /// Equality ignoring elapsed time.
  bool same_result(const HarnessReport& o) const;
};

/// Random instance with integer entries in [-bound, bound]. Quiver samples
/// with every arrow value zero are redrawn from the same stream.
ModelInstance random_instance(const FamilySpec& family, CounterRng& rng, std::int64_t bound);

/// Point on the quadratic through start (t = 0), mid (t = 1/2) and end (t = 1).
ModelInstance quadratic_path_point(const ModelInstance& start, const ModelInstance& mid, const ModelInstance& end,
                                   const Rational& t);

/// Number of parameters t = i / samples, 0 <= i < samples, whose path point is not stable.
std::uint64_t count_path_failures(const ModelInstance& start, const ModelInstance& mid, const ModelInstance& end,
                                  std::uint64_t samples);

HarnessReport sample_generic_points(const TrialConfig& cfg);
HarnessReport sample_path_stability(const TrialConfig& cfg);
/// Exhaustive Kronecker check over Gaussian-integer pairs with parts in
/// [-radius, radius]: unstable exactly at the origin, stable elsewhere.
/// `theta` lets the caller feed a different stability parameter.
HarnessReport kronecker_oracle_check(std::int64_t grid_radius, std::vector<Weight> theta = {1, -1});
HarnessReport detect_constructed_degenerates(const TrialConfig& cfg);

}  // namespace gitstab
