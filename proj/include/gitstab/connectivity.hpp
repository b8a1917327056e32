#pragma once

// From a table of destabilizing classes to the connectivity of the stable
// locus and the homotopy groups of the stable quotient.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gitstab/families.hpp"

namespace gitstab {

/// 0, Z^r, or unknown.
class AbelianGroup {
 public:
  enum class Kind { Zero, FreeAbelian, Unknown };

  static AbelianGroup zero() { return AbelianGroup(Kind::Zero, 0); }
  static AbelianGroup free(std::size_t rank) { return rank == 0 ? zero() : AbelianGroup(Kind::FreeAbelian, rank); }
  static AbelianGroup unknown() { return AbelianGroup(Kind::Unknown, 0); }

  Kind kind() const { return kind_; }
  std::size_t rank() const { return rank_; }

  /// Direct sum; unknown absorbs everything.
  AbelianGroup operator+(const AbelianGroup& o) const;

  /// "0", "Z^r" or "unknown".
  std::string str() const;
  /// "0", "Z", "Z^2", ... or "?" for display.
  std::string pretty() const;
  static AbelianGroup parse(const std::string& text);

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  AbelianGroup(Kind k, std::size_t r) : kind_(k), rank_(r) {}
  Kind kind_;
  std::size_t rank_;
};

/// Stand-in for d_min when there are no destabilizing classes.
inline constexpr std::int64_t kUnboundedDMin = std::numeric_limits<std::int64_t>::max();

/// Minimum of 2m - 2 dim(orbit) over the classes; nullopt for an empty list
/// (no destabilizing classes, V^st = V).
std::optional<std::int64_t> d_min(std::span<const StratumClass> strata);

/// d - 2 for d >= 2, nullopt (no information) otherwise.
std::optional<std::int64_t> connectivity_bound(std::int64_t d);

/// sphere_dim + 1 + 2 dim(orbit) < 2m.
bool dimension_inequality(std::size_t sphere_dim, const StratumClass& s);

/// pi_i(U(k)) inside the stable range i <= 2k - 1, unknown beyond it.
AbelianGroup unitary_pi(std::size_t i, std::size_t k);

/// pi_q of the stable quotient via pi_q(M) = pi_{q-1}(G) for 1 <= q < d - 1.
/// Assumes G acts freely on the stable locus.
AbelianGroup quotient_pi(const GroupSpec& g, std::int64_t d, std::size_t q);

struct HomotopyEntry {
  std::size_t q;
  AbelianGroup group;
  friend bool operator==(const HomotopyEntry&, const HomotopyEntry&) = default;
};

std::vector<HomotopyEntry> homotopy_table(const GroupSpec& g, std::int64_t d, std::size_t max_q);

/// Smallest sample counts at which the DAG stable locus is path-connected
/// (d_min >= 2) and simply connected (d_min >= 3) for k parents.
struct ConnectivityThresholds {
  std::size_t path_connected_min_samples;
  std::size_t simply_connected_min_samples;
  friend bool operator==(const ConnectivityThresholds&, const ConnectivityThresholds&) = default;
};

ConnectivityThresholds dag_connectivity_thresholds(std::size_t k, OrbitConvention conv);

struct ConnectivityReport {
  FamilySpec family = ControlSpec{};
  OrbitConvention convention = OrbitConvention::Parabolic;
  std::vector<StratumClass> strata;
  std::optional<std::int64_t> d_min;         // nullopt: no destabilizing classes
  std::optional<std::int64_t> connectivity;  // nullopt: no information (or V^st = V)
  std::vector<HomotopyEntry> homotopy;       // quotient homotopy, empty unless requested
  std::optional<ConnectivityThresholds> thresholds;  // DAG only
  std::vector<std::string> notes;

  bool contractible() const { return !d_min.has_value(); }
  friend bool operator==(const ConnectivityReport&, const ConnectivityReport&) = default;
};

/// End-to-end: strata, d_min, connectivity, optionally the quotient homotopy
/// table up to `homotopy_max_q`.
ConnectivityReport analyze(const FamilySpec& family, OrbitConvention conv,
                           std::optional<std::size_t> homotopy_max_q = std::nullopt);

/// Human-readable multi-line summary.
std::string render_text(const ConnectivityReport& report);

}  // namespace gitstab
