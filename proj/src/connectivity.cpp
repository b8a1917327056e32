#include "gitstab/connectivity.hpp"

#include <algorithm>
#include <sstream>

#include "gitstab/errors.hpp"

namespace gitstab {

AbelianGroup AbelianGroup::operator+(const AbelianGroup& o) const {
  if (kind_ == Kind::Unknown || o.kind_ == Kind::Unknown) return unknown();
  return free(rank_ + o.rank_);
}

std::string AbelianGroup::str() const {
  switch (kind_) {
    case Kind::Zero:
      return "0";
    case Kind::FreeAbelian:
      return "Z^" + std::to_string(rank_);
    case Kind::Unknown:
      return "unknown";
  }
  return "unknown";
}

std::string AbelianGroup::pretty() const {
  switch (kind_) {
    case Kind::Zero:
      return "0";
    case Kind::FreeAbelian:
      return rank_ == 1 ? "Z" : "Z^" + std::to_string(rank_);
    case Kind::Unknown:
      return "?";
  }
  return "?";
}

AbelianGroup AbelianGroup::parse(const std::string& text) {
  if (text == "0") return zero();
  if (text == "unknown") return unknown();
  if (text.size() > 2 && text.rfind("Z^", 0) == 0) {
    const std::string digits = text.substr(2);
    if (std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      const auto r = std::stoull(digits);
      if (r > 0) return free(r);
    }
  }
  throw ParseError("malformed group descriptor '" + text + "'");
}

std::optional<std::int64_t> d_min(std::span<const StratumClass> strata) {
  if (strata.empty()) return std::nullopt;
  std::int64_t best = strata.front().value;
  for (const auto& s : strata) best = std::min(best, s.value);
  return best;
}

std::optional<std::int64_t> connectivity_bound(std::int64_t d) {
  if (d < 2) return std::nullopt;
  return d - 2;
}

bool dimension_inequality(std::size_t sphere_dim, const StratumClass& s) {
  return sphere_dim + 1 + 2 * s.orbit_dim < 2 * s.m;
}

AbelianGroup unitary_pi(std::size_t i, std::size_t k) {
  if (i == 0) return AbelianGroup::zero();
  if (i >= 2 * k) return AbelianGroup::unknown();
  return i % 2 == 1 ? AbelianGroup::free(1) : AbelianGroup::zero();
}

AbelianGroup quotient_pi(const GroupSpec& g, std::int64_t d, std::size_t q) {
  if (q == 0) return d >= 2 ? AbelianGroup::zero() : AbelianGroup::unknown();
  // Valid window 1 <= q < d - 1.
  if (d < 3 || static_cast<std::int64_t>(q) >= d - 1) return AbelianGroup::unknown();
  const std::size_t i = q - 1;
  AbelianGroup total = AbelianGroup::zero();
  for (auto n : g.gl_ranks()) total = total + unitary_pi(i, n);
  if (i == 1) total = total + AbelianGroup::free(g.torus_rank());
  return total;
}

std::vector<HomotopyEntry> homotopy_table(const GroupSpec& g, std::int64_t d, std::size_t max_q) {
  std::vector<HomotopyEntry> out;
  out.reserve(max_q + 1);
  for (std::size_t q = 0; q <= max_q; ++q) out.push_back({q, quotient_pi(g, d, q)});
  return out;
}

ConnectivityThresholds dag_connectivity_thresholds(std::size_t k, OrbitConvention conv) {
  if (k == 0) throw DomainError("DAG family with k = 0");
  std::optional<std::size_t> path, simple;
  // Every class value grows with n, so the first n meeting each bound is the threshold.
  for (std::size_t n = 1; !simple; ++n) {
    const auto strata = enumerate_strata(DagSpec{n, k}, conv);
    const std::int64_t d = *d_min(strata);
    if (!path && d >= 2) path = n;
    if (!simple && d >= 3) simple = n;
  }
  return {*path, *simple};
}

ConnectivityReport analyze(const FamilySpec& family, OrbitConvention conv, std::optional<std::size_t> homotopy_max_q) {
  ConnectivityReport r;
  r.family = family;
  r.convention = conv;
  r.strata = enumerate_strata(family, conv);
  r.d_min = d_min(r.strata);
  if (r.d_min) r.connectivity = connectivity_bound(*r.d_min);

  const Family fam = family_of(family);
  switch (fam) {
    case Family::Quiver:
      r.notes.emplace_back(
          "quiver classes include every sub-dimension vector with theta.d' >= 0 whether or not a subrepresentation "
          "of that type occurs; the reported bound is conservative");
      break;
    case Family::Control:
      r.notes.emplace_back(
          "control classes are the {-1,0}-weight subgroups indexed by invariant-subspace dimension r; completeness "
          "of this list is assumed");
      break;
    case Family::Dag:
      r.notes.emplace_back(
          "DAG classes are the column-redundancy subgroups j = 1..k; the DAG verdict does not separate unstable "
          "from polystable samples");
      r.thresholds = dag_connectivity_thresholds(std::get<DagSpec>(family).k, conv);
      break;
  }
  if (conv != default_convention(fam)) {
    r.notes.emplace_back("orbit convention overridden from the family default (" +
                         std::string(to_string(default_convention(fam))) + ")");
  }
  if (homotopy_max_q) {
    r.homotopy = homotopy_table(family_group(family), r.d_min.value_or(kUnboundedDMin), *homotopy_max_q);
    r.notes.emplace_back("quotient homotopy assumes G acts freely on the stable locus");
    if (fam == Family::Dag) {
      const std::size_t k = std::get<DagSpec>(family).k;
      if (*homotopy_max_q >= 2 * k) {
        r.notes.emplace_back("q = 2k = " + std::to_string(2 * k) +
                             " follows the stable-range table (pi_{2k-1}(U(k)) = Z); a table stopping at q < 2k "
                             "would list 0 there");
      }
    }
  }
  return r;
}

namespace {

std::string descriptor_text(const StratumClass& s) {
  std::ostringstream os;
  if (const auto* d = std::get_if<std::vector<std::size_t>>(&s.descriptor)) {
    os << "d'=(";
    for (std::size_t i = 0; i < d->size(); ++i) os << (i ? "," : "") << (*d)[i];
    os << ")";
  } else {
    os << (s.family == Family::Control ? "r=" : "j=") << std::get<std::size_t>(s.descriptor);
  }
  return os.str();
}

}  // namespace

std::string render_text(const ConnectivityReport& r) {
  std::ostringstream os;
  const Family fam = family_of(r.family);
  os << "family: " << to_string(fam) << "\n";
  os << "orbit convention: " << to_string(r.convention) << "\n";
  os << "destabilizing classes: " << r.strata.size() << "\n";
  for (const auto& s : r.strata) {
    os << "  " << descriptor_text(s) << "  m=" << s.m << "  orbit_dim=" << s.orbit_dim << "  value=" << s.value
       << "\n";
  }
  if (!r.d_min) {
    os << "no destabilizing classes: V^st = V (contractible)\n";
  } else {
    os << "d_min = " << *r.d_min << "\n";
    if (r.connectivity) {
      os << "connectivity: V^st is " << *r.connectivity << "-connected\n";
      os << "π_q(V^st)=0 for q ≤ " << *r.connectivity << "\n";
    } else {
      os << "connectivity: no information (d_min < 2)\n";
    }
  }
  if (r.thresholds) {
    os << "path-connected for n ≥ " << r.thresholds->path_connected_min_samples << ", simply connected for n ≥ "
       << r.thresholds->simply_connected_min_samples << "\n";
  }
  if (!r.homotopy.empty()) {
    os << "quotient homotopy π_q(V^st/G):\n";
    for (const auto& e : r.homotopy) os << "  q=" << e.q << ": " << e.group.pretty() << "\n";
  }
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

}  // namespace gitstab
