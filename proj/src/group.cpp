#include "gitstab/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "gitstab/errors.hpp"

namespace gitstab {

namespace {

/// Multiplicities of the distinct weights, in order of decreasing weight.
std::vector<std::size_t> multiplicities(const std::vector<Weight>& weights) {
  std::map<Weight, std::size_t, std::greater<>> counts;
  for (Weight w : weights) ++counts[w];
  std::vector<std::size_t> out;
  out.reserve(counts.size());
  for (const auto& [w, m] : counts) out.push_back(m);
  return out;
}

void require_match(const GroupSpec& g, const OnePSClass& lambda) {
  if (!lambda.matches(g)) throw ShapeError("one-parameter subgroup does not match the group shape");
}

}  // namespace

GroupSpec::GroupSpec(std::vector<std::size_t> gl_ranks, std::size_t torus_rank)
    : gl_ranks_(std::move(gl_ranks)), torus_rank_(torus_rank) {
  for (auto n : gl_ranks_) {
    if (n == 0) throw DomainError("GL factor of rank 0");
  }
}

OnePS OnePS::power(Weight p) const {
  OnePS out = *this;
  for (auto& factor : out.gl_weights)
    for (auto& w : factor) w *= p;
  for (auto& w : out.torus_weights) w *= p;
  return out;
}

bool OnePS::matches(const GroupSpec& g) const {
  if (gl_weights.size() != g.gl_ranks().size() || torus_weights.size() != g.torus_rank()) return false;
  for (std::size_t i = 0; i < gl_weights.size(); ++i) {
    if (gl_weights[i].size() != g.gl_ranks()[i]) return false;
  }
  return true;
}

OnePSClass::OnePSClass(const OnePS& lambda)
    : gl_weights_(lambda.gl_weights), torus_weights_(lambda.torus_weights) {
  Weight content = 0;
  for (auto& factor : gl_weights_) {
    std::sort(factor.begin(), factor.end(), std::greater<>());
    for (Weight w : factor) content = std::gcd(content, w);
  }
  for (Weight w : torus_weights_) content = std::gcd(content, w);
  if (content > 1) {
    for (auto& factor : gl_weights_)
      for (auto& w : factor) w /= content;
    for (auto& w : torus_weights_) w /= content;
  }
}

bool OnePSClass::matches(const GroupSpec& g) const { return representative().matches(g); }

std::string_view to_string(OrbitConvention c) {
  return c == OrbitConvention::Centralizer ? "centralizer" : "parabolic";
}

OrbitConvention parse_orbit_convention(std::string_view text) {
  if (text == "centralizer") return OrbitConvention::Centralizer;
  if (text == "parabolic") return OrbitConvention::Parabolic;
  throw ParseError("unknown orbit convention '" + std::string(text) + "' (expected centralizer or parabolic)");
}

std::size_t group_dim(const GroupSpec& g) {
  std::size_t d = g.torus_rank();
  for (auto n : g.gl_ranks()) d += n * n;
  return d;
}

std::size_t centralizer_dim(const GroupSpec& g, const OnePSClass& lambda) {
  require_match(g, lambda);
  std::size_t d = g.torus_rank();
  for (const auto& factor : lambda.gl_weights()) {
    for (auto m : multiplicities(factor)) d += m * m;
  }
  return d;
}

std::size_t parabolic_dim(const GroupSpec& g, const OnePSClass& lambda) {
  require_match(g, lambda);
  std::size_t d = g.torus_rank();
  for (const auto& factor : lambda.gl_weights()) {
    const auto mult = multiplicities(factor);
    for (std::size_t a = 0; a < mult.size(); ++a) {
      d += mult[a] * mult[a];
      for (std::size_t b = a + 1; b < mult.size(); ++b) d += mult[a] * mult[b];
    }
  }
  return d;
}

std::size_t orbit_dim(const GroupSpec& g, const OnePSClass& lambda, OrbitConvention conv) {
  const std::size_t stabilizer =
      conv == OrbitConvention::Centralizer ? centralizer_dim(g, lambda) : parabolic_dim(g, lambda);
  return group_dim(g) - stabilizer;
}

Weight character_pairing(const Character& chi, const OnePS& lambda) {
  if (chi.det_powers.size() != lambda.gl_weights.size() ||
      chi.torus_exponents.size() != lambda.torus_weights.size()) {
    throw ShapeError("character and one-parameter subgroup have different shapes");
  }
  Weight total = 0;
  for (std::size_t i = 0; i < chi.det_powers.size(); ++i) {
    const auto& ws = lambda.gl_weights[i];
    total += chi.det_powers[i] * std::accumulate(ws.begin(), ws.end(), Weight{0});
  }
  for (std::size_t j = 0; j < chi.torus_exponents.size(); ++j) {
    total += chi.torus_exponents[j] * lambda.torus_weights[j];
  }
  return total;
}

}  // namespace gitstab
