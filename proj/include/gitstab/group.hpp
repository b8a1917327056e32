#pragma once

// Reductive groups of the form GL_{n_1} x ... x GL_{n_f} x (C^*)^t, their
// one-parameter subgroups, and characters.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gitstab {

using Weight = std::int64_t;

class GroupSpec {
 public:
  GroupSpec() = default;
  GroupSpec(std::vector<std::size_t> gl_ranks, std::size_t torus_rank);

  const std::vector<std::size_t>& gl_ranks() const { return gl_ranks_; }
  std::size_t torus_rank() const { return torus_rank_; }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  std::vector<std::size_t> gl_ranks_;
  std::size_t torus_rank_ = 0;
};

/// A concrete diagonal one-parameter subgroup t -> (diag(t^w) per GL factor,
/// t^w per torus coordinate). Weights are listed in basis order.
struct OnePS {
  std::vector<std::vector<Weight>> gl_weights;
  std::vector<Weight> torus_weights;

  /// lambda^p, i.e. every weight multiplied by p.
  OnePS power(Weight p) const;
  bool matches(const GroupSpec& g) const;

  friend bool operator==(const OnePS&, const OnePS&) = default;
};

/// Conjugacy class of a one-parameter subgroup in normal form: each GL
/// factor's weights sorted non-increasing, and the common content (gcd of all
/// weights) divided out. The trivial subgroup is its own normal form.
class OnePSClass {
 public:
  OnePSClass() = default;
  explicit OnePSClass(const OnePS& lambda);

  const std::vector<std::vector<Weight>>& gl_weights() const { return gl_weights_; }
  const std::vector<Weight>& torus_weights() const { return torus_weights_; }
  bool matches(const GroupSpec& g) const;

  /// Sorted data as a diagonal representative.
  OnePS representative() const { return {gl_weights_, torus_weights_}; }

  friend bool operator==(const OnePSClass&, const OnePSClass&) = default;

 private:
  std::vector<std::vector<Weight>> gl_weights_;
  std::vector<Weight> torus_weights_;
};

struct Character {
  std::vector<Weight> det_powers;
  std::vector<Weight> torus_exponents;
};

enum class OrbitConvention { Centralizer, Parabolic };

std::string_view to_string(OrbitConvention c);
/// Accepts "centralizer" or "parabolic"; throws ParseError otherwise.
OrbitConvention parse_orbit_convention(std::string_view text);

std::size_t group_dim(const GroupSpec& g);
std::size_t centralizer_dim(const GroupSpec& g, const OnePSClass& lambda);
std::size_t parabolic_dim(const GroupSpec& g, const OnePSClass& lambda);
std::size_t orbit_dim(const GroupSpec& g, const OnePSClass& lambda, OrbitConvention conv);

/// <chi, lambda>; taken on the raw subgroup so that <chi, lambda^p> = p <chi, lambda>.
Weight character_pairing(const Character& chi, const OnePS& lambda);

}  // namespace gitstab
