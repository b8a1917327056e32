#include <cstdint>
#include <numeric>

#include "gitstab/errors.hpp"
#include "gitstab/families.hpp"

namespace gitstab {

namespace {
constexpr std::size_t kMaxThinVertices = 20;
}

QuiverSpec::QuiverSpec(std::size_t vertex_count, std::vector<Arrow> arrows, std::vector<std::size_t> dim_vector,
                       std::vector<Weight> theta)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)), dim_(std::move(dim_vector)), theta_(std::move(theta)) {
  if (vertex_count_ == 0) throw ValidationError("quiver needs at least one vertex");
  if (dim_.size() != vertex_count_) throw ValidationError("dimension vector length must equal the vertex count");
  if (theta_.size() != vertex_count_) throw ValidationError("theta length must equal the vertex count");
  for (const auto& a : arrows_) {
    if (a.source >= vertex_count_ || a.target >= vertex_count_) throw ValidationError("arrow endpoint out of range");
  }
  Weight pairing = 0;
  for (std::size_t i = 0; i < vertex_count_; ++i) pairing += theta_[i] * static_cast<Weight>(dim_[i]);
  if (pairing != 0) {
    throw ValidationError("theta is not admissible: sum theta_i * v_i = " + std::to_string(pairing) +
                          " but must be 0");
  }
}

std::vector<std::vector<std::int64_t>> QuiverSpec::adjacency() const {
  std::vector<std::vector<std::int64_t>> adj(vertex_count_, std::vector<std::int64_t>(vertex_count_, 0));
  for (const auto& a : arrows_) ++adj[a.source][a.target];
  return adj;
}

bool QuiverSpec::is_thin() const {
  for (auto d : dim_) {
    if (d > 1) return false;
  }
  return true;
}

GroupSpec QuiverSpec::group() const {
  std::vector<std::size_t> ranks;
  for (auto d : dim_) {
    if (d > 0) ranks.push_back(d);
  }
  return GroupSpec(std::move(ranks), 0);
}

std::vector<std::optional<std::size_t>> QuiverSpec::factor_of_vertex() const {
  std::vector<std::optional<std::size_t>> out(vertex_count_);
  std::size_t f = 0;
  for (std::size_t i = 0; i < vertex_count_; ++i) {
    if (dim_[i] > 0) out[i] = f++;
  }
  return out;
}

ThinQuiverRep::ThinQuiverRep(QuiverSpec spec, std::vector<ComplexRational> arrow_values)
    : spec_(std::move(spec)), values_(std::move(arrow_values)) {
  if (!spec_.is_thin()) throw ValidationError("representation is not thin (some v_i > 1)");
  if (values_.size() != spec_.arrows().size()) throw ValidationError("one value per arrow expected");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const auto& a = spec_.arrows()[i];
    if ((spec_.dim_vector()[a.source] == 0 || spec_.dim_vector()[a.target] == 0) && !values_[i].is_zero()) {
      throw ValidationError("arrow " + std::to_string(i + 1) + " touches a zero-dimensional vertex but is nonzero");
    }
  }
}

std::vector<std::vector<Weight>> quiver_vertex_weights(const QuiverSpec& spec, const OnePS& lambda) {
  if (!lambda.matches(spec.group())) throw ShapeError("one-parameter subgroup does not match the quiver group");
  const auto factor = spec.factor_of_vertex();
  std::vector<std::vector<Weight>> out(spec.vertex_count());
  for (std::size_t v = 0; v < out.size(); ++v) {
    if (factor[v]) out[v] = lambda.gl_weights[*factor[v]];
  }
  return out;
}

OnePS quiver_one_ps(const QuiverSpec& spec, const std::vector<std::vector<Weight>>& per_vertex) {
  if (per_vertex.size() != spec.vertex_count()) throw ShapeError("one weight list per vertex expected");
  OnePS lambda;
  for (std::size_t v = 0; v < per_vertex.size(); ++v) {
    if (per_vertex[v].size() != spec.dim_vector()[v]) throw ShapeError("vertex weight list has the wrong length");
    if (!per_vertex[v].empty()) lambda.gl_weights.push_back(per_vertex[v]);
  }
  return lambda;
}

std::int64_t euler_form(const QuiverSpec& spec, std::span<const std::int64_t> d, std::span<const std::int64_t> e) {
  const std::size_t n = spec.vertex_count();
  if (d.size() != n || e.size() != n) throw ShapeError("Euler form vectors must have one entry per vertex");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += d[i] * e[i];
  for (const auto& a : spec.arrows()) total -= d[a.source] * e[a.target];
  return total;
}

StabilityStatus quiver_thin_status(const ThinQuiverRep& rep) {
  const auto& spec = rep.spec();
  if (spec.vertex_count() > kMaxThinVertices) {
    throw SizeError("thin quiver check is limited to " + std::to_string(kMaxThinVertices) + " vertices");
  }
  std::vector<std::size_t> support;
  for (std::size_t v = 0; v < spec.vertex_count(); ++v) {
    if (spec.dim_vector()[v] == 1) support.push_back(v);
  }
  const std::size_t s = support.size();
  // Bit b of a mask selects support[b].
  std::vector<std::size_t> bit_of(spec.vertex_count(), 0);
  for (std::size_t b = 0; b < s; ++b) bit_of[support[b]] = b;

  std::optional<std::uint32_t> unstable_mask, semistable_mask;
  const std::uint32_t full = s == 0 ? 0 : ((std::uint32_t{1} << s) - 1);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    bool closed = true;
    for (std::size_t i = 0; i < spec.arrows().size() && closed; ++i) {
      if (rep.values()[i].is_zero()) continue;
      const auto& a = spec.arrows()[i];
      const bool src_in = (mask >> bit_of[a.source]) & 1U;
      const bool tgt_in = (mask >> bit_of[a.target]) & 1U;
      if (src_in && !tgt_in) closed = false;
    }
    if (!closed) continue;
    Weight alpha = 0;
    for (std::size_t b = 0; b < s; ++b) {
      if ((mask >> b) & 1U) alpha += spec.theta()[support[b]];
    }
    if (alpha > 0 && !unstable_mask) unstable_mask = mask;
    if (alpha == 0 && !semistable_mask) semistable_mask = mask;
    if (unstable_mask) break;
  }

  auto to_support = [&](std::uint32_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < s; ++b) {
      if ((mask >> b) & 1U) out.push_back(support[b]);
    }
    return out;
  };

  StabilityStatus st{Family::Quiver, Verdict::Stable, "no subrepresentation with theta >= 0", {}, {}, {}};
  if (unstable_mask) {
    st.verdict = Verdict::Unstable;
    st.reason = "subrepresentation with positive theta";
    st.destabilizing_support = to_support(*unstable_mask);
  } else if (semistable_mask) {
    st.verdict = Verdict::NotStable;
    st.reason = "strictly semistable: subrepresentation with theta = 0";
    st.destabilizing_support = to_support(*semistable_mask);
  }
  return st;
}

}  // namespace gitstab
