#include "gitstab/families.hpp"

#include <algorithm>
#include <set>

#include "gitstab/errors.hpp"
#include "gitstab/linalg.hpp"

namespace gitstab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Each family exposes its coordinates through a flat weight list aligned with
// a flat entry order: arrows for quivers, A then B (row-major) for control
// pairs, Y row-major for DAG samples.

std::vector<Weight> coordinate_weights(const ThinQuiverRep& rep, const OnePS& lambda) {
  const auto& spec = rep.spec();
  const auto per_vertex = quiver_vertex_weights(spec, lambda);
  std::vector<Weight> out;
  out.reserve(spec.arrows().size());
  for (const auto& a : spec.arrows()) {
    const auto& ws = per_vertex[a.source];
    const auto& wt = per_vertex[a.target];
    // Arrows touching a zero-dimensional vertex carry no coordinate; their
    // value is pinned to zero, so any weight will do.
    out.push_back(ws.empty() || wt.empty() ? 0 : wt[0] - ws[0]);
  }
  return out;
}

std::vector<Weight> control_weights(std::size_t n, std::size_t m, const OnePS& lambda) {
  if (lambda.gl_weights.size() != 1 || lambda.gl_weights[0].size() != n || !lambda.torus_weights.empty()) {
    throw ShapeError("control one-parameter subgroup must have n GL weights and no torus part");
  }
  const auto& w = lambda.gl_weights[0];
  std::vector<Weight> out;
  out.reserve(n * n + n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.push_back(w[i] - w[j]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < m; ++c) out.push_back(w[i]);
  return out;
}

std::vector<Weight> dag_weights(std::size_t n, std::size_t k, const OnePS& lambda) {
  if (lambda.gl_weights.size() != 1 || lambda.gl_weights[0].size() != k || lambda.torus_weights.size() != 1) {
    throw ShapeError("DAG one-parameter subgroup must have k GL weights and one torus weight");
  }
  std::vector<Weight> out;
  out.reserve(n * (k + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < k; ++i) out.push_back(lambda.gl_weights[0][i]);
    out.push_back(-lambda.torus_weights[0]);
  }
  return out;
}

std::vector<Weight> coordinate_weights(const ControlInstance& c, const OnePS& lambda) {
  return control_weights(c.n(), c.m(), lambda);
}

std::vector<Weight> coordinate_weights(const DagInstance& d, const OnePS& lambda) {
  return dag_weights(d.n(), d.k(), lambda);
}

template <class Keep>
ThinQuiverRep filter(const ThinQuiverRep& rep, const std::vector<Weight>& w, Keep keep) {
  auto values = rep.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!keep(w[i])) values[i] = ComplexRational();
  }
  return {rep.spec(), std::move(values)};
}

template <class Keep>
ControlInstance filter(const ControlInstance& c, const std::vector<Weight>& w, Keep keep) {
  RationalMatrix a = c.a(), b = c.b();
  const std::size_t na = a.entries().size();
  for (std::size_t i = 0; i < na; ++i) {
    if (!keep(w[i])) a.entries()[i] = Rational();
  }
  for (std::size_t i = 0; i < b.entries().size(); ++i) {
    if (!keep(w[na + i])) b.entries()[i] = Rational();
  }
  return {std::move(a), std::move(b)};
}

template <class Keep>
DagInstance filter(const DagInstance& d, const std::vector<Weight>& w, Keep keep) {
  RationalMatrix y = d.samples();
  for (std::size_t i = 0; i < y.entries().size(); ++i) {
    if (!keep(w[i])) y.entries()[i] = Rational();
  }
  return {d.k(), std::move(y)};
}

ModelInstance add(const ModelInstance& x, const ModelInstance& y) {
  return std::visit(
      overloaded{
          [](const ThinQuiverRep& a, const ThinQuiverRep& b) -> ModelInstance {
            auto v = a.values();
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values()[i];
            return ThinQuiverRep(a.spec(), std::move(v));
          },
          [](const ControlInstance& a, const ControlInstance& b) -> ModelInstance {
            return ControlInstance(a.a() + b.a(), a.b() + b.b());
          },
          [](const DagInstance& a, const DagInstance& b) -> ModelInstance {
            return DagInstance(a.k(), a.samples() + b.samples());
          },
          [](const auto&, const auto&) -> ModelInstance { throw ShapeError("adding instances of different families"); },
      },
      x, y);
}

template <class Keep>
ModelInstance filter_instance(const ModelInstance& x, const OnePS& lambda, Keep keep) {
  return std::visit([&](const auto& inst) -> ModelInstance {
    return filter(inst, coordinate_weights(inst, lambda), keep);
  }, x);
}

ModelInstance zero_like(const ModelInstance& x) {
  return std::visit(
      overloaded{
          [](const ThinQuiverRep& a) -> ModelInstance {
            return ThinQuiverRep(a.spec(), std::vector<ComplexRational>(a.values().size()));
          },
          [](const ControlInstance& a) -> ModelInstance {
            return ControlInstance(RationalMatrix(a.n(), a.n()), RationalMatrix(a.n(), a.m()));
          },
          [](const DagInstance& a) -> ModelInstance {
            return DagInstance(a.k(), RationalMatrix(a.n(), a.k() + 1));
          },
      },
      x);
}

template <class Pred>
ModelInstance sum_where(const std::map<Weight, ModelInstance>& parts, Pred pred) {
  ModelInstance acc = zero_like(parts.begin()->second);
  for (const auto& [w, part] : parts) {
    if (pred(w)) acc = add(acc, part);
  }
  return acc;
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Quiver:
      return "quiver";
    case Family::Control:
      return "control";
    case Family::Dag:
      return "dag";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Stable:
      return "stable";
    case Verdict::NotStable:
      return "not_stable";
    case Verdict::Unstable:
      return "unstable";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Instances

ControlInstance::ControlInstance(RationalMatrix a, RationalMatrix b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() == 0 || a_.rows() != a_.cols()) throw ShapeError("control matrix A must be square with n >= 1");
  if (b_.rows() != a_.rows() || b_.cols() == 0) throw ShapeError("control matrix B must be n x m with m >= 1");
}

DagInstance::DagInstance(std::size_t k, RationalMatrix y) : k_(k), y_(std::move(y)) {
  if (k_ == 0) throw ShapeError("DAG model needs at least one parent");
  if (y_.rows() == 0) throw ShapeError("DAG sample needs at least one observation");
  if (y_.cols() != k_ + 1) throw ShapeError("DAG sample must have k + 1 columns");
}

Family family_of(const FamilySpec& f) {
  return std::visit(overloaded{
                        [](const QuiverSpec&) { return Family::Quiver; },
                        [](const ControlSpec&) { return Family::Control; },
                        [](const DagSpec&) { return Family::Dag; },
                    },
                    f);
}

Family family_of(const ModelInstance& x) { return family_of(spec_of(x)); }

FamilySpec spec_of(const ModelInstance& x) {
  return std::visit(overloaded{
                        [](const ThinQuiverRep& r) -> FamilySpec { return r.spec(); },
                        [](const ControlInstance& c) -> FamilySpec { return ControlSpec{c.n(), c.m()}; },
                        [](const DagInstance& d) -> FamilySpec { return DagSpec{d.n(), d.k()}; },
                    },
                    x);
}

GroupSpec family_group(const FamilySpec& f) {
  return std::visit(overloaded{
                        [](const QuiverSpec& q) { return q.group(); },
                        [](const ControlSpec& c) {
                          if (c.n == 0) throw DomainError("control family with n = 0");
                          return GroupSpec({c.n}, 0);
                        },
                        [](const DagSpec& d) {
                          if (d.k == 0) throw DomainError("DAG family with k = 0");
                          return GroupSpec({d.k}, 1);
                        },
                    },
                    f);
}

std::size_t ambient_dim(const FamilySpec& f) {
  return std::visit(overloaded{
                        [](const QuiverSpec& q) {
                          std::size_t d = 0;
                          for (const auto& a : q.arrows()) d += q.dim_vector()[a.source] * q.dim_vector()[a.target];
                          return d;
                        },
                        [](const ControlSpec& c) { return c.n * c.n + c.n * c.m; },
                        [](const DagSpec& d) { return d.n * (d.k + 1); },
                    },
                    f);
}

// ---------------------------------------------------------------------------
// Actions

ControlInstance act(const RationalMatrix& g, const ControlInstance& c) {
  return {g * c.a() * inverse(g), g * c.b()};
}

DagInstance act(const DagInstance& d, const RationalMatrix& a, const Rational& t) {
  if (a.rows() != d.k() || a.cols() != d.k()) throw ShapeError("DAG group element must be k x k");
  if (t.is_zero()) throw DomainError("torus coordinate must be nonzero");
  RationalMatrix g(d.k() + 1, d.k() + 1);
  for (std::size_t i = 0; i < d.k(); ++i)
    for (std::size_t j = 0; j < d.k(); ++j) g(i, j) = a(i, j);
  g(d.k(), d.k()) = Rational(1) / t;
  return {d.k(), d.samples() * g};
}

ThinQuiverRep act(const std::vector<ComplexRational>& vertex_scalars, const ThinQuiverRep& rep) {
  const auto& spec = rep.spec();
  if (vertex_scalars.size() != spec.vertex_count()) throw ShapeError("one scalar per vertex expected");
  auto values = rep.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto& a = spec.arrows()[i];
    if (vertex_scalars[a.source].is_zero()) throw DomainError("vertex scalar must be nonzero");
    values[i] = vertex_scalars[a.target] * values[i] / vertex_scalars[a.source];
  }
  return {spec, std::move(values)};
}

ModelInstance act_one_ps(const ModelInstance& x, const OnePS& lambda, const Rational& t) {
  return std::visit(
      overloaded{
          [&](const ThinQuiverRep& r) -> ModelInstance {
            const auto per_vertex = quiver_vertex_weights(r.spec(), lambda);
            std::vector<ComplexRational> scalars(r.spec().vertex_count(), ComplexRational(1));
            for (std::size_t v = 0; v < scalars.size(); ++v) {
              if (!per_vertex[v].empty()) scalars[v] = ComplexRational(pow(t, per_vertex[v][0]));
            }
            return act(scalars, r);
          },
          [&](const ControlInstance& c) -> ModelInstance {
            control_weights(c.n(), c.m(), lambda);
            RationalMatrix g(c.n(), c.n());
            for (std::size_t i = 0; i < c.n(); ++i) g(i, i) = pow(t, lambda.gl_weights[0][i]);
            return act(g, c);
          },
          [&](const DagInstance& d) -> ModelInstance {
            dag_weights(d.n(), d.k(), lambda);
            RationalMatrix a(d.k(), d.k());
            for (std::size_t i = 0; i < d.k(); ++i) a(i, i) = pow(t, lambda.gl_weights[0][i]);
            return act(d, a, pow(t, lambda.torus_weights[0]));
          },
      },
      x);
}

// ---------------------------------------------------------------------------
// Weights

ModelInstance WeightDecomposition::negative_part() const {
  return sum_where(components, [](Weight w) { return w < 0; });
}

ModelInstance WeightDecomposition::nonnegative_part() const {
  return sum_where(components, [](Weight w) { return w >= 0; });
}

ModelInstance WeightDecomposition::total() const {
  return sum_where(components, [](Weight) { return true; });
}

WeightDecomposition weight_decompose(const ModelInstance& x, const OnePS& lambda) {
  WeightDecomposition out;
  std::visit(
      [&](const auto& inst) {
        const auto w = coordinate_weights(inst, lambda);
        const std::set<Weight> distinct(w.begin(), w.end());
        for (Weight target : distinct) {
          out.components.emplace(target, filter(inst, w, [target](Weight u) { return u == target; }));
        }
        if (out.components.empty()) out.components.emplace(0, inst);
      },
      x);
  return out;
}

bool limit_exists(const ModelInstance& x, const OnePS& lambda) {
  return std::visit(
      overloaded{
          [&](const ThinQuiverRep& r) {
            const auto w = coordinate_weights(r, lambda);
            for (std::size_t i = 0; i < w.size(); ++i) {
              if (w[i] < 0 && !r.values()[i].is_zero()) return false;
            }
            return true;
          },
          [&](const ControlInstance& c) {
            const auto w = coordinate_weights(c, lambda);
            const std::size_t na = c.a().entries().size();
            for (std::size_t i = 0; i < w.size(); ++i) {
              const Rational& v = i < na ? c.a().entries()[i] : c.b().entries()[i - na];
              if (w[i] < 0 && !v.is_zero()) return false;
            }
            return true;
          },
          [&](const DagInstance& d) {
            const auto w = coordinate_weights(d, lambda);
            for (std::size_t i = 0; i < w.size(); ++i) {
              if (w[i] < 0 && !d.samples().entries()[i].is_zero()) return false;
            }
            return true;
          },
      },
      x);
}

std::size_t negative_weight_dim(const FamilySpec& f, const OnePS& lambda) {
  return std::visit(overloaded{
                        [&](const QuiverSpec& q) {
                          const auto per_vertex = quiver_vertex_weights(q, lambda);
                          std::size_t count = 0;
                          for (const auto& a : q.arrows()) {
                            for (Weight wt : per_vertex[a.target])
                              for (Weight ws : per_vertex[a.source]) count += (wt - ws < 0) ? 1 : 0;
                          }
                          return count;
                        },
                        [&](const ControlSpec& c) {
                          const auto w = control_weights(c.n, c.m, lambda);
                          return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](Weight u) { return u < 0; }));
                        },
                        [&](const DagSpec& d) {
                          const auto w = dag_weights(d.n, d.k, lambda);
                          return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](Weight u) { return u < 0; }));
                        },
                    },
                    f);
}

// ---------------------------------------------------------------------------
// Strata

OrbitConvention default_convention(Family f) {
  return f == Family::Dag ? OrbitConvention::Centralizer : OrbitConvention::Parabolic;
}

namespace {

StratumClass make_stratum(const FamilySpec& f, StratumDescriptor descriptor, OnePS rep, OrbitConvention conv) {
  const GroupSpec g = family_group(f);
  StratumClass s{family_of(f), std::move(descriptor), std::move(rep), 0, 0, 0, conv};
  s.m = negative_weight_dim(f, s.representative);
  s.orbit_dim = orbit_dim(g, OnePSClass(s.representative), conv);
  s.value = 2 * static_cast<std::int64_t>(s.m) - 2 * static_cast<std::int64_t>(s.orbit_dim);
  return s;
}

std::vector<StratumClass> quiver_strata(const QuiverSpec& q, OrbitConvention conv) {
  const auto& v = q.dim_vector();
  if (std::all_of(v.begin(), v.end(), [](std::size_t x) { return x == 0; })) {
    throw DomainError("quiver dimension vector is zero");
  }
  double count = 1;
  for (auto x : v) count *= static_cast<double>(x + 1);
  if (count > double(1U << 22)) throw SizeError("too many sub-dimension vectors to enumerate");

  std::vector<StratumClass> out;
  std::vector<std::size_t> sub(v.size(), 0);
  while (true) {
    // Odometer increment over 0 <= sub <= v.
    std::size_t i = 0;
    while (i < v.size() && sub[i] == v[i]) sub[i++] = 0;
    if (i == v.size()) break;
    ++sub[i];
    if (sub == v) continue;
    Weight alpha = 0;
    for (std::size_t j = 0; j < v.size(); ++j) alpha += q.theta()[j] * static_cast<Weight>(sub[j]);
    if (alpha < 0) continue;
    std::vector<std::vector<Weight>> per_vertex(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
      per_vertex[j].assign(sub[j], 0);
      per_vertex[j].resize(v[j], -1);
    }
    out.push_back(make_stratum(q, sub, quiver_one_ps(q, per_vertex), conv));
  }
  // Lexicographic order on d' for stable output.
  std::sort(out.begin(), out.end(), [](const StratumClass& a, const StratumClass& b) {
    return std::get<std::vector<std::size_t>>(a.descriptor) < std::get<std::vector<std::size_t>>(b.descriptor);
  });
  return out;
}

std::vector<StratumClass> control_strata(const ControlSpec& c, OrbitConvention conv) {
  if (c.n == 0 || c.m == 0) throw DomainError("control family needs n >= 1 and m >= 1");
  std::vector<StratumClass> out;
  // For n = 1 the only uncontrollable pairs have B = 0, destabilized by the
  // r = 0 class; for n >= 2 those pairs already lie over a nonzero invariant
  // subspace.
  const std::size_t first = c.n == 1 ? 0 : 1;
  const std::size_t last = c.n == 1 ? 0 : c.n - 1;
  for (std::size_t r = first; r <= last; ++r) {
    std::vector<Weight> w(c.n, -1);
    std::fill(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r), 0);
    out.push_back(make_stratum(c, r, OnePS{{w}, {}}, conv));
  }
  return out;
}

std::vector<StratumClass> dag_strata(const DagSpec& d, OrbitConvention conv) {
  if (d.n == 0 || d.k == 0) throw DomainError("DAG family needs n >= 1 and k >= 1");
  std::vector<StratumClass> out;
  for (std::size_t j = 1; j <= d.k; ++j) {
    std::vector<Weight> w(d.k, 0);
    std::fill(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(j), -1);
    out.push_back(make_stratum(d, j, OnePS{{w}, {-static_cast<Weight>(j)}}, conv));
  }
  return out;
}

}  // namespace

std::vector<StratumClass> enumerate_strata(const FamilySpec& f, OrbitConvention conv) {
  return std::visit(overloaded{
                        [&](const QuiverSpec& q) { return quiver_strata(q, conv); },
                        [&](const ControlSpec& c) { return control_strata(c, conv); },
                        [&](const DagSpec& d) { return dag_strata(d, conv); },
                    },
                    f);
}

StabilityStatus status(const ModelInstance& x) {
  return std::visit(overloaded{
                        [](const ThinQuiverRep& r) { return quiver_thin_status(r); },
                        [](const ControlInstance& c) { return control_status(c); },
                        [](const DagInstance& d) { return dag_status(d); },
                    },
                    x);
}

}  // namespace gitstab
