#include "gitstab/errors.hpp"
#include "gitstab/families.hpp"
#include "gitstab/linalg.hpp"

namespace gitstab {

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Exact Gram-Schmidt; the input columns must be linearly independent.
std::vector<std::vector<Rational>> orthogonalize(const RationalMatrix& basis) {
  std::vector<std::vector<Rational>> out;
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    auto v = basis.column(j);
    for (const auto& u : out) {
      const Rational c = dot(v, u) / dot(u, u);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * u[i];
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

StabilityStatus dag_status(const DagInstance& d) {
  const std::size_t r = rational_rank(d.parents());
  StabilityStatus st{Family::Dag, Verdict::Stable, "parent block has full column rank: unique MLE", {}, r, {}};
  if (r < d.k()) {
    st.verdict = Verdict::NotStable;
    st.reason = "parent block has rank " + std::to_string(r) + " < k = " + std::to_string(d.k()) +
                ": MLE not unique (unstable or polystable)";
  }
  return st;
}

std::vector<Rational> dag_solve_mle(const DagInstance& d) {
  if (!dag_status(d).is_stable()) {
    throw PreconditionError("parent block is rank-deficient: the normal equations have infinitely many solutions");
  }
  const RationalMatrix x = d.parents();
  const RationalMatrix xt = x.transpose();
  const RationalMatrix y(d.n(), 1, d.child());
  const RationalMatrix rhs = xt * y;
  return solve(xt * x, rhs.column(0));
}

DagInstance dag_stabilize(const DagInstance& d, const Rational& eps) {
  if (eps.is_zero()) throw PreconditionError("stabilization parameter epsilon must be nonzero");
  if (d.n() < d.k()) {
    throw DomainError("cannot stabilize: n = " + std::to_string(d.n()) + " < k = " + std::to_string(d.k()) +
                      ", no n x k matrix has column rank k");
  }
  if (dag_status(d).is_stable()) return d;

  const RationalMatrix x = d.parents();
  const auto pivots = independent_columns(x);
  std::vector<bool> independent(d.k(), false);
  for (auto p : pivots) independent[p] = true;

  // Columns of null(X^T) span col(X)^perp, which has dimension n - rank >= k - rank.
  const auto complement = orthogonalize(null_space(x.transpose()));
  RationalMatrix y = d.samples();
  std::size_t next = 0;
  for (std::size_t j = 0; j < d.k(); ++j) {
    if (independent[j]) continue;
    const auto& z = complement.at(next++);
    for (std::size_t i = 0; i < d.n(); ++i) y(i, j) += eps * z[i];
  }
  return {d.k(), std::move(y)};
}

}  // namespace gitstab
