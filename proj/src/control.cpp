#include "gitstab/errors.hpp"
#include "gitstab/families.hpp"
#include "gitstab/linalg.hpp"

namespace gitstab {

RationalMatrix controllability_matrix(const ControlInstance& c) {
  const std::size_t n = c.n(), m = c.m();
  RationalMatrix out(n, n * m);
  RationalMatrix block = c.b();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) out(i, p * m + j) = block(i, j);
    if (p + 1 < n) block = c.a() * block;
  }
  return out;
}

StabilityStatus control_status(const ControlInstance& c) {
  // The rank of the controllability matrix is the dimension of the smallest
  // A-invariant subspace containing Im B.
  const std::size_t r = rational_rank(controllability_matrix(c));
  StabilityStatus st{Family::Control, Verdict::Stable, "controllable", r, {}, {}};
  if (r < c.n()) {
    st.verdict = Verdict::Unstable;
    st.reason = "not controllable: Im B lies in an A-invariant subspace of dimension " + std::to_string(r);
  }
  return st;
}

}  // namespace gitstab
