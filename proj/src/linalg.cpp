#include "gitstab/linalg.hpp"

#include <utility>

namespace gitstab {

namespace {

/// Gaussian integer a + bi; the ring Bareiss runs over for complex input.
struct GaussInt {
  mpz_class re{0};
  mpz_class im{0};

  bool is_zero() const { return re == 0 && im == 0; }
  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussInt operator-(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }
};

mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

GaussInt exact_div(const GaussInt& a, const GaussInt& b) {
  const mpz_class norm = b.re * b.re + b.im * b.im;
  const GaussInt num = a * GaussInt{b.re, -b.im};
  return {exact_div(num.re, norm), exact_div(num.im, norm)};
}

bool is_zero(const mpz_class& x) { return x == 0; }
bool is_zero(const GaussInt& x) { return x.is_zero(); }

/// Bareiss elimination on a rectangular matrix stored as rows. Every
/// intermediate entry is a minor of the input, so each division is exact.
template <class Ring>
std::size_t bareiss_rank(std::vector<std::vector<Ring>> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m.front().size();
  Ring prev;
  if constexpr (std::is_same_v<Ring, GaussInt>) {
    prev = GaussInt{1, 0};
  } else {
    prev = 1;
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    const Ring& pivot = m[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const Ring lead = m[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = exact_div(pivot * m[i][j] - lead * m[rank][j], prev);
      }
      m[i][c] = Ring{};
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

mpz_class scaled(const Rational& x, const mpz_class& scale) {
  return exact_div(x.numerator() * scale, x.denominator());
}

/// Field elimination shared by the rational and complex routines.
template <class T>
struct FieldReduction {
  Matrix<T> reduced;
  std::vector<std::size_t> pivots;
};

template <class T>
FieldReduction<T> reduce(Matrix<T> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    const T inv = T(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class T>
Matrix<T> inverse_impl(const Matrix<T>& a) {
  if (a.rows() != a.cols()) throw ShapeError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = T(1);
  }
  auto red = reduce(std::move(aug));
  if (red.pivots.size() < n || (n > 0 && red.pivots.back() != n - 1)) {
    throw PreconditionError("matrix is singular");
  }
  return red.reduced.column_block(n, n);
}

}  // namespace

std::size_t rational_rank(const RationalMatrix& m) {
  std::vector<std::vector<mpz_class>> rows(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class scale = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) scale = lcm(scale, m(i, j).denominator());
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = scaled(m(i, j), scale);
  }
  return bareiss_rank(std::move(rows));
}

std::size_t complex_rank(const ComplexMatrix& m) {
  std::vector<std::vector<GaussInt>> rows(m.rows(), std::vector<GaussInt>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class scale = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      scale = lcm(scale, m(i, j).re().denominator());
      scale = lcm(scale, m(i, j).im().denominator());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      rows[i][j] = GaussInt{scaled(m(i, j).re(), scale), scaled(m(i, j).im(), scale)};
    }
  }
  return bareiss_rank(std::move(rows));
}

RowReduction row_reduce(const RationalMatrix& m) {
  auto r = reduce(m);
  return {std::move(r.reduced), std::move(r.pivots)};
}

RationalMatrix null_space(const RationalMatrix& m) {
  const auto red = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;
  const std::size_t dim = m.cols() - red.pivots.size();
  RationalMatrix basis(m.cols(), dim);
  std::size_t k = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = Rational(1);
    for (std::size_t r = 0; r < red.pivots.size(); ++r) {
      basis(red.pivots[r], k) = -red.reduced(r, free);
    }
    ++k;
  }
  return basis;
}

std::vector<Rational> solve(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (a.rows() != a.cols() || b.size() != a.rows()) throw ShapeError("solve expects a square system");
  const std::size_t n = a.rows();
  RationalMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto red = row_reduce(aug);
  if (red.pivots.size() < n || (n > 0 && red.pivots[n - 1] != n - 1)) {
    throw PreconditionError("linear system is singular");
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = red.reduced(i, n);
  return x;
}

RationalMatrix inverse(const RationalMatrix& a) { return inverse_impl(a); }
ComplexMatrix inverse(const ComplexMatrix& a) { return inverse_impl(a); }

std::vector<std::size_t> independent_columns(const RationalMatrix& m) { return row_reduce(m).pivots; }

}  // namespace gitstab
