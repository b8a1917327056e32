#pragma once

// Exact linear algebra over Q and Q(i).
//
// Rank goes through fraction-free (Bareiss) elimination after clearing
// denominators row by row, over Z for rational input and over the Gaussian
// integers Z[i] for complex input. The remaining routines (row reduction,
// null space, solve, inverse) are plain field elimination.

#include <cstddef>
#include <vector>

#include "gitstab/matrix.hpp"

namespace gitstab {

std::size_t rational_rank(const RationalMatrix& m);
std::size_t complex_rank(const ComplexMatrix& m);

/// Reduced row echelon form with the list of pivot columns.
struct RowReduction {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
};

RowReduction row_reduce(const RationalMatrix& m);

/// Basis of {x : m x = 0}, one column per basis vector.
RationalMatrix null_space(const RationalMatrix& m);

/// Unique solution of a square nonsingular system; throws PreconditionError
/// when the matrix is singular.
std::vector<Rational> solve(const RationalMatrix& a, const std::vector<Rational>& b);

RationalMatrix inverse(const RationalMatrix& a);
ComplexMatrix inverse(const ComplexMatrix& a);

/// Indices of the columns that are not in the span of the columns before them.
std::vector<std::size_t> independent_columns(const RationalMatrix& m);

}  // namespace gitstab
