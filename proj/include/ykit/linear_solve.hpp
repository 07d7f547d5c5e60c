#ifndef YKIT_LINEAR_SOLVE_HPP
#define YKIT_LINEAR_SOLVE_HPP

// Exact linear algebra over the rationals: reduced row echelon form with
// first-nonzero pivoting (there is no rounding, so no pivot-magnitude
// concerns), kernel bases, left inverses, and restriction of an operator to
// an invariant subspace via exact solves.

#include <vector>

#include "ykit/matrix.hpp"
#include "ykit/rational.hpp"
#include "ykit/rational_function.hpp"

namespace ykit {

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(Matrix<Rational>& m);

std::size_t rank(Matrix<Rational> m);

// Basis of { v : M v = 0 }, one vector per non-pivot column, in the
// standard free-variable parametrization (deterministic).
std::vector<std::vector<Rational>> kernel_q(const Matrix<Rational>& m);

// L with L * B = I for a full-column-rank B; throws std::invalid_argument
// if the columns are dependent.
Matrix<Rational> left_inverse(const Matrix<Rational>& b);

// Constant rational vectors v with M(u) v = 0 identically in u, found by
// clearing each row's denominators and stacking the coefficient rows of
// every power of u into one rational system.
std::vector<std::vector<Rational>> kernel_rf(const Matrix<RationalFunction>& m);

// Matrix of `op` in the given basis of an op-invariant subspace, via one
// exact left inverse of the basis matrix.  Throws std::invalid_argument
// (naming the offending basis vector) if the span is not invariant.
template <class T>
Matrix<T> restrict_to_subspace(const Matrix<T>& op,
                               const std::vector<std::vector<Rational>>& basis) {
  const std::size_t d = op.rows();
  const std::size_t mdim = basis.size();
  if (op.cols() != d) throw std::invalid_argument("restrict: op not square");
  Matrix<Rational> b(d, mdim);
  for (std::size_t j = 0; j < mdim; ++j) {
    if (basis[j].size() != d)
      throw std::invalid_argument("restrict: basis vector of wrong dimension");
    for (std::size_t i = 0; i < d; ++i) b(i, j) = basis[j][i];
  }
  const Matrix<Rational> left = left_inverse(b);

  Matrix<T> result(mdim, mdim);
  for (std::size_t j = 0; j < mdim; ++j) {
    std::vector<T> w(d);
    for (std::size_t k = 0; k < d; ++k) {
      if (basis[j][k].is_zero()) continue;
      const T bk = T(basis[j][k]);
      for (std::size_t i = 0; i < d; ++i) {
        const T& a = op(i, k);
        if (!a.is_zero()) w[i] += a * bk;
      }
    }
    // Candidate coordinates c = L w, then verify B c == w exactly.
    std::vector<T> c(mdim);
    for (std::size_t r = 0; r < mdim; ++r)
      for (std::size_t k = 0; k < d; ++k) {
        if (left(r, k).is_zero() || w[k].is_zero()) continue;
        c[r] += T(left(r, k)) * w[k];
      }
    for (std::size_t i = 0; i < d; ++i) {
      T acc{};
      for (std::size_t r = 0; r < mdim; ++r) {
        if (b(i, r).is_zero() || c[r].is_zero()) continue;
        acc += T(b(i, r)) * c[r];
      }
      if (!(acc == w[i]))
        throw std::invalid_argument(
            "restrict: subspace is not invariant (image of basis vector " +
            std::to_string(j) + " leaves the span)");
    }
    for (std::size_t r = 0; r < mdim; ++r) result(r, j) = c[r];
  }
  return result;
}

}  // namespace ykit

#endif  // YKIT_LINEAR_SOLVE_HPP
