#include "ykit/linear_solve.hpp"

#include <stdexcept>

namespace ykit {

std::vector<std::size_t> rref(Matrix<Rational>& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // First nonzero pivot in column c at or below row r.
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix<Rational> m) { return rref(m).size(); }

std::vector<std::vector<Rational>> kernel_q(const Matrix<Rational>& m) {
  Matrix<Rational> a = m;
  const std::vector<std::size_t> pivots = rref(a);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free_c] = Rational(1);
    for (std::size_t rr = 0; rr < pivots.size(); ++rr)
      v[pivots[rr]] = -a(rr, free_c);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix<Rational> left_inverse(const Matrix<Rational>& b) {
  const std::size_t d = b.rows(), m = b.cols();
  if (m > d) throw std::invalid_argument("left_inverse: more columns than rows");
  // Row-reduce [B | I_d]; the first m rows of the right block then satisfy
  // L B = I_m provided B has full column rank.
  Matrix<Rational> aug(d, m + d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < m; ++j) aug(i, j) = b(i, j);
    aug(i, m + i) = Rational(1);
  }
  const auto pivots = rref(aug);
  std::size_t lead = 0;
  for (std::size_t k = 0; k < pivots.size() && pivots[k] < m; ++k) ++lead;
  if (lead != m)
    throw std::invalid_argument("left_inverse: columns are linearly dependent");
  Matrix<Rational> l(m, d);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < d; ++j) l(i, j) = aug(i, m + j);
  return l;
}

std::vector<std::vector<Rational>> kernel_rf(
    const Matrix<RationalFunction>& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  // Clear denominators row by row, then stack the coefficient of every
  // power of u as its own rational row.
  std::vector<std::vector<Polynomial>> cleared(rows);
  std::size_t total = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    Polynomial lcm(1);
    for (std::size_t j = 0; j < cols; ++j) {
      const Polynomial& den = m(i, j).den();
      const Polynomial g = Polynomial::gcd(lcm, den);
      Polynomial quo, rem;
      Polynomial::divrem(den, g, quo, rem);
      lcm *= quo;
    }
    cleared[i].resize(cols);
    int deg = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      Polynomial quo, rem;
      Polynomial::divrem(lcm, m(i, j).den(), quo, rem);
      cleared[i][j] = m(i, j).num() * quo;
      deg = std::max(deg, cleared[i][j].degree());
    }
    total += static_cast<std::size_t>(deg + 1);
  }
  Matrix<Rational> stacked(total, cols);
  std::size_t at = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    int deg = 0;
    for (std::size_t j = 0; j < cols; ++j)
      deg = std::max(deg, cleared[i][j].degree());
    for (int k = 0; k <= deg; ++k, ++at)
      for (std::size_t j = 0; j < cols; ++j)
        stacked(at, j) = cleared[i][j].coeff(k);
  }
  return kernel_q(stacked);
}

}  // namespace ykit
