#ifndef YKIT_MATRIX_HPP
#define YKIT_MATRIX_HPP

// Dense matrices templated on an exact scalar (Rational, Polynomial or
// RationalFunction).  Storage is always dense and row-major; products skip
// zero entries, so the highly structured operators this library builds
// multiply at close to their support cost while keeping a single simple
// format.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ykit {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& x : a_)
      if (!x.is_zero()) ++n;
    return n;
  }

  Matrix operator-() const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o, "+=");
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (!o.a_[i].is_zero()) a_[i] += o.a_[i];
    return *this;
  }

  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o, "-=");
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (!o.a_[i].is_zero()) a_[i] -= o.a_[i];
    return *this;
  }

  Matrix& operator*=(const T& c) {
    for (auto& x : a_)
      if (!x.is_zero()) x *= c;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& c) { return a *= c; }
  friend Matrix operator*(const T& c, Matrix a) { return a *= c; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("Matrix product: shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (bkj.is_zero()) continue;
          r(i, j) += aik * bkj;
        }
      }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) {
    return !(a == b);
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero()) r(j, i) = (*this)(i, j);
    return r;
  }

  T trace() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix::trace: not square");
    T t{};
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  // Matrix-vector product with zero skipping on both factors.
  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_)
      throw std::invalid_argument("Matrix::apply: shape mismatch");
    std::vector<T> r(rows_);
    for (std::size_t k = 0; k < cols_; ++k) {
      if (v[k].is_zero()) continue;
      for (std::size_t i = 0; i < rows_; ++i) {
        const T& aik = (*this)(i, k);
        if (!aik.is_zero()) r[i] += aik * v[k];
      }
    }
    return r;
  }

  // Entry-wise conversion (e.g. evaluate a RationalFunction matrix).
  template <class U, class Fn>
  Matrix<U> map(Fn&& fn) const {
    Matrix<U> r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero()) r(i, j) = fn((*this)(i, j));
    return r;
  }

 private:
  void check_same_shape(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument(std::string("Matrix ") + op +
                                  ": shape mismatch");
  }
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

// Kronecker product; index (i1*rows_b + i2, j1*cols_b + j2).
template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const T& x = a(i1, j1);
      if (x.is_zero()) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
          const T& y = b(i2, j2);
          if (y.is_zero()) continue;
          r(i1 * b.rows() + i2, j1 * b.cols() + j2) = x * y;
        }
    }
  return r;
}

}  // namespace ykit

#endif  // YKIT_MATRIX_HPP
