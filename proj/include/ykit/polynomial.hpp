#ifndef YKIT_POLYNOMIAL_HPP
#define YKIT_POLYNOMIAL_HPP

// Dense univariate polynomials over the rationals.
//
// Invariant (canonical form): the coefficient vector is stored lowest degree
// first and never has a trailing zero; the zero polynomial is the empty
// vector and reports degree() == -1.  Degrees in this library stay tiny
// (single digits), so dense storage and schoolbook arithmetic are the right
// tools.

#include <initializer_list>
#include <string>
#include <vector>

#include "ykit/rational.hpp"

namespace ykit {

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c) { if (!c.is_zero()) c_ = {c}; }
  Polynomial(long c) : Polynomial(Rational(c)) {}

  // Coefficients lowest degree first; trailing zeros are trimmed.
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs)
      : Polynomial(std::vector<Rational>(coeffs)) {}

  // The monomial c * u^k.
  static Polynomial monomial(const Rational& c, int k);
  // The variable u itself.
  static Polynomial u() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

  // Coefficient of u^k (zero outside the stored range).
  Rational coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(k)];
  }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational eval(const Rational& x) const;

  // p(s*u + t): composition with a degree-one polynomial.
  Polynomial compose_linear(const Rational& s, const Rational& t) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) {
    return a *= b;
  }
  friend Polynomial operator*(Polynomial a, const Rational& c) {
    return a *= c;
  }
  friend Polynomial operator*(const Rational& c, Polynomial a) {
    return a *= c;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  // Quotient and remainder with deg(rem) < deg(divisor).
  // Throws std::domain_error on division by the zero polynomial.
  static void divrem(const Polynomial& num, const Polynomial& den,
                     Polynomial& quo, Polynomial& rem);

  // Monic greatest common divisor (Euclid); gcd(0,0) == 0.
  static Polynomial gcd(Polynomial a, Polynomial b);

  Polynomial monic() const;

  // Human-readable form such as "1 - 2*u + u^2"; "0" for zero.
  std::string str(const std::string& var = "u") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace ykit

#endif  // YKIT_POLYNOMIAL_HPP
