#ifndef YKIT_RATIONAL_FUNCTION_HPP
#define YKIT_RATIONAL_FUNCTION_HPP

// Rational functions in one variable over the rationals.
//
// Invariant (canonical form): numerator and denominator are coprime and the
// denominator is monic; zero is 0/1.  With this normalization, structural
// equality of (num, den) coincides with equality of rational functions, so
// operator== is both exact and cheap.
//
// Storage note: a denominator equal to the constant 1 is stored as the
// empty coefficient vector.  Large representation matrices are mostly zero
// entries, and this keeps each of those entries free of heap allocations;
// den() transparently presents the constant 1.  The compression is strict
// (1 is never stored materialized), so structural equality remains valid.

#include <optional>
#include <string>
#include <vector>

#include "ykit/polynomial.hpp"
#include "ykit/rational.hpp"

namespace ykit {

class RationalFunction {
 public:
  RationalFunction() = default;  // zero
  RationalFunction(const Rational& c) : num_(c) {}
  RationalFunction(long c) : num_(Rational(c)) {}
  RationalFunction(const Polynomial& p) : num_(p) {}

  // num/den, canonicalized.  Throws std::domain_error if den is zero.
  RationalFunction(const Polynomial& num, const Polynomial& den);

  // The variable u.
  static RationalFunction u() { return RationalFunction(Polynomial::u()); }
  // 1 / (u - c).
  static RationalFunction inv_shift(const Rational& c) {
    return RationalFunction(Polynomial(1), Polynomial{-c, Rational(1)});
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const {
    static const Polynomial kOne{Rational(1)};
    return den_.is_zero() ? kOne : den_;
  }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.is_zero(); }
  // deg num <= deg den (bounded as u -> infinity).
  bool is_proper() const { return num_.degree() <= den_degree(); }

  bool has_pole_at(const Rational& x) const {
    return !den_.is_zero() && den_.eval(x).is_zero();
  }

  // Exact value; throws std::domain_error at a pole.
  Rational eval(const Rational& x) const;

  // f(s*u + t); s must be nonzero.
  RationalFunction compose_linear(const Rational& s, const Rational& t) const;
  // f(u + t), the shift most relations here are built from.
  RationalFunction shift(const Rational& t) const {
    return compose_linear(Rational(1), t);
  }

  // Limit as u -> infinity when finite, std::nullopt when the function
  // diverges (deg num > deg den).
  std::optional<Rational> value_at_infinity() const;

  // Coefficients c_0..c_order of the expansion f = sum_k c_k u^{-k}.
  // Requires is_proper(); throws std::domain_error otherwise.
  std::vector<Rational> series_coefficients(int order) const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a,
                                    const RationalFunction& b) {
    return a += b;
  }
  friend RationalFunction operator-(RationalFunction a,
                                    const RationalFunction& b) {
    return a -= b;
  }
  friend RationalFunction operator*(RationalFunction a,
                                    const RationalFunction& b) {
    return a *= b;
  }
  friend RationalFunction operator/(RationalFunction a,
                                    const RationalFunction& b) {
    return a /= b;
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  RationalFunction reciprocal() const;
  RationalFunction pow(long e) const;

  std::string str(const std::string& var = "u") const;

 private:
  void canonicalize();
  // Degree of the denominator with the empty-means-one compression applied.
  int den_degree() const { return den_.is_zero() ? 0 : den_.degree(); }

  Polynomial num_;
  Polynomial den_;  // empty <=> denominator 1 (see storage note above)
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace ykit

#endif  // YKIT_RATIONAL_FUNCTION_HPP
