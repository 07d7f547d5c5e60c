#ifndef YKIT_RATIONAL_HPP
#define YKIT_RATIONAL_HPP

// Exact rational scalar: a thin wrapper around GMP's mpq_class that keeps
// every value in canonical form (numerator and denominator coprime,
// denominator positive, zero represented as 0/1).  All arithmetic is exact;
// there is no floating point anywhere in this library.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace ykit {

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<long int>(n)) {}
  Rational(int n) : v_(static_cast<long int>(n)) {}

  // n/d, reduced.  Throws std::invalid_argument if d == 0.
  Rational(long n, long d);

  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Parses "p", "-p", "p/q" (arbitrary precision, optional sign on p).
  // Throws std::invalid_argument on malformed input or zero denominator.
  static Rational parse(const std::string& s);

  // "p" if the denominator is 1, otherwise "p/q" with q > 0.
  std::string str() const;

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // Numerator / denominator as decimal strings (always exact).
  std::string num_str() const { return v_.get_num().get_str(); }
  std::string den_str() const { return v_.get_den().get_str(); }

  // Numerator / denominator as long; throws std::overflow_error if they
  // do not fit.  Convenient for small structured values (weights, shifts).
  long num_long() const;
  long den_long() const;

  const mpq_class& raw() const { return v_; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  // Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.v_ != b.v_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.v_ <= b.v_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return b <= a;
  }

  Rational inverse() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  // Integer exponent; negative exponents invert (throws on 0^negative).
  Rational pow(long e) const;

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Convenience literal-ish helper: q(1,2) == 1/2.
inline Rational q(long n, long d = 1) { return Rational(n, d); }

}  // namespace ykit

#endif  // YKIT_RATIONAL_HPP
