#include "ykit/rational_function.hpp"

#include <ostream>
#include <stdexcept>

namespace ykit {

namespace {
// The stored denominator with the empty-means-one compression undone.
const Polynomial& eff_den(const Polynomial& d) {
  static const Polynomial kOne{Rational(1)};
  return d.is_zero() ? kOne : d;
}
}  // namespace

RationalFunction::RationalFunction(const Polynomial& num,
                                   const Polynomial& den)
    : num_(num), den_(den) {
  if (den_.is_zero())
    throw std::domain_error("RationalFunction: zero denominator");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial();
    return;
  }
  if (den_.is_zero()) {  // compressed 1: numerator nonzero, nothing to reduce
    return;
  }
  Polynomial g = Polynomial::gcd(num_, den_);
  if (g.degree() > 0) {
    Polynomial quo, rem;
    Polynomial::divrem(num_, g, quo, rem);
    num_ = quo;
    Polynomial::divrem(den_, g, quo, rem);
    den_ = quo;
  }
  const Rational lead = den_.leading();
  if (!lead.is_one()) {
    const Rational inv = lead.inverse();
    num_ *= inv;
    den_ *= inv;
  }
  if (den_.is_one()) den_ = Polynomial();
}

Rational RationalFunction::eval(const Rational& x) const {
  if (den_.is_zero()) return num_.eval(x);
  const Rational d = den_.eval(x);
  if (d.is_zero())
    throw std::domain_error("RationalFunction::eval at a pole (u = " +
                            x.str() + ")");
  return num_.eval(x) / d;
}

RationalFunction RationalFunction::compose_linear(const Rational& s,
                                                  const Rational& t) const {
  if (s.is_zero())
    throw std::invalid_argument("RationalFunction::compose_linear: s == 0");
  if (den_.is_zero()) return RationalFunction(num_.compose_linear(s, t));
  return RationalFunction(num_.compose_linear(s, t),
                          den_.compose_linear(s, t));
}

std::optional<Rational> RationalFunction::value_at_infinity() const {
  const int dn = num_.degree(), dd = den_degree();
  if (dn > dd) return std::nullopt;
  if (dn < dd) return Rational(0);
  if (num_.is_zero()) return Rational(0);
  return num_.leading() / den().leading();
}

std::vector<Rational> RationalFunction::series_coefficients(int order) const {
  if (!is_proper())
    throw std::domain_error(
        "RationalFunction::series_coefficients: not proper");
  if (order < 0) return {};
  // With den monic of degree m and f = sum_k c_k u^{-k}, matching the
  // coefficient of u^{m-k} in num = den * (sum c_k u^{-k}) gives
  //   c_k = num[m-k] - sum_{j=1..k} den[m-j] * c_{k-j}.
  const int m = den_degree();
  const Polynomial& d = den();
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
  for (int k = 0; k <= order; ++k) {
    Rational acc = num_.coeff(m - k);
    for (int j = 1; j <= k && j <= m; ++j)
      acc -= d.coeff(m - j) * c[static_cast<std::size_t>(k - j)];
    c[static_cast<std::size_t>(k)] = acc;
  }
  return c;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r(*this);
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  num_ = num_ * eff_den(o.den_) + o.num_ * eff_den(den_);
  den_ = eff_den(den_) * eff_den(o.den_);
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  num_ = num_ * eff_den(o.den_) - o.num_ * eff_den(den_);
  den_ = eff_den(den_) * eff_den(o.den_);
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ = eff_den(den_) * eff_den(o.den_);
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero())
    throw std::domain_error("RationalFunction: division by zero");
  num_ *= eff_den(o.den_);
  den_ = eff_den(den_) * o.num_;
  canonicalize();
  return *this;
}

RationalFunction RationalFunction::reciprocal() const {
  if (is_zero())
    throw std::domain_error("RationalFunction: reciprocal of zero");
  return RationalFunction(den(), num_);
}

RationalFunction RationalFunction::pow(long e) const {
  if (e == 0) return RationalFunction(1);
  RationalFunction base = e > 0 ? *this : reciprocal();
  unsigned long n = e > 0 ? static_cast<unsigned long>(e)
                          : static_cast<unsigned long>(-e);
  RationalFunction acc(1);
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

std::string RationalFunction::str(const std::string& var) const {
  if (den_.is_zero()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
  return os << f.str();
}

}  // namespace ykit
