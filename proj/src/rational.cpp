#include "ykit/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace ykit {

Rational::Rational(long n, long d) {
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(static_cast<long int>(n), static_cast<long int>(d));
  v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  mpq_class v;
  // mpq_class::set_str accepts "p" and "p/q" but tolerates whitespace
  // variants we do not want; validate the shape first.
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_int(s)) throw std::invalid_argument("Rational::parse: '" + s + "'");
  } else {
    const std::string p = s.substr(0, slash), qq = s.substr(slash + 1);
    if (!is_int(p) || !is_int(qq) || qq[0] == '-' || qq[0] == '+')
      throw std::invalid_argument("Rational::parse: '" + s + "'");
  }
  if (v.set_str(s, 10) != 0)
    throw std::invalid_argument("Rational::parse: '" + s + "'");
  if (v.get_den() == 0)
    throw std::invalid_argument("Rational::parse: zero denominator in '" + s +
                                "'");
  v.canonicalize();
  Rational r;
  r.v_ = v;
  return r;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

long Rational::num_long() const {
  if (!v_.get_num().fits_slong_p())
    throw std::overflow_error("Rational::num_long: numerator too large");
  return v_.get_num().get_si();
}

long Rational::den_long() const {
  if (!v_.get_den().fits_slong_p())
    throw std::overflow_error("Rational::den_long: denominator too large");
  return v_.get_den().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  Rational base = e > 0 ? *this : inverse();
  unsigned long n = e > 0 ? static_cast<unsigned long>(e)
                          : static_cast<unsigned long>(-e);
  Rational acc(1);
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace ykit
