#include "ykit/polynomial.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ykit {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  trim();
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::monomial(const Rational& c, int k) {
  if (k < 0) throw std::invalid_argument("Polynomial::monomial: negative k");
  if (c.is_zero()) return Polynomial();
  Polynomial p;
  p.c_.assign(static_cast<std::size_t>(k) + 1, Rational(0));
  p.c_.back() = c;
  return p;
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::compose_linear(const Rational& s,
                                      const Rational& t) const {
  // Horner in the polynomial ring: acc = acc*(s*u + t) + c_k.
  Polynomial lin{t, s};
  Polynomial acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= lin;
    acc += Polynomial(*it);
  }
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      r[i + j] += c_[i] * o.c_[j];
    }
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

void Polynomial::divrem(const Polynomial& num, const Polynomial& den,
                        Polynomial& quo, Polynomial& rem) {
  if (den.is_zero())
    throw std::domain_error("Polynomial::divrem: division by zero");
  quo = Polynomial();
  rem = num;
  const Rational lead_inv = den.leading().inverse();
  const int dd = den.degree();
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int k = rem.degree() - dd;
    const Rational c = rem.leading() * lead_inv;
    quo += monomial(c, k);
    rem -= monomial(c, k) * den;
  }
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial quo, rem;
    divrem(a, b, quo, rem);
    a = std::move(b);
    b = std::move(rem);
  }
  return a.monic();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial r(*this);
  r *= leading().inverse();
  return r;
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    const bool unit = mag.is_one() && k > 0;
    if (!unit) os << mag.str();
    if (k >= 1) {
      if (!unit) os << "*";
      os << var;
      if (k >= 2) os << "^" << k;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.str();
}

}  // namespace ykit
