#include "ykit/drinfeld.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <gmpxx.h>

namespace ykit {

namespace {

// All positive divisors of |v|, v a nonzero integer, by trial division.
std::vector<mpz_class> positive_divisors(mpz_class v) {
  v = abs(v);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      small.push_back(d);
      mpz_class q = v / d;
      if (q != d) large.push_back(q);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

RootFactorization factor_rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  RootFactorization out;
  out.leading = p.leading();

  Polynomial work = p.monic();

  // Deflate roots at zero first: they carry no nonzero constant term for
  // the rational root theorem to look at.
  while (work.degree() >= 1 && work.coeff(0).is_zero()) {
    out.roots.emplace_back(0);
    Polynomial quo, rem;
    Polynomial::divrem(work, Polynomial::u(), quo, rem);
    work = quo;
  }

  if (work.degree() >= 1) {
    // Scale to integer coefficients: candidates are +-(p/q) with
    // p | constant term and q | leading coefficient.
    mpz_class den_lcm = 1;
    for (const Rational& c : work.coeffs()) {
      mpz_class d(c.den_str());
      den_lcm = lcm(den_lcm, d);
    }
    std::vector<mpz_class> int_coeffs;
    for (const Rational& c : work.coeffs()) {
      mpq_class scaled = c.raw() * mpq_class(den_lcm);
      int_coeffs.push_back(mpz_class(scaled));  // exact: denominator divides
    }
    const mpz_class a0 = int_coeffs.front();
    const mpz_class ad = int_coeffs.back();

    std::vector<Rational> candidates;
    for (const mpz_class& pnum : positive_divisors(a0)) {
      for (const mpz_class& qden : positive_divisors(ad)) {
        mpq_class r(pnum, qden);
        r.canonicalize();
        candidates.emplace_back(r);
        candidates.emplace_back(mpq_class(-r));
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());

    for (const Rational& r : candidates) {
      while (work.degree() >= 1 && work.eval(r).is_zero()) {
        out.roots.push_back(r);
        Polynomial quo, rem;
        Polynomial::divrem(work, Polynomial({-r, Rational(1)}), quo, rem);
        work = quo;
      }
    }
  }

  std::sort(out.roots.begin(), out.roots.end());
  out.remainder = work;
  out.complete = (work.degree() == 0);
  return out;
}

std::string DrinfeldTuple::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i) os << ", ";
    os << polys[i].str("u");
  }
  os << ")";
  return os.str();
}

TelescopeResult telescope_ratio(std::vector<Rational> num_roots,
                                std::vector<Rational> den_roots,
                                const Rational& step) {
  TelescopeResult res;
  if (step.sign() <= 0) {
    res.message = "step must be positive";
    return res;
  }
  if (num_roots.size() != den_roots.size()) {
    res.message = "numerator and denominator degrees differ; ratio does not tend to 1";
    return res;
  }
  std::sort(num_roots.begin(), num_roots.end());
  std::sort(den_roots.begin(), den_roots.end());

  Polynomial P({Rational(1)});
  std::vector<bool> used(den_roots.size(), false);

  for (const Rational& s : num_roots) {
    // Smallest denominator root t = s + m*step with integer m >= 1.
    long best = -1;
    for (std::size_t j = 0; j < den_roots.size(); ++j) {
      if (used[j]) continue;
      Rational diff = (den_roots[j] - s) / step;
      if (diff.sign() > 0 && diff.is_integer() &&
          (best < 0 || den_roots[j] < den_roots[best])) {
        best = static_cast<long>(j);
      }
    }
    if (best < 0) {
      res.message = "numerator root " + s.str() +
                    " has no denominator partner at a positive multiple of step " +
                    step.str();
      return res;
    }
    used[best] = true;
    long m = ((den_roots[best] - s) / step).num_long();
    for (long j = 1; j <= m; ++j) {
      Rational shift = s + step * Rational(j);
      P = P * Polynomial({-shift, Rational(1)});
    }
  }
  res.ok = true;
  res.poly = P;
  return res;
}

TelescopeResult telescope_ratio(const RationalFunction& ratio,
                                const Rational& step) {
  TelescopeResult res;
  if (ratio.is_zero()) {
    res.message = "ratio is zero";
    return res;
  }
  if (ratio.num().degree() != ratio.den().degree() ||
      !ratio.num().leading().is_one()) {
    res.message = "ratio does not tend to 1 at infinity";
    return res;
  }
  RootFactorization num_f = factor_rational_roots(ratio.num());
  RootFactorization den_f = factor_rational_roots(ratio.den());
  if (!num_f.complete || !den_f.complete) {
    res.message = "ratio has an irreducible factor without rational roots: " +
                  (num_f.complete ? den_f.remainder : num_f.remainder).str("u");
    return res;
  }
  return telescope_ratio(num_f.roots, den_f.roots, step);
}

Polynomial drinfeld_from_pairs(const std::vector<Rational>& alphas,
                               const std::vector<Rational>& betas) {
  if (alphas.size() != betas.size())
    throw std::invalid_argument("alphas and betas must have equal length");
  Polynomial P({Rational(1)});
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    Rational diff = alphas[i] - betas[i];
    if (!diff.is_integer() || diff.sign() < 0)
      throw std::invalid_argument(
          "alpha - beta must be a nonnegative integer, got " + diff.str());
    long m = diff.num_long();
    for (long k = 0; k < m; ++k)
      P = P * Polynomial({betas[i] + Rational(k), Rational(1)});
  }
  return P;
}

bool drinfeld_ratio_check(const RationalFunction& mu1,
                          const RationalFunction& mu2, const Polynomial& P,
                          const Rational& step) {
  if (mu2.is_zero()) throw std::invalid_argument("mu2 is zero");
  RationalFunction lhs = mu1 / mu2;
  RationalFunction rhs =
      RationalFunction(P.compose_linear(Rational(1), step)) /
      RationalFunction(P);
  return lhs == rhs;
}

}  // namespace ykit
