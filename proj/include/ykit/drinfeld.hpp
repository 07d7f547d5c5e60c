#ifndef YKIT_DRINFELD_HPP
#define YKIT_DRINFELD_HPP

/*
 * Drinfeld-polynomial machinery.
 *
 * Highest weights of the modules built in this library are tuples of
 * rational functions.  A weight tuple corresponds to a finite-dimensional
 * irreducible module exactly when certain consecutive-weight ratios are
 * "telescoping": each ratio must equal P(u + step) / P(u) for a single
 * monic polynomial P and a fixed step (1, 1/2 or 2 depending on the
 * condition).  This file provides
 *
 *   - rational-root factorization of polynomials (all our ratios factor
 *     into rational linear factors; we report failure honestly when a
 *     factor does not),
 *   - the telescoping extractor: given the factored numerator/denominator
 *     of a ratio, pair roots into chains differing by step and produce the
 *     unique monic P, or name the unpaired root,
 *   - the explicit product formula for the Drinfeld polynomial of a tensor
 *     product of two-dimensional-algebra evaluation modules, and
 *   - the direct ratio check  mu1(u)/mu2(u) == P(u+step)/P(u).
 *
 * Uniqueness of P: if P(u+step)/P(u) == Q(u+step)/Q(u) then P/Q is
 * invariant under u -> u + step; a nonconstant rational function over Q
 * cannot be (its finitely many zeros would be shifted into a new zero),
 * so monic P is unique.  The greedy minimal-difference pairing below
 * therefore either finds the unique solution or proves there is none.
 */

#include <optional>
#include <string>
#include <vector>

#include "ykit/polynomial.hpp"
#include "ykit/rational.hpp"
#include "ykit/rational_function.hpp"

namespace ykit {

// Result of factoring a polynomial into rational linear factors.
struct RootFactorization {
  std::vector<Rational> roots;  // with multiplicity, sorted ascending
  Rational leading;             // leading coefficient
  bool complete = false;        // true iff the product of linear factors
                                // times `leading` reproduces the input
  Polynomial remainder;         // the rational-root-free cofactor (monic)
};

// Factor p into leading * prod (u - root) * remainder, where remainder has
// no rational roots.  Uses the rational root theorem on the integer-scaled
// polynomial with repeated deflation, so multiplicities are found exactly.
RootFactorization factor_rational_roots(const Polynomial& p);

// A tuple of monic polynomials, one per classification condition.
struct DrinfeldTuple {
  std::vector<Polynomial> polys;

  bool operator==(const DrinfeldTuple& other) const = default;
  std::string str() const;
};

// Result of a telescoping extraction.
struct TelescopeResult {
  bool ok = false;
  Polynomial poly;      // the monic P with ratio == P(u+step)/P(u), if ok
  std::string message;  // on failure: which root could not be paired / why
};

// Given the multisets of numerator and denominator roots of a ratio that
// tends to 1 at infinity, find the unique monic P with
//   ratio == P(u + step) / P(u).
// A chain P_c = (u - s - step)(u - s - 2 step)...(u - s - m step) has
//   P_c(u+step)/P_c(u) = (u - s) / (u - s - m step),
// so every numerator root s must pair with a denominator root s + m*step,
// m a positive integer.  Greedy minimal-m pairing is forced: chains from
// the smallest numerator root upward cannot overlap alternatives.
TelescopeResult telescope_ratio(std::vector<Rational> num_roots,
                                std::vector<Rational> den_roots,
                                const Rational& step);

// Convenience wrapper: factor the ratio (which must be monic/monic of equal
// degree, i.e. tend to 1 at infinity) and telescope.
TelescopeResult telescope_ratio(const RationalFunction& ratio,
                                const Rational& step);

// The product formula for the Drinfeld polynomial of a tensor product of
// evaluation modules with highest weights (alpha_i, beta_i):
//   P(u) = prod_i (u + beta_i)(u + beta_i + 1) ... (u + alpha_i - 1).
// Requires alpha_i - beta_i to be a nonnegative integer.
Polynomial drinfeld_from_pairs(const std::vector<Rational>& alphas,
                               const std::vector<Rational>& betas);

// Exact check  mu1(u) / mu2(u) == P(u + step) / P(u).
bool drinfeld_ratio_check(const RationalFunction& mu1,
                          const RationalFunction& mu2, const Polynomial& P,
                          const Rational& step);

}  // namespace ykit

#endif  // YKIT_DRINFELD_HPP
