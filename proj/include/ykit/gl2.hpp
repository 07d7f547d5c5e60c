#ifndef YKIT_GL2_HPP
#define YKIT_GL2_HPP

// Evaluation modules for the two-row RTT algebra (R = 1 - P/u), their
// tensor products, the quantum determinant, and the ordering under which a
// tensor product of evaluation modules is a highest weight module.  The
// classification data (Drinfeld polynomial extraction and checks) lives in
// drinfeld.hpp; this header supplies the modules those checks run on.

#include <cstddef>
#include <optional>
#include <vector>

#include "ykit/matrix.hpp"
#include "ykit/rational.hpp"
#include "ykit/rational_function.hpp"
#include "ykit/trep.hpp"

namespace ykit {

// Highest weight (alpha, beta) of a finite-dimensional evaluation module,
// plus the evaluation point: t(u) acts through u - shift.
struct Gl2EvalParams {
  Rational alpha;
  Rational beta;
  Rational shift;

  // Throws std::invalid_argument unless alpha - beta is a nonnegative
  // integer (the finite-dimensionality condition).
  explicit Gl2EvalParams(Rational alpha_in, Rational beta_in,
                         Rational shift_in = Rational(0));

  // alpha - beta as a machine integer.
  long level() const;
};

// The (alpha - beta + 1)-dimensional module on the ladder basis
// zeta_r = (E_21)^r zeta, r = 0 .. alpha - beta:
//
//   t_ij(u)    = delta_ij + E_ij / (u - shift),
//   E_11 zeta_r = (alpha - r) zeta_r,   E_22 zeta_r = (beta + r) zeta_r,
//   E_21 zeta_r = zeta_{r+1},           E_12 zeta_r = r (alpha-beta-r+1) zeta_{r-1}.
TRep gl2_eval_module(const Gl2EvalParams& p);

// D(u) = t_11(u) t_22(u-1) - t_21(u) t_12(u-1) as a module endomorphism.
// Central, so scalar on highest-weight cyclic modules: mu1(u) mu2(u-1).
Matrix<RationalFunction> quantum_determinant(const TRep& rep);

// If m is a scalar multiple of the identity, returns that scalar.
std::optional<RationalFunction> scalar_of(const Matrix<RationalFunction>& m);

// Order evaluation parameters (alpha_i, beta_i) so that for every position i
// (in the new order): if { alpha_p - beta_q : p, q >= i } contains
// nonnegative integers, alpha_i - beta_i is minimal among them.  Under this
// ordering the tensor product of the evaluation modules is highest weight
// with a one-dimensional singular space.  Deterministic: ties break by
// original index; when no remaining pair attains the minimum (the condition
// is unsatisfiable), the smallest available difference is taken so the
// result is still a permutation and downstream checks report the failure.
std::vector<std::size_t> decomptp_order(const std::vector<Rational>& alphas,
                                        const std::vector<Rational>& betas);

}  // namespace ykit

#endif  // YKIT_GL2_HPP
