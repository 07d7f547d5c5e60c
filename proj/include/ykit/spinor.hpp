#ifndef YKIT_SPINOR_HPP
#define YKIT_SPINOR_HPP

// Spinor modules of the odd and even orthogonal kinds, realized on the
// 2^n-dimensional space of polynomials in n anticommuting variables
// xi_1, ..., xi_n (basis: monomials xi_{i_1}...xi_{i_k} with increasing
// indices, encoded as bitmasks in ascending order).  The even orthogonal
// generators preserve monomial parity, so the space splits into the even
// and odd halves.
//
// Index gauge: the stored generator matrices use the same rational gauge
// as the rest of the library, conjugating by S_i = 2^{(sgn i + 1)/2} (only
// the odd orthogonal kind has a 0 label, and only there does the gauge act):
//
//   F(i,j)   = xi_i d_j - delta_ij/2          (i, j > 0)
//   F(-i,-j) = -F(j,i)
//   F(-j,i)  = d_i d_j / 2   (odd orthogonal; no factor for even)
//   F(j,-i)  = 2 xi_i xi_j   (odd orthogonal; no factor for even)
//   F(0,i)   = d_i / 2,   F(i,0)  = xi_i,
//   F(0,-i)  = -xi_i,     F(-i,0) = -d_i / 2
//
// where d_i is the left derivative.  Under the gauge, an off-diagonal
// generator matrix differs from its plain-normalized counterpart by the
// rational factor 2^{(sgn i - sgn j)/2} squared across sign-mixing entries;
// the t-matrix entries scale the same way, which matters when comparing
// with plainly normalized raising/lowering coefficients (see
// raising_identity and lower_pairing below).

#include <vector>

#include "ykit/algebra_kind.hpp"
#include "ykit/hw.hpp"
#include "ykit/lowrank.hpp"
#include "ykit/matrix.hpp"
#include "ykit/rational.hpp"
#include "ykit/trep.hpp"

namespace ykit {

enum class SpinorParity { full, even, odd };

// Basis bookkeeping for the full space or a parity half.
struct SpinorSpace {
  int n = 0;
  SpinorParity parity = SpinorParity::full;
  std::vector<unsigned> masks;  // ascending; bit i-1 set <=> xi_i present

  std::size_t dim() const { return masks.size(); }
  // Position of a monomial mask in this basis; throws if filtered out.
  std::size_t pos(unsigned mask) const;
};

SpinorSpace spinor_space(int n, SpinorParity parity);

// Multiplication by xi_i and the left derivative d_i on the full space,
// indexed 1..n.  Satisfy xi_i d_j + d_j xi_i = delta_ij and the
// anticommutation relations among themselves.
struct FermionicOps {
  int n = 0;
  std::vector<Matrix<Rational>> xi;
  std::vector<Matrix<Rational>> dd;
};

FermionicOps fermionic_ops(int n);

// Gauged generator matrices of the spinor module: the full space for the
// odd orthogonal kind (parity ignored), a parity half for the even one.
// The casimir field is filled only for the kinds whose evaluation maps use
// it (odd orthogonal rank one, even orthogonal rank two); 0 otherwise.
ClassicalIrrep spinor_lie(const AlgebraKind& kind,
                          SpinorParity parity = SpinorParity::even);

// The square of the generator block matrix collapses in a spinor module:
// (F^2)_ij = (kappa/2 + 1/4) delta_ij + kappa F_ij.
CheckResult check_fsqua(const ClassicalIrrep& ir);

// t_ij(u) = delta_ij + F_ij / u is a representation on a spinor module
// (first order in u^{-1}; the collapse above makes this work).
TRep spinor_trep(const AlgebraKind& kind,
                 SpinorParity parity = SpinorParity::even);

// Highest weight of spinor_trep: entries (u +- 1/2)/u (and 1 at the 0
// label).  The odd parity half puts the + band at label 1 as well.
HighestWeightData spinor_weights(const AlgebraKind& kind,
                                 SpinorParity parity = SpinorParity::even);

// Tensor module: first factor evaluated at u - a, second at u.  For the
// odd orthogonal kind both factors are the full space (second_parity is
// ignored); for the even kind the first factor is the even half and the
// second has the given parity.
TRep spinor_tensor(const AlgebraKind& kind, const Rational& a,
                   SpinorParity second_parity = SpinorParity::even);

// The singular vector v_p: sum over partitions of {1..p} into an ordered
// pair of subsets (I, J) of (-1)^{sum J} xi_I (x) xi_J; for the even
// orthogonal kind |I| must be even (and |J| has the parity of p).
std::vector<Rational> vp_vector(const AlgebraKind& kind, int p);

// <v_p, v_p> under the duality form below (for the even kind with odd p,
// against the leg-swapped copy).
Rational vp_norm(const AlgebraKind& kind, int p);

// Verifies that v_p is singular for the tensor module at the distinguished
// shift (a = p - 1/2 for the odd orthogonal kind, a = p - 1 for the even
// one): killed by every raising block, joint eigenvector of the diagonal
// with the two stated eigenvalue bands, and the stated second-coefficient
// diagonal values.  Returns the full measured weight tuple (the negative
// labels are not pinned by the bands; they come out of the measurement).
struct VpCheck {
  CheckResult ok;
  HighestWeightData measured;
};

VpCheck check_vp_singular(const AlgebraKind& kind, int p);

// t^{(2)}_{-s+1,s} v_s = c(a) v_{s-2} on the tensor module with shift a,
// where c(a) = a - s + 1/2 (odd orthogonal) or a - s + 1 (even).  The
// stored gauge halves the left-hand entry for the odd orthogonal kind;
// the check compares against the gauge-corrected coefficient.
CheckResult raising_identity(const AlgebraKind& kind, int s,
                             const Rational& a);

// Duality form: <xi_I, xi_J> = delta_IJ on each factor, extended to tensor
// products with swapped legs, <eta1 (x) eta2, zeta1 (x) zeta2> =
// <eta1, zeta2> <eta2, zeta1>.  x lives in xa (x) xb, y in ya (x) yb.
Rational swapped_form(const SpinorSpace& xa, const SpinorSpace& xb,
                      const std::vector<Rational>& x, const SpinorSpace& ya,
                      const SpinorSpace& yb, const std::vector<Rational>& y);

// Leg flip of a tensor vector: (A (x) B) -> (B (x) A).
std::vector<Rational> swap_legs(const std::vector<Rational>& x,
                                std::size_t da, std::size_t db);

// <t^{(2)}_{s,-s+1} v_{s-2}, v_s> under the duality form, gauge-corrected
// to plain normalization.  When the second factor has odd parity (even
// orthogonal kind, odd s) the pairing is taken against the leg-swapped
// copy of v_s, the covariant partner inside the opposite product.
// Detects the top component of t^{(2)} v_{s-2}: nonzero exactly when the
// lowering step stays inside the span.
Rational lower_pairing(const AlgebraKind& kind, int s, const Rational& a);

// Covariance of the single-factor form: <F_ij eta, zeta> =
// 2^{sgn i - sgn j} <eta, F_ji zeta> in the stored gauge (exponent 0 for
// the even orthogonal kind).
CheckResult check_form_covariance(const AlgebraKind& kind,
                                  SpinorParity parity = SpinorParity::even);

// The cyclic span W_p of v_p inside the tensor module at the distinguished
// shift, restricted to its own basis (weight-homogeneous, so the diagonal
// series acts diagonally on it).
TRep wp_module(const AlgebraKind& kind, int p);

}  // namespace ykit

#endif  // YKIT_SPINOR_HPP
