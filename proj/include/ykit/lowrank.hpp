#ifndef YKIT_LOWRANK_HPP
#define YKIT_LOWRANK_HPP

// The low-rank structure theory: explicit maps from the rank-one and
// rank-two extended algebras into (tensor products of) the two-row RTT
// algebra, the fusion identities those maps rest on, and the evaluation
// homomorphisms onto the enveloping algebras of sp_2, o_3, o_4.
//
// Index gauge: the middle basis vector of the o_3 weight basis carries an
// irrational normalization in the usual presentation.  We conjugate by
// S = diag(S_i), S_i = 1 / sqrt(2) / 2 for i < 0 / = 0 / > 0, replacing
// t_ij by (S_i / S_j) t_ij.  Because S_i S_{-i} is constant, both P and Q
// commute with S (x) S, so the R-matrix, the defining relations, weights,
// eigenvalues and central scalars are all unchanged, while every stored
// matrix becomes rational.  sp_2 and o_4 have no zero index, so the gauge
// is the identity there.

#include <array>
#include <cstddef>
#include <vector>

#include "ykit/algebra_kind.hpp"
#include "ykit/hw.hpp"
#include "ykit/matrix.hpp"
#include "ykit/rational.hpp"
#include "ykit/trep.hpp"

namespace ykit {

// A finite-dimensional irreducible module over sp_2, o_3 or o_4, presented
// by the matrices of the Lie generators F_ij (in the index gauge).
struct ClassicalIrrep {
  AlgebraKind kind;
  std::vector<Rational> mu;       // highest weight (mu_1) or (mu_1, mu_2)
  std::size_t dim = 0;
  std::vector<Matrix<Rational>> f;  // label-pair row-major, like TRep blocks
  Rational casimir;               // scalar action of the Casimir element

  const Matrix<Rational>& f_at(int i, int j) const;
  Matrix<Rational>& f_at(int i, int j);
};

// Ladder matrices E11, E12, E21, E22 of the dim-dimensional irreducible
// two-row module on basis zeta_r = (E21)^r zeta:
//   E12 (E21)^r zeta = r (dim - r) (E21)^{r-1} zeta.
std::array<Matrix<Rational>, 4> sl2_irrep(std::size_t dim);

// V(mu_1) over sp_2; finite-dimensional iff -mu_1 is a nonnegative integer.
// F_{-1,-1} = E11 - E22, F_{-1,1} = 2 E12, F_{1,-1} = 2 E21.
ClassicalIrrep classical_irrep_sp2(const Rational& mu1);

// V(mu_1) over o_3; finite-dimensional iff -2 mu_1 is a nonnegative
// integer.  Gauged generators from the two-row ladder:
// F_{-1,-1} = (E11 - E22)/2, F_{-1,0} = E12/2, F_{0,-1} = E21.
ClassicalIrrep classical_irrep_o3(const Rational& mu1);

// V(mu_1, mu_2) over o_4 = two commuting copies of the rank-one algebra:
// E12 -> F_{-2,1}, E21 -> F_{1,-2}, E11-E22 -> -F_11 - F_22 (first copy);
// E'12 -> F_{-2,-1}, E'21 -> F_{-1,-2}, E'11-E'22 -> F_11 - F_22 (second).
// Finite-dimensional iff mu_1 - mu_2 and -mu_1 - mu_2 are nonnegative
// integers.
ClassicalIrrep classical_irrep_o4(const Rational& mu1, const Rational& mu2);

// Bracket law, antisymmetry F_ij + theta_ij F_{-j,-i} = 0, highest-weight
// property of the first basis vector, and the Casimir scalar.
CheckResult check_classical_irrep(const ClassicalIrrep& ir);

// X(sp_2) module from a two-row module: t_ij(u) = T_ij(u/2),
// i, j in {-1, 1} identified with rows {1, 2}.
TRep phi_sp2(const TRep& rep);

// X(o_3) module from a two-row module via the nine product formulas (index
// gauge applied).  Arguments are (2u, 2u+1); with half_shift they become
// (2u-1, 2u), the composition with the spectral shift u -> u - 1/2 used by
// the evaluation homomorphism.
TRep phi_o3(const TRep& rep, bool half_shift = false);

// X(o_4) module from two two-row modules via the sixteen product formulas
// t_{kl}(u) -> +- T_{ac}(u) T'_{bd}(u), with labels -2, -1, 1, 2 matched to
// row pairs (1,1), (1,2), (2,1), (2,2) and a minus sign for each label
// equal to 2.
TRep psi_o4(const TRep& rep_a, const TRep& rep_b);

// Evaluation module with evaluation parameter a (u replaced by u - a):
//   sp_2: 1 + F/u
//   o_3 : 1 + F/u + (F^2 - c)/(u (2u - 1))
//   o_4 : 1 + F/u + (F^2 - F - c)/(2 u^2).
TRep ev_rep(const ClassicalIrrep& ir, const Rational& a);

// The known highest weights of ev_rep(ir, a).
HighestWeightData ev_weights(const ClassicalIrrep& ir, const Rational& a);

// Rank-one / rank-two existence conditions on a highest weight:
//   o_3: lambda_{-1}(u - 1/2) lambda_1(u) == lambda_0(u - 1/2) lambda_0(u)
//   o_4: lambda_{-2}(u) lambda_2(u) == lambda_{-1}(u) lambda_1(u).
CheckResult weight_existence_condition(const HighestWeightData& hw);

// Fusion proof for o_3: on (C^2)^{x4}, the projected product
//   R_V(u) = Proj12 Proj34 R14(2u-1) R13(2u) R24(2u) R23(2u+1)
// equals its reversed form, restricts to the 9-dimensional V (x) V
// (V = gauged symmetric square), and on it equals
//   (2u-1)/(2u+1) (1 - P_V/u + Q_V/(u - 1/2))
// as well as the simplified operator
//   1 - (P14+P24+P13+P23)/(2u+1) + P13 P24 / (u (2u+1)).
CheckResult fusion_check_o3();

// Fusion proof for o_4: R13(u) R24(u) on (C^2)^{x4} = V (x) V equals
//   (u-1)/u (1 - P_V/u + Q_V/(u-1)),
// with P_V = P13 P24 and Q_V = (1 - P13)(1 - P24).
CheckResult fusion_check_o4();

}  // namespace ykit

#endif  // YKIT_LOWRANK_HPP
