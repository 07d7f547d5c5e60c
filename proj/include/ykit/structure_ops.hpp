#ifndef YKIT_STRUCTURE_OPS_HPP
#define YKIT_STRUCTURE_OPS_HPP

// The basic operators on C^N (x) C^N for a classical family: the flip P,
// its signed partial transpose Q, and the rational R-matrix
//
//   R(u) = 1 - P/u + Q/(u - kappa),
//
// together with the Lie generators F_ij = E_ij - theta_ij E_{-j,-i}, the
// plain gl R-matrix 1 - P/u, and checkers for the algebraic identities
// these operators satisfy (P/Q relations, unitarity, Yang-Baxter).

#include <functional>
#include <string>
#include <vector>

#include "ykit/algebra_kind.hpp"
#include "ykit/grid_proof.hpp"
#include "ykit/leg_operator.hpp"
#include "ykit/matrix.hpp"
#include "ykit/rational_function.hpp"

namespace ykit {

// Matrix unit with 1 in row/col given by POSITIONS (not labels).
Matrix<Rational> e_unit(std::size_t dim, std::size_t i, std::size_t j);

// Matrix unit by LABELS of the given space.
Matrix<Rational> e_unit_labeled(const SpaceIndex& sp, int i, int j);

// P = sum_{ij} e_ij (x) e_ji, the flip of the two legs.
LegOperator<Rational> build_P(const SpaceIndex& sp);

// Q = sum_{ij} theta_ij e_ij (x) e_{-i,-j}, the signed partial transpose of
// P in the first leg; rank one up to normalization.
LegOperator<Rational> build_Q(const AlgebraKind& kind);

// R(u) = 1 - P/u + Q/(u-kappa) as a rational-function-valued operator.
LegOperator<RationalFunction> r_matrix(const AlgebraKind& kind);

// R(u) evaluated at a regular rational point (x != 0, x != kappa).
Matrix<Rational> r_matrix_eval(const AlgebraKind& kind, const Rational& x);

// gl_N R-matrix 1 - P/u on the plain space {1..N} (labels 1..N).
LegOperator<RationalFunction> r_matrix_gl(int N);
Matrix<Rational> r_matrix_gl_eval(int N, const Rational& x);
SpaceIndex gl_space(int N);

// F_ij = E_ij - theta_ij E_{-j,-i} on C^N, by labels.
Matrix<Rational> f_generator(const AlgebraKind& kind, int i, int j);

// Exact checks (no grids needed; plain operator arithmetic):
//   P^2 = 1,  P Q = Q P = +-Q (+ orthogonal, - symplectic),  Q^2 = N Q,
//   and R(u) R(-u) = (1 - 1/u^2) id.
std::vector<ProofReport> check_pq_identities(const AlgebraKind& kind);
ProofReport check_r_unitarity(const AlgebraKind& kind);

// Yang-Baxter equation R12(u) R13(u+v) R23(v) = R23(v) R13(u+v) R12(u) for
// an arbitrary operator-valued function on sp (x) sp.  `regular` must
// reject the poles of the entries; per_factor_degree bounds the entry
// degree after clearing those poles (2 for the R-matrices built here,
// since u(u-kappa) R(u) is linear-plus-quadratic in u).
ProofReport check_ybe(
    const std::string& name, const SpaceIndex& sp,
    const std::function<Matrix<Rational>(const Rational&)>& evaluate,
    const std::function<bool(const Rational&)>& regular,
    int per_factor_degree);

// The same check for the R-matrix of a classical family / of gl_N.
ProofReport check_ybe(const AlgebraKind& kind);
ProofReport check_ybe_gl(int N);

}  // namespace ykit

#endif  // YKIT_STRUCTURE_OPS_HPP
