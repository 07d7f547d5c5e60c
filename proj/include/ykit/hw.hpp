#ifndef YKIT_HW_HPP
#define YKIT_HW_HPP

// Highest-weight machinery for the extended algebras: search for joint
// highest vectors in a concrete module, consistency checks on weight
// tuples, the classification of finite-dimensional weights into tuples of
// monic polynomials, antisymmetrizer modules on tensor powers of the
// natural module, cyclic spans, and the normalized degree-2 generators
// J_kl used for the symplectic fundamental modules.

#include <cstddef>
#include <string>
#include <vector>

#include "ykit/algebra_kind.hpp"
#include "ykit/drinfeld.hpp"
#include "ykit/matrix.hpp"
#include "ykit/rational.hpp"
#include "ykit/rational_function.hpp"
#include "ykit/trep.hpp"

namespace ykit {

// Weight tuple of a highest-weight module: one eigenvalue series
// lambda_i(u) per auxiliary label i, each equal to 1 at u = infinity.
struct HighestWeightData {
  AlgebraKind kind;
  std::vector<RationalFunction> lambda;  // in kind.labels() order

  HighestWeightData(AlgebraKind k, std::vector<RationalFunction> lam);

  const RationalFunction& at(int label) const;
  RationalFunction& at(int label);
};

// Generic pass/fail verdict carrying a human-readable witness.
struct CheckResult {
  bool ok = true;
  std::string message;
};

// ---------------------------------------------------------------------------
// Highest vector search.

struct HighestVector {
  std::vector<Rational> v;                // module coordinates
  std::vector<RationalFunction> lambda;   // t_ii(u) eigenvalues, label order
};

struct HwSearchResult {
  std::vector<HighestVector> vectors;
  // Kernel-of-raising vectors that are not joint eigenvectors of the
  // diagonal series; reported, never silently dropped.
  std::size_t kernel_not_eigen = 0;
};

// All vectors killed by every t_ij(u) with i < j (label order) that are
// simultaneously eigenvectors of every t_ii(u).  Works for family and gl
// representations alike.
HwSearchResult highest_weight_vectors(const TRep& rep);

// Eigenvalue tuple of a joint eigenvector of all t_ii(u); empty optional
// when v is not a joint eigenvector.
std::optional<std::vector<RationalFunction>> weight_of_vector(
    const TRep& rep, const std::vector<Rational>& v);

// ---------------------------------------------------------------------------
// Weight-tuple consistency and classification.

// Checks, for i = 1..n-1 (odd orthogonal: 1..n), the non-triviality
// criterion relating the weights mirrored through the center:
//   lambda_{-n+i-1}(u+kappa-i) / lambda_{-n+i}(u+kappa-i)
//     = lambda_{n-i}(u) / lambda_{n-i+1}(u).
// The failure message names the first offending index i.
CheckResult verma_consistency(const HighestWeightData& hw);

struct FdimResult {
  bool ok = false;
  DrinfeldTuple tuple;   // valid when ok
  std::string message;   // unpaired-root diagnosis when !ok
};

// Classifies a weight tuple of finite-dimensional type into its tuple of
// monic polynomials (P_1, ..., P_n): for i = 2..n the ratio
// lambda_{i-1}(u)/lambda_i(u) (positive labels) must telescope with step 1
// into P_i(u+1)/P_i(u), and the family-specific first condition fixes P_1:
//   B:  lambda_0(u)/lambda_1(u)   = P_1(u+1/2)/P_1(u)
//   C:  lambda_{-1}(u)/lambda_1(u) = P_1(u+2)/P_1(u)
//   D:  lambda_{-1}(u)/lambda_2(u) = P_1(u+1)/P_1(u)
FdimResult fdim_conditions(const HighestWeightData& hw);

// Entrywise product: the highest weight of a tensor product of
// highest-weight modules.
HighestWeightData product_weights(const HighestWeightData& a,
                                  const HighestWeightData& b);

// ---------------------------------------------------------------------------
// Antisymmetrizer modules.

struct AntisymModule {
  TRep rep;                  // (C^N)^(x)m with leg k shifted to u + k - 1
  std::vector<Rational> xi;  // antisymmetrizer of e_{-n} ... e_{-n+m-1}
  int m = 0;
};

// The m-fold tensor power of the natural representation with spectral
// shifts 0, 1, ..., m-1 and its antisymmetrized highest vector.
AntisymModule antisym_module(const AlgebraKind& kind, int m);

// The three-band eigenvalue tuple of xi_m:
//   (u+m)/(u+m-1)         for -n <= i <= -n+m-1,
//   1                     for -n+m <= i <= n-m,
//   (u+kappa-1)/(u+kappa) for n-m+1 <= i <= n.
HighestWeightData antisym_expected_weights(const AlgebraKind& kind, int m);

// Verifies t_ij(u) xi = 0 for i < j and the band eigenvalues above.
CheckResult check_antisym_highest(const AntisymModule& mod);

// Verifies the transpose symmetry
//   theta_ij t_{-j,-i}(u) = P^(m) t_ij(-u-kappa-m+1) P^(m)
// as an exact operator identity, where P^(m) reverses tensor factors.
CheckResult check_antisym_transpose(const AntisymModule& mod);

// ---------------------------------------------------------------------------
// Cyclic spans.

// Closure of the seed under the coefficient matrices of every t_ij(u)
// (numerators over cleared denominators; same span as all series
// coefficients since denominators are scalar).  Returns an echelonized
// basis, deterministic in the seed and block order.
std::vector<std::vector<Rational>> cyclic_span(const TRep& rep,
                                               const std::vector<Rational>& seed);

// The irreducible quotient of the cyclic module generated by xi, which must
// be a joint eigenvector killed by all raising blocks.  Any singular vector
// whose classical weight differs from xi's lies in the maximal proper
// submodule (its own cyclic span has weights bounded by that lower weight,
// so it cannot reach xi); the algorithm repeatedly quotients out the spans
// of all such vectors until none remain, which certifies irreducibility
// because the top weight space stays one-dimensional.  Throws
// std::domain_error if the certificate cannot be established exactly.
struct IrreducibleQuotient {
  TRep rep;
  std::vector<Rational> xi;  // image of the generator
};
IrreducibleQuotient irreducible_quotient(const TRep& rep,
                                         const std::vector<Rational>& xi);

// ---------------------------------------------------------------------------
// Normalized degree-2 generators (symplectic fundamental modules).

struct JOperators {
  AlgebraKind kind;
  Rational y1, y2;  // series data of the normalizing factor
  // tau1/tau2: coefficients of u^{-1}, u^{-2} of y(u)^{-1} t(u); j: the
  // quadratic combinations J_kl.  All stored in label-pair order.
  std::vector<Matrix<Rational>> tau1, tau2, j;

  const Matrix<Rational>& tau1_at(int k, int l) const;
  const Matrix<Rational>& tau2_at(int k, int l) const;
  const Matrix<Rational>& j_at(int k, int l) const;
};

// Computes J_kl = tau^(2)_kl - 1/2 sum_i tau^(1)_ki tau^(1)_il on a module
// with scalar central series z(u).  The normalizing series y(u) solves
// y(u) y(u+kappa) = z(u) order by order (only orders 1 and 2 are needed).
// Throws std::domain_error when z is not scalar.
JOperators j_operators(const TRep& rep);

// J_kl + theta_kl J_{-l,-k} = 0 for all pairs.
CheckResult check_j_antisymmetry(const JOperators& ops);

// Adjoint transformation law under F_ij = tau^(1)_ij:
//   [F_ij, J_kl] = d_kj J_il - d_il J_kj
//                  - d_{k,-i} theta_ij J_{-j,l} + d_{l,-j} theta_ij J_{k,-i}.
CheckResult check_j_bracket_law(const JOperators& ops);

// J_kl == b * F_kl for every pair (F from tau1).
CheckResult check_j_scalar(const JOperators& ops, const Rational& b);

// ---------------------------------------------------------------------------
// Symplectic fundamental weight tuples.

// The weight tuple of the symplectic fundamental module W_p(a):
//   p >= 1:  (u-a-p)/(u-a-p-1)  for -n <= i <= -p-1,
//            1                  for -p <= i <= p,
//            (u-a)/(u-a+1)      for  p+1 <= i <= n;
//   p == 0:  (u-a+1)/(u-a)      for i < 0,
//            (u-a+1)/(u-a+2)    for i > 0.
HighestWeightData fundamental_sp_weights(const AlgebraKind& kind, int p,
                                         const Rational& a);

}  // namespace ykit

#endif  // YKIT_HW_HPP
