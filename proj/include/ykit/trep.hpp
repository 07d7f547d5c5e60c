#ifndef YKIT_TREP_HPP
#define YKIT_TREP_HPP

// Finite-dimensional representations presented through their T-matrix: a
// family of module endomorphisms t_ij(u), rational in u with t_ij(inf) =
// delta_ij, indexed by the auxiliary space labels.  The defining relations
//
//   R(u - v) T_1(u) T_2(v) = T_2(v) T_1(u) R(u - v)
//
// are verified by an exact grid proof: after clearing every denominator the
// relation is polynomial of known degree in u and in v, so checking it at
// (degree+1) points per variable on a pole-free Cartesian grid proves it.
// The checker applies both sides to each basis vector of
// C^N (x) C^N (x) module, never forming the huge compound matrices.

#include <optional>
#include <string>
#include <vector>

#include "ykit/algebra_kind.hpp"
#include "ykit/grid_proof.hpp"
#include "ykit/matrix.hpp"
#include "ykit/rational_function.hpp"
#include "ykit/structure_ops.hpp"

namespace ykit {

class TRep {
 public:
  // Family representation: auxiliary space and R-matrix of `kind`.
  TRep(AlgebraKind kind, std::size_t dim, std::string desc);
  // gl_N representation: auxiliary labels 1..N, R-matrix 1 - P/u.
  TRep(int gl_N, std::size_t dim, std::string desc);

  bool is_gl() const { return !kind_.has_value(); }
  const AlgebraKind& kind() const;
  int N() const { return static_cast<int>(space_.dim()); }
  const SpaceIndex& space() const { return space_; }
  std::size_t dim() const { return dim_; }
  const std::string& desc() const { return desc_; }
  void set_desc(std::string d) { desc_ = std::move(d); }

  Matrix<RationalFunction>& t(int i, int j);
  const Matrix<RationalFunction>& t(int i, int j) const;
  Matrix<RationalFunction>& t_pos(std::size_t p, std::size_t q);
  const Matrix<RationalFunction>& t_pos(std::size_t p, std::size_t q) const;

  // Least common multiple of all entry denominators (monic).
  Polynomial common_denominator() const;

 private:
  std::optional<AlgebraKind> kind_;
  SpaceIndex space_;
  std::size_t dim_;
  std::string desc_;
  std::vector<Matrix<RationalFunction>> blocks_;
};

// t_ij(u) = delta_ij + e_ij/(u-c) - theta_ij e_{-j,-i}/(u-c+kappa) on C^N.
TRep vector_rep(const AlgebraKind& kind, const Rational& c);

// One-dimensional counit representation: t_ij(u) = delta_ij.
TRep trivial_rep(const AlgebraKind& kind);

// t_ij(u) = delta_ij + E_ij/u for gl_N matrices E (E[i][j] is the image of
// the unit e_{i+1,j+1}).
TRep gl_eval_rep(const std::vector<std::vector<Matrix<Rational>>>& E,
                 std::string desc);

// Tensor product: t_ij(u) = sum_k tA_ik(u) (x) tB_kj(u); module V_A (x) V_B.
TRep tensor_rep(const TRep& a, const TRep& b);

// Spectral shift: new t_ij(u) = old t_ij(u - a).
TRep shift_rep(const TRep& rep, const Rational& a);

// Restriction to an invariant subspace spanned by the given basis vectors;
// throws std::invalid_argument (via the exact solver) if some t_ij(u) maps
// the span outside itself.
TRep restrict_rep(const TRep& rep,
                  const std::vector<std::vector<Rational>>& basis,
                  std::string desc);

// Coefficient of u^{-r} of t_ij(u) as a module endomorphism.
Matrix<Rational> t_coeff(const TRep& rep, int i, int j, int r);

// The Lie action F_ij (coefficient of u^{-1}).
inline Matrix<Rational> lie_action(const TRep& rep, int i, int j) {
  return t_coeff(rep, i, j, 1);
}

// Exact grid proof of the defining relations.
ProofReport check_defining_relations(const TRep& rep);

// The central scalar: verifies that both products of the signed transpose
// T^t(u + kappa) with T(u) are the same scalar multiple of the identity and
// returns that scalar.  Throws std::domain_error if they are not scalar.
RationalFunction compute_z(const TRep& rep);

// Groups module basis vectors by their joint eigenvalue under all t_ii^(1)
// (which must act diagonally in the working basis; throws otherwise).
// Result keys are weight tuples listed in label order.
std::vector<std::pair<std::vector<Rational>, std::vector<std::size_t>>>
weight_decomposition(const TRep& rep);

}  // namespace ykit

#endif  // YKIT_TREP_HPP
