#ifndef YKIT_ALGEBRA_KIND_HPP
#define YKIT_ALGEBRA_KIND_HPP

// The three classical matrix families handled by this library, presented in
// the symmetric index convention: the natural module C^N carries labels
//   -n, ..., -1, 0, 1, ..., n   (odd orthogonal,  N = 2n+1)
//   -n, ..., -1,    1, ..., n   (symplectic / even orthogonal, N = 2n)
// together with the sign table
//   theta_ij = 1                (orthogonal)
//   theta_ij = sgn(i) sgn(j)    (symplectic)
// and the structure constant kappa = N/2 -+ 1 (minus for orthogonal, plus
// for symplectic) that fixes the second pole of the rational R-matrix.

#include <string>
#include <vector>

#include "ykit/rational.hpp"
#include "ykit/space_index.hpp"

namespace ykit {

enum class Family { B, C, D };

std::string family_name(Family f);
// Parses "B"/"C"/"D" (case-insensitive); throws std::invalid_argument.
Family parse_family(const std::string& s);

class AlgebraKind {
 public:
  // B: odd orthogonal o_{2n+1}, n >= 1; C: symplectic sp_{2n}, n >= 1;
  // D: even orthogonal o_{2n}, n >= 2.
  AlgebraKind(Family f, int n);

  Family family() const { return family_; }
  int n() const { return n_; }
  int N() const { return N_; }
  bool orthogonal() const { return family_ != Family::C; }

  // kappa: n - 1/2 (B), n + 1 (C), n - 1 (D).
  const Rational& kappa() const { return kappa_; }

  // theta_ij in {+1, -1}; i, j must be valid labels.
  int theta(int i, int j) const;

  const SpaceIndex& space() const { return space_; }
  const std::vector<int>& labels() const { return space_.labels(); }

  std::string name() const;  // e.g. "B2 (o_5)"

 private:
  Family family_;
  int n_;
  int N_;
  Rational kappa_;
  SpaceIndex space_;
};

inline int sgn_label(int i) { return i > 0 ? 1 : (i < 0 ? -1 : 0); }

}  // namespace ykit

#endif  // YKIT_ALGEBRA_KIND_HPP
