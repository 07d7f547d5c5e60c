#ifndef YKIT_WEYL_ORACLE_HPP
#define YKIT_WEYL_ORACLE_HPP

// Independent classical-module oracle: the Weyl dimension formula and the
// Freudenthal weight-multiplicity recursion for the B/C/D families.  It is
// used to cross-check module decompositions obtained from the T-matrix side
// (cyclic spans, tensor squares) against textbook data computed by a
// completely different route.
//
// Highest weights are passed in the library's label convention: mu[k-1] is
// the eigenvalue of F_kk on the highest vector (k = 1..n), the weight that is
// minimal for the positive labels; e.g. the antisymmetric-power weights read
// (0,...,0,-1,...,-1) and the half-spin weights (+-1/2,-1/2,...,-1/2).
// Internally the data is converted to standard epsilon-coordinates, where the
// Weyl group acts by (signed) permutations.

#include <map>
#include <vector>

#include "ykit/algebra_kind.hpp"
#include "ykit/rational.hpp"

namespace ykit {

// Dimension of the irreducible module V(mu) by the Weyl product formula.
// Throws std::invalid_argument if mu is not dominant for the kind.
long weyl_dim(const AlgebraKind& kind, const std::vector<Rational>& mu);

// Full weight-multiplicity table of V(mu) by the Freudenthal recursion,
// expanded over the whole Weyl orbit of every dominant weight.  Keys are
// weight tuples in label order (-n..-1, [0,] 1..n), the same keying as
// weight_decomposition; the 0 label of the odd orthogonal family always
// carries 0.  The multiplicities are verified to sum to weyl_dim(kind, mu)
// before returning (throws std::logic_error on an internal inconsistency).
std::map<std::vector<Rational>, long> weight_multiplicities(
    const AlgebraKind& kind, const std::vector<Rational>& mu);

// Convenience: merges the tables of several highest weights, summing
// multiplicities — the expected weight table of a direct sum.
std::map<std::vector<Rational>, long> weight_multiplicities_sum(
    const AlgebraKind& kind, const std::vector<std::vector<Rational>>& mus);

}  // namespace ykit

#endif  // YKIT_WEYL_ORACLE_HPP
