#ifndef YKIT_GRID_PROOF_HPP
#define YKIT_GRID_PROOF_HPP

// Exact grid proofs of rational-operator identities.
//
// Every identity checked in this library is, after clearing denominators, a
// polynomial identity of known (conservatively bounded) degree in each
// variable.  Evaluating both sides at degree+1 distinct rational points per
// variable — all poles avoided — therefore PROVES the identity, it does not
// merely sample it.  Points are drawn deterministically from 1, 2, 3, ...,
// skipping values where any declared denominator vanishes.

#include <functional>
#include <string>
#include <vector>

#include "ykit/matrix.hpp"
#include "ykit/rational.hpp"

namespace ykit {

struct Counterexample {
  std::vector<Rational> point;  // the grid point (u0) or (u0, v0)
  std::string detail;           // which entry differs, and the two values
};

struct ProofReport {
  std::string identity_name;
  std::vector<std::size_t> grid_dims;  // points used per variable
  bool passed = false;
  std::vector<Counterexample> counterexamples;  // empty when passed (capped)
  std::string note;
};

// First `count` values from start, start+1, ... accepted by `ok`.
std::vector<Rational> choose_grid_points(
    std::size_t count, const std::function<bool(const Rational&)>& ok,
    long start = 1);

using UnivariateEvaluator = std::function<Matrix<Rational>(const Rational&)>;
using BivariateEvaluator =
    std::function<Matrix<Rational>(const Rational&, const Rational&)>;

// Proves lhs(u) == rhs(u) for an identity whose cleared form has degree at
// most deg_u; `u_ok` must reject every pole of either side.
ProofReport prove_identity_grid(const std::string& name,
                                const UnivariateEvaluator& lhs,
                                const UnivariateEvaluator& rhs, int deg_u,
                                const std::function<bool(const Rational&)>& u_ok);

// Two-variable version.  V-points are chosen so that every (u, v) pair in
// the Cartesian grid satisfies pair_ok (e.g. u - v away from the poles of a
// difference kernel).
ProofReport prove_identity_grid(
    const std::string& name, const BivariateEvaluator& lhs,
    const BivariateEvaluator& rhs, int deg_u, int deg_v,
    const std::function<bool(const Rational&)>& u_ok,
    const std::function<bool(const Rational&)>& v_ok,
    const std::function<bool(const Rational&, const Rational&)>& pair_ok);

// Formats the first few differing entries of two equal-shaped matrices.
std::string describe_difference(const Matrix<Rational>& a,
                                const Matrix<Rational>& b,
                                std::size_t max_entries = 3);

}  // namespace ykit

#endif  // YKIT_GRID_PROOF_HPP
