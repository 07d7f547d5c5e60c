#include "ykit/gl2.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ykit {

Gl2EvalParams::Gl2EvalParams(Rational alpha_in, Rational beta_in,
                             Rational shift_in)
    : alpha(std::move(alpha_in)),
      beta(std::move(beta_in)),
      shift(std::move(shift_in)) {
  const Rational diff = alpha - beta;
  if (!diff.is_integer() || diff.sign() < 0)
    throw std::invalid_argument(
        "Gl2EvalParams: alpha - beta = " + diff.str() +
        " is not a nonnegative integer (module would be infinite-"
        "dimensional)");
}

long Gl2EvalParams::level() const { return (alpha - beta).num_long(); }

TRep gl2_eval_module(const Gl2EvalParams& p) {
  const long d = p.level();
  const std::size_t dim = static_cast<std::size_t>(d) + 1;

  std::vector<std::vector<Matrix<Rational>>> E(
      2, std::vector<Matrix<Rational>>(2, Matrix<Rational>(dim, dim)));
  for (long r = 0; r <= d; ++r) {
    const auto c = static_cast<std::size_t>(r);
    E[0][0](c, c) = p.alpha - Rational(r);
    E[1][1](c, c) = p.beta + Rational(r);
    if (r < d) E[1][0](c + 1, c) = Rational(1);
    if (r > 0) E[0][1](c - 1, c) = Rational(r) * (Rational(d - r) + 1);
  }

  std::string desc = "L(" + p.alpha.str() + "," + p.beta.str() + ")";
  if (!p.shift.is_zero()) desc += " @ " + p.shift.str();
  TRep rep = gl_eval_rep(E, desc);
  if (p.shift.is_zero()) return rep;
  return shift_rep(rep, p.shift);
}

Matrix<RationalFunction> quantum_determinant(const TRep& rep) {
  if (!rep.is_gl() || rep.N() != 2)
    throw std::invalid_argument(
        "quantum_determinant: defined for two-row representations only");
  const auto at = [&](int i, int j, long t) {
    return rep.t(i, j).map<RationalFunction>(
        [&](const RationalFunction& f) { return f.shift(Rational(t)); });
  };
  return at(1, 1, 0) * at(2, 2, -1) - at(2, 1, 0) * at(1, 2, -1);
}

std::optional<RationalFunction> scalar_of(const Matrix<RationalFunction>& m) {
  if (m.rows() != m.cols() || m.rows() == 0) return std::nullopt;
  const RationalFunction& s = m(0, 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!((i == j) ? (m(i, j) == s) : m(i, j).is_zero())) return std::nullopt;
  return s;
}

std::vector<std::size_t> decomptp_order(const std::vector<Rational>& alphas,
                                        const std::vector<Rational>& betas) {
  if (alphas.size() != betas.size())
    throw std::invalid_argument("decomptp_order: length mismatch");
  const std::size_t k = alphas.size();
  std::vector<std::size_t> remaining(k);
  std::iota(remaining.begin(), remaining.end(), std::size_t{0});
  std::vector<std::size_t> order;
  order.reserve(k);

  while (!remaining.empty()) {
    // Nonnegative integers among the pairwise differences of what is left.
    std::optional<Rational> min_nn;
    for (std::size_t p : remaining)
      for (std::size_t q : remaining) {
        const Rational d = alphas[p] - betas[q];
        if (d.is_integer() && d.sign() >= 0 && (!min_nn || d < *min_nn))
          min_nn = d;
      }

    std::size_t chosen = remaining.front();
    if (min_nn) {
      // Prefer a pair attaining the minimum; otherwise the pair with the
      // smallest own difference (the condition is then unsatisfiable and
      // this keeps the output deterministic).
      std::optional<Rational> best;
      for (std::size_t r : remaining) {
        const Rational d = alphas[r] - betas[r];
        if (d == *min_nn) {
          chosen = r;
          best.reset();
          break;
        }
        if (!best || d < *best) {
          best = d;
          chosen = r;
        }
      }
    }
    order.push_back(chosen);
    remaining.erase(std::find(remaining.begin(), remaining.end(), chosen));
  }
  return order;
}

}  // namespace ykit
