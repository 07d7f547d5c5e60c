#include "ykit/grid_proof.hpp"

#include <sstream>
#include <stdexcept>

namespace ykit {

namespace {
constexpr std::size_t kMaxCounterexamples = 5;
constexpr long kSearchLimit = 10000;  // sanity cap on point search
}  // namespace

std::vector<Rational> choose_grid_points(
    std::size_t count, const std::function<bool(const Rational&)>& ok,
    long start) {
  std::vector<Rational> pts;
  for (long x = start; x < start + kSearchLimit && pts.size() < count; ++x) {
    Rational r(x);
    if (!ok || ok(r)) pts.push_back(r);
  }
  if (pts.size() < count)
    throw std::runtime_error("choose_grid_points: could not find " +
                             std::to_string(count) + " admissible points");
  return pts;
}

std::string describe_difference(const Matrix<Rational>& a,
                                const Matrix<Rational>& b,
                                std::size_t max_entries) {
  std::ostringstream os;
  std::size_t shown = 0;
  for (std::size_t i = 0; i < a.rows() && shown < max_entries; ++i)
    for (std::size_t j = 0; j < a.cols() && shown < max_entries; ++j)
      if (a(i, j) != b(i, j)) {
        if (shown) os << "; ";
        os << "entry (" << i << "," << j << "): " << a(i, j).str() << " vs "
           << b(i, j).str();
        ++shown;
      }
  return os.str();
}

ProofReport prove_identity_grid(
    const std::string& name, const UnivariateEvaluator& lhs,
    const UnivariateEvaluator& rhs, int deg_u,
    const std::function<bool(const Rational&)>& u_ok) {
  ProofReport rep;
  rep.identity_name = name;
  const std::size_t nu = static_cast<std::size_t>(deg_u) + 1;
  rep.grid_dims = {nu};
  const auto pts = choose_grid_points(nu, u_ok);
  rep.passed = true;
  for (const auto& u : pts) {
    const Matrix<Rational> l = lhs(u), r = rhs(u);
    if (l != r) {
      rep.passed = false;
      if (rep.counterexamples.size() < kMaxCounterexamples)
        rep.counterexamples.push_back({{u}, describe_difference(l, r)});
    }
  }
  rep.note = "cleared degree bound " + std::to_string(deg_u) + "; " +
             std::to_string(nu) + " points prove the identity";
  return rep;
}

ProofReport prove_identity_grid(
    const std::string& name, const BivariateEvaluator& lhs,
    const BivariateEvaluator& rhs, int deg_u, int deg_v,
    const std::function<bool(const Rational&)>& u_ok,
    const std::function<bool(const Rational&)>& v_ok,
    const std::function<bool(const Rational&, const Rational&)>& pair_ok) {
  ProofReport rep;
  rep.identity_name = name;
  const std::size_t nu = static_cast<std::size_t>(deg_u) + 1;
  const std::size_t nv = static_cast<std::size_t>(deg_v) + 1;
  rep.grid_dims = {nu, nv};
  const auto us = choose_grid_points(nu, u_ok);
  auto v_admissible = [&](const Rational& v) {
    if (v_ok && !v_ok(v)) return false;
    if (pair_ok)
      for (const auto& u : us)
        if (!pair_ok(u, v)) return false;
    return true;
  };
  const auto vs = choose_grid_points(nv, v_admissible);
  rep.passed = true;
  for (const auto& u : us)
    for (const auto& v : vs) {
      const Matrix<Rational> l = lhs(u, v), r = rhs(u, v);
      if (l != r) {
        rep.passed = false;
        if (rep.counterexamples.size() < kMaxCounterexamples)
          rep.counterexamples.push_back({{u, v}, describe_difference(l, r)});
      }
    }
  rep.note = "cleared degree bounds (" + std::to_string(deg_u) + ", " +
             std::to_string(deg_v) + "); " + std::to_string(nu) + "x" +
             std::to_string(nv) + " grid proves the identity";
  return rep;
}

}  // namespace ykit
