#include "ykit/structure_ops.hpp"

namespace ykit {

Matrix<Rational> e_unit(std::size_t dim, std::size_t i, std::size_t j) {
  Matrix<Rational> m(dim, dim);
  m(i, j) = Rational(1);
  return m;
}

Matrix<Rational> e_unit_labeled(const SpaceIndex& sp, int i, int j) {
  return e_unit(sp.dim(), sp.pos(i), sp.pos(j));
}

LegOperator<Rational> build_P(const SpaceIndex& sp) {
  const std::size_t N = sp.dim();
  MultiIndex idx({sp, sp});
  Matrix<Rational> m(N * N, N * N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      m(a * N + b, b * N + a) = Rational(1);
  return LegOperator<Rational>(std::move(idx), std::move(m));
}

LegOperator<Rational> build_Q(const AlgebraKind& kind) {
  const SpaceIndex& sp = kind.space();
  const std::size_t N = sp.dim();
  MultiIndex idx({sp, sp});
  Matrix<Rational> m(N * N, N * N);
  for (int i : sp.labels())
    for (int j : sp.labels()) {
      const std::size_t row = sp.pos(i) * N + sp.pos(-i);
      const std::size_t col = sp.pos(j) * N + sp.pos(-j);
      m(row, col) = Rational(kind.theta(i, j));
    }
  return LegOperator<Rational>(std::move(idx), std::move(m));
}

LegOperator<RationalFunction> r_matrix(const AlgebraKind& kind) {
  const auto P = build_P(kind.space());
  const auto Q = build_Q(kind);
  const RationalFunction inv_u = RationalFunction::inv_shift(Rational(0));
  const RationalFunction inv_uk = RationalFunction::inv_shift(kind.kappa());
  Matrix<RationalFunction> m =
      Matrix<RationalFunction>::identity(P.m.rows());
  m -= P.m.map<RationalFunction>(
      [&](const Rational& c) { return RationalFunction(c) * inv_u; });
  m += Q.m.map<RationalFunction>(
      [&](const Rational& c) { return RationalFunction(c) * inv_uk; });
  return LegOperator<RationalFunction>(P.index, std::move(m));
}

Matrix<Rational> r_matrix_eval(const AlgebraKind& kind, const Rational& x) {
  if (x.is_zero() || x == kind.kappa())
    throw std::domain_error("r_matrix_eval: x is a pole of R");
  const SpaceIndex& sp = kind.space();
  const std::size_t N = sp.dim();
  Matrix<Rational> m = Matrix<Rational>::identity(N * N);
  const Rational inv_u = x.inverse();
  const Rational inv_uk = (x - kind.kappa()).inverse();
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) m(a * N + b, b * N + a) -= inv_u;
  for (int i : sp.labels())
    for (int j : sp.labels())
      m(sp.pos(i) * N + sp.pos(-i), sp.pos(j) * N + sp.pos(-j)) +=
          Rational(kind.theta(i, j)) * inv_uk;
  return m;
}

SpaceIndex gl_space(int N) {
  std::vector<int> l(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) l[static_cast<std::size_t>(i)] = i + 1;
  return SpaceIndex(std::move(l));
}

LegOperator<RationalFunction> r_matrix_gl(int N) {
  const auto P = build_P(gl_space(N));
  const RationalFunction inv_u = RationalFunction::inv_shift(Rational(0));
  Matrix<RationalFunction> m =
      Matrix<RationalFunction>::identity(P.m.rows());
  m -= P.m.map<RationalFunction>(
      [&](const Rational& c) { return RationalFunction(c) * inv_u; });
  return LegOperator<RationalFunction>(P.index, std::move(m));
}

Matrix<Rational> r_matrix_gl_eval(int N, const Rational& x) {
  if (x.is_zero()) throw std::domain_error("r_matrix_gl_eval: pole at 0");
  const std::size_t n = static_cast<std::size_t>(N);
  Matrix<Rational> m = Matrix<Rational>::identity(n * n);
  const Rational inv_u = x.inverse();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m(a * n + b, b * n + a) -= inv_u;
  return m;
}

Matrix<Rational> f_generator(const AlgebraKind& kind, int i, int j) {
  const SpaceIndex& sp = kind.space();
  Matrix<Rational> m = e_unit_labeled(sp, i, j);
  Matrix<Rational> mirror = e_unit_labeled(sp, -j, -i);
  if (kind.theta(i, j) == 1)
    m -= mirror;
  else
    m += mirror;
  return m;
}

std::vector<ProofReport> check_pq_identities(const AlgebraKind& kind) {
  std::vector<ProofReport> reps;
  const auto P = build_P(kind.space()).m;
  const auto Q = build_Q(kind).m;
  const std::size_t d = P.rows();
  const auto id = Matrix<Rational>::identity(d);
  const int pq_sign = kind.orthogonal() ? 1 : -1;
  const Matrix<Rational> signedQ = pq_sign == 1 ? Q : -Q;

  auto make = [&](const std::string& name, const Matrix<Rational>& l,
                  const Matrix<Rational>& r) {
    ProofReport rep;
    rep.identity_name = name;
    rep.passed = (l == r);
    rep.note = "exact operator arithmetic on " + kind.name();
    if (!rep.passed) rep.counterexamples.push_back({{}, describe_difference(l, r)});
    return rep;
  };

  reps.push_back(make("P^2 = 1", P * P, id));
  reps.push_back(make(pq_sign == 1 ? "P Q = Q" : "P Q = -Q", P * Q, signedQ));
  reps.push_back(make(pq_sign == 1 ? "Q P = Q" : "Q P = -Q", Q * P, signedQ));
  Matrix<Rational> nq = Q;
  nq *= Rational(kind.N());
  reps.push_back(make("Q^2 = N Q", Q * Q, nq));
  return reps;
}

ProofReport check_r_unitarity(const AlgebraKind& kind) {
  const auto R = r_matrix(kind);
  const Matrix<RationalFunction> Rminus = R.m.map<RationalFunction>(
      [](const RationalFunction& f) {
        return f.compose_linear(Rational(-1), Rational(0));
      });
  const Matrix<RationalFunction> prod = R.m * Rminus;
  // (1 - 1/u^2) id
  const RationalFunction scalar =
      RationalFunction(1) -
      RationalFunction(Polynomial(1), Polynomial{Rational(0), Rational(0),
                                                 Rational(1)});
  Matrix<RationalFunction> expect =
      Matrix<RationalFunction>::identity(prod.rows());
  expect *= scalar;
  ProofReport rep;
  rep.identity_name = "R(u) R(-u) = (1 - u^{-2}) id";
  rep.passed = (prod == expect);
  rep.note = "exact rational-function arithmetic on " + kind.name();
  if (!rep.passed) {
    for (std::size_t i = 0; i < prod.rows() && rep.counterexamples.size() < 3;
         ++i)
      for (std::size_t j = 0; j < prod.cols(); ++j)
        if (prod(i, j) != expect(i, j)) {
          rep.counterexamples.push_back(
              {{}, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                       "): " + prod(i, j).str() + " vs " + expect(i, j).str()});
          break;
        }
  }
  return rep;
}

ProofReport check_ybe(
    const std::string& name, const SpaceIndex& sp,
    const std::function<Matrix<Rational>(const Rational&)>& evaluate,
    const std::function<bool(const Rational&)>& regular,
    int per_factor_degree) {
  const std::vector<SpaceIndex> legs = {sp, sp, sp};
  auto side = [&](const Rational& u, const Rational& v, bool lhs_order) {
    MultiIndex idx({sp, sp});
    LegOperator<Rational> r12(idx, evaluate(u));
    LegOperator<Rational> r13(idx, evaluate(u + v));
    LegOperator<Rational> r23(idx, evaluate(v));
    const auto e12 = embed_on_legs(r12, {0, 1}, legs);
    const auto e13 = embed_on_legs(r13, {0, 2}, legs);
    const auto e23 = embed_on_legs(r23, {1, 2}, legs);
    if (lhs_order) return e12.m * (e13.m * e23.m);
    return e23.m * (e13.m * e12.m);
  };
  const int deg = 2 * per_factor_degree;
  return prove_identity_grid(
      name,
      [&](const Rational& u, const Rational& v) { return side(u, v, true); },
      [&](const Rational& u, const Rational& v) { return side(u, v, false); },
      deg, deg, regular, regular,
      [&](const Rational& u, const Rational& v) { return regular(u + v); });
}

ProofReport check_ybe(const AlgebraKind& kind) {
  return check_ybe(
      "Yang-Baxter for " + kind.name(), kind.space(),
      [kind](const Rational& x) { return r_matrix_eval(kind, x); },
      [kind](const Rational& x) { return !x.is_zero() && x != kind.kappa(); },
      2);
}

ProofReport check_ybe_gl(int N) {
  return check_ybe(
      "Yang-Baxter for gl_" + std::to_string(N), gl_space(N),
      [N](const Rational& x) { return r_matrix_gl_eval(N, x); },
      [](const Rational& x) { return !x.is_zero(); }, 1);
}

}  // namespace ykit
