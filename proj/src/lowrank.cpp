#include "ykit/lowrank.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "ykit/leg_operator.hpp"
#include "ykit/structure_ops.hpp"

namespace ykit {

namespace {

long small_nonneg_integer(const Rational& r, const char* what) {
  if (!r.is_integer() || r.sign() < 0)
    throw std::invalid_argument(std::string(what) + " = " + r.str() +
                                " is not a nonnegative integer");
  return r.num_long();
}

Matrix<RationalFunction> to_rf(const Matrix<Rational>& m) {
  return m.map<RationalFunction>(
      [](const Rational& c) { return RationalFunction(c); });
}

// 1 / (s u + t).
RationalFunction inv_linear(const Rational& s, const Rational& t) {
  return RationalFunction(Polynomial{Rational(1)}, Polynomial{t, s});
}

}  // namespace

const Matrix<Rational>& ClassicalIrrep::f_at(int i, int j) const {
  const SpaceIndex& sp = kind.space();
  return f[sp.pos(i) * sp.dim() + sp.pos(j)];
}

Matrix<Rational>& ClassicalIrrep::f_at(int i, int j) {
  const SpaceIndex& sp = kind.space();
  return f[sp.pos(i) * sp.dim() + sp.pos(j)];
}

std::array<Matrix<Rational>, 4> sl2_irrep(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("sl2_irrep: dim must be >= 1");
  const long d = static_cast<long>(dim) - 1;
  std::array<Matrix<Rational>, 4> e{
      Matrix<Rational>(dim, dim), Matrix<Rational>(dim, dim),
      Matrix<Rational>(dim, dim), Matrix<Rational>(dim, dim)};
  for (long r = 0; r <= d; ++r) {
    const auto c = static_cast<std::size_t>(r);
    e[0](c, c) = Rational(d - r);  // E11
    e[3](c, c) = Rational(r);      // E22
    if (r < d) e[2](c + 1, c) = Rational(1);
    if (r > 0) e[1](c - 1, c) = Rational(r) * Rational(d - r + 1);
  }
  return e;
}

ClassicalIrrep classical_irrep_sp2(const Rational& mu1) {
  const long k = small_nonneg_integer(-mu1, "-mu_1");
  const std::size_t dim = static_cast<std::size_t>(k) + 1;
  auto [e11, e12, e21, e22] = sl2_irrep(dim);

  ClassicalIrrep ir{AlgebraKind(Family::C, 1), {mu1}, dim, {}, Rational(0)};
  ir.f.assign(4, Matrix<Rational>(dim, dim));
  ir.f_at(-1, -1) = e11 - e22;
  ir.f_at(-1, 1) = e12 * Rational(2);
  ir.f_at(1, -1) = e21 * Rational(2);
  ir.f_at(1, 1) = -(e11 - e22);
  return ir;
}

ClassicalIrrep classical_irrep_o3(const Rational& mu1) {
  const long k = small_nonneg_integer(Rational(-2) * mu1, "-2 mu_1");
  const std::size_t dim = static_cast<std::size_t>(k) + 1;
  auto [e11, e12, e21, e22] = sl2_irrep(dim);
  const Rational half(1, 2);

  ClassicalIrrep ir{AlgebraKind(Family::B, 1),
                    {mu1},
                    dim,
                    {},
                    (mu1 * mu1 - mu1) * half};
  ir.f.assign(9, Matrix<Rational>(dim, dim));
  ir.f_at(-1, -1) = (e11 - e22) * half;
  ir.f_at(-1, 0) = e12 * half;
  ir.f_at(0, -1) = e21;
  ir.f_at(0, 1) = -ir.f_at(-1, 0);
  ir.f_at(1, 0) = -ir.f_at(0, -1);
  ir.f_at(1, 1) = -ir.f_at(-1, -1);
  return ir;
}

ClassicalIrrep classical_irrep_o4(const Rational& mu1, const Rational& mu2) {
  const long k1 = small_nonneg_integer(-mu1 - mu2, "-mu_1 - mu_2");
  const long k2 = small_nonneg_integer(mu1 - mu2, "mu_1 - mu_2");
  const std::size_t d1 = static_cast<std::size_t>(k1) + 1;
  const std::size_t d2 = static_cast<std::size_t>(k2) + 1;
  auto [e11, e12, e21, e22] = sl2_irrep(d1);
  auto [f11, f12, f21, f22] = sl2_irrep(d2);
  const Matrix<Rational> i1 = Matrix<Rational>::identity(d1);
  const Matrix<Rational> i2 = Matrix<Rational>::identity(d2);
  const Rational half(1, 2);

  // First copy acts on the left factor, second on the right.
  const Matrix<Rational> h1 = kron(e11 - e22, i2);
  const Matrix<Rational> h2 = kron(i1, f11 - f22);
  const Matrix<Rational> a12 = kron(e12, i2), a21 = kron(e21, i2);
  const Matrix<Rational> b12 = kron(i1, f12), b21 = kron(i1, f21);

  ClassicalIrrep ir{AlgebraKind(Family::D, 2),
                    {mu1, mu2},
                    d1 * d2,
                    {},
                    (mu1 * mu1 + mu2 * mu2) * half - mu2};
  const std::size_t dim = ir.dim;
  ir.f.assign(16, Matrix<Rational>(dim, dim));
  ir.f_at(1, 1) = (h2 - h1) * half;   // F_11
  ir.f_at(2, 2) = -(h1 + h2) * half;  // F_22
  ir.f_at(-1, -1) = -ir.f_at(1, 1);
  ir.f_at(-2, -2) = -ir.f_at(2, 2);
  ir.f_at(-2, 1) = a12;
  ir.f_at(1, -2) = a21;
  ir.f_at(-2, -1) = b12;
  ir.f_at(-1, -2) = b21;
  ir.f_at(-1, 2) = -a12;
  ir.f_at(2, -1) = -a21;
  ir.f_at(1, 2) = -b12;
  ir.f_at(2, 1) = -b21;
  return ir;
}

CheckResult check_classical_irrep(const ClassicalIrrep& ir) {
  const AlgebraKind& kind = ir.kind;
  const auto& labels = kind.labels();
  const auto fail = [](std::string m) { return CheckResult{false, std::move(m)}; };

  // Antisymmetry F_ij + theta_ij F_{-j,-i} = 0.
  for (int i : labels)
    for (int j : labels) {
      Matrix<Rational> s = ir.f_at(i, j);
      if (kind.theta(i, j) == 1)
        s += ir.f_at(-j, -i);
      else
        s -= ir.f_at(-j, -i);
      if (!s.is_zero())
        return fail("antisymmetry fails at (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
    }

  // Bracket law.
  for (int i : labels)
    for (int j : labels)
      for (int k : labels)
        for (int l : labels) {
          Matrix<Rational> lhs =
              ir.f_at(i, j) * ir.f_at(k, l) - ir.f_at(k, l) * ir.f_at(i, j);
          Matrix<Rational> rhs(ir.dim, ir.dim);
          if (k == j) rhs += ir.f_at(i, l);
          if (i == l) rhs -= ir.f_at(k, j);
          const Rational th(kind.theta(i, j));
          if (k == -i) rhs -= ir.f_at(-j, l) * th;
          if (l == -j) rhs += ir.f_at(k, -i) * th;
          if (!(lhs - rhs).is_zero())
            return fail("bracket law fails at (" + std::to_string(i) + "," +
                        std::to_string(j) + "),(" + std::to_string(k) + "," +
                        std::to_string(l) + ")");
        }

  // The first basis vector is a highest weight vector of weight mu.
  std::vector<Rational> e0(ir.dim, Rational(0));
  e0[0] = Rational(1);
  for (int i : labels) {
    const std::vector<Rational> w = ir.f_at(i, i).apply(e0);
    Rational expect(0);
    if (i > 0) expect = ir.mu[static_cast<std::size_t>(i - 1)];
    if (i < 0) expect = -ir.mu[static_cast<std::size_t>(-i - 1)];
    for (std::size_t r = 0; r < ir.dim; ++r)
      if (w[r] != (r == 0 ? expect : Rational(0)))
        return fail("highest vector is not an F_" + std::to_string(i) + "," +
                    std::to_string(i) + " eigenvector of eigenvalue " +
                    expect.str());
  }
  for (int i : labels)
    for (int j : labels) {
      if (i >= j) continue;
      const std::vector<Rational> w = ir.f_at(i, j).apply(e0);
      for (const Rational& x : w)
        if (!x.is_zero())
          return fail("raising generator F_" + std::to_string(i) + "," +
                      std::to_string(j) + " does not kill the highest vector");
    }

  // Casimir scalar (stated formulas for the rank-one/rank-two orthogonal
  // kinds; the symplectic rank-one evaluation map does not use one).
  Matrix<Rational> cas(ir.dim, ir.dim);
  bool have_cas = false;
  const Rational half(1, 2);
  if (kind.family() == Family::B && kind.n() == 1) {
    cas = (ir.f_at(1, 1) * ir.f_at(1, 1) - ir.f_at(1, 1)) * half +
          ir.f_at(1, 0) * ir.f_at(0, 1);
    have_cas = true;
  } else if (kind.family() == Family::D && kind.n() == 2) {
    cas = (ir.f_at(1, 1) * ir.f_at(1, 1) + ir.f_at(2, 2) * ir.f_at(2, 2)) *
              half -
          ir.f_at(2, 2) + ir.f_at(2, 1) * ir.f_at(1, 2) +
          ir.f_at(2, -1) * ir.f_at(-1, 2);
    have_cas = true;
  }
  if (have_cas) {
    Matrix<Rational> expect = Matrix<Rational>::identity(ir.dim) * ir.casimir;
    if (!(cas - expect).is_zero())
      return fail("Casimir does not act as the scalar " + ir.casimir.str());
  }

  return CheckResult{true, ""};
}

TRep phi_sp2(const TRep& rep) {
  if (!rep.is_gl() || rep.N() != 2)
    throw std::invalid_argument("phi_sp2: expected a two-row representation");
  TRep out(AlgebraKind(Family::C, 1), rep.dim(),
           "sp2 twist of " + rep.desc());
  const Rational half(1, 2);
  const int lab[2] = {-1, 1};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      out.t(lab[a], lab[b]) =
          rep.t(a + 1, b + 1).map<RationalFunction>([&](const RationalFunction& g) {
            return g.compose_linear(half, Rational(0));
          });
  return out;
}

TRep phi_o3(const TRep& rep, bool half_shift) {
  if (!rep.is_gl() || rep.N() != 2)
    throw std::invalid_argument("phi_o3: expected a two-row representation");
  const Rational s0 = half_shift ? Rational(-1) : Rational(0);
  // A = T at 2u + s0, B = T at 2u + 1 + s0.
  auto at = [&](int i, int j, const Rational& t) {
    return rep.t(i, j).map<RationalFunction>([&](const RationalFunction& g) {
      return g.compose_linear(Rational(2), t);
    });
  };
  const Matrix<RationalFunction> a11 = at(1, 1, s0), a12 = at(1, 2, s0),
                                 a21 = at(2, 1, s0), a22 = at(2, 2, s0);
  const Rational t1 = s0 + Rational(1);
  const Matrix<RationalFunction> b11 = at(1, 1, t1), b12 = at(1, 2, t1),
                                 b21 = at(2, 1, t1), b22 = at(2, 2, t1);

  TRep out(AlgebraKind(Family::B, 1), rep.dim(), "o3 image of " + rep.desc());
  const RationalFunction half(Rational(1, 2));
  out.t(-1, -1) = a11 * b11;
  out.t(-1, 0) = (a11 * b12 + a12 * b11) * half;
  out.t(-1, 1) = -(a12 * b12 * half);
  out.t(0, -1) = a11 * b21 + a21 * b11;
  out.t(0, 0) = a11 * b22 + a21 * b12;
  out.t(0, 1) = -((a12 * b22 + a22 * b12) * half);
  out.t(1, -1) = -(a21 * b21 * RationalFunction(2));
  out.t(1, 0) = -(a21 * b22 + a22 * b21);
  out.t(1, 1) = a22 * b22;
  return out;
}

TRep psi_o4(const TRep& rep_a, const TRep& rep_b) {
  if (!rep_a.is_gl() || rep_a.N() != 2 || !rep_b.is_gl() || rep_b.N() != 2)
    throw std::invalid_argument("psi_o4: expected two-row representations");
  TRep out(AlgebraKind(Family::D, 2), rep_a.dim() * rep_b.dim(),
           "o4 image of " + rep_a.desc() + " and " + rep_b.desc());
  // label -> (row in the first copy, row in the second copy)
  auto rows = [](int label) -> std::pair<int, int> {
    switch (label) {
      case -2: return {1, 1};
      case -1: return {1, 2};
      case 1: return {2, 1};
      default: return {2, 2};
    }
  };
  for (int k : out.kind().labels())
    for (int l : out.kind().labels()) {
      const auto [a, b] = rows(k);
      const auto [c, d] = rows(l);
      Matrix<RationalFunction> img = kron(rep_a.t(a, c), rep_b.t(b, d));
      if ((k == 2) != (l == 2)) img = -img;
      out.t(k, l) = std::move(img);
    }
  return out;
}

TRep ev_rep(const ClassicalIrrep& ir, const Rational& a) {
  const AlgebraKind& kind = ir.kind;
  std::string desc = "evaluation module mu=(";
  for (std::size_t i = 0; i < ir.mu.size(); ++i)
    desc += (i ? "," : "") + ir.mu[i].str();
  desc += ") @ " + a.str();
  TRep out(kind, ir.dim, std::move(desc));

  const RationalFunction pole = RationalFunction::inv_shift(a);  // 1/(u-a)
  // Second-order pole of the family formula.
  RationalFunction pole2;
  if (kind.family() == Family::B) {
    // 1 / ((u-a)(2u-2a-1))
    pole2 = pole * inv_linear(Rational(2), Rational(-2) * a - Rational(1));
  } else if (kind.family() == Family::D) {
    // 1 / (2 (u-a)^2)
    pole2 = pole * pole * RationalFunction(Rational(1, 2));
  }

  const auto& labels = kind.labels();
  for (int i : labels)
    for (int j : labels) {
      Matrix<RationalFunction> block = to_rf(ir.f_at(i, j)) * pole;
      if (i == j)
        for (std::size_t r = 0; r < ir.dim; ++r)
          block(r, r) += RationalFunction(1);
      if (kind.family() != Family::C) {
        Matrix<Rational> second(ir.dim, ir.dim);
        for (int k : labels) second += ir.f_at(i, k) * ir.f_at(k, j);
        if (kind.family() == Family::D) second -= ir.f_at(i, j);
        if (i == j)
          second -= Matrix<Rational>::identity(ir.dim) * ir.casimir;
        block += to_rf(second) * pole2;
      }
      out.t(i, j) = std::move(block);
    }
  return out;
}

HighestWeightData ev_weights(const ClassicalIrrep& ir, const Rational& a) {
  const AlgebraKind& kind = ir.kind;
  const Polynomial u = Polynomial::u();
  std::vector<RationalFunction> lam;
  auto lin = [&](const Rational& c) {  // 2u + c
    return Polynomial{c, Rational(2)};
  };
  if (kind.family() == Family::C) {
    const Rational& m = ir.mu[0];
    lam = {RationalFunction(u - Polynomial{m}, u),
           RationalFunction(u + Polynomial{m}, u)};
  } else if (kind.family() == Family::B) {
    const Rational& m = ir.mu[0];
    const Polynomial den = lin(Rational(0)) * lin(Rational(-1));
    lam = {RationalFunction(lin(-m) * lin(-m - 1), den),
           RationalFunction(lin(m) * lin(-m - 1), den),
           RationalFunction(lin(m) * lin(m - 1), den)};
  } else {
    const Rational &m1 = ir.mu[0], &m2 = ir.mu[1];
    const Polynomial den = lin(Rational(0)) * lin(Rational(0));
    lam = {RationalFunction(lin(-m1 - m2) * lin(m1 - m2), den),
           RationalFunction(lin(-m1 - m2) * lin(-m1 + m2), den),
           RationalFunction(lin(m1 - m2) * lin(m1 + m2), den),
           RationalFunction(lin(-m1 + m2) * lin(m1 + m2), den)};
  }
  if (!a.is_zero())
    for (auto& f : lam) f = f.shift(-a);
  return HighestWeightData(kind, std::move(lam));
}

CheckResult weight_existence_condition(const HighestWeightData& hw) {
  const AlgebraKind& kind = hw.kind;
  if (kind.family() == Family::B && kind.n() == 1) {
    const Rational mh(-1, 2);
    if (hw.at(-1).shift(mh) * hw.at(1) == hw.at(0).shift(mh) * hw.at(0))
      return CheckResult{true, ""};
    return CheckResult{false,
                       "lambda_{-1}(u-1/2) lambda_1(u) != "
                       "lambda_0(u-1/2) lambda_0(u)"};
  }
  if (kind.family() == Family::D && kind.n() == 2) {
    if (hw.at(-2) * hw.at(2) == hw.at(-1) * hw.at(1))
      return CheckResult{true, ""};
    return CheckResult{false,
                       "lambda_{-2}(u) lambda_2(u) != "
                       "lambda_{-1}(u) lambda_1(u)"};
  }
  throw std::invalid_argument(
      "weight_existence_condition: stated only for the rank-one odd "
      "orthogonal and rank-two even orthogonal kinds");
}

namespace {

// P_ab on (C^2)^{x 4} (zero-based leg positions).
Matrix<Rational> perm4(std::size_t a, std::size_t b) {
  const SpaceIndex g2 = gl_space(2);
  const std::vector<SpaceIndex> ambient(4, g2);
  return embed_on_legs(build_P(g2), {a, b}, ambient).m;
}

// 1 - P_ab / (s u + t) over the rational functions.
Matrix<RationalFunction> rcheck4(const Matrix<Rational>& p, const Rational& s,
                                 const Rational& t) {
  Matrix<RationalFunction> m = to_rf(p) * (-inv_linear(s, t));
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, r) += RationalFunction(1);
  return m;
}

// Columns of the embedding V (x) V -> (C^2)^{x 4} for the given V basis.
Matrix<Rational> embed_columns(const std::vector<std::vector<Rational>>& w) {
  const std::size_t k = w.size();
  Matrix<Rational> io(16, k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 4; ++y)
          io(4 * x + y, k * i + j) = w[i][x] * w[j][y];
  return io;
}

}  // namespace

CheckResult fusion_check_o3() {
  const Matrix<Rational> p12 = perm4(0, 1), p34 = perm4(2, 3),
                         p13 = perm4(0, 2), p14 = perm4(0, 3),
                         p23 = perm4(1, 2), p24 = perm4(1, 3);
  const Rational half(1, 2);
  const Matrix<Rational> id16 = Matrix<Rational>::identity(16);
  const Matrix<RationalFunction> proj =
      to_rf((id16 + p12) * half) * to_rf((id16 + p34) * half);

  const Matrix<RationalFunction> r14 = rcheck4(p14, Rational(2), Rational(-1)),
                                 r13 = rcheck4(p13, Rational(2), Rational(0)),
                                 r24 = rcheck4(p24, Rational(2), Rational(0)),
                                 r23 = rcheck4(p23, Rational(2), Rational(1));

  const Matrix<RationalFunction> rv = proj * (r14 * r13 * r24 * r23);
  const Matrix<RationalFunction> rv_equiv = (r23 * r13 * r24 * r14) * proj;
  if (!(rv - rv_equiv).is_zero())
    return CheckResult{false, "the two product forms of R_V differ"};

  // Gauged symmetric-square basis: entries of each vector in C^2 (x) C^2.
  const Rational z(0), one(1);
  const std::vector<std::vector<Rational>> w = {
      {Rational(2), z, z, z},      // 2 e1 (x) e1
      {z, one, one, z},            // e1 (x) e2 + e2 (x) e1
      {z, z, z, Rational(-1)}};    // -e2 (x) e2
  const Matrix<RationalFunction> io = to_rf(embed_columns(w));

  const AlgebraKind o3(Family::B, 1);
  const RationalFunction scale =
      RationalFunction(Polynomial{Rational(-1), Rational(2)},
                       Polynomial{Rational(1), Rational(2)});
  Matrix<RationalFunction> m =
      to_rf(build_P(o3.space()).m) * (-RationalFunction::inv_shift(Rational(0))) +
      to_rf(build_Q(o3).m) * RationalFunction::inv_shift(half);
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, r) += RationalFunction(1);
  m = m * scale;

  if (!(rv * io - io * m).is_zero())
    return CheckResult{false,
                       "R_V restricted to V (x) V does not match the scaled "
                       "rank-one orthogonal R-matrix"};

  // Simplified operator reproduces the restriction.
  const RationalFunction c1 = inv_linear(Rational(2), Rational(1));
  Matrix<RationalFunction> simp =
      to_rf(p14 + p24 + p13 + p23) * (-c1) +
      to_rf(p13 * p24) * (c1 * RationalFunction::inv_shift(Rational(0)));
  for (std::size_t r = 0; r < simp.rows(); ++r)
    simp(r, r) += RationalFunction(1);
  if (!(rv * io - simp * io).is_zero())
    return CheckResult{false,
                       "simplified operator differs from R_V on V (x) V"};

  // Known scalar on the lowest basis vector.
  const RationalFunction expect(
      Polynomial{Rational(-1), Rational(1)} * Polynomial{Rational(-1), Rational(2)},
      Polynomial{Rational(0), Rational(1)} * Polynomial{Rational(1), Rational(2)});
  if (m(0, 0) != expect)
    return CheckResult{false, "wrong eigenvalue on the lowest basis vector"};

  return CheckResult{true, ""};
}

CheckResult fusion_check_o4() {
  const Matrix<Rational> p13 = perm4(0, 2), p24 = perm4(1, 3);
  const Matrix<Rational> id16 = Matrix<Rational>::identity(16);

  const Rational z(0), one(1);
  const std::vector<std::vector<Rational>> w = {
      {one, z, z, z}, {z, one, z, z}, {z, z, one, z}, {z, z, z, Rational(-1)}};
  const Matrix<Rational> io_q = embed_columns(w);
  const Matrix<RationalFunction> io = to_rf(io_q);

  const AlgebraKind o4(Family::D, 2);
  // P_V and Q_V through the embedding.
  if (!(p13 * p24 * io_q - io_q * build_P(o4.space()).m).is_zero())
    return CheckResult{false, "P_V does not match P13 P24"};
  if (!((id16 - p13) * (id16 - p24) * io_q - io_q * build_Q(o4).m).is_zero())
    return CheckResult{false, "Q_V does not match (1-P13)(1-P24)"};

  const Matrix<RationalFunction> rv =
      rcheck4(p13, Rational(1), Rational(0)) *
      rcheck4(p24, Rational(1), Rational(0));
  const RationalFunction scale(Polynomial{Rational(-1), Rational(1)},
                               Polynomial{Rational(0), Rational(1)});
  Matrix<RationalFunction> m =
      to_rf(build_P(o4.space()).m) * (-RationalFunction::inv_shift(Rational(0))) +
      to_rf(build_Q(o4).m) * RationalFunction::inv_shift(Rational(1));
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, r) += RationalFunction(1);
  m = m * scale;
  if (!(rv * io - io * m).is_zero())
    return CheckResult{false,
                       "R13(u) R24(u) does not match the scaled rank-two "
                       "orthogonal R-matrix"};
  return CheckResult{true, ""};
}

}  // namespace ykit
