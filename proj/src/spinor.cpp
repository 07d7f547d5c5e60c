#include "ykit/spinor.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace ykit {

namespace {

int popcount(unsigned m) { return std::popcount(m); }

// Sign picked up by moving xi_i into (or out of) sorted position: one swap
// per variable with smaller index already present.
int move_sign(unsigned mask_below_i, int i) {
  return popcount(mask_below_i & ((1u << (i - 1)) - 1)) % 2 ? -1 : 1;
}

bool parity_admits(SpinorParity p, unsigned mask) {
  if (p == SpinorParity::full) return true;
  const bool even = popcount(mask) % 2 == 0;
  return (p == SpinorParity::even) == even;
}

Rational pow2(int e) {
  Rational r(1);
  for (int k = 0; k < e; ++k) r *= Rational(2);
  for (int k = 0; k > e; --k) r /= Rational(2);
  return r;
}

int sgn(int label) { return label > 0 ? 1 : label < 0 ? -1 : 0; }

SpinorParity first_parity(const AlgebraKind& kind) {
  return kind.family() == Family::B ? SpinorParity::full : SpinorParity::even;
}

SpinorParity second_parity_for(const AlgebraKind& kind, int p) {
  if (kind.family() == Family::B) return SpinorParity::full;
  return p % 2 ? SpinorParity::odd : SpinorParity::even;
}

Rational distinguished_shift(const AlgebraKind& kind, int p) {
  return kind.family() == Family::B ? Rational(2 * p - 1, 2)
                                    : Rational(p - 1);
}

std::vector<RationalFunction> to_rf_vec(const std::vector<Rational>& v) {
  std::vector<RationalFunction> r;
  r.reserve(v.size());
  for (const Rational& c : v) r.emplace_back(c);
  return r;
}

bool all_zero(const std::vector<RationalFunction>& v) {
  for (const auto& f : v)
    if (!f.is_zero()) return false;
  return true;
}

}  // namespace

std::size_t SpinorSpace::pos(unsigned mask) const {
  if (parity == SpinorParity::full) return mask;
  if (!parity_admits(parity, mask))
    throw std::invalid_argument("SpinorSpace::pos: wrong parity");
  // Masks are ascending; count admitted masks below.
  std::size_t k = 0;
  for (unsigned m = 0; m < mask; ++m)
    if (parity_admits(parity, m)) ++k;
  return k;
}

SpinorSpace spinor_space(int n, SpinorParity parity) {
  if (n < 1 || n > 20) throw std::invalid_argument("spinor_space: bad rank");
  SpinorSpace sp;
  sp.n = n;
  sp.parity = parity;
  for (unsigned m = 0; m < (1u << n); ++m)
    if (parity_admits(parity, m)) sp.masks.push_back(m);
  return sp;
}

FermionicOps fermionic_ops(int n) {
  if (n < 1 || n > 12) throw std::invalid_argument("fermionic_ops: bad rank");
  const std::size_t d = std::size_t(1) << n;
  FermionicOps ops;
  ops.n = n;
  for (int i = 1; i <= n; ++i) {
    Matrix<Rational> mul(d, d), der(d, d);
    const unsigned bit = 1u << (i - 1);
    for (unsigned m = 0; m < d; ++m) {
      if (!(m & bit)) mul(m | bit, m) = Rational(move_sign(m, i));
      if (m & bit) der(m & ~bit, m) = Rational(move_sign(m, i));
    }
    ops.xi.push_back(std::move(mul));
    ops.dd.push_back(std::move(der));
  }
  return ops;
}

ClassicalIrrep spinor_lie(const AlgebraKind& kind, SpinorParity parity) {
  const int n = kind.n();
  if (!kind.orthogonal())
    throw std::invalid_argument("spinor_lie: orthogonal kinds only");
  const bool odd_kind = kind.N() % 2 == 1;
  if (odd_kind) parity = SpinorParity::full;
  const FermionicOps ops = fermionic_ops(n);
  const std::size_t full = std::size_t(1) << n;
  const Rational half(1, 2);

  // Assemble the gauged blocks on the full space.
  const std::size_t nl = kind.space().dim();
  std::vector<Matrix<Rational>> f(nl * nl, Matrix<Rational>(full, full));
  auto at = [&](int i, int j) -> Matrix<Rational>& {
    return f[kind.space().pos(i) * nl + kind.space().pos(j)];
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Matrix<Rational> m = ops.xi[i - 1] * ops.dd[j - 1];
      if (i == j)
        for (std::size_t r = 0; r < full; ++r) m(r, r) -= half;
      at(i, j) = m;
      at(-j, -i) = -m;
      // Row -j, column i carries d_i d_j; row j, column -i carries
      // xi_i xi_j (gauge factors for the odd kind).
      Matrix<Rational> dd = ops.dd[i - 1] * ops.dd[j - 1];
      Matrix<Rational> xx = ops.xi[i - 1] * ops.xi[j - 1];
      if (odd_kind) {
        dd *= half;
        xx *= Rational(2);
      }
      at(-j, i) = std::move(dd);
      at(j, -i) = std::move(xx);
    }
  if (odd_kind)
    for (int i = 1; i <= n; ++i) {
      at(0, i) = ops.dd[i - 1] * half;
      at(i, 0) = ops.xi[i - 1];
      at(0, -i) = -ops.xi[i - 1];
      at(-i, 0) = -(ops.dd[i - 1] * half);
    }

  // Restrict to the parity half for the even kind.
  std::size_t dim = full;
  if (parity != SpinorParity::full) {
    const SpinorSpace sp = spinor_space(n, parity);
    dim = sp.dim();
    for (auto& m : f) {
      Matrix<Rational> r(dim, dim);
      for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b)
          r(a, b) = m(sp.masks[a], sp.masks[b]);
      m = std::move(r);
    }
  }

  std::vector<Rational> mu(static_cast<std::size_t>(n), -half);
  if (parity == SpinorParity::odd) mu[0] = half;
  Rational cas(0);
  if (kind.family() == Family::B && n == 1)
    cas = (mu[0] * mu[0] - mu[0]) * half;
  if (kind.family() == Family::D && n == 2)
    cas = (mu[0] * mu[0] + mu[1] * mu[1]) * half - mu[1];
  return ClassicalIrrep{kind, std::move(mu), dim, std::move(f), cas};
}

CheckResult check_fsqua(const ClassicalIrrep& ir) {
  const Rational kappa = ir.kind.kappa();
  const Rational c0 = kappa * Rational(1, 2) + Rational(1, 4);
  for (int i : ir.kind.labels())
    for (int j : ir.kind.labels()) {
      Matrix<Rational> sq(ir.dim, ir.dim);
      for (int k : ir.kind.labels()) sq += ir.f_at(i, k) * ir.f_at(k, j);
      Matrix<Rational> expect = ir.f_at(i, j) * kappa;
      if (i == j)
        for (std::size_t r = 0; r < ir.dim; ++r) expect(r, r) += c0;
      if (!(sq - expect).is_zero())
        return CheckResult{false, "square identity fails at (" +
                                      std::to_string(i) + "," +
                                      std::to_string(j) + ")"};
    }
  return CheckResult{true, ""};
}

TRep spinor_trep(const AlgebraKind& kind, SpinorParity parity) {
  const ClassicalIrrep ir = spinor_lie(kind, parity);
  std::string desc = "spinor module";
  if (kind.family() == Family::D)
    desc += parity == SpinorParity::odd ? " (odd half)" : " (even half)";
  TRep rep(kind, ir.dim, std::move(desc));
  const RationalFunction inv_u = RationalFunction::inv_shift(Rational(0));
  for (int i : kind.labels())
    for (int j : kind.labels()) {
      Matrix<RationalFunction> block =
          ir.f_at(i, j).map<RationalFunction>(
              [&](const Rational& c) { return RationalFunction(c) * inv_u; });
      if (i == j)
        for (std::size_t r = 0; r < ir.dim; ++r)
          block(r, r) += RationalFunction(1);
      rep.t(i, j) = std::move(block);
    }
  return rep;
}

HighestWeightData spinor_weights(const AlgebraKind& kind,
                                 SpinorParity parity) {
  const RationalFunction plus(Polynomial{Rational(1, 2), Rational(1)},
                              Polynomial{Rational(0), Rational(1)});
  const RationalFunction minus(Polynomial{Rational(-1, 2), Rational(1)},
                               Polynomial{Rational(0), Rational(1)});
  std::vector<RationalFunction> lam;
  for (int i : kind.labels()) {
    if (i == 0) {
      lam.push_back(RationalFunction(1));
      continue;
    }
    bool up = i < 0;
    if (kind.family() == Family::D && parity == SpinorParity::odd &&
        (i == 1 || i == -1))
      up = !up;
    lam.push_back(up ? plus : minus);
  }
  return HighestWeightData(kind, std::move(lam));
}

TRep spinor_tensor(const AlgebraKind& kind, const Rational& a,
                   SpinorParity second_parity) {
  TRep first = spinor_trep(kind, first_parity(kind));
  TRep second = spinor_trep(kind, kind.family() == Family::B
                                      ? SpinorParity::full
                                      : second_parity);
  return tensor_rep(shift_rep(first, a), second);
}

std::vector<Rational> vp_vector(const AlgebraKind& kind, int p) {
  const int n = kind.n();
  if (p < 0 || p > n) throw std::invalid_argument("vp_vector: bad p");
  const bool is_b = kind.family() == Family::B;
  const SpinorSpace sa = spinor_space(n, first_parity(kind));
  const SpinorSpace sb = spinor_space(n, second_parity_for(kind, p));
  std::vector<Rational> v(sa.dim() * sb.dim(), Rational(0));
  const unsigned top = 1u << p;
  for (unsigned im = 0; im < top; ++im) {
    if (!is_b && popcount(im) % 2) continue;  // |I| even for the even kind
    const unsigned jm = ~im & (top - 1);
    long jsum = 0;
    for (int b = 0; b < p; ++b)
      if (jm & (1u << b)) jsum += b + 1;
    v[sa.pos(im) * sb.dim() + sb.pos(jm)] = Rational(jsum % 2 ? -1 : 1);
  }
  return v;
}

Rational swapped_form(const SpinorSpace& xa, const SpinorSpace& xb,
                      const std::vector<Rational>& x, const SpinorSpace& ya,
                      const SpinorSpace& yb, const std::vector<Rational>& y) {
  if (x.size() != xa.dim() * xb.dim() || y.size() != ya.dim() * yb.dim())
    throw std::invalid_argument("swapped_form: dimension mismatch");
  Rational acc(0);
  for (std::size_t i = 0; i < xa.dim(); ++i)
    for (std::size_t j = 0; j < xb.dim(); ++j) {
      const Rational& c = x[i * xb.dim() + j];
      if (c.is_zero()) continue;
      // Pair the first leg with y's second and vice versa.
      if (!parity_admits(ya.parity, xb.masks[j]) ||
          !parity_admits(yb.parity, xa.masks[i]))
        continue;
      acc += c * y[ya.pos(xb.masks[j]) * yb.dim() + yb.pos(xa.masks[i])];
    }
  return acc;
}

std::vector<Rational> swap_legs(const std::vector<Rational>& x,
                                std::size_t da, std::size_t db) {
  if (x.size() != da * db)
    throw std::invalid_argument("swap_legs: dimension mismatch");
  std::vector<Rational> r(x.size(), Rational(0));
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t b = 0; b < db; ++b) r[b * da + a] = x[a * db + b];
  return r;
}

Rational vp_norm(const AlgebraKind& kind, int p) {
  const SpinorSpace sa = spinor_space(kind.n(), first_parity(kind));
  const SpinorSpace sb = spinor_space(kind.n(), second_parity_for(kind, p));
  const std::vector<Rational> v = vp_vector(kind, p);
  if (sb.parity == SpinorParity::odd)
    return swapped_form(sa, sb, v, sb, sa, swap_legs(v, sa.dim(), sb.dim()));
  return swapped_form(sa, sb, v, sa, sb, v);
}

VpCheck check_vp_singular(const AlgebraKind& kind, int p) {
  const bool is_b = kind.family() == Family::B;
  const int n = kind.n();
  const Rational a = distinguished_shift(kind, p);
  const TRep rep = spinor_tensor(kind, a, second_parity_for(kind, p));
  const std::vector<Rational> v = vp_vector(kind, p);
  const std::vector<RationalFunction> vr = to_rf_vec(v);
  auto fail = [&](std::string m) {
    return VpCheck{CheckResult{false, std::move(m)},
                   HighestWeightData(kind, std::vector<RationalFunction>(
                                               kind.space().dim(),
                                               RationalFunction(1)))};
  };

  const auto& labels = kind.labels();
  for (int i : labels)
    for (int j : labels) {
      if (i >= j) continue;
      if (!all_zero(rep.t(i, j).apply(vr)))
        return fail("raising block (" + std::to_string(i) + "," +
                    std::to_string(j) + ") does not kill v_p");
    }

  auto wt = weight_of_vector(rep, v);
  if (!wt.has_value()) return fail("v_p is not a joint eigenvector");
  HighestWeightData measured(kind, *wt);

  // Stated eigenvalue bands.  u-shifted numerators/denominator:
  // odd kind: (u-p)(u+1/2) or (u-p)(u-1/2) over u(u-p+1/2);
  // even kind: (u-p+1/2)(u+1/2) or (u-p+1/2)(u-1/2) over u(u-p+1).
  auto lin = [](const Rational& c) { return Polynomial{c, Rational(1)}; };
  const Polynomial den =
      is_b ? lin(Rational(0)) * lin(Rational(1 - 2 * p, 2))
           : lin(Rational(0)) * lin(Rational(1 - p));
  const Polynomial head = is_b ? lin(Rational(-p)) : lin(Rational(1 - 2 * p, 2));
  const RationalFunction low(head * lin(Rational(1, 2)), den);
  const RationalFunction high(head * lin(Rational(-1, 2)), den);
  const int band_start = is_b ? 0 : -1;
  for (int i : labels) {
    if (i < band_start) continue;
    RationalFunction expect = i <= p ? low : high;
    // Edge case p = 0 for the even kind: the -1 label has no mixing terms
    // (v_0 = 1 (x) 1), so it carries the raw product of the two factor
    // weights at shift a = -1 instead of the first band.
    if (!is_b && p == 0 && i == -1)
      expect = RationalFunction(lin(Rational(3, 2)) * lin(Rational(1, 2)),
                                lin(Rational(0)) * lin(Rational(1)));
    if (measured.at(i) != expect)
      return fail("eigenvalue band mismatch at label " + std::to_string(i));
  }

  // Second-coefficient diagonal values from the singularity analysis.
  const std::vector<RationalFunction> lhs0 = to_rf_vec(v);
  for (int i : labels) {
    if (i < band_start) continue;
    Rational expect2;
    if (is_b)
      expect2 = i <= p ? Rational(-p, 2)
                       : Rational(-p, 2) + Rational(1, 2);
    else
      expect2 = i <= p ? Rational(1 - 2 * p, 4) : Rational(3 - 2 * p, 4);
    // Same p = 0 edge case as the eigenvalue bands above.
    if (!is_b && p == 0 && i == -1) expect2 = Rational(-1, 4);
    std::vector<Rational> w = t_coeff(rep, i, i, 2).apply(v);
    for (std::size_t r = 0; r < v.size(); ++r)
      if (w[r] != expect2 * v[r])
        return fail("second coefficient mismatch at label " +
                    std::to_string(i));
  }

  return VpCheck{CheckResult{true, ""}, std::move(measured)};
}

CheckResult raising_identity(const AlgebraKind& kind, int s,
                             const Rational& a) {
  const int n = kind.n();
  if (s < 2 || s > n) throw std::invalid_argument("raising_identity: bad s");
  const bool is_b = kind.family() == Family::B;
  const TRep rep = spinor_tensor(kind, a, second_parity_for(kind, s));
  const std::vector<Rational> vs = vp_vector(kind, s);
  const std::vector<Rational> vlow = vp_vector(kind, s - 2);
  std::vector<Rational> w = t_coeff(rep, -s + 1, s, 2).apply(vs);
  // The stored gauge halves this entry for the odd kind.
  const Rational scale = is_b ? Rational(2) : Rational(1);
  const Rational coeff =
      a - Rational(s) + (is_b ? Rational(1, 2) : Rational(1));
  for (std::size_t r = 0; r < w.size(); ++r)
    if (w[r] * scale != coeff * vlow[r])
      return CheckResult{false,
                         "raising image differs from (" + coeff.str() +
                             ") v_{s-2} at coordinate " + std::to_string(r)};
  return CheckResult{true, ""};
}

Rational lower_pairing(const AlgebraKind& kind, int s, const Rational& a) {
  const int n = kind.n();
  if (s < 2 || s > n) throw std::invalid_argument("lower_pairing: bad s");
  const bool is_b = kind.family() == Family::B;
  const SpinorParity par2 = second_parity_for(kind, s);
  const TRep rep = spinor_tensor(kind, a, par2);
  const std::vector<Rational> vlow = vp_vector(kind, s - 2);
  const std::vector<Rational> vs = vp_vector(kind, s);
  std::vector<Rational> w = t_coeff(rep, s, -s + 1, 2).apply(vlow);
  const SpinorSpace sa = spinor_space(n, first_parity(kind));
  const SpinorSpace sb = spinor_space(n, par2);
  Rational pairing;
  if (par2 == SpinorParity::odd)
    pairing = swapped_form(sa, sb, w, sb, sa,
                           swap_legs(vs, sa.dim(), sb.dim()));
  else
    pairing = swapped_form(sa, sb, w, sa, sb, vs);
  // Gauge doubles this entry for the odd kind.
  return is_b ? pairing / Rational(2) : pairing;
}

CheckResult check_form_covariance(const AlgebraKind& kind,
                                  SpinorParity parity) {
  const ClassicalIrrep ir = spinor_lie(kind, parity);
  const bool gauged = kind.family() == Family::B;
  for (int i : kind.labels())
    for (int j : kind.labels()) {
      const Rational factor = gauged ? pow2(sgn(i) - sgn(j)) : Rational(1);
      const Matrix<Rational> lhs = ir.f_at(i, j).transpose();
      const Matrix<Rational> rhs = ir.f_at(j, i) * factor;
      if (!(lhs - rhs).is_zero())
        return CheckResult{false, "covariance fails at (" + std::to_string(i) +
                                      "," + std::to_string(j) + ")"};
    }
  return CheckResult{true, ""};
}

TRep wp_module(const AlgebraKind& kind, int p) {
  const Rational a = distinguished_shift(kind, p);
  const TRep rep = spinor_tensor(kind, a, second_parity_for(kind, p));
  const std::vector<std::vector<Rational>> basis =
      cyclic_span(rep, vp_vector(kind, p));
  return restrict_rep(rep, basis,
                      "cyclic span of the p=" + std::to_string(p) +
                          " singular vector");
}

}  // namespace ykit
