#include "ykit/trep.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ykit/linear_solve.hpp"

namespace ykit {

TRep::TRep(AlgebraKind kind, std::size_t dim, std::string desc)
    : kind_(kind),
      space_(kind.space()),
      dim_(dim),
      desc_(std::move(desc)),
      blocks_(space_.dim() * space_.dim(),
              Matrix<RationalFunction>(dim, dim)) {}

TRep::TRep(int gl_N, std::size_t dim, std::string desc)
    : space_(gl_space(gl_N)),
      dim_(dim),
      desc_(std::move(desc)),
      blocks_(space_.dim() * space_.dim(),
              Matrix<RationalFunction>(dim, dim)) {}

const AlgebraKind& TRep::kind() const {
  if (!kind_) throw std::logic_error("TRep::kind: this is a gl representation");
  return *kind_;
}

Matrix<RationalFunction>& TRep::t(int i, int j) {
  return blocks_[space_.pos(i) * space_.dim() + space_.pos(j)];
}
const Matrix<RationalFunction>& TRep::t(int i, int j) const {
  return blocks_[space_.pos(i) * space_.dim() + space_.pos(j)];
}
Matrix<RationalFunction>& TRep::t_pos(std::size_t p, std::size_t q) {
  return blocks_.at(p * space_.dim() + q);
}
const Matrix<RationalFunction>& TRep::t_pos(std::size_t p, std::size_t q) const {
  return blocks_.at(p * space_.dim() + q);
}

Polynomial TRep::common_denominator() const {
  Polynomial lcm(1);
  for (const auto& block : blocks_)
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j) {
        const RationalFunction& f = block(i, j);
        if (f.is_zero()) continue;
        const Polynomial g = Polynomial::gcd(lcm, f.den());
        Polynomial quo, rem;
        Polynomial::divrem(f.den(), g, quo, rem);
        lcm *= quo;
      }
  return lcm.monic();
}

TRep vector_rep(const AlgebraKind& kind, const Rational& c) {
  const std::size_t N = kind.space().dim();
  TRep rep(kind, N, "vector representation at shift " + c.str() + " of " +
                        kind.name());
  const RationalFunction pole1 = RationalFunction::inv_shift(c);
  const RationalFunction pole2 =
      RationalFunction::inv_shift(c - kind.kappa());
  for (int i : kind.labels())
    for (int j : kind.labels()) {
      Matrix<RationalFunction> m(N, N);
      if (i == j)
        for (std::size_t k = 0; k < N; ++k) m(k, k) = RationalFunction(1);
      m(kind.space().pos(i), kind.space().pos(j)) += pole1;
      const RationalFunction mirror =
          RationalFunction(Rational(kind.theta(i, j))) * pole2;
      m(kind.space().pos(-j), kind.space().pos(-i)) -= mirror;
      rep.t(i, j) = std::move(m);
    }
  return rep;
}

TRep trivial_rep(const AlgebraKind& kind) {
  TRep rep(kind, 1, "trivial (counit) representation of " + kind.name());
  for (int i : kind.labels()) rep.t(i, i)(0, 0) = RationalFunction(1);
  return rep;
}

TRep gl_eval_rep(const std::vector<std::vector<Matrix<Rational>>>& E,
                 std::string desc) {
  const int N = static_cast<int>(E.size());
  if (N == 0) throw std::invalid_argument("gl_eval_rep: empty generator set");
  const std::size_t d = E[0][0].rows();
  TRep rep(N, d, std::move(desc));
  const RationalFunction inv_u = RationalFunction::inv_shift(Rational(0));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (E[i].size() != static_cast<std::size_t>(N) ||
          E[i][j].rows() != d || E[i][j].cols() != d)
        throw std::invalid_argument("gl_eval_rep: ragged generator set");
      Matrix<RationalFunction> m(d, d);
      if (i == j)
        for (std::size_t k = 0; k < d; ++k) m(k, k) = RationalFunction(1);
      m += E[i][j].map<RationalFunction>(
          [&](const Rational& c) { return RationalFunction(c) * inv_u; });
      rep.t(i + 1, j + 1) = std::move(m);
    }
  return rep;
}

TRep tensor_rep(const TRep& a, const TRep& b) {
  if (a.space() != b.space() || a.is_gl() != b.is_gl())
    throw std::invalid_argument("tensor_rep: mismatched auxiliary spaces");
  const std::size_t N = a.space().dim();
  TRep rep = a.is_gl()
                 ? TRep(static_cast<int>(N), a.dim() * b.dim(),
                        "(" + a.desc() + ") (x) (" + b.desc() + ")")
                 : TRep(a.kind(), a.dim() * b.dim(),
                        "(" + a.desc() + ") (x) (" + b.desc() + ")");
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = 0; q < N; ++q) {
      Matrix<RationalFunction> sum(rep.dim(), rep.dim());
      for (std::size_t k = 0; k < N; ++k)
        sum += kron(a.t_pos(p, k), b.t_pos(k, q));
      rep.t_pos(p, q) = std::move(sum);
    }
  return rep;
}

TRep shift_rep(const TRep& rep, const Rational& a) {
  TRep out = rep;
  if (a.is_zero()) return out;
  out.set_desc("(" + rep.desc() + ") shifted by " + a.str());
  const std::size_t N = rep.space().dim();
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = 0; q < N; ++q)
      out.t_pos(p, q) = rep.t_pos(p, q).map<RationalFunction>(
          [&](const RationalFunction& f) {
            return f.compose_linear(Rational(1), -a);
          });
  return out;
}

TRep restrict_rep(const TRep& rep,
                  const std::vector<std::vector<Rational>>& basis,
                  std::string desc) {
  const std::size_t N = rep.space().dim();
  TRep out = rep.is_gl() ? TRep(static_cast<int>(N), basis.size(), desc)
                         : TRep(rep.kind(), basis.size(), std::move(desc));
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = 0; q < N; ++q)
      out.t_pos(p, q) = restrict_to_subspace(rep.t_pos(p, q), basis);
  return out;
}

Matrix<Rational> t_coeff(const TRep& rep, int i, int j, int r) {
  const Matrix<RationalFunction>& block = rep.t(i, j);
  return block.map<Rational>([&](const RationalFunction& f) {
    return f.series_coefficients(r)[static_cast<std::size_t>(r)];
  });
}

// ---------------------------------------------------------------------------
// Defining-relation checker.

namespace {

// Sparse vector: sorted (index, value) pairs, no explicit zeros.
using SVec = std::vector<std::pair<std::size_t, Rational>>;

// Every t-block of one representation evaluated at one point, stored by
// columns for the chain application below.
struct EvalCols {
  std::size_t N = 0, d = 0;
  std::vector<std::vector<SVec>> cols;  // cols[p*N+q][c] = column c of t_pq

  const SVec& col(std::size_t p, std::size_t q, std::size_t c) const {
    return cols[p * N + q][c];
  }
};

EvalCols evaluate_columns(const TRep& rep, const Rational& x) {
  EvalCols e;
  e.N = rep.space().dim();
  e.d = rep.dim();
  e.cols.assign(e.N * e.N, std::vector<SVec>(e.d));
  for (std::size_t p = 0; p < e.N; ++p)
    for (std::size_t q = 0; q < e.N; ++q) {
      const auto& block = rep.t_pos(p, q);
      auto& out = e.cols[p * e.N + q];
      for (std::size_t i = 0; i < e.d; ++i)
        for (std::size_t j = 0; j < e.d; ++j) {
          const RationalFunction& f = block(i, j);
          if (f.is_zero()) continue;
          Rational v = f.eval(x);
          if (!v.is_zero()) out[j].emplace_back(i, std::move(v));
        }
    }
  return e;
}

// Dense accumulation scratch with a touched-index list.
struct Scratch {
  std::vector<Rational> dense;
  std::vector<std::size_t> touched;
  std::vector<bool> mark;

  explicit Scratch(std::size_t d) : dense(d), mark(d, false) {}

  void axpy(const SVec& v, const Rational& c) {
    if (c.is_zero()) return;
    for (const auto& [i, val] : v) {
      if (!mark[i]) {
        mark[i] = true;
        touched.push_back(i);
        dense[i] = val * c;
      } else {
        dense[i] += val * c;
      }
    }
  }

  SVec harvest() {
    std::sort(touched.begin(), touched.end());
    SVec out;
    out.reserve(touched.size());
    for (std::size_t i : touched) {
      if (!dense[i].is_zero()) out.emplace_back(i, dense[i]);
      dense[i] = Rational(0);
      mark[i] = false;
    }
    touched.clear();
    return out;
  }
};

// y += c * (t_pq at cached point applied to sparse vector v).
void axpy_matvec(Scratch& s, const EvalCols& e, std::size_t p, std::size_t q,
                 const SVec& v, const Rational& c) {
  if (c.is_zero()) return;
  for (const auto& [k, val] : v) {
    const Rational coeff = val * c;
    for (const auto& [row, a] : e.col(p, q, k)) {
      if (!s.mark[row]) {
        s.mark[row] = true;
        s.touched.push_back(row);
        s.dense[row] = a * coeff;
      } else {
        s.dense[row] += a * coeff;
      }
    }
  }
}

struct PointCheckResult {
  bool ok = true;
  std::string first_failure;  // block labels of the first mismatch
};

// Checks R(u0-v0) T1(u0) T2(v0) == T2(v0) T1(u0) R(u0-v0) applied to every
// basis vector of C^N (x) C^N (x) module.
PointCheckResult check_point(const TRep& rep, const EvalCols& eu,
                             const EvalCols& ev, const Rational& u0,
                             const Rational& v0) {
  const std::size_t N = eu.N, d = eu.d;
  const SpaceIndex& sp = rep.space();
  const bool family = !rep.is_gl();
  const Rational x = u0 - v0;
  const Rational inv_x = x.inverse();
  const Rational inv_xk =
      family ? (x - rep.kind().kappa()).inverse() : Rational(0);

  Scratch scratch(d);
  std::vector<SVec> y1(N);
  std::vector<SVec> y2(N * N), y3(N * N), z2(N * N), z3(N * N);
  PointCheckResult res;

  for (std::size_t a0 = 0; a0 < N; ++a0)
    for (std::size_t b0 = 0; b0 < N; ++b0) {
      const int la0 = sp.label(a0), lb0 = sp.label(b0);
      const bool qcase = family && lb0 == -la0;
      for (std::size_t m = 0; m < d; ++m) {
        // ----- left side: T2, then T1, then R on the two auxiliary legs.
        for (std::size_t j = 0; j < N; ++j) y1[j] = ev.col(j, b0, m);
        for (std::size_t i = 0; i < N; ++i)
          for (std::size_t j = 0; j < N; ++j) {
            axpy_matvec(scratch, eu, i, a0, y1[j], Rational(1));
            y2[i * N + j] = scratch.harvest();
          }
        for (std::size_t a = 0; a < N; ++a)
          for (std::size_t b = 0; b < N; ++b) {
            scratch.axpy(y2[a * N + b], Rational(1));
            scratch.axpy(y2[b * N + a], -inv_x);
            if (family && sp.label(b) == -sp.label(a)) {
              for (std::size_t p = 0; p < N; ++p) {
                const int lp = sp.label(p);
                const Rational w =
                    Rational(rep.kind().theta(sp.label(a), lp)) * inv_xk;
                scratch.axpy(y2[p * N + sp.pos(-lp)], w);
              }
            }
            y3[a * N + b] = scratch.harvest();
          }

        // ----- right side: R first (scalar combination of basis vectors),
        // then T1, then T2.
        // z1 coefficients on auxiliary basis (c, d').
        std::vector<std::pair<std::pair<std::size_t, std::size_t>, Rational>>
            z1;
        z1.push_back({{a0, b0}, Rational(1)});
        z1.push_back({{b0, a0}, -inv_x});
        if (qcase)
          for (std::size_t p = 0; p < N; ++p) {
            const int lp = sp.label(p);
            z1.push_back({{p, sp.pos(-lp)},
                          Rational(rep.kind().theta(lp, la0)) * inv_xk});
          }
        // z2[(i, d')] = sum_c z1[(c, d')] * column m of t_ic(u0).
        for (std::size_t i = 0; i < N; ++i)
          for (std::size_t dd = 0; dd < N; ++dd) {
            for (const auto& [cd, coeff] : z1)
              if (cd.second == dd)
                scratch.axpy(eu.col(i, cd.first, m), coeff);
            z2[i * N + dd] = scratch.harvest();
          }
        // z3[(i, j)] = sum_d t_jd(v0) z2[(i, d)].
        for (std::size_t i = 0; i < N; ++i)
          for (std::size_t j = 0; j < N; ++j) {
            for (std::size_t dd = 0; dd < N; ++dd)
              if (!z2[i * N + dd].empty())
                axpy_matvec(scratch, ev, j, dd, z2[i * N + dd], Rational(1));
            z3[i * N + j] = scratch.harvest();
          }

        for (std::size_t ij = 0; ij < N * N; ++ij)
          if (y3[ij] != z3[ij]) {
            res.ok = false;
            if (res.first_failure.empty()) {
              std::ostringstream os;
              os << "block (" << sp.label(ij / N) << "," << sp.label(ij % N)
                 << ") applied to basis vector (" << la0 << "," << lb0 << ","
                 << m << ")";
              res.first_failure = os.str();
            }
          }
        if (!res.ok && res.first_failure.size() > 0 && d > 32) return res;
      }
    }
  return res;
}

}  // namespace

ProofReport check_defining_relations(const TRep& rep) {
  ProofReport rep_out;
  rep_out.identity_name = "defining relations for " + rep.desc();
  const Polynomial D = rep.common_denominator();
  const int deg = D.degree() + (rep.is_gl() ? 1 : 2);
  const std::size_t npts = static_cast<std::size_t>(deg) + 1;
  rep_out.grid_dims = {npts, npts};

  auto regular = [&](const Rational& x) { return !D.eval(x).is_zero(); };
  const auto us = choose_grid_points(npts, regular, 1);
  // v strictly above every u: u - v is then a negative integer, never 0 and
  // never the positive pole kappa of R.
  const auto vs =
      choose_grid_points(npts, regular, us.back().num_long() + 1);

  std::vector<EvalCols> eus, evs;
  eus.reserve(npts);
  evs.reserve(npts);
  for (const auto& u : us) eus.push_back(evaluate_columns(rep, u));
  for (const auto& v : vs) evs.push_back(evaluate_columns(rep, v));

  rep_out.passed = true;
  for (std::size_t iu = 0; iu < npts; ++iu)
    for (std::size_t iv = 0; iv < npts; ++iv) {
      const auto res = check_point(rep, eus[iu], evs[iv], us[iu], vs[iv]);
      if (!res.ok) {
        rep_out.passed = false;
        if (rep_out.counterexamples.size() < 5)
          rep_out.counterexamples.push_back(
              {{us[iu], vs[iv]}, res.first_failure});
      }
    }
  rep_out.note = "cleared degree bound " + std::to_string(deg) +
                 " per variable; " + std::to_string(npts) + "x" +
                 std::to_string(npts) + " pole-free grid proves the relations";
  return rep_out;
}

RationalFunction compute_z(const TRep& rep) {
  if (rep.is_gl())
    throw std::logic_error("compute_z: defined for family representations");
  const AlgebraKind& kind = rep.kind();
  const Rational kappa = kind.kappa();
  const std::size_t d = rep.dim();
  const auto& labels = kind.labels();

  // Shifted, signed-transposed blocks: (T^t)_{ik}(u+kappa) =
  // theta_ik t_{-k,-i}(u+kappa).
  auto tt = [&](int i, int k) {
    Matrix<RationalFunction> m = rep.t(-k, -i).map<RationalFunction>(
        [&](const RationalFunction& f) { return f.shift(kappa); });
    if (kind.theta(i, k) == -1) m = -m;
    return m;
  };

  RationalFunction z;
  bool have_z = false;
  for (int i : labels)
    for (int j : labels) {
      Matrix<RationalFunction> p1(d, d), p2(d, d);
      for (int k : labels) {
        p1 += tt(i, k) * rep.t(k, j);
        p2 += rep.t(i, k) * tt(k, j);
      }
      if (i == j) {
        const RationalFunction diag = p1(0, 0);
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t c = 0; c < d; ++c) {
            const RationalFunction expect =
                r == c ? diag : RationalFunction(0);
            if (p1(r, c) != expect || p2(r, c) != expect)
              throw std::domain_error(
                  "compute_z: product is not scalar on " + rep.desc());
          }
        if (!have_z) {
          z = diag;
          have_z = true;
        } else if (z != diag) {
          throw std::domain_error(
              "compute_z: diagonal entries disagree on " + rep.desc());
        }
      } else {
        if (!p1.is_zero() || !p2.is_zero())
          throw std::domain_error(
              "compute_z: off-diagonal block (" + std::to_string(i) + "," +
              std::to_string(j) + ") is nonzero on " + rep.desc());
      }
    }
  return z;
}

std::vector<std::pair<std::vector<Rational>, std::vector<std::size_t>>>
weight_decomposition(const TRep& rep) {
  const std::size_t d = rep.dim();
  const auto& labels = rep.space().labels();
  std::vector<std::vector<Rational>> weight(d,
                                            std::vector<Rational>(labels.size()));
  for (std::size_t li = 0; li < labels.size(); ++li) {
    const Matrix<Rational> f = lie_action(rep, labels[li], labels[li]);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        if (r != c && !f(r, c).is_zero())
          throw std::domain_error(
              "weight_decomposition: t_ii^(1) is not diagonal in the working "
              "basis of " +
              rep.desc());
    for (std::size_t r = 0; r < d; ++r) weight[r][li] = f(r, r);
  }
  std::map<std::vector<Rational>, std::vector<std::size_t>> groups;
  for (std::size_t r = 0; r < d; ++r) groups[weight[r]].push_back(r);
  return {groups.begin(), groups.end()};
}

}  // namespace ykit
