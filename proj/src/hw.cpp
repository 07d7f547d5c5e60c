#include "ykit/hw.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>

#include "ykit/linear_solve.hpp"

namespace ykit {

namespace {

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  Polynomial g = Polynomial::gcd(a, b);
  Polynomial quo, rem;
  Polynomial::divrem(a, g, quo, rem);
  return (quo * b).monic();
}

// Exact quotient; throws if the division leaves a remainder.
Polynomial poly_exact_div(const Polynomial& num, const Polynomial& den) {
  Polynomial quo, rem;
  Polynomial::divrem(num, den, quo, rem);
  if (!rem.is_zero())
    throw std::logic_error("poly_exact_div: inexact division");
  return quo;
}

std::vector<RationalFunction> to_rf_vector(const std::vector<Rational>& v) {
  std::vector<RationalFunction> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r[i] = RationalFunction(v[i]);
  return r;
}

// Characteristic polynomial x^n + c_1 x^{n-1} + ... + c_n by the
// trace-of-powers recursion (Faddeev-LeVerrier); exact over Q.
Polynomial char_poly(const Matrix<Rational>& m) {
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = Rational(1);  // coefficient of x^n
  Matrix<Rational> mk = m;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational ck = -(mk.trace() / Rational(static_cast<long>(k)));
    c[n - k] = ck;
    if (k < n) {
      Matrix<Rational> shifted = mk;
      for (std::size_t i = 0; i < n; ++i) shifted(i, i) += ck;
      mk = m * shifted;
    }
  }
  return Polynomial(std::move(c));
}

// Growing echelonized basis over Q with deterministic pivots.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  std::size_t size() const { return rows_.size(); }

  // Reduces v against the basis; if independent, normalizes, stores, and
  // returns the stored vector.  Returns nullopt when v is in the span.
  std::optional<std::vector<Rational>> insert(std::vector<Rational> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational c = v[pivots_[r]];  // copy: the loop clears v[pivot]
      if (c.is_zero()) continue;
      const std::vector<Rational>& row = rows_[r];
      for (std::size_t j = 0; j < dim_; ++j)
        if (!row[j].is_zero()) v[j] -= c * row[j];
    }
    std::size_t pivot = dim_;
    for (std::size_t j = 0; j < dim_; ++j)
      if (!v[j].is_zero()) {
        pivot = j;
        break;
      }
    if (pivot == dim_) return std::nullopt;
    const Rational inv = v[pivot];
    for (auto& x : v) x /= inv;
    rows_.push_back(v);
    pivots_.push_back(pivot);
    return rows_.back();
  }

  // Fully reduced rows sorted by pivot column.
  std::vector<std::vector<Rational>> reduced_rows() const {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return pivots_[a] < pivots_[b];
    });
    std::vector<std::vector<Rational>> out;
    std::vector<std::size_t> piv;
    for (std::size_t idx : order) {
      std::vector<Rational> v = rows_[idx];
      // Back-substitute previously emitted rows.
      for (std::size_t r = 0; r < out.size(); ++r) {
        const Rational c = v[piv[r]];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j)
          if (!out[r][j].is_zero()) v[j] -= c * out[r][j];
      }
      out.push_back(std::move(v));
      piv.push_back(pivots_[idx]);
    }
    // One more sweep to clear pivot columns of earlier rows.
    for (std::size_t r = 0; r < out.size(); ++r)
      for (std::size_t s = r + 1; s < out.size(); ++s) {
        const Rational c = out[r][piv[s]];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j)
          if (!out[s][j].is_zero()) out[r][j] -= c * out[s][j];
      }
    return out;
  }

 private:
  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

// ---------------------------------------------------------------------------
// HighestWeightData

HighestWeightData::HighestWeightData(AlgebraKind k,
                                     std::vector<RationalFunction> lam)
    : kind(std::move(k)), lambda(std::move(lam)) {
  if (lambda.size() != kind.space().dim())
    throw std::invalid_argument("HighestWeightData: wrong tuple length");
}

const RationalFunction& HighestWeightData::at(int label) const {
  return lambda[kind.space().pos(label)];
}

RationalFunction& HighestWeightData::at(int label) {
  return lambda[kind.space().pos(label)];
}

// ---------------------------------------------------------------------------
// Highest vector search.

std::optional<std::vector<RationalFunction>> weight_of_vector(
    const TRep& rep, const std::vector<Rational>& v) {
  const auto& labels = rep.space().labels();
  const std::vector<RationalFunction> vr = to_rf_vector(v);
  std::size_t first = v.size();
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!v[j].is_zero()) {
      first = j;
      break;
    }
  if (first == v.size()) return std::nullopt;  // zero vector

  std::vector<RationalFunction> lambdas;
  lambdas.reserve(labels.size());
  for (int i : labels) {
    const std::vector<RationalFunction> w = rep.t(i, i).apply(vr);
    RationalFunction lam = w[first] / RationalFunction(v[first]);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!(w[j] == lam * vr[j])) return std::nullopt;
    lambdas.push_back(std::move(lam));
  }
  return lambdas;
}

namespace {

// Joint kernel of every raising block t_ij(u), i < j (label order).
std::vector<std::vector<Rational>> raising_kernel(const TRep& rep) {
  const auto& labels = rep.space().labels();
  const std::size_t d = rep.dim();
  std::vector<std::pair<int, int>> raising;
  for (std::size_t p = 0; p < labels.size(); ++p)
    for (std::size_t q = p + 1; q < labels.size(); ++q)
      raising.emplace_back(labels[p], labels[q]);

  Matrix<RationalFunction> stacked(raising.size() * d, d);
  for (std::size_t b = 0; b < raising.size(); ++b) {
    const auto& blk = rep.t(raising[b].first, raising[b].second);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        if (!blk(r, c).is_zero()) stacked(b * d + r, c) = blk(r, c);
  }
  return kernel_rf(stacked);
}

// Refine a list of subspaces of Q^d into joint rational eigenspaces of op;
// a subspace that op does not preserve or cannot split completely over Q
// stays whole.
void refine_subspaces(std::vector<std::vector<std::vector<Rational>>>& subs,
                      const Matrix<Rational>& op, std::size_t d) {
  std::vector<std::vector<std::vector<Rational>>> next;
  for (auto& sub : subs) {
    if (sub.size() <= 1) {
      next.push_back(std::move(sub));
      continue;
    }
    Matrix<Rational> m;
    try {
      m = restrict_to_subspace(op, sub);
    } catch (const std::invalid_argument&) {
      next.push_back(std::move(sub));
      continue;
    }
    const RootFactorization fac = factor_rational_roots(char_poly(m));
    std::vector<Rational> distinct = fac.roots;
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    std::vector<std::vector<std::vector<Rational>>> pieces;
    std::size_t covered = 0;
    for (const Rational& c : distinct) {
      Matrix<Rational> shifted = m;
      for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) -= c;
      std::vector<std::vector<Rational>> eig = kernel_q(shifted);
      if (eig.empty()) continue;
      std::vector<std::vector<Rational>> lifted;
      for (const auto& coords : eig) {
        std::vector<Rational> w(d);
        for (std::size_t t = 0; t < sub.size(); ++t) {
          if (coords[t].is_zero()) continue;
          for (std::size_t j = 0; j < d; ++j)
            if (!sub[t][j].is_zero()) w[j] += coords[t] * sub[t][j];
        }
        lifted.push_back(std::move(w));
      }
      covered += lifted.size();
      pieces.push_back(std::move(lifted));
    }
    if (covered == sub.size()) {
      for (auto& p : pieces) next.push_back(std::move(p));
    } else {
      next.push_back(std::move(sub));  // defective or irrational split
    }
  }
  subs = std::move(next);
}

}  // namespace

HwSearchResult highest_weight_vectors(const TRep& rep) {
  const auto& labels = rep.space().labels();
  const std::size_t d = rep.dim();

  std::vector<std::vector<Rational>> kernel = raising_kernel(rep);

  HwSearchResult result;
  if (kernel.empty()) return result;

  // Refine the kernel into joint eigenspaces of the diagonal coefficient
  // operators, splitting by rational eigenvalues.
  std::vector<std::vector<std::vector<Rational>>> subs = {kernel};
  for (int order = 1; order <= 3; ++order) {
    bool all_single = true;
    for (const auto& s : subs) all_single = all_single && s.size() <= 1;
    if (all_single) break;
    for (int i : labels) refine_subspaces(subs, t_coeff(rep, i, i, order), d);
  }

  for (const auto& sub : subs)
    for (const auto& v : sub) {
      auto lam = weight_of_vector(rep, v);
      if (lam.has_value())
        result.vectors.push_back({v, std::move(*lam)});
      else
        ++result.kernel_not_eigen;
    }
  return result;
}

// ---------------------------------------------------------------------------
// Weight-tuple consistency and classification.

CheckResult verma_consistency(const HighestWeightData& hw) {
  const int n = hw.kind.n();
  const Rational kappa = hw.kind.kappa();
  const int imax = hw.kind.family() == Family::B ? n : n - 1;
  for (int i = 1; i <= imax; ++i) {
    const Rational t = kappa - Rational(i);
    // lambda_{-n+i-1}(u+t) lambda_{n-i+1}(u) == lambda_{n-i}(u) lambda_{-n+i}(u+t)
    const RationalFunction lhs =
        hw.at(-n + i - 1).shift(t) * hw.at(n - i + 1);
    const RationalFunction rhs = hw.at(-n + i).shift(t) * hw.at(n - i);
    if (!(lhs == rhs))
      return {false, "mirror-weight consistency fails at index i = " +
                         std::to_string(i)};
  }
  return {true, ""};
}

FdimResult fdim_conditions(const HighestWeightData& hw) {
  const int n = hw.kind.n();
  FdimResult out;
  out.tuple.polys.resize(n);

  // First condition: family-specific labels and step.
  int num_label, den_label;
  Rational step;
  switch (hw.kind.family()) {
    case Family::B:
      num_label = 0, den_label = 1, step = Rational(1, 2);
      break;
    case Family::C:
      num_label = -1, den_label = 1, step = Rational(2);
      break;
    case Family::D:
      num_label = -1, den_label = 2, step = Rational(1);
      break;
    default:
      throw std::logic_error("fdim_conditions: unknown family");
  }
  {
    const RationalFunction ratio = hw.at(num_label) / hw.at(den_label);
    const TelescopeResult t = telescope_ratio(ratio, step);
    if (!t.ok) {
      out.message = "P_1: " + t.message;
      return out;
    }
    out.tuple.polys[0] = t.poly;
  }
  for (int i = 2; i <= n; ++i) {
    const RationalFunction ratio = hw.at(i - 1) / hw.at(i);
    const TelescopeResult t = telescope_ratio(ratio, Rational(1));
    if (!t.ok) {
      out.message = "P_" + std::to_string(i) + ": " + t.message;
      return out;
    }
    out.tuple.polys[static_cast<std::size_t>(i - 1)] = t.poly;
  }
  out.ok = true;
  return out;
}

HighestWeightData product_weights(const HighestWeightData& a,
                                  const HighestWeightData& b) {
  if (a.kind.space() != b.kind.space())
    throw std::invalid_argument("product_weights: mismatched kinds");
  std::vector<RationalFunction> lam(a.lambda.size());
  for (std::size_t i = 0; i < lam.size(); ++i)
    lam[i] = a.lambda[i] * b.lambda[i];
  return HighestWeightData(a.kind, std::move(lam));
}

// ---------------------------------------------------------------------------
// Antisymmetrizer modules.

AntisymModule antisym_module(const AlgebraKind& kind, int m) {
  const int n = kind.n();
  if (m < 1 || m > n)
    throw std::invalid_argument("antisym_module: need 1 <= m <= n");

  TRep rep = vector_rep(kind, Rational(0));
  for (int k = 2; k <= m; ++k)
    rep = tensor_rep(rep, vector_rep(kind, Rational(-(k - 1))));
  rep.set_desc("antisym " + kind.name() + " m=" + std::to_string(m));

  MultiIndex mi(std::vector<SpaceIndex>(static_cast<std::size_t>(m),
                                        kind.space()));
  std::vector<Rational> xi(rep.dim());
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
      for (std::size_t b = a + 1; b < perm.size(); ++b)
        if (perm[a] > perm[b]) ++inversions;
    std::vector<int> lab(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) lab[k] = -n - 1 + perm[k];
    xi[mi.encode_labels(lab)] = Rational(inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));

  return {std::move(rep), std::move(xi), m};
}

HighestWeightData antisym_expected_weights(const AlgebraKind& kind, int m) {
  const int n = kind.n();
  const Rational kappa = kind.kappa();
  const RationalFunction low(Polynomial{Rational(m), Rational(1)},
                             Polynomial{Rational(m - 1), Rational(1)});
  const RationalFunction high(Polynomial{kappa - 1, Rational(1)},
                              Polynomial{kappa, Rational(1)});
  std::vector<RationalFunction> lam;
  for (int i : kind.labels()) {
    if (i <= -n + m - 1)
      lam.push_back(low);
    else if (i >= n - m + 1)
      lam.push_back(high);
    else
      lam.push_back(RationalFunction(Rational(1)));
  }
  return HighestWeightData(kind, std::move(lam));
}

CheckResult check_antisym_highest(const AntisymModule& mod) {
  const auto& labels = mod.rep.space().labels();
  const HighestWeightData expected =
      antisym_expected_weights(mod.rep.kind(), mod.m);
  const std::vector<RationalFunction> xi = to_rf_vector(mod.xi);

  for (std::size_t p = 0; p < labels.size(); ++p) {
    for (std::size_t q = p; q < labels.size(); ++q) {
      const int i = labels[p], j = labels[q];
      const std::vector<RationalFunction> w = mod.rep.t(i, j).apply(xi);
      if (i < j) {
        for (const auto& entry : w)
          if (!entry.is_zero())
            return {false, "t(" + std::to_string(i) + "," + std::to_string(j) +
                               ") does not annihilate xi"};
      } else {  // i == j: band eigenvalue
        const RationalFunction& lam = expected.at(i);
        for (std::size_t r = 0; r < w.size(); ++r)
          if (!(w[r] == lam * xi[r]))
            return {false, "t(" + std::to_string(i) + "," + std::to_string(i) +
                               ") eigenvalue mismatch on xi"};
      }
    }
  }
  return {true, ""};
}

CheckResult check_antisym_transpose(const AntisymModule& mod) {
  const AlgebraKind& kind = mod.rep.kind();
  const auto& labels = kind.labels();
  const std::size_t d = mod.rep.dim();
  const Rational shift = -kind.kappa() - Rational(mod.m - 1);

  // Tensor-factor reversal permutation of the composite index.
  MultiIndex mi(std::vector<SpaceIndex>(static_cast<std::size_t>(mod.m),
                                        kind.space()));
  std::vector<std::size_t> rev(d);
  for (std::size_t c = 0; c < d; ++c) {
    std::vector<std::size_t> pos = mi.decode(c);
    std::reverse(pos.begin(), pos.end());
    rev[c] = mi.encode(pos);
  }

  for (int i : labels)
    for (int j : labels) {
      const auto& lhs_blk = mod.rep.t(-j, -i);
      const auto& rhs_blk = mod.rep.t(i, j);
      const Rational theta(kind.theta(i, j));
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
          const RationalFunction& a = lhs_blk(r, c);
          const RationalFunction& b = rhs_blk(rev[r], rev[c]);
          if (a.is_zero() && b.is_zero()) continue;
          if (!(a * RationalFunction(theta) ==
                b.compose_linear(Rational(-1), shift)))
            return {false,
                    "transpose symmetry fails at t(" + std::to_string(i) +
                        "," + std::to_string(j) + ") entry (" +
                        std::to_string(r) + "," + std::to_string(c) + ")"};
        }
    }
  return {true, ""};
}

// ---------------------------------------------------------------------------
// Cyclic spans.

std::vector<std::vector<Rational>> cyclic_span(
    const TRep& rep, const std::vector<Rational>& seed) {
  const std::size_t d = rep.dim();
  if (seed.size() != d)
    throw std::invalid_argument("cyclic_span: seed has wrong dimension");
  const auto& labels = rep.space().labels();

  EchelonBasis basis(d);
  std::vector<std::vector<Rational>> frontier;
  if (auto ins = basis.insert(seed)) frontier.push_back(std::move(*ins));

  while (!frontier.empty() && basis.size() < d) {
    std::vector<std::vector<Rational>> next;
    for (const auto& v : frontier) {
      const std::vector<RationalFunction> vr = to_rf_vector(v);
      for (int i : labels) {
        for (int j : labels) {
          const std::vector<RationalFunction> w = rep.t(i, j).apply(vr);
          // Clear denominators of the image and harvest the polynomial
          // coefficient vectors.
          Polynomial lcm(Rational(1));
          for (const auto& entry : w)
            if (!entry.is_zero()) lcm = poly_lcm(lcm, entry.den());
          std::vector<Polynomial> cleared(d);
          int max_deg = -1;
          for (std::size_t r = 0; r < d; ++r) {
            if (w[r].is_zero()) continue;
            cleared[r] = w[r].num() * poly_exact_div(lcm, w[r].den());
            max_deg = std::max(max_deg, cleared[r].degree());
          }
          for (int k = 0; k <= max_deg; ++k) {
            std::vector<Rational> vec(d);
            bool nonzero = false;
            for (std::size_t r = 0; r < d; ++r) {
              vec[r] = cleared[r].coeff(k);
              nonzero = nonzero || !vec[r].is_zero();
            }
            if (!nonzero) continue;
            if (auto ins = basis.insert(std::move(vec)))
              next.push_back(std::move(*ins));
            if (basis.size() == d) break;
          }
          if (basis.size() == d) break;
        }
        if (basis.size() == d) break;
      }
      if (basis.size() == d) break;
    }
    frontier = std::move(next);
  }
  return basis.reduced_rows();
}

IrreducibleQuotient irreducible_quotient(const TRep& rep0,
                                         const std::vector<Rational>& xi0) {
  // Work inside the cyclic span so every weight is bounded by xi's weight.
  TRep rep = rep0;
  std::vector<Rational> xi = xi0;
  {
    const auto span = cyclic_span(rep0, xi0);
    if (span.empty())
      throw std::domain_error("irreducible_quotient: zero generator");
    if (span.size() < rep0.dim()) {
      rep = restrict_rep(rep0, span, rep0.desc() + " cyclic");
      std::vector<Rational> coords(span.size());
      for (std::size_t r = 0; r < span.size(); ++r) {
        std::size_t piv = 0;
        while (span[r][piv].is_zero()) ++piv;
        coords[r] = xi0[piv];
      }
      xi = std::move(coords);
    }
  }

  const auto& labels = rep.space().labels();
  for (;;) {
    const std::size_t d = rep.dim();
    std::vector<Matrix<Rational>> cartan;
    cartan.reserve(labels.size());
    for (int i : labels) cartan.push_back(t_coeff(rep, i, i, 1));

    auto cartan_weight =
        [&](const std::vector<Rational>& v) -> std::vector<Rational> {
      std::size_t first = 0;
      while (first < v.size() && v[first].is_zero()) ++first;
      if (first == v.size())
        throw std::domain_error("irreducible_quotient: zero weight vector");
      std::vector<Rational> w;
      w.reserve(cartan.size());
      for (const auto& op : cartan) {
        const std::vector<Rational> image = op.apply(v);
        const Rational c = image[first] / v[first];
        for (std::size_t j = 0; j < v.size(); ++j)
          if (!(image[j] == c * v[j]))
            throw std::domain_error(
                "irreducible_quotient: singular vector is not a weight "
                "vector; cannot certify the quotient");
        w.push_back(c);
      }
      return w;
    };

    const std::vector<Rational> top_weight = cartan_weight(xi);

    std::vector<std::vector<Rational>> kernel = raising_kernel(rep);
    std::vector<std::vector<std::vector<Rational>>> subs = {std::move(kernel)};
    for (const auto& op : cartan) refine_subspaces(subs, op, d);

    std::vector<std::vector<Rational>> gens;
    std::size_t top_dim = 0;
    for (const auto& sub : subs)
      for (const auto& v : sub) {
        if (cartan_weight(v) == top_weight)
          ++top_dim;
        else
          gens.push_back(v);
      }
    if (top_dim != 1)
      throw std::domain_error(
          "irreducible_quotient: top weight space is not one-dimensional");
    if (gens.empty()) return {std::move(rep), std::move(xi)};

    // The maximal proper submodule part seen so far: cyclic spans of all
    // lower-weight singular vectors.
    EchelonBasis nbasis(d);
    for (const auto& g : gens)
      for (auto& w : cyclic_span(rep, g)) nbasis.insert(std::move(w));
    const std::vector<std::vector<Rational>> nrows = nbasis.reduced_rows();
    std::vector<std::size_t> pivots(nrows.size());
    std::vector<bool> is_pivot(d, false);
    for (std::size_t r = 0; r < nrows.size(); ++r) {
      std::size_t p = 0;
      while (nrows[r][p].is_zero()) ++p;
      pivots[r] = p;
      is_pivot[p] = true;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < d; ++j)
      if (!is_pivot[j]) free_cols.push_back(j);
    if (free_cols.empty())
      throw std::domain_error(
          "irreducible_quotient: generator lies in the submodule");

    // Quotient representation in the free coordinates.
    const std::size_t qd = free_cols.size();
    auto reduce_rf = [&](std::vector<RationalFunction>& w) {
      for (std::size_t r = 0; r < nrows.size(); ++r) {
        const RationalFunction c = w[pivots[r]];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j)
          if (!nrows[r][j].is_zero())
            w[j] -= c * RationalFunction(nrows[r][j]);
      }
    };
    TRep quot = rep.is_gl()
                    ? TRep(static_cast<int>(labels.size()), qd, rep.desc())
                    : TRep(rep.kind(), qd, rep.desc() + " quotient");
    const std::size_t nl = labels.size();
    for (std::size_t p = 0; p < nl; ++p)
      for (std::size_t q = 0; q < nl; ++q) {
        const auto& blk = rep.t_pos(p, q);
        Matrix<RationalFunction> out(qd, qd);
        for (std::size_t c = 0; c < qd; ++c) {
          std::vector<RationalFunction> col(d);
          for (std::size_t r = 0; r < d; ++r) col[r] = blk(r, free_cols[c]);
          reduce_rf(col);
          for (std::size_t r = 0; r < qd; ++r) out(r, c) = col[free_cols[r]];
        }
        quot.t_pos(p, q) = std::move(out);
      }
    std::vector<Rational> xi_red = xi;
    for (std::size_t r = 0; r < nrows.size(); ++r) {
      const Rational c = xi_red[pivots[r]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j)
        if (!nrows[r][j].is_zero()) xi_red[j] -= c * nrows[r][j];
    }
    std::vector<Rational> xi_new(qd);
    bool xi_nonzero = false;
    for (std::size_t r = 0; r < qd; ++r) {
      xi_new[r] = xi_red[free_cols[r]];
      xi_nonzero = xi_nonzero || !xi_new[r].is_zero();
    }
    if (!xi_nonzero)
      throw std::logic_error(
          "irreducible_quotient: generator vanished in the quotient");
    rep = std::move(quot);
    xi = std::move(xi_new);
  }
}

// ---------------------------------------------------------------------------
// Normalized degree-2 generators.

JOperators j_operators(const TRep& rep) {
  const AlgebraKind& kind = rep.kind();
  const auto& labels = kind.labels();
  const std::size_t nl = labels.size();
  const std::size_t d = rep.dim();

  const RationalFunction z = compute_z(rep);
  const std::vector<Rational> zc = z.series_coefficients(2);
  if (!zc[0].is_one())
    throw std::domain_error("j_operators: central series does not start at 1");
  const Rational z1 = zc[1], z2 = zc[2];
  const Rational y1 = z1 / Rational(2);
  const Rational y2 = (z2 - y1 * y1 + kind.kappa() * y1) / Rational(2);

  JOperators ops{kind, y1, y2, {}, {}, {}};
  ops.tau1.reserve(nl * nl);
  ops.tau2.reserve(nl * nl);
  auto delta = [](int a, int b) { return a == b; };
  for (int k : labels)
    for (int l : labels) {
      Matrix<Rational> t1 = t_coeff(rep, k, l, 1);
      Matrix<Rational> t2 = t_coeff(rep, k, l, 2);
      Matrix<Rational> tau2 = t2 - t1 * y1;
      if (delta(k, l)) {
        for (std::size_t i = 0; i < d; ++i) {
          t1(i, i) -= y1;
          tau2(i, i) += y1 * y1 - y2;
        }
      }
      ops.tau1.push_back(std::move(t1));
      ops.tau2.push_back(std::move(tau2));
    }

  const auto& sp = kind.space();
  auto tau1_of = [&](int k, int l) -> const Matrix<Rational>& {
    return ops.tau1[sp.pos(k) * nl + sp.pos(l)];
  };
  ops.j.reserve(nl * nl);
  for (int k : labels)
    for (int l : labels) {
      Matrix<Rational> jkl = ops.tau2[sp.pos(k) * nl + sp.pos(l)];
      for (int i : labels) {
        Matrix<Rational> prod = tau1_of(k, i) * tau1_of(i, l);
        prod *= Rational(1, 2);
        jkl -= prod;
      }
      ops.j.push_back(std::move(jkl));
    }
  return ops;
}

const Matrix<Rational>& JOperators::tau1_at(int k, int l) const {
  const auto& sp = kind.space();
  return tau1[sp.pos(k) * sp.dim() + sp.pos(l)];
}

const Matrix<Rational>& JOperators::tau2_at(int k, int l) const {
  const auto& sp = kind.space();
  return tau2[sp.pos(k) * sp.dim() + sp.pos(l)];
}

const Matrix<Rational>& JOperators::j_at(int k, int l) const {
  const auto& sp = kind.space();
  return j[sp.pos(k) * sp.dim() + sp.pos(l)];
}

CheckResult check_j_antisymmetry(const JOperators& ops) {
  for (int k : ops.kind.labels())
    for (int l : ops.kind.labels()) {
      Matrix<Rational> sum = ops.j_at(k, l);
      Matrix<Rational> mirror = ops.j_at(-l, -k);
      mirror *= Rational(ops.kind.theta(k, l));
      sum += mirror;
      if (!sum.is_zero())
        return {false, "J antisymmetry fails at (k,l) = (" +
                           std::to_string(k) + "," + std::to_string(l) + ")"};
    }
  return {true, ""};
}

CheckResult check_j_bracket_law(const JOperators& ops) {
  const auto& labels = ops.kind.labels();
  for (int i : labels)
    for (int j : labels)
      for (int k : labels)
        for (int l : labels) {
          const Matrix<Rational>& f = ops.tau1_at(i, j);
          const Matrix<Rational>& jkl = ops.j_at(k, l);
          Matrix<Rational> lhs = f * jkl - jkl * f;
          Matrix<Rational> rhs(lhs.rows(), lhs.cols());
          const Rational theta(ops.kind.theta(i, j));
          if (k == j) rhs += ops.j_at(i, l);
          if (i == l) rhs -= ops.j_at(k, j);
          if (k == -i) rhs -= ops.j_at(-j, l) * theta;
          if (l == -j) rhs += ops.j_at(k, -i) * theta;
          if (!(lhs == rhs))
            return {false, "adjoint law fails at (i,j,k,l) = (" +
                               std::to_string(i) + "," + std::to_string(j) +
                               "," + std::to_string(k) + "," +
                               std::to_string(l) + ")"};
        }
  return {true, ""};
}

CheckResult check_j_scalar(const JOperators& ops, const Rational& b) {
  for (int k : ops.kind.labels())
    for (int l : ops.kind.labels()) {
      Matrix<Rational> want = ops.tau1_at(k, l);
      want *= b;
      if (!(ops.j_at(k, l) == want))
        return {false, "J != b*F at (k,l) = (" + std::to_string(k) + "," +
                           std::to_string(l) + ") with b = " + b.str()};
    }
  return {true, ""};
}

// ---------------------------------------------------------------------------
// Symplectic fundamental weight tuples.

HighestWeightData fundamental_sp_weights(const AlgebraKind& kind, int p,
                                         const Rational& a) {
  if (kind.family() != Family::C)
    throw std::invalid_argument("fundamental_sp_weights: symplectic only");
  const int n = kind.n();
  if (p < 0 || p > n - 1)
    throw std::invalid_argument("fundamental_sp_weights: need 0 <= p <= n-1");

  auto band = [&](const Rational& c_num, const Rational& c_den) {
    return RationalFunction(Polynomial{c_num, Rational(1)},
                            Polynomial{c_den, Rational(1)});
  };
  std::vector<RationalFunction> lam;
  for (int i : kind.labels()) {
    if (p >= 1) {
      if (i <= -p - 1)
        lam.push_back(band(-a - p, -a - p - 1));
      else if (i >= p + 1)
        lam.push_back(band(-a, -a + 1));
      else
        lam.push_back(RationalFunction(Rational(1)));
    } else {
      lam.push_back(i < 0 ? band(-a + 1, -a) : band(-a + 1, -a + 2));
    }
  }
  return HighestWeightData(kind, std::move(lam));
}

}  // namespace ykit
