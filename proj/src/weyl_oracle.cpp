#include "ykit/weyl_oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace ykit {
namespace {

using Vec = std::vector<Rational>;

Rational dot(const Vec& a, const Vec& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational abs_r(const Rational& x) { return x < Rational(0) ? -x : x; }

// Label convention -> epsilon-coordinates: l_k = -mu_{n+1-k}.  The dominant
// chambers become  B/C: l1 >= ... >= ln >= 0,  D: l1 >= ... >= l_{n-1} >= |l_n|.
Vec to_std(const Vec& mu) {
  Vec l(mu.rbegin(), mu.rend());
  for (auto& x : l) x = -x;
  return l;
}

std::vector<Vec> positive_roots(Family f, int n) {
  std::vector<Vec> roots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec d(n, Rational(0)), s(n, Rational(0));
      d[i] = Rational(1);
      d[j] = Rational(-1);
      s[i] = Rational(1);
      s[j] = Rational(1);
      roots.push_back(std::move(d));
      roots.push_back(std::move(s));
    }
  if (f != Family::D) {
    const Rational c = f == Family::B ? Rational(1) : Rational(2);
    for (int i = 0; i < n; ++i) {
      Vec v(n, Rational(0));
      v[i] = c;
      roots.push_back(std::move(v));
    }
  }
  return roots;
}

Vec weyl_rho(Family f, int n) {
  Vec r(n);
  for (int i = 0; i < n; ++i) {
    if (f == Family::B)
      r[i] = Rational(2 * (n - i) - 1, 2);
    else if (f == Family::C)
      r[i] = Rational(n - i);
    else
      r[i] = Rational(n - i - 1);
  }
  return r;
}

bool is_dominant(Family f, const Vec& w) {
  const int n = static_cast<int>(w.size());
  for (int i = 0; i + 1 < n; ++i)
    if (w[i] < w[i + 1]) return false;
  if (f == Family::D) {
    if (n >= 2 && w[n - 2] < abs_r(w[n - 1])) return false;
    return true;
  }
  return !(w[n - 1] < Rational(0));
}

// Dominant representative of the Weyl orbit: sort absolute values
// descending; for D the parity of the sign flips must be even, so when every
// entry is nonzero an odd number of negatives leaves one minus sign on the
// smallest entry.
Vec dominant_rep(Family f, Vec w) {
  int negatives = 0;
  bool has_zero = false;
  for (auto& x : w) {
    if (x < Rational(0)) {
      ++negatives;
      x = -x;
    } else if (x == Rational(0)) {
      has_zero = true;
    }
  }
  std::sort(w.begin(), w.end(), [](const Rational& a, const Rational& b) { return b < a; });
  if (f == Family::D && !has_zero && negatives % 2 == 1) w.back() = -w.back();
  return w;
}

// Coordinates of a root-lattice vector in the simple-root basis; returns
// false unless all coordinates are nonnegative integers.
bool in_positive_cone(Family f, const Vec& diff) {
  const int n = static_cast<int>(diff.size());
  Vec c(n);
  // Partial sums give the coefficients of e_i - e_{i+1}; the tail closes
  // differently per family (short root e_n, long root 2e_n, or e_{n-1}+e_n).
  Rational run(0);
  for (int i = 0; i < n; ++i) {
    run += diff[i];
    c[i] = run;
  }
  if (f == Family::C) {
    // Long tail root 2 e_n: halve the final partial sum.
    c[n - 1] = run / Rational(2);
  } else if (f == Family::D) {
    // Tail roots e_{n-1} -+ e_n: the 2x2 tail solves to
    //   c_{n-1} = (pre - d_n)/2,  c_n = (pre + d_n)/2,  pre = d_1+...+d_{n-1}.
    const Rational pre = run - diff[n - 1];
    c[n - 1] = (pre + diff[n - 1]) / Rational(2);
    c[n - 2] = (pre - diff[n - 1]) / Rational(2);
  }
  for (const auto& x : c)
    if (!x.is_integer() || x < Rational(0)) return false;
  return true;
}

long order_proxy(Family f, const Vec& diff) {
  // Height of lambda - mu: sum of simple-root coordinates; callers only use
  // it for ordering so any monotone proxy works.  Use twice the sum of
  // partial sums, which majorizes the exact height for the three families.
  Rational h(0);
  Rational run(0);
  for (const auto& x : diff) {
    run += x;
    h += run;
  }
  h += h;
  if (!h.is_integer()) throw std::logic_error("height proxy not integral");
  return h.num_long();
}

// Orbit of a dominant weight under the Weyl group (signed permutations; for
// D only even sign changes).  Sizes here are tiny, so breadth-first closure
// over the generators is plenty.
std::set<Vec> weyl_orbit(Family f, const Vec& dom) {
  std::set<Vec> seen{dom};
  std::vector<Vec> queue{dom};
  const int n = static_cast<int>(dom.size());
  while (!queue.empty()) {
    Vec w = queue.back();
    queue.pop_back();
    auto push = [&](Vec v) {
      if (seen.insert(v).second) queue.push_back(std::move(v));
    };
    for (int i = 0; i + 1 < n; ++i) {
      Vec v = w;
      std::swap(v[i], v[i + 1]);
      push(std::move(v));
    }
    if (f == Family::D) {
      if (n >= 2) {
        Vec v = w;
        v[n - 2] = -v[n - 2];
        v[n - 1] = -v[n - 1];
        push(std::move(v));
      }
    } else {
      Vec v = w;
      v[n - 1] = -v[n - 1];
      push(std::move(v));
    }
  }
  return seen;
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace

long weyl_dim(const AlgebraKind& kind, const std::vector<Rational>& mu) {
  const int n = kind.n();
  if (static_cast<int>(mu.size()) != n)
    throw std::invalid_argument("weyl_dim: weight length != rank");
  const Family f = kind.family();
  const Vec lambda = to_std(mu);
  if (!is_dominant(f, lambda))
    throw std::invalid_argument("weyl_dim: weight not dominant: " + vec_str(mu));
  const Vec rho = weyl_rho(f, n);
  Vec lr(n);
  for (int i = 0; i < n; ++i) lr[i] = lambda[i] + rho[i];
  Rational num(1), den(1);
  for (const Vec& a : positive_roots(f, n)) {
    num *= dot(lr, a);
    den *= dot(rho, a);
  }
  const Rational d = num / den;
  if (!d.is_integer() || d < Rational(1))
    throw std::logic_error("weyl_dim: non-integral dimension for " + vec_str(mu));
  return d.num_long();
}

std::map<std::vector<Rational>, long> weight_multiplicities(
    const AlgebraKind& kind, const std::vector<Rational>& mu) {
  const int n = kind.n();
  if (static_cast<int>(mu.size()) != n)
    throw std::invalid_argument("weight_multiplicities: weight length != rank");
  const Family f = kind.family();
  const Vec lambda = to_std(mu);
  if (!is_dominant(f, lambda))
    throw std::invalid_argument("weight_multiplicities: weight not dominant");
  const Vec rho = weyl_rho(f, n);
  const std::vector<Vec> roots = positive_roots(f, n);

  Vec lr(n);
  for (int i = 0; i < n; ++i) lr[i] = lambda[i] + rho[i];
  const Rational top_norm = dot(lr, lr);

  // Enumerate dominant weights nu <= lambda: walk the root lattice downward
  // from lambda by positive roots, keeping everything inside the cone; the
  // dominant representatives of the visited points exhaust the support.
  std::set<Vec> visited{lambda};
  std::vector<Vec> queue{lambda};
  std::set<Vec> dominant{lambda};
  while (!queue.empty()) {
    Vec w = queue.back();
    queue.pop_back();
    for (const Vec& a : roots) {
      Vec v(n);
      for (int i = 0; i < n; ++i) v[i] = w[i] - a[i];
      Vec diff(n);
      for (int i = 0; i < n; ++i) diff[i] = lambda[i] - v[i];
      if (!in_positive_cone(f, diff)) continue;
      // Norm bound: every weight of V(lambda) satisfies |nu+rho| <= |lambda+rho|.
      Vec vr(n);
      for (int i = 0; i < n; ++i) vr[i] = v[i] + rho[i];
      if (top_norm < dot(vr, vr)) continue;
      if (visited.insert(v).second) {
        queue.push_back(v);
        if (is_dominant(f, v)) dominant.insert(v);
      }
    }
  }

  // Freudenthal, top-down by height of lambda - nu.
  std::vector<Vec> order(dominant.begin(), dominant.end());
  std::sort(order.begin(), order.end(), [&](const Vec& a, const Vec& b) {
    Vec da(n), db(n);
    for (int i = 0; i < n; ++i) {
      da[i] = lambda[i] - a[i];
      db[i] = lambda[i] - b[i];
    }
    const long ha = order_proxy(f, da), hb = order_proxy(f, db);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  std::map<Vec, Rational> mult;
  mult[lambda] = Rational(1);
  auto lookup = [&](const Vec& w) -> Rational {
    auto it = mult.find(dominant_rep(f, w));
    return it == mult.end() ? Rational(0) : it->second;
  };
  for (const Vec& nu : order) {
    if (nu == lambda) continue;
    Vec nr(n);
    for (int i = 0; i < n; ++i) nr[i] = nu[i] + rho[i];
    const Rational denom = top_norm - dot(nr, nr);
    if (denom == Rational(0))
      throw std::logic_error("weight_multiplicities: degenerate denominator");
    Rational num(0);
    for (const Vec& a : roots) {
      Vec w = nu;
      for (int k = 1;; ++k) {
        for (int i = 0; i < n; ++i) w[i] += a[i];
        Vec diff(n);
        for (int i = 0; i < n; ++i) diff[i] = lambda[i] - w[i];
        if (!in_positive_cone(f, diff)) break;
        const Rational m = lookup(w);
        if (m != Rational(0)) num += m * dot(w, a);
      }
    }
    num += num;  // factor 2 in the recursion
    const Rational m = num / denom;
    if (!m.is_integer() || m < Rational(0))
      throw std::logic_error("weight_multiplicities: non-integral value");
    if (m != Rational(0)) mult[nu] = m;
  }

  // Expand over Weyl orbits and re-key in label order
  // (-n..-1, [0,] 1..n): the tuple is (w_1..w_n, [0,] -w_n..-w_1).
  std::map<std::vector<Rational>, long> table;
  long total = 0;
  const bool odd = kind.family() == Family::B;
  for (const auto& [dom, m] : mult) {
    const long mm = m.num_long();
    for (const Vec& w : weyl_orbit(f, dom)) {
      std::vector<Rational> key;
      key.reserve(kind.N());
      for (int i = 0; i < n; ++i) key.push_back(w[i]);
      if (odd) key.push_back(Rational(0));
      for (int i = n - 1; i >= 0; --i) key.push_back(-w[i]);
      table[key] += mm;
      total += mm;
    }
  }
  if (total != weyl_dim(kind, mu))
    throw std::logic_error("weight_multiplicities: table does not sum to the dimension");
  return table;
}

std::map<std::vector<Rational>, long> weight_multiplicities_sum(
    const AlgebraKind& kind, const std::vector<std::vector<Rational>>& mus) {
  std::map<std::vector<Rational>, long> table;
  for (const auto& mu : mus)
    for (const auto& [k, m] : weight_multiplicities(kind, mu)) table[k] += m;
  return table;
}

}  // namespace ykit
