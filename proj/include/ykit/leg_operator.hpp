#ifndef YKIT_LEG_OPERATOR_HPP
#define YKIT_LEG_OPERATOR_HPP

// Operators on tensor products of labeled spaces ("legs"), stored as one
// dense matrix over the composite row-major index.  Free functions build
// identities, Kronecker products, embeddings that act on a chosen subset of
// legs, and the two partial transposes used by the matrix algebras here:
// the plain one e_ij -> e_ji and the signed one e_ij -> theta_ij e_{-j,-i}.

#include <functional>

#include "ykit/matrix.hpp"
#include "ykit/space_index.hpp"

namespace ykit {

template <class T>
struct LegOperator {
  LegOperator(MultiIndex idx, Matrix<T> mat)
      : index(std::move(idx)), m(std::move(mat)) {
    if (m.rows() != index.dim() || m.cols() != index.dim())
      throw std::invalid_argument("LegOperator: matrix/index mismatch");
  }

  MultiIndex index;
  Matrix<T> m;

  const T& at(const std::vector<int>& row_labels,
              const std::vector<int>& col_labels) const {
    return m(index.encode_labels(row_labels), index.encode_labels(col_labels));
  }
  T& at(const std::vector<int>& row_labels, const std::vector<int>& col_labels) {
    return m(index.encode_labels(row_labels), index.encode_labels(col_labels));
  }
};

template <class T>
LegOperator<T> leg_identity(std::vector<SpaceIndex> legs) {
  MultiIndex idx(std::move(legs));
  const std::size_t d = idx.dim();
  return LegOperator<T>(std::move(idx), Matrix<T>::identity(d));
}

template <class T>
LegOperator<T> leg_kron(const LegOperator<T>& a, const LegOperator<T>& b) {
  std::vector<SpaceIndex> legs = a.index.leg_list();
  for (const auto& l : b.index.leg_list()) legs.push_back(l);
  return LegOperator<T>(MultiIndex(std::move(legs)), kron(a.m, b.m));
}

// Embeds `op` into the ambient product so that its k-th leg acts at
// ambient position positions[k] (identity on the remaining legs).  The leg
// spaces at those positions must match op's legs.
template <class T>
LegOperator<T> embed_on_legs(const LegOperator<T>& op,
                             const std::vector<std::size_t>& positions,
                             const std::vector<SpaceIndex>& ambient) {
  if (positions.size() != op.index.legs())
    throw std::invalid_argument("embed_on_legs: arity mismatch");
  std::vector<bool> used(ambient.size(), false);
  for (std::size_t k = 0; k < positions.size(); ++k) {
    const std::size_t p = positions[k];
    if (p >= ambient.size() || used[p])
      throw std::invalid_argument("embed_on_legs: bad positions");
    used[p] = true;
    if (ambient[p] != op.index.leg(k))
      throw std::invalid_argument("embed_on_legs: leg space mismatch");
  }
  MultiIndex amb(ambient);
  Matrix<T> r(amb.dim(), amb.dim());

  // Enumerate nonzero entries of op and all assignments of the passive legs.
  std::vector<std::size_t> passive;
  for (std::size_t p = 0; p < ambient.size(); ++p)
    if (!used[p]) passive.push_back(p);
  std::size_t passive_dim = 1;
  for (std::size_t p : passive) passive_dim *= ambient[p].dim();

  const std::size_t d = op.index.dim();
  for (std::size_t rs = 0; rs < d; ++rs) {
    const auto rpos = op.index.decode(rs);
    for (std::size_t cs = 0; cs < d; ++cs) {
      const T& v = op.m(rs, cs);
      if (v.is_zero()) continue;
      const auto cpos = op.index.decode(cs);
      for (std::size_t w = 0; w < passive_dim; ++w) {
        std::vector<std::size_t> rfull(ambient.size()), cfull(ambient.size());
        std::size_t ww = w;
        for (std::size_t t = passive.size(); t-- > 0;) {
          const std::size_t p = passive[t];
          const std::size_t here = ww % ambient[p].dim();
          ww /= ambient[p].dim();
          rfull[p] = cfull[p] = here;
        }
        for (std::size_t k = 0; k < positions.size(); ++k) {
          rfull[positions[k]] = rpos[k];
          cfull[positions[k]] = cpos[k];
        }
        r(amb.encode(rfull), amb.encode(cfull)) = v;
      }
    }
  }
  return LegOperator<T>(std::move(amb), std::move(r));
}

// Plain partial transpose on one leg: e_ij -> e_ji there.
template <class T>
LegOperator<T> partial_transpose_gl(const LegOperator<T>& op, std::size_t leg) {
  if (leg >= op.index.legs())
    throw std::invalid_argument("partial_transpose_gl: bad leg");
  Matrix<T> r(op.m.rows(), op.m.cols());
  const std::size_t d = op.index.dim();
  for (std::size_t rs = 0; rs < d; ++rs)
    for (std::size_t cs = 0; cs < d; ++cs) {
      const T& v = op.m(rs, cs);
      if (v.is_zero()) continue;
      auto rpos = op.index.decode(rs);
      auto cpos = op.index.decode(cs);
      std::swap(rpos[leg], cpos[leg]);
      r(op.index.encode(rpos), op.index.encode(cpos)) = v;
    }
  return LegOperator<T>(op.index, std::move(r));
}

// Signed partial transpose on one leg: e_ij -> theta(i,j) e_{-j,-i} there,
// where theta maps a pair of labels to +1 or -1.  The leg's label set must
// be closed under negation.
template <class T>
LegOperator<T> partial_transpose_signed(
    const LegOperator<T>& op, std::size_t leg,
    const std::function<int(int, int)>& theta) {
  if (leg >= op.index.legs())
    throw std::invalid_argument("partial_transpose_signed: bad leg");
  const SpaceIndex& sp = op.index.leg(leg);
  Matrix<T> r(op.m.rows(), op.m.cols());
  const std::size_t d = op.index.dim();
  for (std::size_t rs = 0; rs < d; ++rs)
    for (std::size_t cs = 0; cs < d; ++cs) {
      const T& v = op.m(rs, cs);
      if (v.is_zero()) continue;
      auto rpos = op.index.decode(rs);
      auto cpos = op.index.decode(cs);
      const int i = sp.label(rpos[leg]);
      const int j = sp.label(cpos[leg]);
      rpos[leg] = sp.pos(-j);
      cpos[leg] = sp.pos(-i);
      const int s = theta(i, j);
      if (s == 1)
        r(op.index.encode(rpos), op.index.encode(cpos)) = v;
      else
        r(op.index.encode(rpos), op.index.encode(cpos)) = -v;
    }
  return LegOperator<T>(op.index, std::move(r));
}

}  // namespace ykit

#endif  // YKIT_LEG_OPERATOR_HPP
