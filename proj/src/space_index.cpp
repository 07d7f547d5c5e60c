#include "ykit/space_index.hpp"

namespace ykit {

SpaceIndex::SpaceIndex(std::vector<int> labels) : labels_(std::move(labels)) {
  for (std::size_t i = 1; i < labels_.size(); ++i)
    if (labels_[i - 1] >= labels_[i])
      throw std::invalid_argument("SpaceIndex: labels must be increasing");
}

SpaceIndex SpaceIndex::plain(std::size_t dim) {
  std::vector<int> l(dim);
  for (std::size_t i = 0; i < dim; ++i) l[i] = static_cast<int>(i);
  return SpaceIndex(std::move(l));
}

SpaceIndex SpaceIndex::symmetric(std::size_t dim) {
  const int n = static_cast<int>(dim) / 2;
  std::vector<int> l;
  l.reserve(dim);
  for (int i = -n; i <= n; ++i) {
    if (i == 0 && dim % 2 == 0) continue;
    l.push_back(i);
  }
  return SpaceIndex(std::move(l));
}

bool SpaceIndex::has_label(int label) const {
  for (int l : labels_)
    if (l == label) return true;
  return false;
}

std::size_t SpaceIndex::pos(int label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw std::out_of_range("SpaceIndex::pos: label " + std::to_string(label) +
                          " not in space");
}

MultiIndex::MultiIndex(std::vector<SpaceIndex> legs) : legs_(std::move(legs)) {
  strides_.assign(legs_.size(), 1);
  for (std::size_t k = legs_.size(); k-- > 0;) {
    strides_[k] = dim_;
    dim_ *= legs_[k].dim();
  }
  // strides_ currently holds suffix products in reverse build order; redo
  // them explicitly for clarity.
  std::size_t s = 1;
  for (std::size_t k = legs_.size(); k-- > 0;) {
    strides_[k] = s;
    s *= legs_[k].dim();
  }
  dim_ = s;
}

std::size_t MultiIndex::encode(const std::vector<std::size_t>& pos) const {
  if (pos.size() != legs_.size())
    throw std::invalid_argument("MultiIndex::encode: wrong arity");
  std::size_t c = 0;
  for (std::size_t k = 0; k < legs_.size(); ++k) {
    if (pos[k] >= legs_[k].dim())
      throw std::out_of_range("MultiIndex::encode: position out of range");
    c += pos[k] * strides_[k];
  }
  return c;
}

std::size_t MultiIndex::encode_labels(const std::vector<int>& labels) const {
  if (labels.size() != legs_.size())
    throw std::invalid_argument("MultiIndex::encode_labels: wrong arity");
  std::size_t c = 0;
  for (std::size_t k = 0; k < legs_.size(); ++k)
    c += legs_[k].pos(labels[k]) * strides_[k];
  return c;
}

std::vector<std::size_t> MultiIndex::decode(std::size_t comp) const {
  if (comp >= dim_) throw std::out_of_range("MultiIndex::decode");
  std::vector<std::size_t> pos(legs_.size());
  for (std::size_t k = 0; k < legs_.size(); ++k) {
    pos[k] = comp / strides_[k];
    comp %= strides_[k];
  }
  return pos;
}

std::vector<int> MultiIndex::decode_labels(std::size_t comp) const {
  auto pos = decode(comp);
  std::vector<int> l(pos.size());
  for (std::size_t k = 0; k < pos.size(); ++k) l[k] = legs_[k].label(pos[k]);
  return l;
}

}  // namespace ykit
