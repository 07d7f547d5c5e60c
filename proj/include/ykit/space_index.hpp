#ifndef YKIT_SPACE_INDEX_HPP
#define YKIT_SPACE_INDEX_HPP

// Labeled index spaces and composite (tensor-product) indexing.
//
// The matrix algebras used here index the natural module by symmetric
// integer labels -n,...,-1,(0),1,...,n rather than 0-based positions, and
// many formulas (sign rules, transposes) are written in terms of the label
// -i.  SpaceIndex records the label list of one tensor leg and converts
// between labels and storage positions; MultiIndex does the row-major
// encode/decode for a list of legs.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ykit {

class SpaceIndex {
 public:
  SpaceIndex() = default;
  // Labels must be strictly increasing.
  explicit SpaceIndex(std::vector<int> labels);

  // Positions 0..dim-1 labeled by their own index.
  static SpaceIndex plain(std::size_t dim);
  // Symmetric labels: -n..-1,0,1..n (odd) or -n..-1,1..n (even).
  static SpaceIndex symmetric(std::size_t dim);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<int>& labels() const { return labels_; }
  int label(std::size_t pos) const { return labels_.at(pos); }

  bool has_label(int label) const;
  // Position of a label; throws std::out_of_range if absent.
  std::size_t pos(int label) const;

  friend bool operator==(const SpaceIndex& a, const SpaceIndex& b) {
    return a.labels_ == b.labels_;
  }
  friend bool operator!=(const SpaceIndex& a, const SpaceIndex& b) {
    return !(a == b);
  }

 private:
  std::vector<int> labels_;
};

class MultiIndex {
 public:
  explicit MultiIndex(std::vector<SpaceIndex> legs);

  std::size_t legs() const { return legs_.size(); }
  const SpaceIndex& leg(std::size_t k) const { return legs_.at(k); }
  const std::vector<SpaceIndex>& leg_list() const { return legs_; }
  std::size_t dim() const { return dim_; }

  // Composite index from per-leg positions / labels (row-major).
  std::size_t encode(const std::vector<std::size_t>& pos) const;
  std::size_t encode_labels(const std::vector<int>& labels) const;
  std::vector<std::size_t> decode(std::size_t comp) const;
  std::vector<int> decode_labels(std::size_t comp) const;

  // Position of leg k within the composite index arithmetic.
  std::size_t stride(std::size_t k) const { return strides_.at(k); }

 private:
  std::vector<SpaceIndex> legs_;
  std::vector<std::size_t> strides_;
  std::size_t dim_ = 1;
};

}  // namespace ykit

#endif  // YKIT_SPACE_INDEX_HPP
