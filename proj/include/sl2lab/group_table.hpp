#pragma once

#include <memory>
#include <vector>

#include "sl2lab/element.hpp"

namespace sl2lab {

/// Bijection between SL(2,p) and dense indices 0..p(p^2-1)-1.
///
/// Elements are ranked by their dense code ((a*p+b)*p+c)*p+d restricted to
/// the det-1 subset, then the identity is swapped to index 0. For small
/// groups (order <= kMultTableThreshold) the full multiplication table is
/// precomputed, which turns closures, orbit walks and stencil construction
/// into flat array lookups.
///
/// Immutable after construction; share freely across threads.
class GroupTable {
public:
  static constexpr uint64_t kDefaultSizeCap = 1'000'000;
  static constexpr uint64_t kMultTableThreshold = 2400;

  static std::shared_ptr<const GroupTable> build(PrimeModulus p,
                                                 uint64_t size_cap = kDefaultSizeCap);

  uint32_t prime() const { return p_; }
  PrimeModulus modulus() const { return PrimeModulus(p_); }
  uint32_t size() const { return n_; }

  uint32_t index_of(const Element& x) const;
  Element element(uint32_t index) const;

  bool has_mult_table() const { return !mult_.empty(); }

  /// Index of element(i) * element(j).
  uint32_t mul_index(uint32_t i, uint32_t j) const {
    if (!mult_.empty()) return mult_[(size_t)i * n_ + j];
    return index_of(mul(element(i), element(j)));
  }

  /// Index of element(i)^-1 (precomputed permutation).
  uint32_t inverse_index(uint32_t i) const { return inv_index_[i]; }

  /// Permutation j -> index(s * element(j)).
  std::vector<uint32_t> left_multiplication_perm(const Element& s) const;

  /// Permutation j -> index(g * element(j) * g^-1). g may sit in GL(2,p):
  /// pass its inverse explicitly.
  std::vector<uint32_t> conjugation_perm(const Element& g, const Element& g_inv) const;

private:
  GroupTable() = default;

  uint32_t p_ = 0;
  uint32_t n_ = 0;
  std::vector<uint32_t> codes_by_index_;
  // element code -> index; direct array when p^4 is small, otherwise via
  // binary search over sorted_codes_/sorted_index_.
  std::vector<int32_t> code_to_index_;
  std::vector<uint32_t> sorted_codes_;
  std::vector<uint32_t> sorted_index_;
  std::vector<uint32_t> inv_index_;
  std::vector<uint32_t> mult_;
};

}  // namespace sl2lab
