#pragma once

#include <boost/rational.hpp>
#include <vector>

#include "sl2lab/element.hpp"

namespace sl2lab {

using Weight = boost::rational<int64_t>;

/// A symmetric weighted generating multiset: closed under inversion with
/// matching weights, weights sum to 1 exactly. The pair measure
/// (1/4)(d_a + d_{a^-1} + d_b + d_{b^-1}) merges coincident atoms instead
/// of renormalizing, so e.g. a = a^-1 contributes a single atom of weight 1/2.
class GeneratorSet {
public:
  struct Atom {
    Element element;
    Weight weight;
  };

  /// Validates symmetry and total weight; throws std::invalid_argument.
  explicit GeneratorSet(std::vector<Atom> atoms);

  /// The measure (1/4)(d_a + d_{a^-1} + d_b + d_{b^-1}).
  static GeneratorSet pair_measure(const Element& a, const Element& b);

  /// Symmetrizes a plain element list: each listed s contributes equal mass
  /// to s and s^-1, atoms merged, total normalized to 1.
  static GeneratorSet uniform_symmetric(const std::vector<Element>& elements);

  const std::vector<Atom>& atoms() const { return atoms_; }
  uint32_t prime() const { return atoms_.front().element.p; }
  size_t support_size() const { return atoms_.size(); }

  Weight min_weight() const;

  /// Least common denominator of all weights (exact-walk step scale).
  int64_t common_denominator() const;

  /// Order-insensitive fingerprint of the weighted support.
  uint64_t fingerprint() const;

private:
  std::vector<Atom> atoms_;
};

}  // namespace sl2lab
