#pragma once

#include <vector>

#include "sl2lab/generators.hpp"
#include "sl2lab/group_table.hpp"

namespace sl2lab {

/// The averaging (Markov) operator of a Cayley graph, stored as weighted
/// left-multiplication permutations. Row-stochastic and self-adjoint by
/// symmetry of the generator multiset. The convolution convention is
/// (mu * nu)(g) = sum_s mu(s) nu(s^-1 g), i.e. one application scatters
/// in[x] to out[s*x] with weight mu(s).
class MarkovStencil {
public:
  struct Term {
    std::vector<uint32_t> perm;  // j -> index(s * element(j))
    double weight;
    int64_t weight_num;
    int64_t weight_den;
  };

  MarkovStencil(const GroupTable& table, const GeneratorSet& gens);

  uint32_t size() const { return size_; }
  const std::vector<Term>& terms() const { return terms_; }
  const GeneratorSet& generators() const { return gens_; }

  /// out must not alias in; out is overwritten.
  void apply(const double* in, double* out) const;
  std::vector<double> apply(const std::vector<double>& in) const;

  /// Weighted degree of the underlying multigraph: number of generator
  /// slots counted with multiplicity (4 for a pair measure).
  int64_t degree() const { return degree_; }

private:
  uint32_t size_;
  int64_t degree_;
  GeneratorSet gens_;
  std::vector<Term> terms_;
};

/// Builds the stencil of a symmetric multiset; the GeneratorSet type already
/// enforces symmetry and unit total weight.
MarkovStencil build_stencil(const GroupTable& table, const GeneratorSet& gens);

}  // namespace sl2lab
