#include "sl2lab/stencil.hpp"

#include <numeric>

namespace sl2lab {

MarkovStencil::MarkovStencil(const GroupTable& table, const GeneratorSet& gens)
    : size_(table.size()), gens_(gens) {
  if (gens.prime() != table.prime()) {
    throw std::invalid_argument("generator multiset modulus does not match table");
  }
  const int64_t den = gens.common_denominator();
  degree_ = den;
  terms_.reserve(gens.atoms().size());
  for (const auto& atom : gens.atoms()) {
    Term t;
    t.perm = table.left_multiplication_perm(atom.element);
    t.weight_num = atom.weight.numerator();
    t.weight_den = atom.weight.denominator();
    t.weight = (double)t.weight_num / (double)t.weight_den;
    terms_.push_back(std::move(t));
  }
}

void MarkovStencil::apply(const double* in, double* out) const {
  std::fill(out, out + size_, 0.0);
  for (const auto& t : terms_) {
    const uint32_t* perm = t.perm.data();
    const double w = t.weight;
    for (uint32_t j = 0; j < size_; ++j) out[perm[j]] += w * in[j];
  }
}

std::vector<double> MarkovStencil::apply(const std::vector<double>& in) const {
  std::vector<double> out(size_);
  apply(in.data(), out.data());
  return out;
}

MarkovStencil build_stencil(const GroupTable& table, const GeneratorSet& gens) {
  return MarkovStencil(table, gens);
}

}  // namespace sl2lab
