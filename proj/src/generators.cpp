#include "sl2lab/generators.hpp"

#include <algorithm>
#include <numeric>

namespace sl2lab {

namespace {

std::vector<GeneratorSet::Atom> merge_atoms(std::vector<GeneratorSet::Atom> atoms) {
  std::sort(atoms.begin(), atoms.end(), [](const auto& x, const auto& y) {
    return element_code(x.element) < element_code(y.element);
  });
  std::vector<GeneratorSet::Atom> merged;
  for (auto& a : atoms) {
    if (!merged.empty() && merged.back().element == a.element) {
      merged.back().weight += a.weight;
    } else {
      merged.push_back(a);
    }
  }
  return merged;
}

}  // namespace

GeneratorSet::GeneratorSet(std::vector<Atom> atoms) : atoms_(merge_atoms(std::move(atoms))) {
  if (atoms_.empty()) throw std::invalid_argument("empty generator multiset");
  const uint32_t p = atoms_.front().element.p;
  Weight total(0);
  for (const auto& a : atoms_) {
    if (a.element.p != p) throw std::invalid_argument("mixed moduli in generator multiset");
    if (a.weight <= Weight(0) || a.weight > Weight(1)) {
      throw std::invalid_argument("generator weight outside (0,1]");
    }
    total += a.weight;
  }
  if (total != Weight(1)) throw std::invalid_argument("generator weights do not sum to 1");
  for (const auto& a : atoms_) {
    const Element ai = inv(a.element);
    const auto it = std::find_if(atoms_.begin(), atoms_.end(),
                                 [&](const Atom& x) { return x.element == ai; });
    if (it == atoms_.end() || it->weight != a.weight) {
      throw std::invalid_argument("generator multiset is not symmetric");
    }
  }
}

GeneratorSet GeneratorSet::pair_measure(const Element& a, const Element& b) {
  if (a.p != b.p) throw std::invalid_argument("modulus mismatch in pair measure");
  const Weight q(1, 4);
  return GeneratorSet({{a, q}, {inv(a), q}, {b, q}, {inv(b), q}});
}

GeneratorSet GeneratorSet::uniform_symmetric(const std::vector<Element>& elements) {
  if (elements.empty()) throw std::invalid_argument("empty generator list");
  std::vector<Atom> atoms;
  const Weight w(1, (int64_t)elements.size() * 2);
  for (const auto& e : elements) {
    atoms.push_back({e, w});
    atoms.push_back({inv(e), w});
  }
  return GeneratorSet(std::move(atoms));
}

Weight GeneratorSet::min_weight() const {
  Weight m = atoms_.front().weight;
  for (const auto& a : atoms_) m = std::min(m, a.weight);
  return m;
}

int64_t GeneratorSet::common_denominator() const {
  int64_t l = 1;
  for (const auto& a : atoms_) l = std::lcm(l, a.weight.denominator());
  return l;
}

uint64_t GeneratorSet::fingerprint() const {
  uint64_t h = 0x9e3779b97f4a7c15ull ^ atoms_.front().element.p;
  auto mix = [&h](uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (const auto& a : atoms_) {
    mix(element_code(a.element));
    mix((uint64_t)a.weight.numerator());
    mix((uint64_t)a.weight.denominator());
  }
  return h;
}

}  // namespace sl2lab
