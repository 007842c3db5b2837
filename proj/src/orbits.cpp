#include "sl2lab/orbits.hpp"

#include <algorithm>
#include <unordered_set>

#include "sl2lab/subgroups.hpp"

namespace sl2lab {

namespace {

// Smallest quadratic non-residue mod p; diag(r,1) then represents the
// non-inner half of PGL(2,p).
uint32_t smallest_non_residue(uint32_t p) {
  std::vector<char> is_square(p, 0);
  for (uint64_t t = 1; t < p; ++t) is_square[t * t % p] = 1;
  for (uint32_t r = 2; r < p; ++r) {
    if (!is_square[r]) return r;
  }
  throw std::logic_error("no quadratic non-residue found");
}

}  // namespace

PairSymmetry::PairSymmetry(const GroupTable& table) : table_(&table) {
  const uint32_t p = table.prime();
  const PrimeModulus pm(p);
  const auto [t1, t2] = standard_pair(pm);
  conj_perms_.push_back(table.conjugation_perm(t1, inv(t1)));
  conj_perms_.push_back(table.conjugation_perm(t2, inv(t2)));
  const uint32_t r = smallest_non_residue(p);
  const Element d{r, 0, 0, 1, p};
  const Element d_inv{mod_inverse(r, p), 0, 0, 1, p};
  conj_perms_.push_back(table.conjugation_perm(d, d_inv));
}

PairOrbitKey PairSymmetry::canonicalize_indices(uint32_t ia, uint32_t ib) const {
  const uint64_t n = table_->size();
  const uint64_t start = (uint64_t)ia * n + ib;
  uint64_t min_code = start;
  std::unordered_set<uint64_t> seen;
  std::vector<uint64_t> queue;
  seen.insert(start);
  queue.push_back(start);
  for (size_t head = 0; head < queue.size(); ++head) {
    const uint64_t code = queue[head];
    const uint32_t x = (uint32_t)(code / n);
    const uint32_t y = (uint32_t)(code % n);
    const auto push = [&](uint32_t u, uint32_t v) {
      const uint64_t c = (uint64_t)u * n + v;
      if (seen.insert(c).second) {
        queue.push_back(c);
        min_code = std::min(min_code, c);
      }
    };
    push(y, x);
    push(table_->inverse_index(x), y);
    push(x, table_->inverse_index(y));
    for (const auto& perm : conj_perms_) push(perm[x], perm[y]);
  }
  return PairOrbitKey{min_code};
}

PairOrbitKey PairSymmetry::canonicalize(const Element& a, const Element& b) const {
  return canonicalize_indices(table_->index_of(a), table_->index_of(b));
}

std::pair<Element, Element> PairSymmetry::representative(PairOrbitKey key) const {
  const uint64_t n = table_->size();
  return {table_->element((uint32_t)(key.code / n)), table_->element((uint32_t)(key.code % n))};
}

std::vector<PairOrbit> PairSymmetry::all_orbits() const {
  const uint64_t n = table_->size();
  const uint64_t total = n * n;
  std::vector<uint64_t> visited((total + 63) / 64, 0);
  const auto test_and_set = [&](uint64_t code) {
    const uint64_t mask = 1ull << (code & 63);
    const bool was = visited[code >> 6] & mask;
    visited[code >> 6] |= mask;
    return was;
  };

  std::vector<PairOrbit> orbits;
  std::vector<uint64_t> queue;
  for (uint64_t start = 0; start < total; ++start) {
    if (test_and_set(start)) continue;
    queue.clear();
    queue.push_back(start);
    uint64_t min_code = start;
    for (size_t head = 0; head < queue.size(); ++head) {
      const uint64_t code = queue[head];
      const uint32_t x = (uint32_t)(code / n);
      const uint32_t y = (uint32_t)(code % n);
      const auto push = [&](uint32_t u, uint32_t v) {
        const uint64_t c = (uint64_t)u * n + v;
        if (!test_and_set(c)) {
          queue.push_back(c);
          min_code = std::min(min_code, c);
        }
      };
      push(y, x);
      push(table_->inverse_index(x), y);
      push(x, table_->inverse_index(y));
      for (const auto& perm : conj_perms_) push(perm[x], perm[y]);
    }
    orbits.push_back(PairOrbit{PairOrbitKey{min_code}, queue.size()});
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const PairOrbit& a, const PairOrbit& b) { return a.key < b.key; });
  return orbits;
}

PairOrbitKey canonicalize_pair(const Element& a, const Element& b, const GroupTable& table) {
  return PairSymmetry(table).canonicalize(a, b);
}

std::vector<PairOrbit> enumerate_generating_orbits(const PairSymmetry& sym) {
  const auto& table = sym.table();
  auto orbits = sym.all_orbits();
  std::vector<PairOrbit> generating;
  for (const auto& orbit : orbits) {
    const auto [a, b] = sym.representative(orbit.key);
    if (generates_pair(a, b, table)) generating.push_back(orbit);
  }
  return generating;
}

}  // namespace sl2lab
