#include "sl2lab/group_table.hpp"

#include <algorithm>

namespace sl2lab {

namespace {
// p^4 bound below which code->index uses a direct lookup array.
constexpr uint64_t kDirectLookupCap = 8'500'000;
}  // namespace

std::shared_ptr<const GroupTable> GroupTable::build(PrimeModulus pm, uint64_t size_cap) {
  const uint32_t p = pm.value();
  const uint64_t n64 = pm.group_order();
  if (n64 > size_cap) {
    throw std::invalid_argument("group order " + std::to_string(n64) +
                                " exceeds the configured cap " + std::to_string(size_cap));
  }
  auto table = std::shared_ptr<GroupTable>(new GroupTable());
  GroupTable& t = *table;
  t.p_ = p;
  t.n_ = (uint32_t)n64;

  // Enumerate det-1 matrices directly: for a != 0, d is determined by
  // (a d - b c = 1); for a = 0 we need bc = -1, leaving d free.
  std::vector<uint32_t> codes;
  codes.reserve(t.n_);
  for (uint32_t a = 1; a < p; ++a) {
    const uint64_t a_inv = mod_inverse(a, p);
    for (uint32_t b = 0; b < p; ++b) {
      for (uint32_t c = 0; c < p; ++c) {
        const uint64_t d = (1 + (uint64_t)b * c % p) % p * a_inv % p;
        codes.push_back((uint32_t)((((uint64_t)a * p + b) * p + c) * p + d));
      }
    }
  }
  for (uint32_t b = 1; b < p; ++b) {
    const uint32_t c = (uint32_t)((uint64_t)(p - 1) * mod_inverse(b, p) % p);
    for (uint32_t d = 0; d < p; ++d) {
      codes.push_back((uint32_t)((((uint64_t)0 * p + b) * p + c) * p + d));
    }
  }
  if (codes.size() != t.n_) {
    throw std::logic_error("enumeration produced wrong group order");
  }
  std::sort(codes.begin(), codes.end());

  // Swap identity to index 0 (its sorted rank is never 0: code(I) = p^3+1
  // while rank 0 belongs to an a=0 matrix).
  const uint32_t id_code =
      (uint32_t)(((((uint64_t)1 * p + 0) * p + 0) * p + 1));
  const auto it = std::lower_bound(codes.begin(), codes.end(), id_code);
  const uint32_t id_rank = (uint32_t)(it - codes.begin());
  t.codes_by_index_ = codes;
  std::swap(t.codes_by_index_[0], t.codes_by_index_[id_rank]);

  const uint64_t code_space = (uint64_t)p * p * p * p;
  if (code_space <= kDirectLookupCap) {
    t.code_to_index_.assign(code_space, -1);
    for (uint32_t i = 0; i < t.n_; ++i) t.code_to_index_[t.codes_by_index_[i]] = (int32_t)i;
  } else {
    t.sorted_codes_ = codes;
    t.sorted_index_.resize(t.n_);
    for (uint32_t r = 0; r < t.n_; ++r) t.sorted_index_[r] = r;
    t.sorted_index_[0] = id_rank;
    t.sorted_index_[id_rank] = 0;
  }

  t.inv_index_.resize(t.n_);
  for (uint32_t i = 0; i < t.n_; ++i) {
    t.inv_index_[i] = t.index_of(inv(t.element(i)));
  }

  if (t.n_ <= kMultTableThreshold) {
    t.mult_.resize((size_t)t.n_ * t.n_);
    for (uint32_t i = 0; i < t.n_; ++i) {
      const Element x = t.element(i);
      uint32_t* row = &t.mult_[(size_t)i * t.n_];
      for (uint32_t j = 0; j < t.n_; ++j) {
        row[j] = t.index_of(mul(x, t.element(j)));
      }
    }
  }
  return table;
}

uint32_t GroupTable::index_of(const Element& x) const {
  if (x.p != p_) throw std::invalid_argument("modulus mismatch in index_of");
  const uint32_t code = (uint32_t)element_code(x);
  if (!code_to_index_.empty()) {
    const int32_t idx = code_to_index_[code];
    if (idx < 0) throw std::invalid_argument("element is not in SL(2,p)");
    return (uint32_t)idx;
  }
  const auto it = std::lower_bound(sorted_codes_.begin(), sorted_codes_.end(), code);
  if (it == sorted_codes_.end() || *it != code) {
    throw std::invalid_argument("element is not in SL(2,p)");
  }
  return sorted_index_[it - sorted_codes_.begin()];
}

Element GroupTable::element(uint32_t index) const {
  return element_from_code(codes_by_index_[index], PrimeModulus(p_));
}

std::vector<uint32_t> GroupTable::left_multiplication_perm(const Element& s) const {
  std::vector<uint32_t> perm(n_);
  if (!mult_.empty()) {
    const uint32_t si = index_of(s);
    const uint32_t* row = &mult_[(size_t)si * n_];
    std::copy(row, row + n_, perm.begin());
    return perm;
  }
  for (uint32_t j = 0; j < n_; ++j) perm[j] = index_of(mul(s, element(j)));
  return perm;
}

std::vector<uint32_t> GroupTable::conjugation_perm(const Element& g, const Element& g_inv) const {
  std::vector<uint32_t> perm(n_);
  for (uint32_t j = 0; j < n_; ++j) {
    perm[j] = index_of(mul(mul(g, element(j)), g_inv));
  }
  return perm;
}

}  // namespace sl2lab
