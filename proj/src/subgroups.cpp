#include "sl2lab/subgroups.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "sl2lab/rng.hpp"

namespace sl2lab {

namespace {

// Closure scratch: visited stamps reused across calls to avoid reallocating
// per pair in brute-force enumerations.
struct ClosureScratch {
  std::vector<uint32_t> stamp;
  uint32_t epoch = 0;

  uint32_t begin(uint32_t n) {
    if (stamp.size() < n) stamp.assign(n, 0);
    if (++epoch == 0) {
      std::fill(stamp.begin(), stamp.end(), 0);
      epoch = 1;
    }
    return epoch;
  }
};

thread_local ClosureScratch tls_scratch;

std::vector<uint32_t> closure_indices_impl(const std::vector<uint32_t>& gen_indices,
                                           const GroupTable& table, uint64_t cap,
                                           bool* hit_cap) {
  const uint32_t n = table.size();
  ClosureScratch& scratch = tls_scratch;
  const uint32_t epoch = scratch.begin(n);
  std::vector<uint32_t> elems;
  elems.reserve(std::min<uint64_t>(cap + 1, n));
  elems.push_back(0);
  scratch.stamp[0] = epoch;
  *hit_cap = false;
  for (size_t head = 0; head < elems.size(); ++head) {
    const uint32_t x = elems[head];
    for (const uint32_t g : gen_indices) {
      const uint32_t y = table.mul_index(g, x);
      if (scratch.stamp[y] != epoch) {
        scratch.stamp[y] = epoch;
        elems.push_back(y);
        if (elems.size() > cap) {
          *hit_cap = true;
          return elems;
        }
      }
    }
  }
  return elems;
}

std::vector<uint32_t> generator_indices(std::span<const Element> gens, const GroupTable& table) {
  std::vector<uint32_t> idx;
  idx.reserve(gens.size() * 2);
  for (const auto& g : gens) {
    const uint32_t i = table.index_of(g);
    idx.push_back(i);
    idx.push_back(table.inverse_index(i));
  }
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return idx;
}

uint64_t index_set_fingerprint(const std::vector<uint32_t>& sorted) {
  uint64_t h = 0x2545f4914f6cdd1dull ^ sorted.size();
  for (const uint32_t v : sorted) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

uint32_t trace_of(const Element& x) { return (x.a + x.d) % x.p; }

// All conjugates of a subgroup under the group itself: orbit closure under
// conjugation by the two standard generators (which generate SL(2,p)).
std::vector<std::vector<uint32_t>> conjugacy_orbit(
    const std::vector<uint32_t>& seed, const std::vector<std::vector<uint32_t>>& conj_perms) {
  std::vector<std::vector<uint32_t>> orbit;
  std::unordered_set<uint64_t> seen;
  orbit.push_back(seed);
  seen.insert(index_set_fingerprint(seed));
  for (size_t head = 0; head < orbit.size(); ++head) {
    const std::vector<uint32_t> current = orbit[head];
    for (const auto& perm : conj_perms) {
      std::vector<uint32_t> image(current.size());
      for (size_t i = 0; i < current.size(); ++i) image[i] = perm[current[i]];
      std::sort(image.begin(), image.end());
      if (seen.insert(index_set_fingerprint(image)).second) {
        orbit.push_back(std::move(image));
      }
    }
  }
  return orbit;
}

}  // namespace

std::string to_string(SubgroupClass c) {
  switch (c) {
    case SubgroupClass::Borel: return "borel";
    case SubgroupClass::SplitTorusNormalizer: return "split_torus_normalizer";
    case SubgroupClass::NonsplitTorusNormalizer: return "nonsplit_torus_normalizer";
    case SubgroupClass::Exceptional24: return "exceptional_24";
    case SubgroupClass::Exceptional48: return "exceptional_48";
    case SubgroupClass::Exceptional120: return "exceptional_120";
    case SubgroupClass::SmallOther: return "small_other";
    case SubgroupClass::Full: return "full";
  }
  return "unknown";
}

bool Subgroup::contains(uint32_t index) const {
  return std::binary_search(indices.begin(), indices.end(), index);
}

bool Subgroup::contains_all(const Subgroup& other) const {
  return std::includes(indices.begin(), indices.end(), other.indices.begin(),
                       other.indices.end());
}

uint64_t proper_subgroup_order_bound(uint32_t p) {
  return std::max<uint64_t>(120, (uint64_t)p * (p - 1));
}

std::optional<Subgroup> closure(std::span<const Element> gens, const GroupTable& table,
                                std::optional<uint64_t> cap) {
  if (gens.empty()) throw std::invalid_argument("closure of empty generator set");
  const uint64_t limit = cap.value_or(proper_subgroup_order_bound(table.prime()));
  bool hit_cap = false;
  auto elems = closure_indices_impl(generator_indices(gens, table), table, limit, &hit_cap);
  if (hit_cap) return std::nullopt;
  std::sort(elems.begin(), elems.end());
  return Subgroup{std::move(elems), SubgroupClass::SmallOther};
}

Subgroup closure_full(std::span<const Element> gens, const GroupTable& table) {
  if (gens.empty()) throw std::invalid_argument("closure of empty generator set");
  bool hit_cap = false;
  auto elems = closure_indices_impl(generator_indices(gens, table), table, table.size(), &hit_cap);
  std::sort(elems.begin(), elems.end());
  return Subgroup{std::move(elems), SubgroupClass::SmallOther};
}

bool generates(std::span<const Element> tuple, const GroupTable& table) {
  const auto sub = closure(tuple, table);
  return !sub.has_value() || sub->order() == table.size();
}

bool generates_pair(const Element& a, const Element& b, const GroupTable& table) {
  const Element gens[2] = {a, b};
  return generates(gens, table);
}

SubgroupClass classify(const Subgroup& sub, const GroupTable& table) {
  const uint32_t p = table.prime();
  const uint64_t order = sub.order();
  if (order == table.size()) return SubgroupClass::Full;

  std::vector<uint64_t> orders(sub.indices.size());
  uint64_t max_order = 1;
  bool has_order_p = false;
  for (size_t i = 0; i < sub.indices.size(); ++i) {
    orders[i] = element_order(table.element(sub.indices[i]));
    max_order = std::max(max_order, orders[i]);
    if (orders[i] == p) has_order_p = true;
  }

  if (order == (uint64_t)p * (p - 1) && has_order_p) return SubgroupClass::Borel;

  // Torus normalizer probe: a full split (resp. nonsplit) torus plus an
  // element of the subgroup inverting it.
  const auto inverted_torus = [&](uint64_t torus_order) {
    for (size_t i = 0; i < sub.indices.size(); ++i) {
      if (orders[i] != torus_order) continue;
      const Element g = table.element(sub.indices[i]);
      const Element gi = inv(g);
      for (const uint32_t wj : sub.indices) {
        const Element w = table.element(wj);
        if (mul(mul(w, g), inv(w)) == gi) return true;
      }
      return false;  // all torus generators are conjugate inside <g>
    }
    return false;
  };

  if (p >= 5 && order == 2ull * (p - 1) && inverted_torus(p - 1)) {
    return SubgroupClass::SplitTorusNormalizer;
  }
  if (order == 2ull * (p + 1) && p + 1 >= 4 && inverted_torus(p + 1)) {
    return SubgroupClass::NonsplitTorusNormalizer;
  }

  if ((order == 24 || order == 48 || order == 120) && !has_order_p && max_order <= 10) {
    bool abelian = true;
    for (size_t i = 0; i < sub.indices.size() && abelian; ++i) {
      for (size_t j = i + 1; j < sub.indices.size() && abelian; ++j) {
        if (table.mul_index(sub.indices[i], sub.indices[j]) !=
            table.mul_index(sub.indices[j], sub.indices[i])) {
          abelian = false;
        }
      }
    }
    if (!abelian) {
      if (order == 24) return SubgroupClass::Exceptional24;
      if (order == 48) return SubgroupClass::Exceptional48;
      return SubgroupClass::Exceptional120;
    }
  }
  return SubgroupClass::SmallOther;
}

std::vector<Subgroup> maximal_subgroups(const GroupTable& table) {
  const uint32_t p = table.prime();
  const uint32_t n = table.size();
  const PrimeModulus pm(p);

  const auto [t1, t2] = standard_pair(pm);
  std::vector<std::vector<uint32_t>> conj_perms;
  conj_perms.push_back(table.conjugation_perm(t1, inv(t1)));
  conj_perms.push_back(table.conjugation_perm(t2, inv(t2)));

  // One orbit of conjugate subgroups per discovered class.
  std::vector<std::vector<std::vector<uint32_t>>> orbits;
  std::unordered_set<uint64_t> known;

  const auto add_class = [&](std::vector<uint32_t> seed) {
    std::sort(seed.begin(), seed.end());
    if (known.contains(index_set_fingerprint(seed))) return;
    auto orbit = conjugacy_orbit(seed, conj_perms);
    for (const auto& member : orbit) known.insert(index_set_fingerprint(member));
    orbits.push_back(std::move(orbit));
  };

  // Borel: upper triangular [[t,u],[0,t^-1]].
  {
    std::vector<uint32_t> borel;
    for (uint32_t t = 1; t < p; ++t) {
      const uint32_t ti = mod_inverse(t, p);
      for (uint32_t u = 0; u < p; ++u) {
        borel.push_back(table.index_of(Element{t, u, 0, ti, p}));
      }
    }
    add_class(std::move(borel));
  }

  // Split torus normalizer: diag(t, t^-1) extended by w = [[0,1],[-1,0]].
  // Degenerate cases (p = 3) are pruned by the maximality filter below.
  {
    const Element w{0, 1, p - 1, 0, p};
    std::vector<uint32_t> ns;
    for (uint32_t t = 1; t < p; ++t) {
      const Element g{t, 0, 0, mod_inverse(t, p), p};
      ns.push_back(table.index_of(g));
      ns.push_back(table.index_of(mul(w, g)));
    }
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    add_class(std::move(ns));
  }

  // Nonsplit torus normalizer: a cyclic subgroup of order p+1 and an
  // inverting element.
  {
    uint32_t xi = 0;
    for (uint32_t i = 1; i < n; ++i) {
      if (element_order(table.element(i)) == (uint64_t)p + 1) {
        xi = i;
        break;
      }
    }
    if (xi != 0) {
      const Element x = table.element(xi);
      const Element x_inv = inv(x);
      std::vector<uint32_t> torus;
      Element cur = identity(pm);
      for (uint32_t k = 0; k <= p; ++k) {
        torus.push_back(table.index_of(cur));
        cur = mul(cur, x);
      }
      for (uint32_t i = 0; i < n; ++i) {
        const Element w = table.element(i);
        if (mul(mul(w, x), inv(w)) == x_inv) {
          std::vector<uint32_t> ns = torus;
          for (const uint32_t t : torus) ns.push_back(table.mul_index(i, t));
          std::sort(ns.begin(), ns.end());
          ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
          add_class(std::move(ns));
          break;
        }
      }
    }
  }

  // Exceptional classes: seeded closure search over pairs drawn from the
  // element-order classes that generate 2.A4, 2.S4 and 2.A5. Trace values
  // pin the orders: 3 <-> t=-1, 6 <-> t=1, 4 <-> t=0, 8 <-> t^2=2,
  // 5 <-> t^2+t=1, 10 <-> t^2-t=1.
  {
    std::vector<uint32_t> xs, ys;
    for (uint32_t i = 0; i < n; ++i) {
      const Element e = table.element(i);
      const uint64_t t = trace_of(e);
      const uint64_t t2 = t * t % p;
      if (t == 0 || t2 == 2 || (t2 + t) % p == 1 || (t2 + p - t % p) % p == 1) {
        xs.push_back(i);
      }
      if (t == p - 1 || t == 1) ys.push_back(i);
    }
    if (!xs.empty() && !ys.empty()) {
      SplitMix64 rng(0x51a2b3c4d5e6f701ull);
      const uint64_t trials = 30000;
      for (uint64_t trial = 0; trial < trials; ++trial) {
        const Element x = table.element(xs[rng.next_below(xs.size())]);
        const Element y = table.element(ys[rng.next_below(ys.size())]);
        const Element gens[2] = {x, y};
        const auto sub = closure(gens, table, 121);
        if (!sub || sub->order() == n) continue;
        const uint64_t order = sub->order();
        if (order != 24 && order != 48 && order != 120) continue;
        if (known.contains(index_set_fingerprint(sub->indices))) continue;
        const SubgroupClass cls = classify(*sub, table);
        if (cls == SubgroupClass::Exceptional24 || cls == SubgroupClass::Exceptional48 ||
            cls == SubgroupClass::Exceptional120) {
          add_class(sub->indices);
        }
      }
    }
  }

  // Maximality filter: a class survives iff its representative is not
  // strictly contained in any candidate from another orbit.
  std::vector<bool> keep(orbits.size(), true);
  for (size_t a = 0; a < orbits.size(); ++a) {
    const auto& rep = orbits[a][0];
    for (size_t b = 0; b < orbits.size() && keep[a]; ++b) {
      if (a == b || orbits[b][0].size() <= rep.size()) continue;
      if (orbits[b][0].size() % rep.size() != 0) continue;
      for (const auto& container : orbits[b]) {
        if (std::includes(container.begin(), container.end(), rep.begin(), rep.end())) {
          keep[a] = false;
          break;
        }
      }
    }
  }

  std::vector<Subgroup> result;
  for (size_t a = 0; a < orbits.size(); ++a) {
    if (!keep[a]) continue;
    const SubgroupClass cls = classify(Subgroup{orbits[a][0], SubgroupClass::SmallOther}, table);
    for (auto& member : orbits[a]) {
      result.push_back(Subgroup{std::move(member), cls});
    }
  }
  std::sort(result.begin(), result.end(), [](const Subgroup& x, const Subgroup& y) {
    if (x.order() != y.order()) return x.order() > y.order();
    return x.indices < y.indices;
  });
  return result;
}

bool metabelian_check(const Subgroup& sub, const GroupTable& table, uint64_t samples,
                      uint64_t seed) {
  const auto& idx = sub.indices;
  const size_t m = idx.size();
  const auto commutator = [&](uint32_t x, uint32_t y) {
    const uint32_t xy = table.mul_index(x, y);
    const uint32_t xi = table.inverse_index(x);
    const uint32_t yi = table.inverse_index(y);
    return table.mul_index(table.mul_index(xy, xi), yi);
  };
  if (m <= 30) {
    std::vector<uint32_t> comm(m * m);
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < m; ++j) comm[i * m + j] = commutator(idx[i], idx[j]);
    }
    for (size_t i = 0; i < m * m; ++i) {
      for (size_t j = 0; j < m * m; ++j) {
        if (commutator(comm[i], comm[j]) != 0) return false;
      }
    }
    return true;
  }
  SplitMix64 rng(seed);
  for (uint64_t s = 0; s < samples; ++s) {
    const uint32_t u = commutator(idx[rng.next_below(m)], idx[rng.next_below(m)]);
    const uint32_t v = commutator(idx[rng.next_below(m)], idx[rng.next_below(m)]);
    if (commutator(u, v) != 0) return false;
  }
  return true;
}

uint64_t normalizer_order(const Subgroup& sub, const GroupTable& table) {
  const uint32_t n = table.size();
  std::vector<char> member(n, 0);
  for (const uint32_t i : sub.indices) member[i] = 1;
  uint64_t count = 0;
  for (uint32_t g = 0; g < n; ++g) {
    const uint32_t gi = table.inverse_index(g);
    bool normalizes = true;
    for (const uint32_t h : sub.indices) {
      if (!member[table.mul_index(table.mul_index(g, h), gi)]) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) ++count;
  }
  return count;
}

}  // namespace sl2lab
