#include "sl2lab/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace sl2lab {

SpectrumReport second_eigenvalue(const MarkovStencil& stencil, double tol, SolveMethod method,
                                 uint64_t seed) {
  LinearOperator op;
  op.n = stencil.size();
  op.apply = [&stencil](const double* in, double* out) { stencil.apply(in, out); };
  return spectrum_extremes(op, tol, method, seed);
}

SpectrumReport spectral_gap_pair(const PairSymmetry& sym, const Element& a, const Element& b,
                                 double tol, SolveMethod method) {
  const auto [ca, cb] = sym.representative(sym.canonicalize(a, b));
  const MarkovStencil stencil(sym.table(), GeneratorSet::pair_measure(ca, cb));
  return second_eigenvalue(stencil, tol, method);
}

SpectrumReport spectral_gap_pair(const Element& a, const Element& b, const GroupTable& table,
                                 double tol, SolveMethod method) {
  return spectral_gap_pair(PairSymmetry(table), a, b, tol, method);
}

uint32_t girth_ceiling(uint64_t group_order) {
  uint32_t l = 0;
  uint64_t power = 1;
  while (power < group_order) {
    power *= 3;
    ++l;
  }
  return 2 * l + 2;
}

std::optional<uint32_t> relation_length(const Element& a, const Element& b,
                                        const GroupTable& table, uint32_t cap) {
  // Formal letters 0:a 1:a^-1 2:b 3:b^-1; inverse letter = letter ^ 1.
  const uint32_t n = table.size();
  uint32_t letter_image[4];
  letter_image[0] = table.index_of(a);
  letter_image[1] = table.inverse_index(letter_image[0]);
  letter_image[2] = table.index_of(b);
  letter_image[3] = table.inverse_index(letter_image[2]);

  std::vector<int32_t> depth(n, -1);
  std::vector<uint8_t> last_letters(n, 0);
  std::vector<uint32_t> frontier{0}, next_frontier;
  depth[0] = 0;

  uint32_t best = cap + 1;
  for (uint32_t level = 0; !frontier.empty(); ++level) {
    if (2 * level + 1 > best || 2 * level + 1 > cap) break;
    next_frontier.clear();
    for (const uint32_t x : frontier) {
      const uint8_t mask = last_letters[x];
      for (uint8_t s = 0; s < 4; ++s) {
        // A reduced extension needs some shortest word to x not ending in
        // the letter inverse to s; the root extends by everything.
        if (level > 0 && (mask & ~(uint8_t)(1u << (s ^ 1))) == 0) continue;
        const uint32_t y = table.mul_index(letter_image[s], x);
        if (depth[y] < 0) {
          depth[y] = (int32_t)level + 1;
          last_letters[y] = (uint8_t)(1u << s);
          next_frontier.push_back(y);
        } else {
          best = std::min<uint32_t>(best, level + (uint32_t)depth[y] + 1);
          if (depth[y] == (int32_t)level + 1) last_letters[y] |= (uint8_t)(1u << s);
        }
      }
    }
    frontier.swap(next_frontier);
  }
  if (best > cap) return std::nullopt;
  return best;
}

uint32_t girth_pair(const Element& a, const Element& b, const GroupTable& table) {
  const uint32_t cap = girth_ceiling(table.size());
  const auto r = relation_length(a, b, table, cap);
  if (!r) throw std::logic_error("relation search exceeded the pigeonhole ceiling");
  return *r;
}

std::pair<double, double> cheeger_bounds(const SpectrumReport& report, int64_t degree) {
  const double d = (double)degree;
  const double lambda = d * report.lambda2;
  const double lower = (d - lambda) / (2.0 * d);
  const double upper = std::sqrt(std::max(0.0, 2.0 * d * (d - lambda))) / d;
  return {lower, upper};
}

ExpansionReport expansion_exact(const GroupTable& table, const GeneratorSet& gens) {
  const uint32_t n = table.size();
  if (n > 30) {
    throw std::invalid_argument("expansion_exact requires group order <= 30");
  }
  // Neighbor masks: y adjacent to x iff y = s x for a generator s, y != x.
  std::vector<uint32_t> neighbor_mask(n, 0);
  for (const auto& atom : gens.atoms()) {
    const auto perm = table.left_multiplication_perm(atom.element);
    for (uint32_t x = 0; x < n; ++x) {
      if (perm[x] != x) neighbor_mask[x] |= (1u << perm[x]);
    }
  }

  uint64_t best_boundary = 1, best_size = 0;  // tracks min boundary/size as a fraction
  uint32_t best_mask = 0;
  const uint32_t half = n / 2;  // |X| < n/2 with n even means |X| <= n/2 - 1
  const uint32_t max_size = (n % 2 == 0) ? half - 1 : half;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    const uint32_t size = (uint32_t)__builtin_popcount(mask);
    if (size > max_size) continue;
    uint32_t reach = 0;
    uint32_t bits = mask;
    while (bits) {
      const uint32_t x = (uint32_t)__builtin_ctz(bits);
      bits &= bits - 1;
      reach |= neighbor_mask[x];
    }
    const uint32_t boundary = (uint32_t)__builtin_popcount(reach & ~mask);
    // compare boundary/size < best_boundary/best_size exactly
    if (best_size == 0 || (uint64_t)boundary * best_size < best_boundary * (uint64_t)size) {
      best_boundary = boundary;
      best_size = size;
      best_mask = mask;
      if (boundary == 0) break;  // cannot do better
    }
  }

  ExpansionReport report;
  report.boundary_size = best_boundary;
  report.witness_size = best_size;
  report.c_exact = (double)best_boundary / (double)best_size;
  for (uint32_t x = 0; x < n; ++x) {
    if (best_mask & (1u << x)) report.argmin_subset.push_back(x);
  }
  const MarkovStencil stencil(table, gens);
  const auto spectrum = second_eigenvalue(stencil, 1e-10, SolveMethod::Dense);
  report.lambda2 = spectrum.lambda2;
  report.degree = stencil.degree();
  std::tie(report.cheeger_lower, report.cheeger_upper) = cheeger_bounds(spectrum, report.degree);
  return report;
}

CutChainRecord cut_chain_check(std::span<const uint32_t> subset, const GeneratorSet& gens,
                               const GroupTable& table) {
  const uint32_t n = table.size();
  if (subset.empty() || subset.size() > n / 2) {
    throw std::invalid_argument("cut subset must satisfy 0 < |A| <= |G|/2");
  }
  std::vector<char> in_a(n, 0);
  for (const uint32_t x : subset) {
    if (x >= n) throw std::invalid_argument("subset index out of range");
    in_a[x] = 1;
  }

  CutChainRecord rec;
  rec.subset_size = subset.size();
  const uint64_t size_a = subset.size();
  const uint64_t size_ac = n - size_a;
  // a|A| = b|A^c| with a = |A^c|, b = |A|; integers keep every identity exact.
  const uint64_t a = size_ac, b = size_a;
  rec.coefficient_a = a;
  rec.coefficient_b = b;
  rec.f_norm_sq = a * a * size_a + b * b * size_ac;
  rec.f_norm_sq_formula = (a + b) * a * size_a;
  rec.norm_identity_holds = rec.f_norm_sq == rec.f_norm_sq_formula;

  std::vector<char> boundary(n, 0);
  rec.displacement_identities_hold = true;
  for (const auto& atom : gens.atoms()) {
    const auto perm = table.left_multiplication_perm(atom.element);
    uint64_t sym_diff = 0;
    uint64_t shift_norm_sq = 0;
    for (uint32_t x = 0; x < n; ++x) {
      // (s.f)(y) = f(s^-1 y): evaluate the difference at y = perm[x], where
      // s^-1 y = x. y is in sA iff x is in A.
      const uint32_t y = perm[x];
      if (in_a[x] != in_a[y]) {
        ++sym_diff;
        const uint64_t jump = a + b;
        shift_norm_sq += jump * jump;
        if (in_a[x] && !in_a[y]) boundary[y] = 1;  // y in sA \ A is outside-adjacent
      }
    }
    CutChainRecord::Displacement d;
    d.sym_diff = sym_diff;
    d.shift_norm_sq = shift_norm_sq;
    d.formula = (a + b) * (a + b) * sym_diff;
    rec.displacement_identities_hold =
        rec.displacement_identities_hold && d.shift_norm_sq == d.formula;
    rec.max_sym_diff = std::max(rec.max_sym_diff, sym_diff);
    rec.displacements.push_back(d);
  }
  uint64_t boundary_size = 0;
  for (uint32_t y = 0; y < n; ++y) boundary_size += (uint64_t)boundary[y];
  rec.boundary_size = boundary_size;
  rec.boundary_inequality_holds = 2 * boundary_size >= rec.max_sym_diff;
  return rec;
}

}  // namespace sl2lab
