#include "sl2lab/uniform_gap.hpp"

#include <algorithm>
#include <cmath>

#include "sl2lab/parallel.hpp"
#include "sl2lab/rng.hpp"
#include "sl2lab/subgroups.hpp"

namespace sl2lab {

UniformGapReport uniform_gap(const GroupTable& table, double tol, unsigned workers) {
  const PairSymmetry sym(table);
  const auto orbits = enumerate_generating_orbits(sym);

  UniformGapReport report;
  report.p = table.prime();
  report.tol = tol;
  report.n_orbits = orbits.size();
  if (table.prime() == 3) report.regime = "solvable-quotient";

  std::vector<SpectrumReport> spectra(orbits.size());
  parallel_for(orbits.size(), workers, [&](uint64_t i) {
    const auto [a, b] = sym.representative(orbits[i].key);
    spectra[i] = spectral_gap_pair(sym, a, b, tol);
  });

  double min_gap = 2.0;
  size_t argmin = 0;
  uint64_t pairs = 0, unconverged = 0;
  for (size_t i = 0; i < orbits.size(); ++i) {
    pairs += orbits[i].size;
    if (!spectra[i].converged) ++unconverged;
    if (spectra[i].gap < min_gap ||
        (spectra[i].gap == min_gap && orbits[i].key < orbits[argmin].key)) {
      min_gap = spectra[i].gap;
      argmin = i;
    }
  }
  report.g_p = min_gap;
  report.g_p_two_sided = spectra.empty() ? 0.0 : spectra[argmin].two_sided_gap;
  report.argmin = orbits.empty() ? PairOrbitKey{} : orbits[argmin].key;
  report.n_generating_pairs = pairs;
  report.unconverged_orbits = unconverged;
  report.mode = unconverged == 0 ? "exhaustive" : "sampled";
  return report;
}

namespace {

PrimeScanRecord scan_one_sampled(const GroupTable& table, double delta, const ScanPolicy& policy,
                                 uint64_t seed) {
  PrimeScanRecord rec;
  rec.p = table.prime();
  rec.delta = delta;
  rec.seed = seed;
  rec.certified = false;
  if (rec.p == 3) rec.regime = "solvable-quotient";

  const uint32_t n = table.size();
  const PairSymmetry sym(table);
  double min_gap = 2.0;
  std::vector<double> gaps(policy.samples);
  parallel_for(policy.samples, policy.workers, [&](uint64_t s) {
    SplitMix64 rng(derive_seed(seed, table.prime(), s));
    Element a, b;
    do {
      a = table.element((uint32_t)rng.next_below(n));
      b = table.element((uint32_t)rng.next_below(n));
    } while (!generates_pair(a, b, table));
    const auto spectrum = spectral_gap_pair(sym, a, b, policy.tol);
    gaps[s] = spectrum.gap;
  });
  for (const double g : gaps) min_gap = std::min(min_gap, g);
  rec.min_gap_found = min_gap;
  rec.pairs_examined = policy.samples;
  rec.bad_for_delta = min_gap < delta;
  return rec;
}

}  // namespace

ScanResult scan_primes(uint32_t p_min, uint32_t p_max, double delta, const ScanPolicy& policy,
                       uint64_t seed) {
  ScanResult result;
  std::vector<double> grid = {0.005, 0.01, 0.02, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3};
  grid.push_back(delta);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  result.summary.delta_grid = grid;
  result.summary.bad_counts.assign(grid.size(), 0);

  for (uint32_t p = std::max(3u, p_min); p <= p_max; ++p) {
    if (!is_prime(p)) continue;
    const auto table = GroupTable::build(PrimeModulus(p), policy.table_size_cap);
    PrimeScanRecord rec;
    if (p <= policy.exhaustive_cap_p) {
      const auto gap_report = uniform_gap(*table, policy.tol, policy.workers);
      rec.p = p;
      rec.delta = delta;
      rec.min_gap_found = gap_report.g_p;
      rec.certified = gap_report.mode == "exhaustive";
      rec.pairs_examined = gap_report.n_generating_pairs;
      rec.seed = seed;
      rec.bad_for_delta = gap_report.g_p < delta;
      rec.regime = gap_report.regime;
    } else {
      rec = scan_one_sampled(*table, delta, policy, seed);
    }
    ++result.summary.primes_scanned;
    for (size_t i = 0; i < grid.size(); ++i) {
      if (rec.min_gap_found < grid[i]) ++result.summary.bad_counts[i];
    }
    result.records.push_back(std::move(rec));
  }
  return result;
}

}  // namespace sl2lab
