#pragma once

#include <string>
#include <vector>

#include "sl2lab/spectral.hpp"

namespace sl2lab {

struct UniformGapReport {
  uint32_t p = 0;
  double g_p = 0.0;            // min one-sided gap over generating pairs
  double g_p_two_sided = 0.0;  // same minimizer's two-sided gap
  PairOrbitKey argmin;
  uint64_t n_generating_pairs = 0;
  uint64_t n_orbits = 0;
  std::string mode;  // "exhaustive" | "sampled"
  double tol = 0.0;
  uint64_t unconverged_orbits = 0;
  std::string regime;  // "solvable-quotient" at p = 3, else empty
};

/// Certified g(p): exhaustive over orbit representatives of generating
/// pairs. Mode degrades to "sampled" (certification aborted) if any orbit's
/// eigensolve fails to converge.
UniformGapReport uniform_gap(const GroupTable& table, double tol, unsigned workers = 1);

struct ScanPolicy {
  uint32_t exhaustive_cap_p = 13;  // primes up to this are certified
  uint64_t samples = 10000;        // generating pairs per sampled prime
  double tol = 1e-6;
  unsigned workers = 1;
  uint64_t table_size_cap = GroupTable::kDefaultSizeCap;
};

struct PrimeScanRecord {
  uint32_t p = 0;
  double delta = 0.0;
  double min_gap_found = 0.0;
  bool certified = false;
  uint64_t pairs_examined = 0;  // generating pairs covered (orbit-weighted when certified)
  uint64_t seed = 0;
  bool bad_for_delta = false;
  std::string regime;
};

struct ScanSummary {
  std::vector<double> delta_grid;
  std::vector<uint64_t> bad_counts;  // primes with min gap < grid delta
  uint64_t primes_scanned = 0;
};

struct ScanResult {
  std::vector<PrimeScanRecord> records;
  ScanSummary summary;
};

/// Per-prime census over [p_min, p_max]: exhaustive certification within the
/// policy cap, seeded sampling beyond it; composites are skipped. The
/// summary tabulates delta-bad counts over a fixed grid joined with the
/// requested delta.
ScanResult scan_primes(uint32_t p_min, uint32_t p_max, double delta, const ScanPolicy& policy,
                       uint64_t seed);

}  // namespace sl2lab
