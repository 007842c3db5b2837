#pragma once

#include <map>

#include "sl2lab/free_walks.hpp"  // BigInt / BigRational
#include "sl2lab/stencil.hpp"
#include "sl2lab/subgroups.hpp"

namespace sl2lab {

/// Dense distribution over group elements, evolved by convolution with the
/// pair measure. Floating mode always available; exact mode stores integer
/// counts over denominator^steps and is intended for l <= 20, p <= 13.
struct GroupDistribution {
  uint32_t size = 0;
  uint32_t steps = 0;
  bool exact = false;
  std::vector<double> probs;    // floating mode
  std::vector<BigInt> counts;   // exact mode; mass(i) = counts[i] / den^steps
  int64_t den = 1;              // per-step denominator (common weight denominator)

  double mass(uint32_t index) const;
  BigRational mass_exact(uint32_t index) const;
  BigInt denominator_power() const;  // den^steps
  double total_mass() const;
  double max_norm() const;
  double l2_norm() const;
};

GroupDistribution delta_identity(const GroupTable& table, bool exact = false);

/// One convolution step: (mu * nu)(g) = sum_s mu(s) nu(s^-1 g). Mass is
/// preserved exactly in exact mode and to rounding in floating mode.
GroupDistribution step(const GroupDistribution& dist, const MarkovStencil& stencil);

/// mu_(a,b)^(l) started from delta_e.
GroupDistribution walk_distribution(const Element& a, const Element& b, uint32_t l,
                                    const GroupTable& table, bool exact = false);

struct FlatteningRecord {
  uint32_t l = 0;
  bool exact = false;
  double lhs = 0.0;  // mu^(2l)(e)
  double rhs = 0.0;  // ||mu^(l)||_2^2
  bool equal = false;
  double abs_diff = 0.0;
};

/// Checks mu^(2l)(e) = ||mu^(l)||_2^2; exact integer comparison in exact
/// mode, 1e-12 tolerance in floating mode.
FlatteningRecord flattening_identity_check(const Element& a, const Element& b, uint32_t l,
                                           const GroupTable& table, bool exact = true);

double subgroup_mass(const GroupDistribution& dist, const Subgroup& sub);

struct ConcentrationReport {
  uint32_t p = 0;
  Element pair_a, pair_b;
  double tau = 0.0;
  double gamma = 0.0;
  uint32_t l_used = 0;  // 2 * ceil(tau log3 p / 2)
  std::map<std::string, double> class_max_mass;  // per Dickson class, max over conjugates
  double trivial_mass = 0.0;                     // mass of {e}
  double sup_mass = 0.0;   // over all maximal subgroups and the trivial one
  double threshold = 0.0;  // p^-gamma
  bool pass = false;
};

/// The (wg) hypothesis check: sup over proper subgroups of the l-step walk
/// mass, realized over all conjugates of all maximal subgroups plus the
/// trivial subgroup (mass is monotone under inclusion).
ConcentrationReport check_wg(const Element& a, const Element& b, double tau, double gamma,
                             const GroupTable& table, unsigned workers = 1);

/// l_used rounding: tau log3 p rounded up to the nearest even integer, so
/// the 2l/l pairing of the flattening identity stays intact.
uint32_t wg_walk_length(double tau, uint32_t p);

}  // namespace sl2lab
