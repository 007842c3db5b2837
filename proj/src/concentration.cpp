#include "sl2lab/concentration.hpp"

#include <cmath>

#include "sl2lab/parallel.hpp"

namespace sl2lab {

double GroupDistribution::mass(uint32_t index) const {
  if (exact) return mass_exact(index).convert_to<double>();
  return probs[index];
}

BigRational GroupDistribution::mass_exact(uint32_t index) const {
  if (!exact) throw std::logic_error("distribution is not in exact mode");
  return BigRational(counts[index], denominator_power());
}

BigInt GroupDistribution::denominator_power() const {
  BigInt d(1);
  for (uint32_t i = 0; i < steps; ++i) d *= den;
  return d;
}

double GroupDistribution::total_mass() const {
  if (exact) {
    BigInt total(0);
    for (const auto& c : counts) total += c;
    return BigRational(total, denominator_power()).convert_to<double>();
  }
  double t = 0.0;
  for (const double v : probs) t += v;
  return t;
}

double GroupDistribution::max_norm() const {
  if (exact) {
    BigInt m(0);
    for (const auto& c : counts) m = std::max(m, c);
    return BigRational(m, denominator_power()).convert_to<double>();
  }
  double m = 0.0;
  for (const double v : probs) m = std::max(m, v);
  return m;
}

double GroupDistribution::l2_norm() const {
  if (exact) {
    BigInt s(0);
    for (const auto& c : counts) s += c * c;
    const BigInt d = denominator_power();
    return std::sqrt(BigRational(s, d * d).convert_to<double>());
  }
  double s = 0.0;
  for (const double v : probs) s += v * v;
  return std::sqrt(s);
}

GroupDistribution delta_identity(const GroupTable& table, bool exact) {
  GroupDistribution d;
  d.size = table.size();
  d.steps = 0;
  d.exact = exact;
  d.den = 1;
  if (exact) {
    d.counts.assign(d.size, BigInt(0));
    d.counts[0] = 1;
  } else {
    d.probs.assign(d.size, 0.0);
    d.probs[0] = 1.0;
  }
  return d;
}

GroupDistribution step(const GroupDistribution& dist, const MarkovStencil& stencil) {
  if (dist.size != stencil.size()) throw std::invalid_argument("dimension mismatch in step");
  GroupDistribution out;
  out.size = dist.size;
  out.steps = dist.steps + 1;
  out.exact = dist.exact;
  if (dist.exact) {
    const int64_t den = stencil.degree();
    if (dist.steps > 0 && dist.den != den) {
      throw std::invalid_argument("stencil denominator changed mid-walk");
    }
    out.den = den;
    out.counts.assign(dist.size, BigInt(0));
    for (const auto& term : stencil.terms()) {
      // weight = num/den_term; scale to the common per-step denominator
      const int64_t scaled = term.weight_num * (den / term.weight_den);
      for (uint32_t j = 0; j < dist.size; ++j) {
        if (dist.counts[j] != 0) out.counts[term.perm[j]] += dist.counts[j] * scaled;
      }
    }
  } else {
    out.den = dist.den;
    out.probs.assign(dist.size, 0.0);
    for (const auto& term : stencil.terms()) {
      const double w = term.weight;
      for (uint32_t j = 0; j < dist.size; ++j) {
        out.probs[term.perm[j]] += w * dist.probs[j];
      }
    }
  }
  return out;
}

GroupDistribution walk_distribution(const Element& a, const Element& b, uint32_t l,
                                    const GroupTable& table, bool exact) {
  const MarkovStencil stencil(table, GeneratorSet::pair_measure(a, b));
  GroupDistribution dist = delta_identity(table, exact);
  for (uint32_t i = 0; i < l; ++i) dist = step(dist, stencil);
  return dist;
}

FlatteningRecord flattening_identity_check(const Element& a, const Element& b, uint32_t l,
                                           const GroupTable& table, bool exact) {
  FlatteningRecord rec;
  rec.l = l;
  rec.exact = exact;
  if (exact) {
    const auto half = walk_distribution(a, b, l, table, true);
    const auto full = walk_distribution(a, b, 2 * l, table, true);
    BigInt sum_sq(0);
    for (const auto& c : half.counts) sum_sq += c * c;
    // mu^(2l)(e) = counts_2l[0] / den^(2l); ||mu^(l)||_2^2 = sum c^2 / den^(2l)
    rec.equal = full.counts[0] == sum_sq;
    const BigInt d2 = full.denominator_power();
    rec.lhs = BigRational(full.counts[0], d2).convert_to<double>();
    rec.rhs = BigRational(sum_sq, d2).convert_to<double>();
    rec.abs_diff = std::abs(rec.lhs - rec.rhs);
  } else {
    const auto half = walk_distribution(a, b, l, table, false);
    const auto full = walk_distribution(a, b, 2 * l, table, false);
    double sum_sq = 0.0;
    for (const double v : half.probs) sum_sq += v * v;
    rec.lhs = full.probs[0];
    rec.rhs = sum_sq;
    rec.abs_diff = std::abs(rec.lhs - rec.rhs);
    rec.equal = rec.abs_diff <= 1e-12;
  }
  return rec;
}

double subgroup_mass(const GroupDistribution& dist, const Subgroup& sub) {
  if (dist.exact) {
    BigInt total(0);
    for (const uint32_t i : sub.indices) total += dist.counts[i];
    return BigRational(total, dist.denominator_power()).convert_to<double>();
  }
  double total = 0.0;
  for (const uint32_t i : sub.indices) total += dist.probs[i];
  return total;
}

uint32_t wg_walk_length(double tau, uint32_t p) {
  const double l = tau * std::log((double)p) / std::log(3.0);
  const uint32_t half = (uint32_t)std::ceil(l / 2.0);
  return std::max(2u, 2 * half);
}

ConcentrationReport check_wg(const Element& a, const Element& b, double tau, double gamma,
                             const GroupTable& table, unsigned workers) {
  ConcentrationReport rep;
  rep.p = table.prime();
  rep.pair_a = a;
  rep.pair_b = b;
  rep.tau = tau;
  rep.gamma = gamma;
  rep.l_used = wg_walk_length(tau, table.prime());
  rep.threshold = std::pow((double)table.prime(), -gamma);

  const auto dist = walk_distribution(a, b, rep.l_used, table, false);
  rep.trivial_mass = dist.probs[0];

  const auto maximals = maximal_subgroups(table);
  std::vector<double> masses(maximals.size());
  parallel_for(maximals.size(), workers, [&](uint64_t i) {
    masses[i] = subgroup_mass(dist, maximals[i]);
  });

  rep.sup_mass = rep.trivial_mass;
  for (size_t i = 0; i < maximals.size(); ++i) {
    const std::string cls = to_string(maximals[i].cls);
    auto [it, inserted] = rep.class_max_mass.try_emplace(cls, masses[i]);
    if (!inserted) it->second = std::max(it->second, masses[i]);
    rep.sup_mass = std::max(rep.sup_mass, masses[i]);
  }
  rep.pass = rep.sup_mass <= rep.threshold;
  return rep;
}

}  // namespace sl2lab
