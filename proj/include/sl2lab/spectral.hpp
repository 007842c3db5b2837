#pragma once

#include <optional>
#include <span>

#include "sl2lab/eigensolve.hpp"
#include "sl2lab/orbits.hpp"
#include "sl2lab/stencil.hpp"

namespace sl2lab {

/// Spectrum extremes of a Markov stencil (dense below the size threshold,
/// else deflated thick-restart Lanczos).
SpectrumReport second_eigenvalue(const MarkovStencil& stencil, double tol,
                                 SolveMethod method = SolveMethod::Auto,
                                 uint64_t seed = kDefaultEigSeed);

/// Gap of the pair measure mu_(a,b). The pair is replaced by its orbit
/// representative before the stencil is built: isospectral pairs then
/// produce bit-identical floating-point output, which makes orbit-reduced
/// and exhaustive enumerations agree exactly and reports reproducible.
SpectrumReport spectral_gap_pair(const Element& a, const Element& b, const GroupTable& table,
                                 double tol, SolveMethod method = SolveMethod::Auto);
SpectrumReport spectral_gap_pair(const PairSymmetry& sym, const Element& a, const Element& b,
                                 double tol, SolveMethod method = SolveMethod::Auto);

/// Length of the shortest nonempty reduced word in two letters evaluating to
/// the identity at (a,b): breadth-first over group elements storing
/// first-visit depth and the last letters of shortest reduced words; every
/// collision yields the candidate depth(x) + depth(y) + 1. Returns nullopt
/// when the answer exceeds `cap`.
std::optional<uint32_t> relation_length(const Element& a, const Element& b,
                                        const GroupTable& table, uint32_t cap);

/// relation_length with the pigeonhole ceiling 2*ceil(log3 |G|) + 2 as cap;
/// always resolves.
uint32_t girth_pair(const Element& a, const Element& b, const GroupTable& table);

/// Ceiling above: some relation of at most this length always exists.
uint32_t girth_ceiling(uint64_t group_order);

/// Vertex-expansion bounds from the adjacency eigenvalue lambda = degree *
/// lambda2: lower = (degree - lambda) / (2 degree) and upper =
/// sqrt(2 degree (degree - lambda)) / degree; c(G) lies in
/// [lower, degree * upper].
std::pair<double, double> cheeger_bounds(const SpectrumReport& report, int64_t degree);

struct ExpansionReport {
  double c_exact = 0.0;
  uint64_t boundary_size = 0;  // |dX| at the witness
  uint64_t witness_size = 0;   // |X| at the witness
  std::vector<uint32_t> argmin_subset;
  double cheeger_lower = 0.0;
  double cheeger_upper = 0.0;
  double lambda2 = 0.0;
  int64_t degree = 0;
};

/// Exact expansion coefficient by exhaustive subset enumeration; group order
/// must be at most 30.
ExpansionReport expansion_exact(const GroupTable& table, const GeneratorSet& gens);

struct CutChainRecord {
  uint64_t subset_size = 0;       // |A|
  uint64_t coefficient_a = 0;     // a = |A^c|
  uint64_t coefficient_b = 0;     // b = |A|
  uint64_t f_norm_sq = 0;         // ||f||^2 with f = a 1_A - b 1_{A^c}
  uint64_t f_norm_sq_formula = 0; // (a+b) a |A|
  struct Displacement {
    uint64_t shift_norm_sq = 0;    // ||s f - f||^2
    uint64_t formula = 0;          // (a+b)^2 |sA delta A|
    uint64_t sym_diff = 0;         // |sA delta A|
  };
  std::vector<Displacement> displacements;  // one per generator atom
  uint64_t boundary_size = 0;               // |dA|
  uint64_t max_sym_diff = 0;
  bool norm_identity_holds = false;
  bool displacement_identities_hold = false;
  bool boundary_inequality_holds = false;
};

/// Verifies the cut identities exactly in integer arithmetic.
CutChainRecord cut_chain_check(std::span<const uint32_t> subset, const GeneratorSet& gens,
                               const GroupTable& table);

}  // namespace sl2lab
