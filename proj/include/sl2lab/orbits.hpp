#pragma once

#include <vector>

#include "sl2lab/group_table.hpp"

namespace sl2lab {

/// Canonical key of a pair (a,b) under the symmetry group generated by
/// simultaneous PGL(2,p)-conjugation, the swap (a,b)->(b,a) and the
/// inversions (a,b)->(a^-1,b), (a,b)->(a,b^-1). All of these fix the support
/// of the pair measure up to relabeling, so the averaging operator's
/// spectrum is constant on each orbit.
struct PairOrbitKey {
  uint64_t code = 0;  // index(a) * |G| + index(b), minimized over the orbit

  bool operator==(const PairOrbitKey&) const = default;
  auto operator<=>(const PairOrbitKey&) const = default;
};

struct PairOrbit {
  PairOrbitKey key;     // representative = decoded key
  uint64_t size = 0;    // number of ordered pairs in the orbit
};

/// Precomputed index permutations for the orbit moves: inversion plus
/// conjugation by the two standard unipotents and one non-square-determinant
/// diagonal (together they generate the PGL action).
class PairSymmetry {
public:
  explicit PairSymmetry(const GroupTable& table);

  const GroupTable& table() const { return *table_; }
  PairOrbitKey canonicalize(const Element& a, const Element& b) const;
  PairOrbitKey canonicalize_indices(uint32_t ia, uint32_t ib) const;
  std::pair<Element, Element> representative(PairOrbitKey key) const;

  /// Partitions all ordered pairs into orbits (exhaustive sweep); intended
  /// for group orders within the exhaustive cap.
  std::vector<PairOrbit> all_orbits() const;

private:
  const GroupTable* table_;
  std::vector<std::vector<uint32_t>> conj_perms_;
};

PairOrbitKey canonicalize_pair(const Element& a, const Element& b, const GroupTable& table);

/// Orbit representatives of generating pairs only, sorted by key; orbit
/// sizes sum to the number of ordered generating pairs.
std::vector<PairOrbit> enumerate_generating_orbits(const PairSymmetry& sym);

}  // namespace sl2lab
