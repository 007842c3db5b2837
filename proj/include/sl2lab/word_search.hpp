#pragma once

#include <optional>
#include <string>

#include "sl2lab/spectral.hpp"

namespace sl2lab {

/// A word over the support of a symmetric generating multiset, stored as
/// letter indices into the canonical (element-index sorted) support order,
/// together with its evaluation.
struct GeneratorWord {
  std::vector<uint8_t> letters;
  Element evaluation;

  size_t length() const { return letters.size(); }
};

struct SearchReport {
  uint64_t generator_fingerprint = 0;
  uint32_t n_max = 0;
  uint32_t n_reached = 0;  // max word length actually used by the result
  bool found = false;
  GeneratorWord w1, w2;
  std::optional<uint32_t> shortest_relation_length;  // of the found pair
  uint64_t closure_size = 0;                         // generation certificate
  // max_girth_pair extras
  uint32_t girth_threshold = 0;   // the L parameter
  uint32_t girth_ceiling_hint = 0;
  bool sufficient = false;        // girth > L
};

/// Length of the shortest nonempty reduced two-letter relation of (a,b), or
/// nullopt when it exceeds `cap` (same breadth-first engine as girth_pair).
std::optional<uint32_t> shortest_relation(const Element& a, const Element& b,
                                          const GroupTable& table, uint32_t cap);

/// Searches words of increasing length over S for the first pair (by max
/// length, then lexicographic in canonical letter order) whose evaluations
/// generate SL(2,p). Words with repeated evaluations at equal length are
/// pruned; a none-result (found = false) is definitive for length <= N_max.
SearchReport find_generating_pair(const GeneratorSet& S, uint32_t n_max,
                                  const GroupTable& table);

/// Among word pairs up to N_max, returns one maximizing the shortest
/// relation length, flagged sufficient when the girth exceeds L. The
/// pigeonhole ceiling 2 ceil(log3 |G|) + 2 is attached since desk-scale
/// groups may cap the achievable girth below L.
SearchReport max_girth_pair(const GeneratorSet& S, uint32_t n_max, uint32_t L,
                            const GroupTable& table);

}  // namespace sl2lab
