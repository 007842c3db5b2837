#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sl2lab/group_table.hpp"

namespace sl2lab {

enum class SubgroupClass {
  Borel,
  SplitTorusNormalizer,
  NonsplitTorusNormalizer,
  Exceptional24,
  Exceptional48,
  Exceptional120,
  SmallOther,
  Full,
};

std::string to_string(SubgroupClass c);

/// A verified subgroup as a sorted set of element indices.
struct Subgroup {
  std::vector<uint32_t> indices;  // sorted, contains index 0 (identity)
  SubgroupClass cls = SubgroupClass::SmallOther;

  uint64_t order() const { return indices.size(); }
  bool contains(uint32_t index) const;
  bool contains_all(const Subgroup& other) const;
};

/// Any proper subgroup of SL(2,p) has order at most max(120, p(p-1)); a
/// closure passing this bound is the whole group.
uint64_t proper_subgroup_order_bound(uint32_t p);

/// Breadth-first closure of gens under multiplication by gens and their
/// inverses. Returns nullopt (the "full" indicator) as soon as the closure
/// exceeds `cap` elements; the default cap is the proper-subgroup bound, so
/// nullopt certifies the closure is all of SL(2,p).
std::optional<Subgroup> closure(std::span<const Element> gens, const GroupTable& table,
                                std::optional<uint64_t> cap = std::nullopt);

/// Closure with no early exit; completes even for the full group.
Subgroup closure_full(std::span<const Element> gens, const GroupTable& table);

/// True iff the tuple generates all of SL(2,p).
bool generates(std::span<const Element> tuple, const GroupTable& table);
bool generates_pair(const Element& a, const Element& b, const GroupTable& table);

/// Every maximal proper subgroup, all conjugates included, deduplicated and
/// classified. Deterministic: structured Borel/torus-normalizer construction
/// plus a fixed-seed closure search for the exceptional classes, followed by
/// a cross-class maximality filter.
std::vector<Subgroup> maximal_subgroups(const GroupTable& table);

/// Classification by order and structural probes. Ambiguous patterns come
/// back SmallOther, never a wrong named class.
SubgroupClass classify(const Subgroup& sub, const GroupTable& table);

/// Checks [[h1,h2],[h3,h4]] = 1: exhaustively for |sub| <= 30, else on
/// `samples` seeded random quadruples.
bool metabelian_check(const Subgroup& sub, const GroupTable& table, uint64_t samples,
                      uint64_t seed);

/// |N_G(H)| by direct conjugation count.
uint64_t normalizer_order(const Subgroup& sub, const GroupTable& table);

}  // namespace sl2lab
