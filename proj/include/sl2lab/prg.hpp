#pragma once

#include <vector>

#include "sl2lab/eigensolve.hpp"
#include "sl2lab/group_table.hpp"

namespace sl2lab {

using GeneratingTuple = std::vector<Element>;

/// The 4k(k-1) Nielsen neighbors of a tuple in fixed (i, j, move, sign)
/// order: for each ordered (i, j), i != j, the moves R+-: g_i -> g_i g_j^{+-1}
/// and L+-: g_i -> g_j^{+-1} g_i. Each neighbor still generates.
std::vector<GeneratingTuple> nielsen_neighbors(const GeneratingTuple& tuple);

/// The product replacement graph Gamma_k(SL(2,p)): vertices are all
/// generating k-tuples (indexed lexicographically by element indices),
/// adjacency keeps loops and multiple edges so the graph is 4k(k-1)-regular
/// with multiplicity.
struct ReplacementGraph {
  uint32_t p = 0;
  uint32_t k = 0;
  uint64_t n_vertices = 0;
  uint32_t degree = 0;  // 4k(k-1)
  std::vector<uint64_t> vertex_codes;  // sorted; code = sum idx_i * |G|^i
  std::vector<uint32_t> adjacency;     // n_vertices * degree neighbor ids

  uint32_t vertex_id(uint64_t code) const;
  GeneratingTuple tuple_of(uint32_t vertex, const GroupTable& table) const;
};

/// Enumerates all |G|^k candidate tuples (cap-guarded), filters by
/// generation, and wires Nielsen adjacency.
ReplacementGraph build_prg(const GroupTable& table, uint32_t k,
                           uint64_t candidate_cap = 10'000'000);

struct ReplacementGraphReport {
  uint64_t n_vertices = 0;
  uint64_t n_components = 0;
  double lambda2 = 0.0;
  double gap = 0.0;
  double lambda_min = 0.0;
  bool converged = false;
  std::string method;
};

/// Spectrum of the degree-normalized adjacency (loops and multiplicities
/// contribute); component count by breadth-first search.
ReplacementGraphReport prg_spectrum(const ReplacementGraph& graph, double tol);

uint64_t prg_component_count(const ReplacementGraph& graph);

}  // namespace sl2lab
