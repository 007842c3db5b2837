#include "sl2lab/prg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sl2lab/subgroups.hpp"

namespace sl2lab {

std::vector<GeneratingTuple> nielsen_neighbors(const GeneratingTuple& tuple) {
  const size_t k = tuple.size();
  if (k < 2) throw std::invalid_argument("product replacement needs k >= 2");
  std::vector<GeneratingTuple> neighbors;
  neighbors.reserve(4 * k * (k - 1));
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      const Element gj_inv = inv(tuple[j]);
      // R+, R-, L+, L-
      for (int move = 0; move < 4; ++move) {
        GeneratingTuple t = tuple;
        switch (move) {
          case 0: t[i] = mul(tuple[i], tuple[j]); break;
          case 1: t[i] = mul(tuple[i], gj_inv); break;
          case 2: t[i] = mul(tuple[j], tuple[i]); break;
          case 3: t[i] = mul(gj_inv, tuple[i]); break;
        }
        neighbors.push_back(std::move(t));
      }
    }
  }
  return neighbors;
}

uint32_t ReplacementGraph::vertex_id(uint64_t code) const {
  const auto it = std::lower_bound(vertex_codes.begin(), vertex_codes.end(), code);
  if (it == vertex_codes.end() || *it != code) {
    throw std::logic_error("tuple is not a vertex of the replacement graph");
  }
  return (uint32_t)(it - vertex_codes.begin());
}

GeneratingTuple ReplacementGraph::tuple_of(uint32_t vertex, const GroupTable& table) const {
  uint64_t code = vertex_codes[vertex];
  GeneratingTuple t(k);
  for (uint32_t i = 0; i < k; ++i) {
    t[i] = table.element((uint32_t)(code % table.size()));
    code /= table.size();
  }
  return t;
}

ReplacementGraph build_prg(const GroupTable& table, uint32_t k, uint64_t candidate_cap) {
  if (k < 2) throw std::invalid_argument("product replacement needs k >= 2");
  const uint64_t n = table.size();
  uint64_t candidates = 1;
  for (uint32_t i = 0; i < k; ++i) {
    if (candidates > candidate_cap / n) {
      throw std::invalid_argument("candidate tuple count exceeds the cap");
    }
    candidates *= n;
  }

  ReplacementGraph g;
  g.p = table.prime();
  g.k = k;
  g.degree = 4 * k * (k - 1);

  // Vertex filter: a tuple generates iff no maximal-order proper closure
  // contains it; the capped closure decides directly.
  std::vector<Element> tuple(k);
  for (uint64_t code = 0; code < candidates; ++code) {
    uint64_t c = code;
    for (uint32_t i = 0; i < k; ++i) {
      tuple[i] = table.element((uint32_t)(c % n));
      c /= n;
    }
    if (generates(tuple, table)) g.vertex_codes.push_back(code);
  }
  g.n_vertices = g.vertex_codes.size();

  g.adjacency.resize(g.n_vertices * g.degree);
  std::vector<uint32_t> idx(k);
  for (uint64_t v = 0; v < g.n_vertices; ++v) {
    uint64_t c = g.vertex_codes[v];
    for (uint32_t i = 0; i < k; ++i) {
      idx[i] = (uint32_t)(c % n);
      c /= n;
    }
    uint32_t slot = 0;
    for (uint32_t i = 0; i < k; ++i) {
      for (uint32_t j = 0; j < k; ++j) {
        if (i == j) continue;
        const uint32_t gj_inv = table.inverse_index(idx[j]);
        for (int move = 0; move < 4; ++move) {
          uint32_t replaced = 0;
          switch (move) {
            case 0: replaced = table.mul_index(idx[i], idx[j]); break;
            case 1: replaced = table.mul_index(idx[i], gj_inv); break;
            case 2: replaced = table.mul_index(idx[j], idx[i]); break;
            case 3: replaced = table.mul_index(gj_inv, idx[i]); break;
          }
          uint64_t ncode = 0;
          for (uint32_t t = k; t-- > 0;) {
            ncode = ncode * n + (t == i ? replaced : idx[t]);
          }
          g.adjacency[v * g.degree + slot] = g.vertex_id(ncode);
          ++slot;
        }
      }
    }
  }
  return g;
}

uint64_t prg_component_count(const ReplacementGraph& graph) {
  std::vector<char> visited(graph.n_vertices, 0);
  std::vector<uint32_t> stack;
  uint64_t components = 0;
  for (uint64_t start = 0; start < graph.n_vertices; ++start) {
    if (visited[start]) continue;
    ++components;
    visited[start] = 1;
    stack.push_back((uint32_t)start);
    while (!stack.empty()) {
      const uint32_t v = stack.back();
      stack.pop_back();
      for (uint32_t s = 0; s < graph.degree; ++s) {
        const uint32_t u = graph.adjacency[(uint64_t)v * graph.degree + s];
        if (!visited[u]) {
          visited[u] = 1;
          stack.push_back(u);
        }
      }
    }
  }
  return components;
}

ReplacementGraphReport prg_spectrum(const ReplacementGraph& graph, double tol) {
  ReplacementGraphReport rep;
  rep.n_vertices = graph.n_vertices;
  rep.n_components = prg_component_count(graph);

  LinearOperator op;
  op.n = (uint32_t)graph.n_vertices;
  const double inv_degree = 1.0 / (double)graph.degree;
  op.apply = [&graph, inv_degree](const double* in, double* out) {
    for (uint64_t v = 0; v < graph.n_vertices; ++v) {
      double acc = 0.0;
      const uint32_t* row = &graph.adjacency[v * graph.degree];
      for (uint32_t s = 0; s < graph.degree; ++s) acc += in[row[s]];
      out[v] = acc * inv_degree;
    }
  };
  const auto spectrum = spectrum_extremes(op, tol);
  rep.lambda2 = spectrum.lambda2;
  rep.lambda_min = spectrum.lambda_min;
  rep.gap = spectrum.gap;
  rep.converged = spectrum.converged;
  rep.method = spectrum.method;
  return rep;
}

}  // namespace sl2lab
