#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nucleus/complex.hpp"
#include "nucleus/graph.hpp"

namespace nucleus {

/// Connected subgraph whose vertex set covers every edge. A nucleus with no
/// edges is a single vertex meeting all of E(G) (star center).
struct Nucleus {
  EdgeSet edges;
  VertexSet vertices;
  bool operator==(const Nucleus&) const = default;
};

/// Single-vertex nuclei first (by vertex label), then edge-bearing nuclei
/// ascending by edge bit pattern.
std::vector<Nucleus> enumerate_nuclei(const Graph& g);

struct ElserTerm {
  int edge_count;
  int vertex_count;
  int sign;  ///< (-1)^{|E(N)|}
};

struct ElserReport {
  int k = 0;
  long long value = 0;
  std::vector<ElserTerm> terms;
};

/// (-1)^{|V|+1} sum over nuclei N of (-1)^{|E(N)|} |V(N)|^k, with 0^0 = 1.
/// Throws std::overflow_error if the sum leaves 64-bit range.
ElserReport elser_number(const Graph& g, int k);

/// Number of surjections from a k-set onto a j-set, by inclusion-exclusion.
/// Throws std::overflow_error beyond 64-bit range.
long long surjection_count(int k, int j);

/// Faces E(G) minus E(N) over nuclei N with u contained in V(N). Closure is
/// checked, not imposed.
SimplicialComplex nucleus_complex(const Graph& g, VertexSet u);
/// Same, reusing a precomputed enumerate_nuclei(g).
SimplicialComplex nucleus_complex(const Graph& g, std::span<const Nucleus> nuclei, VertexSet u);

/// Faces F with shade(g, v, F) a proper subset of E(G) for some v in u.
SimplicialComplex a_complex(const Graph& g, VertexSet u);

/// Default cap on |V(G)| for routines that walk every vertex subset.
inline constexpr int kDefaultMaxSubsetVertices = 12;

/// (-1)^{|E|+|V|} sum over U of Sur(k,|U|) * reduced Euler characteristic of
/// the U-nucleus complex. Throws GuardError when |V| > max_vertices.
long long elser_via_euler(const Graph& g, int k, int max_vertices = kDefaultMaxSubsetVertices);

}  // namespace nucleus
