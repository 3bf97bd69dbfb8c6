#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nucleus/bitset.hpp"

namespace nucleus {

/// Default cap on |E(G)|. Every downstream structure is sized 2^m.
inline constexpr int kDefaultMaxEdges = 20;

struct Edge {
  int u = 0;
  int v = 0;
  bool operator==(const Edge&) const = default;
};

struct ParseOptions {
  int max_edges = kDefaultMaxEdges;
};

/// Connected simple graph on vertices 0..n-1 with a fixed total order on its
/// edges. Edge i is the (i+1)-th edge in that order; every matching built on
/// top of the graph depends on it.
class Graph {
 public:
  /// Validates and builds. Throws ParseError on self-loops, duplicate edges,
  /// out-of-range endpoints, n < 3, a disconnected graph, or size caps.
  Graph(int vertex_count, std::vector<Edge> edges, const ParseOptions& options = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }

  EdgeSet all_edges() const { return EdgeSet::range(edge_count()); }
  VertexSet all_vertices() const { return VertexSet::range(n_); }

  /// Edges incident to v.
  EdgeSet incidence(int v) const { return incidence_[static_cast<std::size_t>(v)]; }
  VertexSet neighbors(int v) const { return neighbors_[static_cast<std::size_t>(v)]; }
  /// Endpoints of edge i as a vertex set.
  VertexSet endpoints(int i) const {
    const Edge& e = edge(i);
    return VertexSet::singleton(e.u).with(e.v);
  }

  /// Same graph with edges reordered: new edge i is old edge order[i].
  Graph with_edge_order(std::span<const int> order) const;

  /// "u-v,u-v,..." in edge order.
  std::string to_inline() const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<EdgeSet> incidence_;
  std::vector<VertexSet> neighbors_;
};

/// Edge-list document: lines "u v", optional header "n <count>", '#' comments
/// and blank lines ignored. A document whose first non-blank line is a single
/// token (or ">>graph6<<" prefixed) is read as graph6 instead.
Graph parse_graph(std::string_view text, const ParseOptions& options = {});

/// Inline syntax "0-1,1-2,...". An empty string is malformed.
Graph parse_inline_edges(std::string_view text, const ParseOptions& options = {});

/// Standard graph6 encoding (n < 63 is enough at this scale; the long
/// form is accepted too). Edges come out in graph6 bit order, i.e. column-major
/// over the upper triangle.
Graph parse_graph6(std::string_view text, const ParseOptions& options = {});
std::string to_graph6(const Graph& g);

/// V_s: endpoints of the edges in s.
VertexSet vertices_of(const Graph& g, EdgeSet s);

bool is_vertex_cover(const Graph& g, VertexSet x);

/// Connectivity of the edge-induced subgraph G_s. Throws std::invalid_argument
/// on s = {} (callers treat the empty face separately).
bool is_connected_edge_subgraph(const Graph& g, EdgeSet s);

/// Vertices reachable from v in the spanning subgraph (V(G), f).
VertexSet component_of(const Graph& g, int v, EdgeSet f);

/// Edges with an endpoint joined to v by an f-path; the trivial path counts,
/// so incidence(v) is always included.
EdgeSet shade(const Graph& g, int v, EdgeSet f);

/// True iff e lies on no cycle of G_s. Throws std::invalid_argument if e is
/// not in s.
bool is_bridge_in(const Graph& g, EdgeSet s, int e);

/// Endpoints of e having degree 1 in G_s. Throws std::invalid_argument if e
/// is not in s.
VertexSet leaf_endpoints_in(const Graph& g, EdgeSet s, int e);

/// Per-vertex degree in G_s.
std::vector<int> degrees_in(const Graph& g, EdgeSet s);

}  // namespace nucleus
