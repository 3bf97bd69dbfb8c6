#pragma once

#include <cstdint>
#include <vector>

#include "nucleus/graph.hpp"

namespace nucleus {

/// All labeled connected simple graphs on vertices 0..n-1 (no isomorphism
/// reduction). Edges of each graph are listed in lexicographic pair order;
/// graphs are ordered by the bitmask over those pairs.
std::vector<Graph> connected_graphs(int n);

/// connected_graphs(3) ++ ... ++ connected_graphs(max_n).
std::vector<Graph> corpus_up_to(int max_n);

/// Cycle 0-1-...-(n-1)-0 with edges {i, i+1} in order, then {0, n-1}.
Graph cycle_graph(int n);
/// Path 0-1-...-(n-1).
Graph path_graph(int n);
/// Star with center 0 and leaves 1..leaves.
Graph star_graph(int leaves);

/// `count` pseudo-random permutations of 0..m-1 from a seeded Mersenne
/// Twister; deterministic for a given seed.
std::vector<std::vector<int>> random_edge_orders(int m, int count, std::uint64_t seed);

}  // namespace nucleus
