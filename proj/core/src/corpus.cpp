#include "nucleus/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "nucleus/errors.hpp"

namespace nucleus {

std::vector<Graph> connected_graphs(int n) {
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  }
  std::vector<Graph> out;
  const std::uint64_t limit = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1U) edges.push_back(pairs[k]);
    }
    if (static_cast<int>(edges.size()) < n - 1) continue;
    try {
      out.emplace_back(n, std::move(edges), ParseOptions{kMaxGroundSize});
    } catch (const ParseError& e) {
      if (e.kind() != ParseErrorKind::kDisconnected) throw;
    }
  }
  return out;
}

std::vector<Graph> corpus_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 3; n <= max_n; ++n) {
    auto part = connected_graphs(n);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, std::move(edges));
}

std::vector<std::vector<int>> random_edge_orders(int m, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> out;
  for (int c = 0; c < count; ++c) {
    std::vector<int> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    out.push_back(std::move(order));
  }
  return out;
}

}  // namespace nucleus
