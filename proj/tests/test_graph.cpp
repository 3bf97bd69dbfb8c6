#include <doctest.h>

#include <algorithm>
#include <set>

#include "nucleus/corpus.hpp"
#include "nucleus/errors.hpp"
#include "nucleus/graph.hpp"
#include "oracles.hpp"

using namespace nucleus;

namespace {

Graph p3() { return parse_inline_edges("0-1,1-2"); }
Graph c3() { return parse_inline_edges("0-1,1-2,0-2"); }
Graph c4() { return parse_inline_edges("0-1,1-2,2-3,0-3"); }

ParseErrorKind kind_of(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("no error raised for: " << text);
  return ParseErrorKind::kMalformedLine;
}

}  // namespace

TEST_CASE("edge-list documents") {
  const Graph g = parse_graph("0 1\n1 2");
  CHECK(g.vertex_count() == 3);
  REQUIRE(g.edge_count() == 2);
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(1) == Edge{1, 2});

  const Graph t = parse_graph("0 1\n0 2\n1 2\n");
  CHECK(t.edge_count() == 3);
  CHECK(t.to_inline() == "0-1,0-2,1-2");

  const Graph commented = parse_graph("# a triangle\nn 3\n\n0 1  # first\n1 2\n0 2\n");
  CHECK(commented.to_inline() == "0-1,1-2,0-2");
}

TEST_CASE("each validation failure has its own diagnostic") {
  CHECK(kind_of("0 1\n1 0") == ParseErrorKind::kDuplicateEdge);
  CHECK(kind_of("0 1\n1 1\n1 2") == ParseErrorKind::kSelfLoop);
  CHECK(kind_of("0 1\n2 3\n3 4") == ParseErrorKind::kDisconnected);
  CHECK(kind_of("0 1") == ParseErrorKind::kTooFewVertices);
  CHECK(kind_of("0 x\n1 2") == ParseErrorKind::kMalformedLine);
  CHECK(kind_of("0 1 2\n1 2") == ParseErrorKind::kMalformedLine);
  CHECK(kind_of("n 3\n0 1\n1 5") == ParseErrorKind::kVertexOutOfRange);
  CHECK(to_string(ParseErrorKind::kDuplicateEdge) == std::string("duplicate-edge"));
}

TEST_CASE("edge cap") {
  // K_7 has 21 edges
  std::string doc;
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b) doc += std::to_string(a) + " " + std::to_string(b) + "\n";
  CHECK_THROWS_AS(parse_graph(doc), ParseError);
  ParseOptions wide;
  wide.max_edges = 21;
  CHECK(parse_graph(doc, wide).edge_count() == 21);
}

TEST_CASE("inline edges and graph6") {
  CHECK(parse_inline_edges("0-1, 1-2 ,2-3").edge_count() == 3);
  CHECK_THROWS_AS(parse_inline_edges("0-1,,1-2"), ParseError);
  CHECK_THROWS_AS(parse_inline_edges("0-1,1-"), ParseError);

  // "Bw" is the triangle
  const Graph t = parse_graph6("Bw");
  CHECK(t.vertex_count() == 3);
  CHECK(t.edge_count() == 3);
  for (const Graph& g : corpus_up_to(5)) {
    const Graph back = parse_graph6(to_graph6(g));
    std::set<std::pair<int, int>> a, b;
    for (const auto& e : g.edges()) a.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
    for (const auto& e : back.edges()) b.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
    CHECK(a == b);
  }
  CHECK(parse_graph(">>graph6<<Bw\n").edge_count() == 3);
  CHECK(parse_graph("Bw\n").edge_count() == 3);
}

TEST_CASE("vertex spans and covers") {
  CHECK(vertices_of(p3(), EdgeSet::of({0})) == VertexSet::of({0, 1}));
  CHECK(vertices_of(c3(), EdgeSet{}).empty());
  CHECK(vertices_of(c3(), EdgeSet::of({0, 1})) == VertexSet::of({0, 1, 2}));

  CHECK(is_vertex_cover(p3(), VertexSet::of({1})));
  CHECK_FALSE(is_vertex_cover(p3(), VertexSet::of({0})));
  CHECK(is_vertex_cover(c3(), VertexSet::of({0, 1})));
}

TEST_CASE("edge-induced connectivity") {
  CHECK(is_connected_edge_subgraph(c3(), EdgeSet::of({0, 1})));
  CHECK_FALSE(is_connected_edge_subgraph(c4(), EdgeSet::of({0, 2})));
  CHECK(is_connected_edge_subgraph(c3(), EdgeSet::of({2})));
  CHECK_THROWS_AS(is_connected_edge_subgraph(c3(), EdgeSet{}), std::invalid_argument);
}

TEST_CASE("shade examples") {
  CHECK(shade(p3(), 0, EdgeSet{}) == EdgeSet::of({0}));
  CHECK(shade(p3(), 0, EdgeSet::of({1})) == EdgeSet::of({0}));
  CHECK(shade(c3(), 0, EdgeSet::of({0})) == c3().all_edges());
}

TEST_CASE("shade agrees with breadth-first search and grows with F") {
  for (const Graph& g : corpus_up_to(5)) {
    const auto pg = oracle::plain(g);
    const std::uint32_t limit = std::uint32_t{1} << g.edge_count();
    for (int v = 0; v < g.vertex_count(); ++v) {
      for (std::uint32_t f = 0; f < limit; ++f) {
        const EdgeSet s = shade(g, v, EdgeSet(f));
        REQUIRE(s.bits() == oracle::shade(pg, v, f));
        CHECK(g.incidence(v).is_subset_of(s));
        for (int e = 0; e < g.edge_count(); ++e) {
          CHECK(s.is_subset_of(shade(g, v, EdgeSet(f).with(e))));
        }
      }
    }
  }
}

TEST_CASE("bridges and leaves") {
  CHECK_FALSE(is_bridge_in(c3(), c3().all_edges(), 0));
  CHECK(is_bridge_in(p3(), p3().all_edges(), 0));
  CHECK_FALSE(is_bridge_in(c4(), c4().all_edges(), 1));
  CHECK_THROWS_AS(is_bridge_in(p3(), EdgeSet::of({0}), 1), std::invalid_argument);

  CHECK(leaf_endpoints_in(p3(), p3().all_edges(), 0) == VertexSet::of({0}));
  CHECK(leaf_endpoints_in(c3(), c3().all_edges(), 0).empty());
  CHECK(leaf_endpoints_in(p3(), EdgeSet::of({0}), 0) == VertexSet::of({0, 1}));
  CHECK_THROWS_AS(leaf_endpoints_in(p3(), EdgeSet::of({0}), 1), std::invalid_argument);
}

TEST_CASE("bridge test agrees with removal-and-reachability") {
  for (const Graph& g : corpus_up_to(4)) {
    const auto pg = oracle::plain(g);
    const std::uint32_t limit = std::uint32_t{1} << g.edge_count();
    for (std::uint32_t s = 1; s < limit; ++s) {
      for (int e = 0; e < g.edge_count(); ++e) {
        if (!oracle::has(s, e)) continue;
        const auto [a, b] = pg.edges[static_cast<std::size_t>(e)];
        const bool joined = oracle::reach(pg, a, s & ~(1U << e))[static_cast<std::size_t>(b)];
        CHECK(is_bridge_in(g, EdgeSet(s), e) == !joined);
      }
    }
  }
}

TEST_CASE("edge reordering") {
  const Graph g = c4();
  const int order[] = {3, 0, 2, 1};
  const Graph h = g.with_edge_order(order);
  CHECK(h.to_inline() == "0-3,0-1,2-3,1-2");
  const int bad[] = {0, 0, 1, 2};
  CHECK_THROWS(g.with_edge_order(bad));
}

TEST_CASE("corpus sizes") {
  // labeled connected graphs on 3, 4, 5 vertices
  CHECK(connected_graphs(3).size() == 4);
  CHECK(connected_graphs(4).size() == 38);
  CHECK(connected_graphs(5).size() == 728);
  CHECK(cycle_graph(4).to_inline() == "0-1,1-2,2-3,0-3");
  CHECK(star_graph(3).to_inline() == "0-1,0-2,0-3");
  CHECK(random_edge_orders(5, 3, 7) == random_edge_orders(5, 3, 7));
}
