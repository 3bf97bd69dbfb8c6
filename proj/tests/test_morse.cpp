#include <doctest.h>

#include <set>

#include "nucleus/corpus.hpp"
#include "nucleus/errors.hpp"
#include "nucleus/morse.hpp"
#include "nucleus/nuclei.hpp"
#include "oracles.hpp"

using namespace nucleus;

namespace {

Graph p3() { return parse_inline_edges("0-1,1-2"); }
Graph c3() { return parse_inline_edges("0-1,0-2,1-2"); }
Graph c4() { return parse_inline_edges("0-1,1-2,2-3,0-3"); }

MatchedPair pair_of(EdgeSet low, EdgeSet high) { return {low, high, 1, 0}; }

std::set<oracle::Mask> masks(const SimplicialComplex& k) {
  std::set<oracle::Mask> out;
  for (EdgeSet f : k.faces()) out.insert(f.bits());
  return out;
}

std::vector<std::pair<oracle::Mask, oracle::Mask>> raw(const std::vector<MatchedPair>& pairs) {
  std::vector<std::pair<oracle::Mask, oracle::Mask>> out;
  for (const auto& p : pairs) out.emplace_back(p.low.bits(), p.high.bits());
  return out;
}

}  // namespace

TEST_CASE("single-anchor matching examples") {
  const Matching a = grinberg_matching(p3(), 0);
  REQUIRE(a.pairs.size() == 1);
  CHECK(a.pairs[0].low == EdgeSet{});
  CHECK(a.pairs[0].high == EdgeSet::of({1}));
  CHECK(critical_cells(a).empty());

  const Matching b = grinberg_matching(c3(), 0);
  REQUIRE(b.pairs.size() == 1);
  CHECK(b.pairs[0].high == EdgeSet::of({2}));
  CHECK(is_valid_matching(b));
  CHECK(is_acyclic(b));

  const Matching c = grinberg_matching(star_graph(3), 0);
  CHECK(c.domain.is_void());
  CHECK(c.pairs.empty());
}

TEST_CASE("single-anchor matching is perfect and acyclic") {
  for (const Graph& g : corpus_up_to(5)) {
    for (int x = 0; x < g.vertex_count(); ++x) {
      const Matching m = grinberg_matching(g, x);
      CHECK(m.domain == a_complex(g, VertexSet::singleton(x)));
      CHECK(is_valid_matching(m));
      CHECK(critical_cells(m).empty());
      CHECK(is_acyclic(m));
    }
  }
}

TEST_CASE("acyclicity agrees with transitive closure") {
  for (const Graph& g : corpus_up_to(4)) {
    for (int x = 0; x < g.vertex_count(); ++x) {
      const Matching m = grinberg_matching(g, x);
      CHECK(is_acyclic(m) == oracle::acyclic(masks(m.domain), raw(m.pairs)));
    }
  }
}

TEST_CASE("layered matching examples") {
  const int u01[] = {0, 1};
  const MorseRun r = extend_matching(c3(), u01);
  REQUIRE(r.matching.pairs.size() == 1);
  CHECK(r.matching.pairs[0].high == EdgeSet::of({2}));
  REQUIRE(r.layers.size() == 2);
  CHECK(r.layers[1].faces == std::vector<EdgeSet>{EdgeSet::of({1})});
  const auto census = critical_cells(r.matching);
  CHECK(census.total() == 1);
  CHECK(census.count(0) == 1);
  CHECK(census.by_dimension.at(0) == std::vector<EdgeSet>{EdgeSet::of({1})});

  const int uab[] = {1, 2};
  const MorseRun s = extend_matching(star_graph(3), uab);
  std::vector<std::pair<EdgeSet, EdgeSet>> layer1, layer2;
  for (const auto& p : s.matching.pairs) (p.layer == 1 ? layer1 : layer2).emplace_back(p.low, p.high);
  CHECK(layer1 == std::vector<std::pair<EdgeSet, EdgeSet>>{{EdgeSet{}, EdgeSet::of({1})},
                                                           {EdgeSet::of({2}), EdgeSet::of({1, 2})}});
  REQUIRE(layer2.size() == 1);
  CHECK(layer2[0] == std::pair{EdgeSet::of({0}), EdgeSet::of({0, 2})});
  for (const auto& p : s.matching.pairs) {
    if (p.layer == 2) CHECK(p.step == 3);
  }
  CHECK(critical_cells(s.matching).empty());
  CHECK(is_acyclic(s.matching));
  // subsets of {e2,e3} or of {e1,e3}
  CHECK(s.matching.domain.face_count() == 6);

  for (const Graph& g : corpus_up_to(4)) {
    for (int x = 0; x < g.vertex_count(); ++x) {
      const int u[] = {x};
      CHECK(extend_matching(g, u).matching.pairs == grinberg_matching(g, x).pairs);
    }
  }
}

TEST_CASE("anchor list errors") {
  CHECK_THROWS_AS(extend_matching(c3(), std::span<const int>{}), std::invalid_argument);
  const int rep[] = {0, 0};
  CHECK_THROWS_AS(extend_matching(c3(), rep), std::invalid_argument);
  const int out[] = {0, 7};
  CHECK_THROWS_AS(extend_matching(c3(), out), std::invalid_argument);
}

TEST_CASE("partner conflicts") {
  // the step-4 face {e1,e4} wants {e1}, which step 2 already used
  const Graph g = parse_inline_edges("0-1,0-2,0-3,1-2");
  const int u[] = {1, 3};
  try {
    extend_matching(g, u, ConflictPolicy::kStrict);
    FAIL("expected a conflict");
  } catch (const AnomalyError& e) {
    CHECK(e.layer() == 2);
    CHECK(e.step() == 4);
    CHECK(EdgeSet(e.face_bits()) == EdgeSet::of({0, 3}));
  }
  const MorseRun d = extend_matching(g, u, ConflictPolicy::kDefer);
  CHECK(d.conflict_count() >= 1);
  CHECK(is_valid_matching(d.matching));
  CHECK(is_acyclic(d.matching));
}

TEST_CASE("matching validity") {
  const auto k = SimplicialComplex::full_simplex(2);
  const std::vector<MatchedPair> repeated = {pair_of(EdgeSet{}, EdgeSet::of({0})),
                                             pair_of(EdgeSet{}, EdgeSet::of({1}))};
  CHECK_FALSE(is_valid_matching(k, repeated));
  const std::vector<MatchedPair> jump = {pair_of(EdgeSet{}, EdgeSet::of({0, 1}))};
  CHECK_FALSE(is_valid_matching(k, jump));
  const std::vector<MatchedPair> outside = {pair_of(EdgeSet{}, EdgeSet::of({2}))};
  CHECK_FALSE(is_valid_matching(k, outside));
}

TEST_CASE("a closed V-path around the hollow triangle") {
  const EdgeSet f[] = {EdgeSet::of({0, 1}), EdgeSet::of({1, 2}), EdgeSet::of({0, 2})};
  const auto tri = SimplicialComplex::from_faces(3, f);
  const std::vector<MatchedPair> loop = {pair_of(EdgeSet::of({0}), EdgeSet::of({0, 1})),
                                         pair_of(EdgeSet::of({1}), EdgeSet::of({1, 2})),
                                         pair_of(EdgeSet::of({2}), EdgeSet::of({0, 2}))};
  REQUIRE(is_valid_matching(tri, loop));
  CHECK_FALSE(is_acyclic(tri, loop));
  CHECK_FALSE(oracle::acyclic(masks(tri), raw(loop)));

  const std::vector<MatchedPair> open = {loop[0], loop[1]};
  CHECK(is_acyclic(tri, open));
  CHECK(oracle::acyclic(masks(tri), raw(open)));

  const auto census = critical_cells(tri, {});
  CHECK(census.count(-1) == 1);
  CHECK(census.count(0) == 3);
  CHECK(census.count(1) == 3);
}

TEST_CASE("layered matchings that complete are sound") {
  // every conflict-free run on the small corpus, all anchor orders
  for (const Graph& g : corpus_up_to(4)) {
    const int n = g.vertex_count();
    for (std::uint32_t b = 0; b < (1U << n); ++b) {
      const VertexSet us(b);
      if (us.size() < 2) continue;
      const auto betti = reduced_betti(a_complex(g, us));
      auto u = us.elements();
      do {
        MorseRun run;
        try {
          run = extend_matching(g, u);
        } catch (const AnomalyError&) {
          continue;
        }
        CHECK(is_valid_matching(run.matching));
        CHECK(is_acyclic(run.matching) == oracle::acyclic(masks(run.matching.domain), raw(run.matching.pairs)));
        CHECK(is_acyclic(run.matching));
        const auto census = critical_cells(run.matching);
        CHECK(static_cast<long long>(census.total()) == betti.at(n - 3));
        CHECK(census.total() == census.count(n - 3));
        CHECK(first_step_violations(g, run, u).empty());
        CHECK(minimal_edge_violations(g, run, u).empty());
        if (u.size() == 2) CHECK(spanning_tree_violations(g, census, u[1]).empty());
      } while (std::next_permutation(u.begin(), u.end()));
    }
  }
}

TEST_CASE("membership of the layer difference") {
  for (const Graph& g : corpus_up_to(5)) {
    for (int x = 0; x < g.vertex_count(); ++x)
      for (int y = 0; y < g.vertex_count(); ++y)
        if (x != y) CHECK(difference_membership_violations(g, x, y).empty());
  }
}

TEST_CASE("homology reports") {
  const auto a = verify_theorem(c3(), VertexSet::of({0, 1}));
  CHECK(a.which == TheoremCase::kMultiAnchor);
  CHECK(a.asserted);
  CHECK(a.pass);
  CHECK(a.concentration_degree == 0);
  CHECK(a.betti.at(0) == 1);

  const auto b = verify_theorem(c4(), VertexSet{});
  CHECK(b.which == TheoremCase::kEmptyAnchor);
  CHECK_FALSE(b.asserted);
  CHECK(b.betti.at(1) == 1);

  const auto c = verify_theorem(star_graph(3), VertexSet::of({1, 2}));
  CHECK(c.pass);
  CHECK(c.betti.is_acyclic());
  CHECK(nucleus_complex(star_graph(3), VertexSet::of({1, 2})).face_count() == 2);

  const auto d = verify_theorem(p3(), VertexSet::of({0}));
  CHECK(d.which == TheoremCase::kSingleAnchor);
  CHECK(d.pass);
}

TEST_CASE("Betti numbers do not depend on the edge order") {
  std::uint64_t seed = 11;
  for (const Graph& g : corpus_up_to(4)) {
    for (const auto& order : random_edge_orders(g.edge_count(), 2, seed++)) {
      const Graph h = g.with_edge_order(order);
      for (std::uint32_t b = 0; b < (1U << g.vertex_count()); ++b) {
        const auto x = reduced_betti(nucleus_complex(g, VertexSet(b)));
        const auto y = reduced_betti(nucleus_complex(h, VertexSet(b)));
        CHECK(x == y);
      }
    }
  }
}
