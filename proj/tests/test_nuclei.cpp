#include <doctest.h>

#include <algorithm>
#include <set>

#include "nucleus/corpus.hpp"
#include "nucleus/errors.hpp"
#include "nucleus/homology.hpp"
#include "nucleus/nuclei.hpp"
#include "oracles.hpp"

using namespace nucleus;

namespace {

Graph p3() { return parse_inline_edges("0-1,1-2"); }
Graph c3() { return parse_inline_edges("0-1,0-2,1-2"); }
Graph c4() { return parse_inline_edges("0-1,1-2,2-3,0-3"); }
Graph k13() { return star_graph(3); }

SimplicialComplex faces(int m, std::initializer_list<EdgeSet> gens) {
  std::vector<EdgeSet> g(gens);
  return SimplicialComplex::from_faces(m, g);
}

}  // namespace

TEST_CASE("nuclei of small graphs") {
  const auto np = enumerate_nuclei(p3());
  REQUIRE(np.size() == 4);
  CHECK(np[0] == Nucleus{EdgeSet{}, VertexSet::of({1})});
  CHECK(np[1].edges == EdgeSet::of({0}));
  CHECK(np[2].edges == EdgeSet::of({1}));
  CHECK(np[3].edges == EdgeSet::of({0, 1}));

  const auto nc = enumerate_nuclei(c3());
  CHECK(nc.size() == 7);
  CHECK(std::none_of(nc.begin(), nc.end(), [](const Nucleus& n) { return n.edges.empty(); }));

  const auto n4 = enumerate_nuclei(c4());
  CHECK(n4.size() == 9);
  std::map<int, int> by_size;
  for (const Nucleus& n : n4) ++by_size[n.edges.size()];
  CHECK(by_size == std::map<int, int>{{2, 4}, {3, 4}, {4, 1}});
}

TEST_CASE("nuclei agree with union-find enumeration") {
  for (const Graph& g : corpus_up_to(5)) {
    std::set<std::pair<std::uint32_t, std::uint32_t>> mine, ref;
    for (const Nucleus& n : enumerate_nuclei(g)) mine.emplace(n.edges.bits(), n.vertices.bits());
    for (auto p : oracle::nuclei(oracle::plain(g))) ref.insert(p);
    CHECK(mine == ref);
  }
}

TEST_CASE("Elser numbers") {
  CHECK(elser_number(c3(), 2).value == 6);
  CHECK(elser_number(p3(), 1).value == 0);
  CHECK(elser_number(c4(), 0).value == -1);
  const auto r = elser_number(c3(), 2);
  CHECK(r.terms.size() == 7);

  for (const Graph& g : corpus_up_to(5)) {
    const auto pg = oracle::plain(g);
    for (int k = 0; k <= 4; ++k) CHECK(elser_number(g, k).value == oracle::elser(pg, k));
  }
  CHECK_THROWS_AS(elser_number(c3(), -1), std::invalid_argument);
}

TEST_CASE("surjection counts") {
  CHECK(surjection_count(3, 2) == 6);
  for (int k = 1; k <= 8; ++k) CHECK(surjection_count(k, 1) == 1);
  CHECK(surjection_count(2, 3) == 0);
  CHECK(surjection_count(0, 0) == 1);
  for (int k = 0; k <= 6; ++k)
    for (int j = 0; j <= 6; ++j) CHECK(surjection_count(k, j) == oracle::surjections(k, j));
}

TEST_CASE("U-nucleus complexes") {
  CHECK(nucleus_complex(c3(), VertexSet::of({0, 1})) ==
        faces(3, {EdgeSet::of({0}), EdgeSet::of({1, 2})}));
  CHECK(nucleus_complex(c3(), VertexSet{}) ==
        faces(3, {EdgeSet::of({0, 1}), EdgeSet::of({1, 2}), EdgeSet::of({0, 2})}));
  CHECK(nucleus_complex(k13(), VertexSet::of({0})) == SimplicialComplex::full_simplex(3));

  for (const Graph& g : corpus_up_to(4)) {
    const auto pg = oracle::plain(g);
    const auto nuc = oracle::nuclei(pg);
    const std::uint32_t all = (1U << g.edge_count()) - 1;
    for (std::uint32_t u = 0; u < (1U << g.vertex_count()); ++u) {
      std::vector<oracle::Mask> gens;
      for (auto [e, v] : nuc) {
        if ((u & ~v) == 0) gens.push_back(all & ~e);
      }
      std::set<oracle::Mask> got;
      const auto k = nucleus_complex(g, VertexSet(u));
      for (EdgeSet f : k.faces()) got.insert(f.bits());
      CHECK(got == oracle::closure(gens));
    }
  }
}

TEST_CASE("shade complexes") {
  CHECK(a_complex(p3(), VertexSet::of({0})) == faces(2, {EdgeSet::of({1})}));
  CHECK(a_complex(c3(), VertexSet::of({0, 1})) == faces(3, {EdgeSet::of({1}), EdgeSet::of({2})}));
  CHECK(a_complex(k13(), VertexSet::of({0})).is_void());
  CHECK(a_complex(c3(), VertexSet{}).is_void());
}

TEST_CASE("Elser numbers through Euler characteristics") {
  CHECK(elser_via_euler(c3(), 2) == 6);
  CHECK(elser_via_euler(p3(), 1) == 0);
  CHECK(elser_via_euler(c4(), 0) == -1);
  CHECK_THROWS_AS(elser_via_euler(c4(), 0, 3), GuardError);
}

TEST_CASE("single-anchor complexes have the homology of a point") {
  for (const Graph& g : corpus_up_to(4)) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      CHECK(reduced_betti(nucleus_complex(g, VertexSet::singleton(v))).is_acyclic());
    }
  }
}
