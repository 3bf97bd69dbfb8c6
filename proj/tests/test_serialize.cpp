#include <doctest.h>

#include "nucleus/corpus.hpp"
#include "nucleus/serialize.hpp"

using namespace nucleus;

TEST_CASE("sets and graphs") {
  CHECK(to_json(EdgeSet::of({3, 0})).dump() == "[0,3]");
  CHECK(to_json(VertexSet{}).dump() == "[]");
  CHECK(to_json(parse_inline_edges("0-1,1-2")).dump() == R"({"n":3,"edges":[[0,1],[1,2]]})");
}

TEST_CASE("complex documents round-trip") {
  const SimplicialComplex v(3);
  CHECK(to_json(v).dump() == R"({"ground":3,"facets":[]})");
  CHECK(to_json(SimplicialComplex::empty_face(2)).dump() == R"({"ground":2,"facets":[[]]})");
  CHECK(complex_from_json(to_json(v)).is_void());
  CHECK(complex_from_json(to_json(SimplicialComplex::empty_face(2))) == SimplicialComplex::empty_face(2));

  for (const Graph& g : corpus_up_to(4)) {
    for (std::uint32_t b = 0; b < (1U << g.vertex_count()); ++b) {
      const auto k = nucleus_complex(g, VertexSet(b));
      CHECK(complex_from_json_text(to_json(k).dump()) == k);
    }
  }
}

TEST_CASE("bad complex documents") {
  CHECK_THROWS_AS(complex_from_json_text(R"({"facets":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(complex_from_json_text(R"({"ground":2,"facets":[[0,2]]})"), std::out_of_range);
  CHECK_THROWS_AS(complex_from_json_text(R"({"ground":2,"facets":[["a"]]})"), std::invalid_argument);
  CHECK_THROWS_AS(complex_from_json_text(R"([1,2])"), std::invalid_argument);
}

TEST_CASE("matching and census records") {
  const int u[] = {0, 1};
  const auto run = extend_matching(parse_inline_edges("0-1,0-2,1-2"), u);
  CHECK(to_json(run.matching.pairs).dump() == R"([{"low":[],"high":[2],"layer":1,"step":3}])");
  CHECK(to_json(critical_cells(run.matching)).dump() == R"([{"dim":0,"faces":[[1]]}])");
}

TEST_CASE("homology and Elser records") {
  const auto h = reduced_betti(nucleus_complex(cycle_graph(4), VertexSet{}));
  CHECK(to_json(h).dump() == R"({"min_degree":-1,"betti":[0,0,1,0,0],"support":[1]})");
  const auto r = elser_number(parse_inline_edges("0-1,1-2"), 1);
  CHECK(to_json(r)["value"] == 0);
  CHECK(to_json(r)["terms"].size() == 4);
}
