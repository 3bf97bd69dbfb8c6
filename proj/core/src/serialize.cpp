#include "nucleus/serialize.hpp"

#include <stdexcept>

namespace nucleus {

json to_json(EdgeSet s) { return json(s.elements()); }
json to_json(VertexSet s) { return json(s.elements()); }

json to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

json to_json(const SimplicialComplex& k) {
  json facets = json::array();
  for (EdgeSet f : k.facets()) facets.push_back(to_json(f));
  return {{"ground", k.ground_size()}, {"facets", std::move(facets)}};
}

json to_json(const HomologyProfile& h) {
  json betti = json::array();
  for (int d = h.min_degree(); d <= h.max_degree(); ++d) betti.push_back(h.at(d));
  return {{"min_degree", h.min_degree()}, {"betti", std::move(betti)}, {"support", h.support()}};
}

json to_json(const ElserReport& r) {
  json terms = json::array();
  for (const ElserTerm& t : r.terms) {
    terms.push_back({{"edges", t.edge_count}, {"vertices", t.vertex_count}, {"sign", t.sign}});
  }
  return {{"k", r.k}, {"value", r.value}, {"terms", std::move(terms)}};
}

json to_json(const Nucleus& n) {
  return {{"edges", to_json(n.edges)}, {"vertices", to_json(n.vertices)}};
}

json to_json(std::span<const MatchedPair> pairs) {
  json out = json::array();
  for (const MatchedPair& p : pairs) {
    out.push_back({{"low", to_json(p.low)}, {"high", to_json(p.high)}, {"layer", p.layer}, {"step", p.step}});
  }
  return out;
}

json to_json(const CriticalCensus& c) {
  json out = json::array();
  for (const auto& [dim, faces] : c.by_dimension) {
    json fs = json::array();
    for (EdgeSet f : faces) fs.push_back(to_json(f));
    out.push_back({{"dim", dim}, {"faces", std::move(fs)}});
  }
  return out;
}

json to_json(const LayerTrace& t) {
  auto face_list = [](const std::vector<EdgeSet>& faces) {
    json out = json::array();
    for (EdgeSet f : faces) out.push_back(to_json(f));
    return out;
  };
  json steps = json::array();
  for (const StepRecord& s : t.steps) {
    json paired = json::array();
    for (const auto& [low, high] : s.paired) paired.push_back({{"low", to_json(low)}, {"high", to_json(high)}});
    steps.push_back({{"step", s.step},
                     {"paired", std::move(paired)},
                     {"conflicts", face_list(s.conflicts)},
                     {"unpaired_after", face_list(s.unpaired_after)}});
  }
  return {{"layer", t.layer}, {"anchor", t.anchor}, {"faces", face_list(t.faces)}, {"steps", std::move(steps)}};
}

json to_json(const TheoremReport& r) {
  const char* which = r.which == TheoremCase::kEmptyAnchor    ? "empty"
                      : r.which == TheoremCase::kSingleAnchor ? "single"
                                                              : "multi";
  return {{"u", to_json(r.u)},
          {"case", which},
          {"concentration_degree", r.concentration_degree},
          {"homology", to_json(r.betti)},
          {"asserted", r.asserted},
          {"pass", r.pass}};
}

SimplicialComplex complex_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("ground") || !doc.contains("facets")) {
    throw std::invalid_argument("complex document needs \"ground\" and \"facets\"");
  }
  const json& ground = doc.at("ground");
  const json& facets = doc.at("facets");
  if (!ground.is_number_integer() || ground.get<long long>() < 0 ||
      ground.get<long long>() > kMaxGroundSize) {
    throw std::invalid_argument("\"ground\" must be an integer in 0.." + std::to_string(kMaxGroundSize));
  }
  if (!facets.is_array()) throw std::invalid_argument("\"facets\" must be an array");
  const int m = ground.get<int>();
  std::vector<EdgeSet> faces;
  for (const json& f : facets) {
    if (!f.is_array()) throw std::invalid_argument("each facet must be an array of edge indices");
    EdgeSet s;
    for (const json& e : f) {
      if (!e.is_number_integer()) throw std::invalid_argument("edge indices must be integers");
      const long long i = e.get<long long>();
      if (i < 0 || i >= m) throw std::out_of_range("facet index " + std::to_string(i) + " outside ground");
      s.insert(static_cast<int>(i));
    }
    faces.push_back(s);
  }
  return SimplicialComplex::from_faces(m, faces);
}

SimplicialComplex complex_from_json_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("complex document is not JSON: ") + e.what());
  }
  return complex_from_json(doc);
}

}  // namespace nucleus
