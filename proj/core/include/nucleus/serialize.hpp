#pragma once

#include <nlohmann/json.hpp>
#include <string_view>

#include "nucleus/complex.hpp"
#include "nucleus/graph.hpp"
#include "nucleus/homology.hpp"
#include "nucleus/morse.hpp"
#include "nucleus/nuclei.hpp"

namespace nucleus {

using json = nlohmann::ordered_json;

/// Ascending 0-based edge indices.
json to_json(EdgeSet s);
json to_json(VertexSet s);
json to_json(const Graph& g);
/// {"ground": m, "facets": [[...], ...]}; the void complex has no facets,
/// the empty-face complex has the single facet [].
json to_json(const SimplicialComplex& k);
json to_json(const HomologyProfile& h);
json to_json(const ElserReport& r);
json to_json(const Nucleus& n);
/// [{"low": [...], "high": [...], "layer": t, "step": i}, ...]
json to_json(std::span<const MatchedPair> pairs);
/// [{"dim": k, "faces": [...]}, ...]
json to_json(const CriticalCensus& c);
json to_json(const LayerTrace& t);
json to_json(const TheoremReport& r);

/// Inverse of to_json(SimplicialComplex). Throws std::invalid_argument on a
/// schema violation and std::out_of_range on a facet outside the ground set.
SimplicialComplex complex_from_json(const json& doc);
SimplicialComplex complex_from_json_text(std::string_view text);

}  // namespace nucleus
