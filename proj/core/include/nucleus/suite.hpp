#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nucleus/graph.hpp"
#include "nucleus/homology.hpp"
#include "nucleus/morse.hpp"
#include "nucleus/nuclei.hpp"

namespace nucleus {

/// Knobs of the invariant suite. Defaults mirror the desk-scale corpus.
struct SuiteOptions {
  int max_k = 4;                  ///< Elser exponents 0..max_k
  int duality_max_edges = 10;     ///< duality checked when |E| <= this
  int full_orderings_up_to = 3;   ///< every ordering of u when |u| <= this
  int edge_permutations = 3;      ///< extra random edge orders per graph
  std::uint64_t seed = 1;
  ConflictPolicy policy = ConflictPolicy::kStrict;
  unsigned threads = 0;           ///< 0 = hardware concurrency
  std::size_t face_cap = kDefaultFaceCap;
  int max_subset_vertices = kDefaultMaxSubsetVertices;
  std::vector<int> cycle_lengths; ///< cycle counterexample lengths to check
  bool collect_rows = false;      ///< keep one row per (graph, u, check)
};

/// First failing instance of a check.
struct Witness {
  std::string graph;  ///< inline edge list in the edge order used
  std::vector<int> u;
  std::string detail;
};

struct CheckTally {
  std::string name;
  std::string criterion;  ///< acceptance criterion it feeds, "" if none
  bool asserted = true;   ///< informational tallies never fail the run
  long long passed = 0;
  long long failed = 0;
  std::optional<Witness> witness;

  bool ok() const { return !asserted || failed == 0; }
};

struct SuiteRow {
  std::string graph;
  std::string u;
  std::string check;
  bool pass = true;
  std::string detail;
};

struct SuiteReport {
  std::size_t graph_count = 0;
  std::vector<CheckTally> checks;
  std::vector<SuiteRow> rows;
  /// Per-u homology reports (single-graph runs only).
  std::vector<TheoremReport> theorems;

  bool ok() const;
  const CheckTally* find(std::string_view name) const;
};

/// Full invariant suite over `graphs`: Elser identity and signs, duality,
/// homology concentration, single-anchor perfection, layered-matching
/// soundness and the structural laws, chain-level sanity, and the cycle
/// counterexample for options.cycle_lengths. Graphs are processed in parallel
/// and merged in input order, so the report is deterministic.
SuiteReport run_suite(std::span<const Graph> graphs, const SuiteOptions& options);

/// Same checks for one graph; when `u` is given the anchor-set checks run
/// for that set only.
SuiteReport run_single(const Graph& g, std::optional<VertexSet> u, const SuiteOptions& options);

/// True iff some nonzero reduced Betti number of the empty-anchor complex
/// sits outside degree |E| - |V| - 1.
bool refutes_empty_anchor_case(const Graph& g, const HomologyProfile& empty_anchor_betti);

}  // namespace nucleus
