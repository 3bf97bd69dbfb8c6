#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nucleus/complex.hpp"
#include "nucleus/graph.hpp"
#include "nucleus/homology.hpp"

namespace nucleus {

/// One arrow of a discrete vector field: `high` = `low` plus one edge.
struct MatchedPair {
  EdgeSet low;
  EdgeSet high;
  int layer = 1;  ///< 1 = the single-anchor matching; t >= 2 = anchor x_t
  int step = 0;   ///< 1-based index of the edge in high but not in low
  bool operator==(const MatchedPair&) const = default;
};

/// A discrete vector field on `domain`.
struct Matching {
  SimplicialComplex domain;
  std::vector<MatchedPair> pairs;
};

/// Unpaired faces grouped by dimension (the empty face has dimension -1).
struct CriticalCensus {
  std::map<int, std::vector<EdgeSet>> by_dimension;

  std::size_t total() const;
  std::size_t count(int dim) const;
  bool empty() const { return total() == 0; }
};

/// What the layered construction does when a selected face's partner has
/// already been matched at an earlier step.
enum class ConflictPolicy {
  kStrict,  ///< throw AnomalyError
  kDefer,   ///< leave the face unmatched for later steps; record the event
};

struct StepRecord {
  int step = 0;  ///< 1-based edge index
  std::vector<std::pair<EdgeSet, EdgeSet>> paired;  ///< (low, high)
  /// Faces whose step condition held but whose partner was already taken.
  std::vector<EdgeSet> conflicts;
  /// Unpaired faces of the layer after this step, ascending.
  std::vector<EdgeSet> unpaired_after;
};

struct LayerTrace {
  int layer = 1;
  int anchor = 0;
  /// Faces in the anchor's complex but in no earlier anchor's, ascending.
  std::vector<EdgeSet> faces;
  /// Empty for layer 1.
  std::vector<StepRecord> steps;

  std::size_t conflict_count() const;
};

struct MorseRun {
  Matching matching;
  std::vector<LayerTrace> layers;

  std::size_t conflict_count() const;
};

/// Pairs each face F of the x-complex with F xor {s(F)}, s(F) the least edge
/// outside shade(g, x, F).
Matching grinberg_matching(const Graph& g, int x);

/// Layer 1 is grinberg_matching(g, u[0]); layer t >= 2 matches the faces new
/// to u[t-1] by the edge-by-edge rule (non-bridge, or leaf-edge without an
/// earlier anchor or a neighbor of an uncovered vertex as a leaf, plus the
/// ({e_i}, {}) exception). Throws std::invalid_argument on empty or repeated u,
/// AnomalyError on a partner conflict under kStrict, and AnomalyError under
/// either policy if a selected partner falls outside the layer.
MorseRun extend_matching(const Graph& g, std::span<const int> u,
                         ConflictPolicy policy = ConflictPolicy::kStrict);

/// Every pair is a (face, cofacet) couple inside `k`, and no face repeats.
bool is_valid_matching(const SimplicialComplex& k, std::span<const MatchedPair> pairs);
inline bool is_valid_matching(const Matching& m) { return is_valid_matching(m.domain, m.pairs); }

/// No directed cycle in the modified Hasse diagram (matched arcs point up,
/// all other cover relations point down). When `restrict_to` is given only
/// faces it accepts take part. Expects a valid matching.
bool is_acyclic(const SimplicialComplex& k, std::span<const MatchedPair> pairs,
                const std::function<bool(EdgeSet)>& restrict_to = {});
inline bool is_acyclic(const Matching& m) { return is_acyclic(m.domain, m.pairs); }

CriticalCensus critical_cells(const SimplicialComplex& k, std::span<const MatchedPair> pairs);
inline CriticalCensus critical_cells(const Matching& m) { return critical_cells(m.domain, m.pairs); }

enum class TheoremCase {
  kEmptyAnchor,   ///< u = {}: values reported, nothing asserted
  kSingleAnchor,  ///< |u| = 1: every reduced Betti number vanishes
  kMultiAnchor,   ///< |u| > 1: support inside {|E| - |V|}
};

struct TheoremReport {
  VertexSet u;
  TheoremCase which = TheoremCase::kEmptyAnchor;
  HomologyProfile betti;
  int concentration_degree = 0;  ///< |E| - |V|
  bool asserted = false;
  bool pass = true;
};

TheoremReport verify_theorem(const Graph& g, VertexSet u, std::size_t face_cap = kDefaultFaceCap);
/// Classifies already-computed reduced Betti numbers of the u-nucleus complex.
TheoremReport assess_theorem(const Graph& g, VertexSet u, HomologyProfile betti);

// Structural facts about the layered construction. Each returns the
// offending faces; an empty result means the fact holds.

/// For the pair of anchors (x, y): a nonempty face lies in the y-complex but
/// not the x-complex iff it is connected, covers, contains x and avoids y; the
/// empty face lies there only when x is a star center.
std::vector<EdgeSet> difference_membership_violations(const Graph& g, int x, int y);

/// Layer-2 unpaired set after step 1 versus its four-case description
/// (faces consumed by the ({e_1}, {}) exception excluded). Returns the
/// symmetric difference of the two sets.
std::vector<EdgeSet> first_step_violations(const Graph& g, const MorseRun& run,
                                           std::span<const int> u);

/// Pairs of layer t >= 2 whose removed edge is not the least edge of `high`
/// whose removal keeps every earlier anchor's shade full. Returns `high`.
std::vector<EdgeSet> minimal_edge_violations(const Graph& g, const MorseRun& run,
                                             std::span<const int> u);

/// For two anchors (x, y): critical faces that are not spanning trees of
/// G - y, or that admit an outside edge e_j (avoiding y) whose fundamental
/// cycle has no edge below e_j.
std::vector<EdgeSet> spanning_tree_violations(const Graph& g, const CriticalCensus& census, int y);

}  // namespace nucleus
