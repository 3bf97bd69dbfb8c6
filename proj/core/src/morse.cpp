#include "nucleus/morse.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "nucleus/errors.hpp"
#include "nucleus/nuclei.hpp"

namespace nucleus {

std::size_t CriticalCensus::total() const {
  std::size_t n = 0;
  for (const auto& [dim, faces] : by_dimension) n += faces.size();
  return n;
}

std::size_t CriticalCensus::count(int dim) const {
  const auto it = by_dimension.find(dim);
  return it == by_dimension.end() ? 0 : it->second.size();
}

std::size_t LayerTrace::conflict_count() const {
  std::size_t n = 0;
  for (const StepRecord& s : steps) n += s.conflicts.size();
  return n;
}

std::size_t MorseRun::conflict_count() const {
  std::size_t n = 0;
  for (const LayerTrace& l : layers) n += l.conflict_count();
  return n;
}

namespace {

/// Dense flag array over all 2^m subsets.
class FaceFlags {
 public:
  explicit FaceFlags(int ground) : bits_(std::size_t{1} << ground, 0) {}
  bool test(EdgeSet s) const { return bits_[s.bits()] != 0; }
  void set(EdgeSet s, bool on = true) { bits_[s.bits()] = on ? 1 : 0; }

 private:
  std::vector<unsigned char> bits_;
};

/// Edges whose removal keeps every anchor's shade equal to E(G).
bool keeps_anchor_shades_full(const Graph& g, VertexSet anchors, EdgeSet f) {
  const EdgeSet all = g.all_edges();
  bool full = true;
  anchors.for_each([&](int v) { full = full && shade(g, v, f) == all; });
  return full;
}

/// Leaf endpoints of e in G_tau may not be earlier anchors nor neighbors of a
/// vertex that tau leaves uncovered.
bool leaf_clause_holds(const Graph& g, EdgeSet tau, int e, VertexSet earlier_anchors) {
  const VertexSet leaves = leaf_endpoints_in(g, tau, e);
  if (leaves.empty() || leaves.intersects(earlier_anchors)) return false;
  const VertexSet uncovered = g.all_vertices() - vertices_of(g, tau);
  VertexSet guarded;
  uncovered.for_each([&](int z) { guarded |= g.neighbors(z); });
  return !leaves.intersects(guarded);
}

bool step_condition(const Graph& g, EdgeSet tau, int e, VertexSet earlier_anchors) {
  if (!is_bridge_in(g, tau, e)) return true;
  return leaf_clause_holds(g, tau, e, earlier_anchors);
}

std::string face_text(EdgeSet s) {
  std::string out = "{";
  for (int i : s.elements()) {
    if (out.size() > 1) out += ',';
    out += "e" + std::to_string(i + 1);
  }
  return out + "}";
}

}  // namespace

Matching grinberg_matching(const Graph& g, int x) {
  if (x < 0 || x >= g.vertex_count()) throw std::invalid_argument("anchor vertex out of range");
  Matching m{a_complex(g, VertexSet::singleton(x)), {}};
  const EdgeSet all = g.all_edges();
  for (EdgeSet f : m.domain.faces()) {
    const int sigma = (all - shade(g, x, f)).min();
    if (!f.contains(sigma)) m.pairs.push_back({f, f.with(sigma), 1, sigma + 1});
  }
  return m;
}

MorseRun extend_matching(const Graph& g, std::span<const int> u, ConflictPolicy policy) {
  if (u.empty()) throw std::invalid_argument("anchor list is empty");
  VertexSet anchors;
  for (int v : u) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("anchor vertex out of range");
    if (anchors.contains(v)) throw std::invalid_argument("anchor list repeats a vertex");
    anchors.insert(v);
  }

  MorseRun run;
  Matching base = grinberg_matching(g, u[0]);
  run.layers.push_back({1, u[0], base.domain.faces(), {}});
  run.matching.pairs = std::move(base.pairs);
  run.matching.domain = a_complex(g, anchors);

  const int m = g.edge_count();
  const EdgeSet all = g.all_edges();
  VertexSet earlier = VertexSet::singleton(u[0]);
  for (std::size_t t = 1; t < u.size(); ++t) {
    const int anchor = u[t];
    const int layer = static_cast<int>(t) + 1;
    LayerTrace trace{layer, anchor, {}, {}};
    FaceFlags in_layer(m);
    FaceFlags unpaired(m);
    for (EdgeSet f : run.matching.domain.faces()) {
      if (shade(g, anchor, f) != all && keeps_anchor_shades_full(g, earlier, f)) {
        trace.faces.push_back(f);
        in_layer.set(f);
        unpaired.set(f);
      }
    }

    for (int i = 0; i < m; ++i) {
      StepRecord rec;
      rec.step = i + 1;
      const EdgeSet single = EdgeSet::singleton(i);
      for (EdgeSet tau : trace.faces) {
        if (!tau.contains(i) || !unpaired.test(tau)) continue;
        EdgeSet partner;
        if (tau == single) {
          // Exceptional pairing of {e_i} with the empty face.
          if (!in_layer.test(EdgeSet{})) continue;
          partner = EdgeSet{};
        } else {
          if (!step_condition(g, tau, i, earlier)) continue;
          partner = tau.without(i);
          if (!in_layer.test(partner)) {
            throw AnomalyError("layer " + std::to_string(layer) + " step " + std::to_string(i + 1) +
                                   ": partner of " + face_text(tau) + " lies outside the layer",
                               layer, i + 1, tau.bits());
          }
        }
        if (!unpaired.test(partner)) {
          if (policy == ConflictPolicy::kStrict) {
            throw AnomalyError("layer " + std::to_string(layer) + " step " + std::to_string(i + 1) +
                                   ": " + face_text(tau) + " selected but " + face_text(partner) +
                                   " is already matched",
                               layer, i + 1, tau.bits());
          }
          rec.conflicts.push_back(tau);
          continue;
        }
        rec.paired.emplace_back(partner, tau);
      }
      // Within one step every low face has a unique high face (low + e_i), so
      // the selections above cannot collide with each other.
      for (const auto& [low, high] : rec.paired) {
        unpaired.set(low, false);
        unpaired.set(high, false);
        run.matching.pairs.push_back({low, high, layer, i + 1});
      }
      for (EdgeSet f : trace.faces) {
        if (unpaired.test(f)) rec.unpaired_after.push_back(f);
      }
      trace.steps.push_back(std::move(rec));
    }
    run.layers.push_back(std::move(trace));
    earlier.insert(anchor);
  }
  return run;
}

bool is_valid_matching(const SimplicialComplex& k, std::span<const MatchedPair> pairs) {
  std::vector<EdgeSet> used;
  used.reserve(pairs.size() * 2);
  for (const MatchedPair& p : pairs) {
    if (!k.contains(p.low) || !k.contains(p.high)) return false;
    if (!p.low.is_subset_of(p.high) || (p.high - p.low).size() != 1) return false;
    used.push_back(p.low);
    used.push_back(p.high);
  }
  std::sort(used.begin(), used.end());
  return std::adjacent_find(used.begin(), used.end()) == used.end();
}

bool is_acyclic(const SimplicialComplex& k, std::span<const MatchedPair> pairs,
                const std::function<bool(EdgeSet)>& restrict_to) {
  const std::size_t universe = std::size_t{1} << k.ground_size();
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  // up[low] = high, down_partner[high] = low for matched pairs
  std::vector<std::uint32_t> up(universe, kNone);
  std::vector<std::uint32_t> down_partner(universe, kNone);
  for (const MatchedPair& p : pairs) {
    up[p.low.bits()] = p.high.bits();
    down_partner[p.high.bits()] = p.low.bits();
  }
  auto active = [&](EdgeSet s) { return k.contains(s) && (!restrict_to || restrict_to(s)); };

  // Successors of a face: its matched coface if it is a low face, otherwise
  // every facet except its own matched partner. A directed cycle alternates
  // between two adjacent dimensions, so a low face on a cycle always leaves by
  // its up-arc and its down-arcs can be dropped.
  auto successors = [&](EdgeSet s, std::vector<EdgeSet>& out) {
    out.clear();
    if (up[s.bits()] != kNone) {
      const EdgeSet h(up[s.bits()]);
      if (active(h)) out.push_back(h);
      return;
    }
    s.for_each([&](int e) {
      const EdgeSet t = s.without(e);
      if (down_partner[s.bits()] != t.bits() && active(t)) out.push_back(t);
    });
  };

  enum : unsigned char { kWhite, kGray, kBlack };
  std::vector<unsigned char> color(universe, kWhite);
  struct Frame {
    EdgeSet face;
    std::vector<EdgeSet> next;
    std::size_t pos;
  };
  std::vector<Frame> stack;
  for (EdgeSet root : k.faces()) {
    if (color[root.bits()] != kWhite || !active(root)) continue;
    stack.push_back({root, {}, 0});
    successors(root, stack.back().next);
    color[root.bits()] = kGray;
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.pos == top.next.size()) {
        color[top.face.bits()] = kBlack;
        stack.pop_back();
        continue;
      }
      const EdgeSet nxt = top.next[top.pos++];
      if (color[nxt.bits()] == kGray) return false;
      if (color[nxt.bits()] == kWhite) {
        color[nxt.bits()] = kGray;
        stack.push_back({nxt, {}, 0});
        successors(nxt, stack.back().next);
      }
    }
  }
  return true;
}

CriticalCensus critical_cells(const SimplicialComplex& k, std::span<const MatchedPair> pairs) {
  std::vector<EdgeSet> used;
  for (const MatchedPair& p : pairs) {
    used.push_back(p.low);
    used.push_back(p.high);
  }
  std::sort(used.begin(), used.end());
  CriticalCensus census;
  for (EdgeSet s : k.faces()) {
    if (!std::binary_search(used.begin(), used.end(), s)) {
      census.by_dimension[s.size() - 1].push_back(s);
    }
  }
  return census;
}

TheoremReport verify_theorem(const Graph& g, VertexSet u, std::size_t face_cap) {
  return assess_theorem(g, u, reduced_betti(nucleus_complex(g, u), face_cap));
}

TheoremReport assess_theorem(const Graph& g, VertexSet u, HomologyProfile betti) {
  TheoremReport r;
  r.u = u;
  r.betti = std::move(betti);
  r.concentration_degree = g.edge_count() - g.vertex_count();
  if (u.empty()) {
    r.which = TheoremCase::kEmptyAnchor;
    return r;
  }
  r.asserted = true;
  if (u.size() == 1) {
    r.which = TheoremCase::kSingleAnchor;
    r.pass = r.betti.is_acyclic();
  } else {
    r.which = TheoremCase::kMultiAnchor;
    const auto support = r.betti.support();
    r.pass = std::all_of(support.begin(), support.end(),
                         [&](int k) { return k == r.concentration_degree; });
  }
  return r;
}

std::vector<EdgeSet> difference_membership_violations(const Graph& g, int x, int y) {
  const SimplicialComplex ax = a_complex(g, VertexSet::singleton(x));
  const SimplicialComplex ay = a_complex(g, VertexSet::singleton(y));
  std::vector<EdgeSet> bad;
  const std::uint32_t limit = std::uint32_t{1} << g.edge_count();
  for (std::uint32_t b = 0; b < limit; ++b) {
    const EdgeSet s(b);
    const bool in_difference = ay.contains(s) && !ax.contains(s);
    bool predicted;
    if (s.empty()) {
      predicted = g.incidence(x) == g.all_edges();
      // The characterization is one-directional for the empty face.
      if (in_difference && !predicted) bad.push_back(s);
      continue;
    }
    const VertexSet span = vertices_of(g, s);
    predicted = is_connected_edge_subgraph(g, s) && is_vertex_cover(g, span) && span.contains(x) &&
                !span.contains(y);
    if (predicted != in_difference) bad.push_back(s);
  }
  return bad;
}

std::vector<EdgeSet> first_step_violations(const Graph& g, const MorseRun& run,
                                           std::span<const int> u) {
  std::vector<EdgeSet> bad;
  if (u.size() < 2 || run.layers.size() < 2) return bad;
  const LayerTrace& layer = run.layers[1];
  if (layer.steps.empty()) return bad;
  const int x = u[0];
  const int y = u[1];
  const int e1 = 0;
  const VertexSet e1_ends = g.endpoints(e1);
  const StepRecord& first = layer.steps.front();

  std::vector<EdgeSet> predicted;
  for (EdgeSet tau : layer.faces) {
    bool keep;
    if (!tau.contains(e1)) {
      keep = e1_ends.contains(y);
    } else {
      const VertexSet leaves = leaf_endpoints_in(g, tau, e1);
      if (leaves.empty()) {
        keep = is_bridge_in(g, tau, e1);
      } else {
        const VertexSet uncovered = g.all_vertices() - vertices_of(g, tau);
        VertexSet guarded;
        uncovered.for_each([&](int z) { guarded |= g.neighbors(z); });
        keep = leaves.contains(x) || leaves.intersects(guarded);
      }
    }
    const bool exceptional =
        std::any_of(first.paired.begin(), first.paired.end(),
                    [&](const auto& p) { return p.first.empty() && (p.second == tau || tau.empty()); });
    if (keep && !exceptional) predicted.push_back(tau);
  }
  std::set_symmetric_difference(predicted.begin(), predicted.end(), first.unpaired_after.begin(),
                                first.unpaired_after.end(), std::back_inserter(bad));
  return bad;
}

std::vector<EdgeSet> minimal_edge_violations(const Graph& g, const MorseRun& run,
                                             std::span<const int> u) {
  std::vector<EdgeSet> bad;
  for (const MatchedPair& p : run.matching.pairs) {
    if (p.layer < 2) continue;
    VertexSet earlier;
    for (int s = 0; s + 1 < p.layer; ++s) earlier.insert(u[static_cast<std::size_t>(s)]);
    int least = -1;
    for (int e : p.high.elements()) {
      if (keeps_anchor_shades_full(g, earlier, p.high.without(e))) {
        least = e;
        break;
      }
    }
    if (least != (p.high - p.low).min()) bad.push_back(p.high);
  }
  return bad;
}

std::vector<EdgeSet> spanning_tree_violations(const Graph& g, const CriticalCensus& census, int y) {
  std::vector<EdgeSet> bad;
  const VertexSet target = g.all_vertices().without(y);
  for (const auto& [dim, faces] : census.by_dimension) {
    for (EdgeSet sigma : faces) {
      const bool spanning_tree = !sigma.empty() && sigma.size() == g.vertex_count() - 2 &&
                                 vertices_of(g, sigma) == target &&
                                 is_connected_edge_subgraph(g, sigma);
      if (!spanning_tree) {
        bad.push_back(sigma);
        continue;
      }
      for (int j = 0; j < g.edge_count(); ++j) {
        if (sigma.contains(j) || g.endpoints(j).contains(y)) continue;
        // Fundamental cycle of e_j: the tree edges that become non-bridges.
        const EdgeSet with_j = sigma.with(j);
        bool has_smaller = false;
        sigma.for_each([&](int i) {
          if (i < j && !is_bridge_in(g, with_j, i)) has_smaller = true;
        });
        if (!has_smaller) {
          bad.push_back(sigma);
          break;
        }
      }
    }
  }
  return bad;
}

}  // namespace nucleus
