#include "nucleus/suite.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

#include "nucleus/corpus.hpp"
#include "nucleus/errors.hpp"
#include "nucleus/nuclei.hpp"

namespace nucleus {

namespace {

enum Check : std::size_t {
  kElserIdentity,
  kElserSigns,
  kDuality,
  kDualityEmptyAnchor,
  kDualRanks,
  kConcentration,
  kPhi0Perfect,
  kPhiWellDefined,
  kPhiSound,
  kPhiLayersAcyclic,
  kDifferenceMembership,
  kFirstStep,
  kMinimalEdge,
  kSpanningTree,
  kChainSanity,
  kNucleusClosure,
  kDualInvolution,
  kAnchorMonotonicity,
  kCycleCounterexample,
  kRepairSound,
  kRepairMinimalEdge,
  kRepairSpanningTree,
  kEmptyAnchorCase,
  kCheckCount,
};

std::vector<CheckTally> fresh_tallies(const SuiteOptions& opt) {
  const bool strict = opt.policy == ConflictPolicy::kStrict;
  std::vector<CheckTally> t(kCheckCount);
  auto def = [&](Check c, const char* name, const char* criterion, bool asserted = true) {
    t[c].name = name;
    t[c].criterion = criterion;
    t[c].asserted = asserted;
  };
  def(kElserIdentity, "elser-identity", "1");
  def(kElserSigns, "elser-signs", "2");
  def(kDuality, "alexander-duality", "3");
  def(kDualityEmptyAnchor, "empty-anchor-duality", "", false);
  def(kDualRanks, "dual-rank-reflection", "3");
  def(kConcentration, "theorem-concentration", "4");
  def(kPhi0Perfect, "phi0-perfect", "5");
  def(kPhiWellDefined, "phi-well-defined", "6", strict);
  def(kPhiSound, "phi-sound", "6");
  def(kPhiLayersAcyclic, "phi-layers-acyclic", "6");
  def(kDifferenceMembership, "difference-membership", "8");
  def(kFirstStep, "first-step-characterization", "8");
  def(kMinimalEdge, "minimal-edge-law", "8");
  def(kSpanningTree, "spanning-tree-law", "8");
  def(kChainSanity, "chain-sanity", "9");
  def(kNucleusClosure, "nucleus-closure", "");
  def(kDualInvolution, "dual-involution", "");
  def(kAnchorMonotonicity, "anchor-monotonicity", "");
  def(kCycleCounterexample, "cycle-counterexample", "7");
  def(kRepairSound, "deferred-phi-sound", "", false);
  def(kRepairMinimalEdge, "deferred-minimal-edge-law", "", false);
  def(kRepairSpanningTree, "deferred-spanning-tree-law", "", false);
  def(kEmptyAnchorCase, "empty-anchor-conjecture-holds", "", false);
  return t;
}

std::string u_text(std::span<const int> u) {
  std::string out;
  for (int v : u) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::string dims_text(const CriticalCensus& c) {
  std::ostringstream os;
  os << "critical dims {";
  bool first = true;
  for (const auto& [d, faces] : c.by_dimension) {
    os << (first ? "" : ",") << d << ":" << faces.size();
    first = false;
  }
  os << "}";
  return os.str();
}

/// Accumulates tallies and rows for one graph.
class Recorder {
 public:
  explicit Recorder(const SuiteOptions& opt) : opt_(&opt), tallies_(fresh_tallies(opt)) {}

  void record(Check c, bool pass, const std::string& graph, std::span<const int> u,
              const std::string& detail = {}) {
    CheckTally& t = tallies_[c];
    if (pass) {
      ++t.passed;
    } else {
      ++t.failed;
      if (!t.witness) t.witness = Witness{graph, std::vector<int>(u.begin(), u.end()), detail};
    }
    if (opt_->collect_rows) rows_.push_back({graph, u_text(u), t.name, pass, detail});
  }

  std::vector<CheckTally>& tallies() { return tallies_; }
  std::vector<SuiteRow>& rows() { return rows_; }
  std::vector<TheoremReport>& theorems() { return theorems_; }

 private:
  const SuiteOptions* opt_;
  std::vector<CheckTally> tallies_;
  std::vector<SuiteRow> rows_;
  std::vector<TheoremReport> theorems_;
};

bool chain_sane(const SimplicialComplex& k, const HomologyProfile& h) {
  for (int d = 0; d + 1 < k.ground_size(); ++d) {
    if (!boundary_composite_vanishes(k, d)) return false;
  }
  return h.euler_characteristic() == reduced_euler_characteristic(k);
}

struct MorseVerdict {
  bool sound = true;
  bool layers_acyclic = true;
  std::string detail;
  bool first_step = true;
  bool minimal_edge = true;
  std::optional<bool> spanning_tree;  ///< two anchors only
};

MorseVerdict assess_run(const Graph& g, const MorseRun& run, std::span<const int> u,
                        const HomologyProfile& a_betti) {
  MorseVerdict v;
  const Matching& m = run.matching;
  const CriticalCensus census = critical_cells(m);
  const int target = g.vertex_count() - 3;
  const bool valid = is_valid_matching(m);
  const bool acyclic = valid && is_acyclic(m);
  bool dims = true;
  for (const auto& [d, faces] : census.by_dimension) dims = dims && d == target;
  const bool count = static_cast<long long>(census.total()) == a_betti.at(target);
  v.sound = valid && acyclic && dims && count;
  if (!v.sound) {
    std::ostringstream os;
    os << "valid=" << valid << " acyclic=" << acyclic << " " << dims_text(census)
       << " expected_dim=" << target << " betti=" << a_betti.at(target);
    v.detail = os.str();
  }
  for (std::size_t t = 1; t < run.layers.size() && valid; ++t) {
    const auto& faces = run.layers[t].faces;
    std::vector<MatchedPair> own;
    for (const MatchedPair& p : m.pairs) {
      if (p.layer == run.layers[t].layer) own.push_back(p);
    }
    auto in_layer = [&](EdgeSet s) { return std::binary_search(faces.begin(), faces.end(), s); };
    v.layers_acyclic = v.layers_acyclic && is_acyclic(m.domain, own, in_layer);
  }
  v.first_step = first_step_violations(g, run, u).empty();
  v.minimal_edge = minimal_edge_violations(g, run, u).empty();
  if (u.size() == 2) v.spanning_tree = spanning_tree_violations(g, census, u[1]).empty();
  return v;
}

void run_graph(const Graph& g, std::size_t graph_index, const std::vector<VertexSet>& anchor_sets,
               bool all_subsets, const SuiteOptions& opt, Recorder& rec) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const std::string name = g.to_inline();
  const std::vector<int> none;

  // Elser numbers.
  if (n <= opt.max_subset_vertices) {
    for (int k = 0; k <= opt.max_k; ++k) {
      const long long direct = elser_number(g, k).value;
      const long long via = elser_via_euler(g, k, opt.max_subset_vertices);
      rec.record(kElserIdentity, direct == via, name, none,
                 "k=" + std::to_string(k) + " direct=" + std::to_string(direct) +
                     " via_euler=" + std::to_string(via));
      const bool sign_ok = k == 0 ? direct <= 0 : k == 1 ? direct == 0 : direct >= 0;
      rec.record(kElserSigns, sign_ok, name, none,
                 "k=" + std::to_string(k) + " els=" + std::to_string(direct));
    }
  }

  // Complexes for every anchor set.
  const auto nuclei = enumerate_nuclei(g);
  const std::size_t universe = std::size_t{1} << n;
  std::vector<std::optional<SimplicialComplex>> delta(all_subsets ? universe : 0);
  std::vector<std::optional<SimplicialComplex>> acx(all_subsets ? universe : 0);
  std::vector<std::optional<HomologyProfile>> a_betti(universe);
  for (VertexSet u : anchor_sets) {
    const auto ue = u.elements();
    std::optional<SimplicialComplex> d;
    try {
      d = nucleus_complex(g, nuclei, u);
      rec.record(kNucleusClosure, true, name, ue);
    } catch (const std::logic_error& e) {
      rec.record(kNucleusClosure, false, name, ue, e.what());
      continue;
    }
    const SimplicialComplex a = a_complex(g, u);
    const HomologyProfile bd = reduced_betti(*d, opt.face_cap);
    const HomologyProfile ba = reduced_betti(a, opt.face_cap);
    rec.record(kChainSanity, chain_sane(*d, bd) && chain_sane(a, ba), name, ue);
    if (m <= opt.duality_max_edges) {
      const SimplicialComplex dual = alexander_dual(*d);
      if (u.empty()) {
        // A_{} is void by definition; the dual of the empty-anchor complex
        // is void only for a star.
        rec.record(kDualityEmptyAnchor, dual == a, name, ue);
        const HomologyProfile bdual = reduced_betti(dual, opt.face_cap);
        bool ranks = chain_sane(dual, bdual);
        for (int i = -1; i < m && ranks; ++i) ranks = bd.at(i) == bdual.at(m - i - 3);
        rec.record(kDualRanks, ranks, name, ue);
      } else {
        bool ok = dual == a;
        for (int i = -1; i < m && ok; ++i) ok = bd.at(i) == ba.at(m - i - 3);
        rec.record(kDuality, ok, name, ue);
      }
      rec.record(kDualInvolution, alexander_dual(alexander_dual(*d)) == *d, name, ue);
    }
    TheoremReport tr = assess_theorem(g, u, bd);
    if (tr.asserted) {
      std::ostringstream os;
      os << "support {";
      for (int k : tr.betti.support()) os << k << ' ';
      os << "} expected degree " << tr.concentration_degree;
      rec.record(kConcentration, tr.pass, name, ue, os.str());
    } else {
      const bool refuted = refutes_empty_anchor_case(g, bd);
      std::string support;
      for (int k : bd.support()) support += (support.empty() ? "" : ",") + std::to_string(k);
      rec.record(kEmptyAnchorCase, !refuted, name, ue,
                 std::string(refuted ? "conjecture case (i) counterexample: " : "") + "support {" +
                     support + "}");
    }
    if (!all_subsets) rec.theorems().push_back(std::move(tr));
    a_betti[u.bits()] = ba;
    if (all_subsets) {
      delta[u.bits()] = std::move(d);
      acx[u.bits()] = a;
    }
  }
  if (all_subsets) {
    for (std::size_t b = 0; b < universe; ++b) {
      const VertexSet u(static_cast<std::uint32_t>(b));
      for (int v = 0; v < n; ++v) {
        if (u.contains(v) || !delta[b] || !delta[u.with(v).bits()]) continue;
        const bool ok = delta[u.with(v).bits()]->is_subcomplex_of(*delta[b]) &&
                        acx[b]->is_subcomplex_of(*acx[u.with(v).bits()]);
        rec.record(kAnchorMonotonicity, ok, name, u.elements(), "added vertex " + std::to_string(v));
      }
    }
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (x == y) continue;
        const int xy[] = {x, y};
        rec.record(kDifferenceMembership, difference_membership_violations(g, x, y).empty(), name, xy);
      }
    }
  } else {
    for (VertexSet u : anchor_sets) {
      const auto ue = u.elements();
      for (std::size_t i = 0; i < ue.size(); ++i) {
        for (std::size_t j = 0; j < ue.size(); ++j) {
          if (i == j) continue;
          const int xy[] = {ue[i], ue[j]};
          rec.record(kDifferenceMembership, difference_membership_violations(g, xy[0], xy[1]).empty(),
                     name, xy);
        }
      }
    }
  }

  // Matchings under the original and permuted edge orders.
  std::vector<std::vector<int>> orders;
  orders.emplace_back(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) orders[0][static_cast<std::size_t>(i)] = i;
  auto extra = random_edge_orders(m, opt.edge_permutations,
                                  opt.seed + 0x9E3779B97F4A7C15ULL * (graph_index + 1));
  orders.insert(orders.end(), extra.begin(), extra.end());

  VertexSet singles;
  for (VertexSet u : anchor_sets) singles |= all_subsets ? g.all_vertices() : u;
  const bool strict = opt.policy == ConflictPolicy::kStrict;
  for (const auto& order : orders) {
    const Graph gp = g.with_edge_order(order);
    const std::string gname = gp.to_inline();
    singles.for_each([&](int x) {
      const Matching phi0 = grinberg_matching(gp, x);
      const bool ok = is_valid_matching(phi0) && is_acyclic(phi0) && critical_cells(phi0).empty();
      const int xs[] = {x};
      rec.record(kPhi0Perfect, ok, gname, xs);
    });
    for (VertexSet uset : anchor_sets) {
      if (uset.size() < 2) continue;
      const HomologyProfile& ab = *a_betti[uset.bits()];
      std::vector<int> u = uset.elements();
      const bool every_order = uset.size() <= opt.full_orderings_up_to;
      do {
        std::optional<MorseRun> strict_run;
        std::string anomaly;
        try {
          strict_run = extend_matching(gp, u, ConflictPolicy::kStrict);
        } catch (const AnomalyError& e) {
          anomaly = e.what();
        }
        rec.record(kPhiWellDefined, strict_run.has_value(), gname, u, anomaly);
        const MorseRun deferred =
            strict_run ? *strict_run : extend_matching(gp, u, ConflictPolicy::kDefer);
        const MorseVerdict dv = assess_run(gp, deferred, u, ab);
        if (strict_run || !strict) {
          rec.record(kPhiSound, dv.sound, gname, u, dv.detail);
          rec.record(kPhiLayersAcyclic, dv.layers_acyclic, gname, u);
          rec.record(kFirstStep, dv.first_step, gname, u);
          rec.record(kMinimalEdge, dv.minimal_edge, gname, u);
          if (dv.spanning_tree) rec.record(kSpanningTree, *dv.spanning_tree, gname, u);
        }
        if (strict) {
          rec.record(kRepairSound, dv.sound, gname, u, dv.detail);
          rec.record(kRepairMinimalEdge, dv.minimal_edge, gname, u);
          if (dv.spanning_tree) rec.record(kRepairSpanningTree, *dv.spanning_tree, gname, u);
        }
      } while (every_order && std::next_permutation(u.begin(), u.end()));
    }
  }
}

void merge_into(std::vector<CheckTally>& total, const std::vector<CheckTally>& part) {
  for (std::size_t c = 0; c < total.size(); ++c) {
    total[c].passed += part[c].passed;
    total[c].failed += part[c].failed;
    if (!total[c].witness && part[c].witness) total[c].witness = part[c].witness;
  }
}

void check_cycles(const SuiteOptions& opt, Recorder& rec) {
  for (int n : opt.cycle_lengths) {
    const Graph c = cycle_graph(n);
    const auto nuclei = enumerate_nuclei(c);
    const SimplicialComplex d = nucleus_complex(c, nuclei, VertexSet{});
    const HomologyProfile h = reduced_betti(d, opt.face_cap);
    // Census of complements: a nucleus with j edges leaves a face with n - j.
    std::vector<std::size_t> census(static_cast<std::size_t>(n) + 1, 0);
    for (const Nucleus& nu : nuclei) ++census[static_cast<std::size_t>(n - nu.edges.size())];
    // C_n itself, then paths with n - 1 and n - 2 edges.
    std::vector<std::size_t> described(census.size(), 0);
    described[0] = 1;
    described[1] = described[2] = static_cast<std::size_t>(n);
    const bool ok = h.at(1) == 1 && d.f_vector() == census && census == described && chain_sane(d, h);
    rec.record(kCycleCounterexample, ok, c.to_inline(), std::vector<int>{},
               "n=" + std::to_string(n) + " b1=" + std::to_string(h.at(1)) +
                   " faces=" + std::to_string(d.face_count()));
  }
}

SuiteReport run_many(std::span<const Graph> graphs, const std::vector<std::vector<VertexSet>>& anchors,
                     bool all_subsets, const SuiteOptions& opt) {
  const std::size_t count = graphs.size();
  std::vector<std::optional<Recorder>> results(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        Recorder rec(opt);
        run_graph(graphs[i], i, anchors[i], all_subsets, opt, rec);
        results[i] = std::move(rec);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  unsigned width = opt.threads != 0 ? opt.threads : std::max(1U, std::thread::hardware_concurrency());
  width = static_cast<unsigned>(std::min<std::size_t>(width, std::max<std::size_t>(count, 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < width; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  SuiteReport report;
  report.graph_count = count;
  report.checks = fresh_tallies(opt);
  for (auto& r : results) {
    merge_into(report.checks, r->tallies());
    auto& rows = r->rows();
    report.rows.insert(report.rows.end(), std::make_move_iterator(rows.begin()),
                       std::make_move_iterator(rows.end()));
    auto& th = r->theorems();
    report.theorems.insert(report.theorems.end(), th.begin(), th.end());
  }
  if (!opt.cycle_lengths.empty()) {
    Recorder rec(opt);
    check_cycles(opt, rec);
    merge_into(report.checks, rec.tallies());
    report.rows.insert(report.rows.end(), rec.rows().begin(), rec.rows().end());
  }
  return report;
}

}  // namespace

bool SuiteReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckTally& t) { return t.ok(); });
}

const CheckTally* SuiteReport::find(std::string_view name) const {
  for (const CheckTally& t : checks) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

bool refutes_empty_anchor_case(const Graph& g, const HomologyProfile& betti) {
  const int allowed = g.edge_count() - g.vertex_count() - 1;
  const auto support = betti.support();
  return std::any_of(support.begin(), support.end(), [&](int k) { return k != allowed; });
}

SuiteReport run_suite(std::span<const Graph> graphs, const SuiteOptions& options) {
  std::vector<std::vector<VertexSet>> anchors(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const std::uint32_t limit = std::uint32_t{1} << graphs[i].vertex_count();
    for (std::uint32_t b = 0; b < limit; ++b) anchors[i].emplace_back(b);
  }
  return run_many(graphs, anchors, true, options);
}

SuiteReport run_single(const Graph& g, std::optional<VertexSet> u, const SuiteOptions& options) {
  if (!u && g.vertex_count() > options.max_subset_vertices) {
    throw GuardError("vertex-subset enumeration over " + std::to_string(g.vertex_count()) +
                     " vertices exceeds guard " + std::to_string(options.max_subset_vertices));
  }
  std::vector<std::vector<VertexSet>> anchors(1);
  if (u) {
    anchors[0].push_back(*u);
  } else {
    const std::uint32_t limit = std::uint32_t{1} << g.vertex_count();
    for (std::uint32_t b = 0; b < limit; ++b) anchors[0].emplace_back(b);
  }
  return run_many(std::span<const Graph>(&g, 1), anchors, !u.has_value(), options);
}

}  // namespace nucleus
