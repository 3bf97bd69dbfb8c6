// nucleus: command-line front end for the nucleus library.
//
// Exit codes: 0 success, 1 verification failure, 2 construction anomaly,
// 64 usage or parse error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nucleus/complex.hpp"
#include "nucleus/corpus.hpp"
#include "nucleus/errors.hpp"
#include "nucleus/homology.hpp"
#include "nucleus/morse.hpp"
#include "nucleus/nuclei.hpp"
#include "nucleus/serialize.hpp"
#include "nucleus/suite.hpp"

using namespace nucleus;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitAnomaly = 2;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string edges;
  std::string graph_file;
  std::string complex_file;
  std::optional<std::string> u;
  int k = 0;
  std::string format = "json";
  int max_edges = kDefaultMaxEdges;
  int max_subset_vertices = kDefaultMaxSubsetVertices;
  std::size_t face_cap = kDefaultFaceCap;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  int corpus = 0;
  int permutations = 3;
  int max_k = 4;
  std::string on_conflict = "strict";
  std::string which = "nucleus";
};

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Graph load_graph(const Config& c) {
  ParseOptions opts;
  opts.max_edges = c.max_edges;
  if (!c.edges.empty() && !c.graph_file.empty()) throw UsageError("give --edges or --graph, not both");
  if (!c.edges.empty()) return parse_inline_edges(c.edges, opts);
  if (!c.graph_file.empty()) return parse_graph(read_source(c.graph_file), opts);
  throw UsageError("a graph is required (--edges or --graph)");
}

std::vector<int> parse_vertex_list(const std::string& text, const Graph& g) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto b = tok.find_first_not_of(" \t");
    if (b == std::string::npos) {
      throw UsageError("empty entry in vertex list \"" + text + "\"");
    }
    tok = tok.substr(b, tok.find_last_not_of(" \t") + 1 - b);
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw UsageError("bad vertex \"" + tok + "\"");
    if (v < 0 || v >= g.vertex_count()) {
      throw UsageError("vertex " + tok + " out of range 0.." + std::to_string(g.vertex_count() - 1));
    }
    for (int w : out) {
      if (w == v) throw UsageError("vertex " + tok + " repeated in --u");
    }
    out.push_back(v);
  }
  return out;
}

VertexSet to_set(const std::vector<int>& vs) {
  VertexSet s;
  for (int v : vs) s.insert(v);
  return s;
}

VertexSet required_u(const Config& c, const Graph& g) {
  if (!c.u) throw UsageError("--u is required");
  return to_set(parse_vertex_list(*c.u, g));
}

std::string list_text(const std::vector<int>& xs) {
  std::string out;
  for (int x : xs) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

std::string set_text(EdgeSet s) { return list_text(s.elements()); }
std::string set_text(VertexSet s) { return list_text(s.elements()); }

std::string faces_text(const std::vector<EdgeSet>& faces) {
  std::string out;
  for (EdgeSet f : faces) {
    if (!out.empty()) out += ' ';
    out += '{' + set_text(f) + '}';
  }
  return out;
}

bool tsv(const Config& c) { return c.format == "tsv"; }

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

json betti_list(const HomologyProfile& h) {
  json out = json::array();
  for (int k = h.min_degree(); k <= h.max_degree(); ++k) out.push_back(h.at(k));
  return out;
}

void print_betti_tsv(const HomologyProfile& h) {
  std::cout << "degree\tbetti\n";
  for (int k = h.min_degree(); k <= h.max_degree(); ++k) std::cout << k << '\t' << h.at(k) << '\n';
}

int cmd_nuclei(const Config& c) {
  const Graph g = load_graph(c);
  const auto nuclei = enumerate_nuclei(g);
  if (tsv(c)) {
    std::cout << "edges\tvertices\n";
    for (const Nucleus& n : nuclei) std::cout << set_text(n.edges) << '\t' << set_text(n.vertices) << '\n';
    return kExitOk;
  }
  json list = json::array();
  for (const Nucleus& n : nuclei) list.push_back(to_json(n));
  emit({{"graph", to_json(g)}, {"count", nuclei.size()}, {"nuclei", std::move(list)}});
  return kExitOk;
}

int cmd_elser(const Config& c) {
  const Graph g = load_graph(c);
  if (c.k < 0) throw UsageError("--k must be nonnegative");
  const ElserReport r = elser_number(g, c.k);
  std::optional<long long> via;
  if (g.vertex_count() <= c.max_subset_vertices) via = elser_via_euler(g, c.k, c.max_subset_vertices);
  const bool identity_ok = !via || *via == r.value;
  if (tsv(c)) {
    std::cout << "k\tvalue\tvia_euler\tidentity_ok\n"
              << c.k << '\t' << r.value << '\t' << (via ? std::to_string(*via) : "") << '\t'
              << (via ? (identity_ok ? "true" : "false") : "") << '\n';
  } else {
    json doc = to_json(r);
    doc["graph"] = to_json(g);
    doc["via_euler"] = via ? json(*via) : json(nullptr);
    doc["identity_ok"] = via ? json(identity_ok) : json(nullptr);
    emit(doc);
  }
  return identity_ok ? kExitOk : kExitFailed;
}

void emit_complex(const Config& c, const Graph& g, VertexSet u, const SimplicialComplex& k) {
  if (tsv(c)) {
    std::cout << "facet\n";
    for (EdgeSet f : k.facets()) std::cout << set_text(f) << '\n';
    return;
  }
  json doc = to_json(k);
  doc["graph"] = to_json(g);
  doc["u"] = to_json(u);
  doc["dimension"] = k.dimension();
  doc["f_vector"] = k.f_vector();
  emit(doc);
}

int cmd_complex(const Config& c) {
  const Graph g = load_graph(c);
  const VertexSet u = required_u(c, g);
  emit_complex(c, g, u, nucleus_complex(g, u));
  return kExitOk;
}

int cmd_acomplex(const Config& c) {
  const Graph g = load_graph(c);
  const VertexSet u = required_u(c, g);
  emit_complex(c, g, u, a_complex(g, u));
  return kExitOk;
}

int cmd_homology(const Config& c) {
  std::optional<SimplicialComplex> k;
  if (!c.complex_file.empty()) {
    if (!c.edges.empty() || !c.graph_file.empty()) throw UsageError("--complex excludes a graph source");
    try {
      k = complex_from_json_text(read_source(c.complex_file));
    } catch (const json::exception& e) {
      throw UsageError(std::string("complex document: ") + e.what());
    }
  } else {
    const Graph g = load_graph(c);
    const VertexSet u = required_u(c, g);
    if (c.which == "nucleus") {
      k = nucleus_complex(g, u);
    } else if (c.which == "a") {
      k = a_complex(g, u);
    } else {
      throw UsageError("--of must be nucleus or a");
    }
  }
  const HomologyProfile h = reduced_betti(*k, c.face_cap);
  if (tsv(c)) {
    print_betti_tsv(h);
    return kExitOk;
  }
  json doc = to_json(h);
  doc["euler_characteristic"] = reduced_euler_characteristic(*k);
  emit(doc);
  return kExitOk;
}

int cmd_duality(const Config& c) {
  const Graph g = load_graph(c);
  const VertexSet u = required_u(c, g);
  const SimplicialComplex d = nucleus_complex(g, u);
  const SimplicialComplex a = a_complex(g, u);
  const bool faces_ok = alexander_dual(d) == a;
  const HomologyProfile hd = reduced_betti(d, c.face_cap);
  const HomologyProfile ha = reduced_betti(a, c.face_cap);
  const int m = g.edge_count();
  bool betti_ok = true;
  for (int i = -1; i < m; ++i) betti_ok = betti_ok && hd.at(i) == ha.at(m - i - 3);
  if (tsv(c)) {
    std::cout << "degree\tnucleus_betti\tdual_degree\ta_betti\n";
    for (int i = -1; i < m; ++i) std::cout << i << '\t' << hd.at(i) << '\t' << m - i - 3 << '\t' << ha.at(m - i - 3) << '\n';
  } else {
    emit({{"graph", to_json(g)},
          {"u", to_json(u)},
          {"faces_match", faces_ok},
          {"betti_match", betti_ok},
          {"nucleus_betti", betti_list(hd)},
          {"a_betti", betti_list(ha)}});
  }
  return faces_ok && betti_ok ? kExitOk : kExitFailed;
}

ConflictPolicy policy_of(const Config& c) {
  if (c.on_conflict == "strict") return ConflictPolicy::kStrict;
  if (c.on_conflict == "defer") return ConflictPolicy::kDefer;
  throw UsageError("--on-conflict must be strict or defer");
}

int cmd_morse(const Config& c) {
  const Graph g = load_graph(c);
  if (!c.u) throw UsageError("--u is required");
  const std::vector<int> u = parse_vertex_list(*c.u, g);
  if (u.empty()) throw UsageError("morse needs a nonempty --u");
  MorseRun run;
  try {
    run = extend_matching(g, u, policy_of(c));
  } catch (const AnomalyError& e) {
    json doc = {{"graph", to_json(g)},
                {"u", u},
                {"anomaly", e.what()},
                {"layer", e.layer()},
                {"step", e.step()},
                {"face", to_json(EdgeSet(e.face_bits()))}};
    if (tsv(c)) {
      std::cout << "anomaly\tlayer\tstep\tface\n"
                << e.what() << '\t' << e.layer() << '\t' << e.step() << '\t' << set_text(EdgeSet(e.face_bits())) << '\n';
    } else {
      emit(doc);
    }
    std::cerr << "nucleus: construction anomaly: " << e.what() << '\n';
    return kExitAnomaly;
  }
  const Matching& m = run.matching;
  const bool valid = is_valid_matching(m);
  const bool acyclic = valid && is_acyclic(m);
  const CriticalCensus census = critical_cells(m);
  const HomologyProfile ha = reduced_betti(m.domain, c.face_cap);
  const int target = g.vertex_count() - 3;
  bool dims_ok = true;
  for (const auto& [d, faces] : census.by_dimension) dims_ok = dims_ok && (u.size() >= 2 && d == target);
  const long long expected = u.size() >= 2 ? ha.at(target) : 0;
  const bool count_ok = static_cast<long long>(census.total()) == expected;
  const bool ok = valid && acyclic && dims_ok && count_ok;

  if (tsv(c)) {
    std::cout << "layer\tstep\tlow\thigh\n";
    for (const MatchedPair& p : m.pairs) {
      std::cout << p.layer << '\t' << p.step << '\t' << set_text(p.low) << '\t' << set_text(p.high) << '\n';
    }
    std::cout << "#critical";
    for (const auto& [d, faces] : census.by_dimension) std::cout << '\t' << d << ':' << faces_text(faces);
    std::cout << "\n#valid\t" << valid << "\n#acyclic\t" << acyclic << "\n#betti_match\t" << (dims_ok && count_ok)
              << "\n#conflicts\t" << run.conflict_count() << '\n';
  } else {
    json layers = json::array();
    for (const LayerTrace& t : run.layers) layers.push_back(to_json(t));
    emit({{"graph", to_json(g)},
          {"u", u},
          {"policy", c.on_conflict},
          {"pairs", to_json(m.pairs)},
          {"pair_count", m.pairs.size()},
          {"valid", valid},
          {"acyclic", acyclic},
          {"critical", to_json(census)},
          {"critical_count", census.total()},
          {"conflicts", run.conflict_count()},
          {"betti",
           {{"degree", target},
            {"expected", expected},
            {"a_homology", to_json(ha)},
            {"match", dims_ok && count_ok}}},
          {"layers", std::move(layers)}});
  }
  return ok ? kExitOk : kExitFailed;
}

json witness_json(const Witness& w) { return {{"graph", w.graph}, {"u", w.u}, {"detail", w.detail}}; }

int cmd_verify(const Config& c) {
  SuiteOptions opt;
  opt.max_k = c.max_k;
  opt.edge_permutations = c.permutations;
  opt.seed = c.seed;
  opt.policy = policy_of(c);
  opt.threads = c.threads;
  opt.face_cap = c.face_cap;
  opt.max_subset_vertices = c.max_subset_vertices;
  opt.collect_rows = tsv(c);
  if (opt.max_k < 0 || opt.edge_permutations < 0) throw UsageError("--max-k and --permutations must be nonnegative");

  SuiteReport report;
  std::vector<std::string> flags;
  std::optional<Graph> single;
  if (c.corpus != 0) {
    if (!c.edges.empty() || !c.graph_file.empty()) throw UsageError("--corpus excludes a graph source");
    if (c.corpus < 3 || c.corpus > 6) throw UsageError("--corpus must be in 3..6");
    opt.cycle_lengths = {3, 4, 5, 6};
    const auto graphs = corpus_up_to(c.corpus);
    report = run_suite(graphs, opt);
  } else {
    single = load_graph(c);
    std::optional<VertexSet> u;
    if (c.u) u = to_set(parse_vertex_list(*c.u, *single));
    report = run_single(*single, u, opt);
    for (const TheoremReport& t : report.theorems) {
      if (t.which == TheoremCase::kEmptyAnchor && refutes_empty_anchor_case(*single, t.betti)) {
        flags.emplace_back("conjecture case (i) counterexample");
      }
    }
  }

  const CheckTally* first_failure = nullptr;
  for (const CheckTally& t : report.checks) {
    if (!t.ok()) {
      first_failure = &t;
      break;
    }
  }

  if (tsv(c)) {
    std::cout << "graph\tu\tcheck\tpass\tdetail\n";
    for (const SuiteRow& r : report.rows) {
      std::cout << r.graph << '\t' << r.u << '\t' << r.check << '\t' << (r.pass ? "pass" : "fail") << '\t'
                << r.detail << '\n';
    }
  } else {
    json checks = json::array();
    for (const CheckTally& t : report.checks) {
      if (t.passed + t.failed == 0) continue;
      json entry = {{"check", t.name},
                    {"criterion", t.criterion},
                    {"asserted", t.asserted},
                    {"passed", t.passed},
                    {"failed", t.failed}};
      if (t.witness) entry["witness"] = witness_json(*t.witness);
      checks.push_back(std::move(entry));
    }
    json doc = {{"graphs", report.graph_count},
                {"policy", c.on_conflict},
                {"ok", report.ok()},
                {"checks", std::move(checks)}};
    if (single) {
      doc["graph"] = to_json(*single);
      json homology = json::array();
      for (const TheoremReport& t : report.theorems) homology.push_back(to_json(t));
      doc["homology"] = std::move(homology);
      doc["flags"] = flags;
    }
    if (first_failure) {
      doc["first_failure"] = {{"check", first_failure->name}, {"witness", witness_json(*first_failure->witness)}};
    }
    emit(doc);
  }
  if (first_failure) {
    const Witness& w = *first_failure->witness;
    std::cerr << "nucleus: check " << first_failure->name << " failed on graph " << w.graph << " u=("
              << list_text(w.u) << ")" << (w.detail.empty() ? "" : ": " + w.detail) << '\n';
    return kExitFailed;
  }
  return kExitOk;
}

int max_edges_from_env() {
  const char* env = std::getenv("NUCLEUS_MAX_EDGES");
  if (env == nullptr || *env == '\0') return kDefaultMaxEdges;
  try {
    std::size_t used = 0;
    const int v = std::stoi(env, &used);
    if (used == std::string(env).size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("NUCLEUS_MAX_EDGES must be a positive integer, got \"") + env + "\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nuclei complexes, Elser numbers, homology and discrete Morse matchings of small graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "nucleus 0.1.0");
  Config c;

  auto graph_opts = [&](CLI::App* sub) {
    sub->add_option("--edges", c.edges, "inline edge list, e.g. \"0-1,1-2,0-2\"");
    sub->add_option("--graph", c.graph_file, "edge-list or graph6 file ('-' for stdin)");
    sub->add_option("--max-edges", c.max_edges, "edge guard (default 20, or NUCLEUS_MAX_EDGES)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--face-cap", c.face_cap, "largest complex homology will process")->check(CLI::PositiveNumber);
    sub->add_option("--max-subset-vertices", c.max_subset_vertices, "guard for walks over all vertex subsets")
        ->check(CLI::PositiveNumber);
  };
  auto u_opt = [&](CLI::App* sub, const char* help) { sub->add_option("--u", c.u, help); };

  auto* nuclei = app.add_subcommand("nuclei", "list every nucleus");
  graph_opts(nuclei);
  auto* elser = app.add_subcommand("elser", "Elser number, directly and through Euler characteristics");
  graph_opts(elser);
  elser->add_option("--k", c.k, "exponent")->required();
  auto* complex = app.add_subcommand("complex", "facets of the U-nucleus complex");
  graph_opts(complex);
  u_opt(complex, "anchor vertices, comma separated (\"\" for none)");
  auto* acomplex = app.add_subcommand("acomplex", "facets of the shade complex A_U");
  graph_opts(acomplex);
  u_opt(acomplex, "anchor vertices, comma separated");
  auto* homology = app.add_subcommand("homology", "reduced Betti numbers over Q");
  graph_opts(homology);
  u_opt(homology, "anchor vertices, comma separated (\"\" for none)");
  homology->add_option("--of", c.which, "which complex of the graph")->check(CLI::IsMember({"nucleus", "a"}));
  homology->add_option("--complex", c.complex_file, "complex document instead of a graph");
  auto* duality = app.add_subcommand("duality", "check the nucleus complex against the dual of A_U");
  graph_opts(duality);
  u_opt(duality, "anchor vertices, comma separated (\"\" for none)");
  auto* morse = app.add_subcommand("morse", "layered matching on A_U with its critical census");
  graph_opts(morse);
  u_opt(morse, "ordered anchor vertices, comma separated");
  morse->add_option("--on-conflict", c.on_conflict, "strict or defer")->check(CLI::IsMember({"strict", "defer"}));
  auto* verify = app.add_subcommand("verify", "run the invariant suite on one graph or a corpus");
  graph_opts(verify);
  u_opt(verify, "single anchor set (\"\" for none); omitted means every subset");
  verify->add_option("--corpus", c.corpus, "all labeled connected graphs on 3..N vertices");
  verify->add_option("--seed", c.seed, "seed for edge-order permutations");
  verify->add_option("--threads", c.threads, "worker threads (0 = all cores)");
  verify->add_option("--permutations", c.permutations, "random edge orders per graph");
  verify->add_option("--max-k", c.max_k, "largest Elser exponent");
  verify->add_option("--on-conflict", c.on_conflict, "strict or defer")->check(CLI::IsMember({"strict", "defer"}));

  try {
    c.max_edges = max_edges_from_env();
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "nucleus: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*nuclei) return cmd_nuclei(c);
    if (*elser) return cmd_elser(c);
    if (*complex) return cmd_complex(c);
    if (*acomplex) return cmd_acomplex(c);
    if (*homology) return cmd_homology(c);
    if (*duality) return cmd_duality(c);
    if (*morse) return cmd_morse(c);
    if (*verify) return cmd_verify(c);
  } catch (const ParseError& e) {
    std::cerr << "nucleus: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "nucleus: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GuardError& e) {
    std::cerr << "nucleus: guard: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "nucleus: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "nucleus: " << e.what() << '\n';
    return kExitUsage;
  } catch (const AnomalyError& e) {
    std::cerr << "nucleus: construction anomaly: " << e.what() << '\n';
    return kExitAnomaly;
  }
  return kExitUsage;
}
