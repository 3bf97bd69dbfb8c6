#include "nucleus/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "nucleus/errors.hpp"

namespace nucleus {

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kMalformedLine: return "malformed-line";
    case ParseErrorKind::kSelfLoop: return "self-loop";
    case ParseErrorKind::kDuplicateEdge: return "duplicate-edge";
    case ParseErrorKind::kVertexOutOfRange: return "vertex-out-of-range";
    case ParseErrorKind::kDisconnected: return "disconnected";
    case ParseErrorKind::kTooFewVertices: return "too-few-vertices";
    case ParseErrorKind::kTooManyEdges: return "too-many-edges";
    case ParseErrorKind::kTooManyVertices: return "too-many-vertices";
  }
  return "unknown";
}

namespace {

std::string edge_text(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

}  // namespace

Graph::Graph(int vertex_count, std::vector<Edge> edges, const ParseOptions& options)
    : n_(vertex_count), edges_(std::move(edges)) {
  auto too_few = [&] {
    return ParseError(ParseErrorKind::kTooFewVertices,
                      "graph has " + std::to_string(n_) + " vertices, at least 3 required");
  };
  if (n_ < 1) throw too_few();
  if (n_ > VertexSet::kCapacity) {
    throw ParseError(ParseErrorKind::kTooManyVertices,
                     "graph has " + std::to_string(n_) + " vertices, at most " +
                         std::to_string(VertexSet::kCapacity) + " supported");
  }
  const int cap = std::min(options.max_edges, kMaxGroundSize);
  if (static_cast<int>(edges_.size()) > cap) {
    throw ParseError(ParseErrorKind::kTooManyEdges, "graph has " + std::to_string(edges_.size()) +
                                                        " edges, limit is " + std::to_string(cap));
  }
  incidence_.assign(static_cast<std::size_t>(n_), EdgeSet{});
  neighbors_.assign(static_cast<std::size_t>(n_), VertexSet{});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
      throw ParseError(ParseErrorKind::kVertexOutOfRange,
                       "edge " + edge_text(e) + " outside 0.." + std::to_string(n_ - 1));
    }
    if (e.u == e.v) throw ParseError(ParseErrorKind::kSelfLoop, "edge " + edge_text(e));
    if (neighbors_[static_cast<std::size_t>(e.u)].contains(e.v)) {
      throw ParseError(ParseErrorKind::kDuplicateEdge, "edge " + edge_text(e));
    }
    const int idx = static_cast<int>(i);
    incidence_[static_cast<std::size_t>(e.u)].insert(idx);
    incidence_[static_cast<std::size_t>(e.v)].insert(idx);
    neighbors_[static_cast<std::size_t>(e.u)].insert(e.v);
    neighbors_[static_cast<std::size_t>(e.v)].insert(e.u);
  }
  // edge defects are reported ahead of the vertex count
  if (n_ < 3) throw too_few();
  if (component_of(*this, 0, all_edges()) != all_vertices()) {
    throw ParseError(ParseErrorKind::kDisconnected, "graph on " + std::to_string(n_) +
                                                        " vertices is not connected");
  }
}

Graph Graph::with_edge_order(std::span<const int> order) const {
  if (order.size() != edges_.size()) throw std::invalid_argument("edge order has wrong length");
  std::vector<Edge> reordered;
  reordered.reserve(edges_.size());
  EdgeSet seen;
  for (int i : order) {
    if (i < 0 || i >= edge_count() || seen.contains(i)) {
      throw std::invalid_argument("edge order is not a permutation");
    }
    seen.insert(i);
    reordered.push_back(edges_[static_cast<std::size_t>(i)]);
  }
  return Graph(n_, std::move(reordered), ParseOptions{kMaxGroundSize});
}

std::string Graph::to_inline() const {
  std::string out;
  for (const Edge& e : edges_) {
    if (!out.empty()) out += ',';
    out += edge_text(e);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_nonneg(std::string_view token, int& out) {
  if (token.empty()) return false;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc{} && ptr == end && out >= 0;
}

bool looks_like_graph6(std::string_view line) {
  if (line.starts_with(">>graph6<<")) return true;
  if (line.empty() || line.find_first_of(" \t") != std::string_view::npos) return false;
  return std::all_of(line.begin(), line.end(), [](char c) { return c >= 63 && c <= 126; });
}

}  // namespace

Graph parse_graph(std::string_view text, const ParseOptions& options) {
  std::vector<Edge> edges;
  int header_n = -1;
  int max_label = -1;
  bool first_content = true;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    auto line = trim(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = trim(line.substr(0, hash));
    }
    if (line.empty()) continue;
    if (first_content && looks_like_graph6(line)) return parse_graph6(line, options);
    first_content = false;

    const auto tokens = split_ws(line);
    const std::string where = "line " + std::to_string(line_no) + ": '" + std::string(line) + "'";
    if (tokens.size() == 2 && tokens[0] == "n") {
      if (header_n >= 0 || !edges.empty() || !parse_nonneg(tokens[1], header_n)) {
        throw ParseError(ParseErrorKind::kMalformedLine, where);
      }
      continue;
    }
    Edge e;
    if (tokens.size() != 2 || !parse_nonneg(tokens[0], e.u) || !parse_nonneg(tokens[1], e.v)) {
      throw ParseError(ParseErrorKind::kMalformedLine, where);
    }
    max_label = std::max({max_label, e.u, e.v});
    edges.push_back(e);
  }
  const int n = header_n >= 0 ? header_n : max_label + 1;
  return Graph(n, std::move(edges), options);
}

Graph parse_inline_edges(std::string_view text, const ParseOptions& options) {
  std::vector<Edge> edges;
  int max_label = -1;
  const auto body = trim(text);
  if (body.empty()) throw ParseError(ParseErrorKind::kMalformedLine, "empty edge list");
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const auto comma = body.find(',', pos);
    const auto item = trim(body.substr(pos, comma == std::string_view::npos ? body.npos : comma - pos));
    pos = comma == std::string_view::npos ? body.size() + 1 : comma + 1;
    const auto dash = item.find('-');
    Edge e;
    if (dash == std::string_view::npos || !parse_nonneg(trim(item.substr(0, dash)), e.u) ||
        !parse_nonneg(trim(item.substr(dash + 1)), e.v)) {
      throw ParseError(ParseErrorKind::kMalformedLine, "edge item '" + std::string(item) + "'");
    }
    max_label = std::max({max_label, e.u, e.v});
    edges.push_back(e);
  }
  return Graph(max_label + 1, std::move(edges), options);
}

Graph parse_graph6(std::string_view text, const ParseOptions& options) {
  auto s = trim(text);
  if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
  auto malformed = [&](const char* why) {
    return ParseError(ParseErrorKind::kMalformedLine, std::string("graph6 '") + std::string(s) + "': " + why);
  };
  for (char c : s) {
    if (c < 63 || c > 126) throw malformed("character outside 63..126");
  }
  if (s.empty()) throw malformed("empty");
  std::size_t p = 0;
  long n = 0;
  if (s[0] != 126) {
    n = s[0] - 63;
    p = 1;
  } else if (s.size() >= 4 && s[1] != 126) {
    n = ((s[1] - 63L) << 12) | ((s[2] - 63L) << 6) | (s[3] - 63L);
    p = 4;
  } else {
    throw malformed("vertex count too large");
  }
  if (n > VertexSet::kCapacity) {
    throw ParseError(ParseErrorKind::kTooManyVertices, "graph6 header declares " + std::to_string(n));
  }
  const std::size_t bit_count = static_cast<std::size_t>(n * (n - 1) / 2);
  if (s.size() - p != (bit_count + 5) / 6) throw malformed("wrong length for vertex count");
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = s[p + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  return Graph(static_cast<int>(n), std::move(edges), options);
}

std::string to_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out(1, static_cast<char>(63 + n));
  std::vector<bool> bits;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(g.neighbors(i).contains(j));
  }
  while (bits.size() % 6 != 0) bits.push_back(false);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int chunk = 0;
    for (std::size_t b = 0; b < 6; ++b) chunk = (chunk << 1) | (bits[k + b] ? 1 : 0);
    out.push_back(static_cast<char>(63 + chunk));
  }
  return out;
}

VertexSet vertices_of(const Graph& g, EdgeSet s) {
  VertexSet out;
  s.for_each([&](int i) { out |= g.endpoints(i); });
  return out;
}

bool is_vertex_cover(const Graph& g, VertexSet x) {
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!g.endpoints(i).intersects(x)) return false;
  }
  return true;
}

VertexSet component_of(const Graph& g, int v, EdgeSet f) {
  VertexSet reached = VertexSet::singleton(v);
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](int w) {
      (g.incidence(w) & f).for_each([&](int i) { next |= g.endpoints(i); });
    });
    frontier = next - reached;
    reached |= next;
  }
  return reached;
}

bool is_connected_edge_subgraph(const Graph& g, EdgeSet s) {
  if (s.empty()) throw std::invalid_argument("connectivity of the empty edge set is undefined");
  const VertexSet span = vertices_of(g, s);
  return component_of(g, g.edge(s.min()).u, s) == span;
}

EdgeSet shade(const Graph& g, int v, EdgeSet f) {
  EdgeSet out;
  component_of(g, v, f).for_each([&](int w) { out |= g.incidence(w); });
  return out;
}

bool is_bridge_in(const Graph& g, EdgeSet s, int e) {
  if (!s.contains(e)) throw std::invalid_argument("edge is not in the subset");
  const Edge& ed = g.edge(e);
  return !component_of(g, ed.u, s.without(e)).contains(ed.v);
}

std::vector<int> degrees_in(const Graph& g, EdgeSet s) {
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
  s.for_each([&](int i) {
    ++deg[static_cast<std::size_t>(g.edge(i).u)];
    ++deg[static_cast<std::size_t>(g.edge(i).v)];
  });
  return deg;
}

VertexSet leaf_endpoints_in(const Graph& g, EdgeSet s, int e) {
  if (!s.contains(e)) throw std::invalid_argument("edge is not in the subset");
  VertexSet out;
  for (int w : {g.edge(e).u, g.edge(e).v}) {
    if ((g.incidence(w) & s).size() == 1) out.insert(w);
  }
  return out;
}

}  // namespace nucleus
