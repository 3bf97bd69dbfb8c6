#include "nucleus/nuclei.hpp"

#include <stdexcept>
#include <string>

#include "nucleus/errors.hpp"

namespace nucleus {

namespace {

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
  return r;
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
  return r;
}

long long checked_pow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

long long binomial(int n, int r) {
  long long c = 1;
  for (int i = 1; i <= r; ++i) c = checked_mul(c, n - r + i) / i;
  return c;
}

SimplicialComplex complement_complex(const Graph& g, std::span<const Nucleus> nuclei, VertexSet u) {
  const EdgeSet all = g.all_edges();
  std::vector<EdgeSet> faces;
  for (const Nucleus& n : nuclei) {
    if (u.is_subset_of(n.vertices)) faces.push_back(all - n.edges);
  }
  return SimplicialComplex::from_closed_family(g.edge_count(), std::move(faces));
}

}  // namespace

std::vector<Nucleus> enumerate_nuclei(const Graph& g) {
  std::vector<Nucleus> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.incidence(v) == g.all_edges()) out.push_back({EdgeSet{}, VertexSet::singleton(v)});
  }
  const std::uint32_t limit = std::uint32_t{1} << g.edge_count();
  for (std::uint32_t b = 1; b < limit; ++b) {
    const EdgeSet s(b);
    const VertexSet span = vertices_of(g, s);
    if (is_vertex_cover(g, span) && is_connected_edge_subgraph(g, s)) out.push_back({s, span});
  }
  return out;
}

ElserReport elser_number(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("Elser exponent must be nonnegative");
  ElserReport report;
  report.k = k;
  long long sum = 0;
  for (const Nucleus& n : enumerate_nuclei(g)) {
    const int sign = n.edges.size() % 2 == 0 ? 1 : -1;
    report.terms.push_back({n.edges.size(), n.vertices.size(), sign});
    sum = checked_add(sum, sign * checked_pow(n.vertices.size(), k));
  }
  report.value = (g.vertex_count() % 2 == 1) ? sum : -sum;
  return report;
}

long long surjection_count(int k, int j) {
  if (k < 0 || j < 0) throw std::invalid_argument("surjection arguments must be nonnegative");
  if (j > k) return 0;
  long long total = 0;
  for (int i = 0; i <= j; ++i) {
    const long long term = checked_mul(binomial(j, i), checked_pow(i, k));
    total = checked_add(total, (j - i) % 2 == 0 ? term : -term);
  }
  return total;
}

SimplicialComplex nucleus_complex(const Graph& g, VertexSet u) {
  return complement_complex(g, enumerate_nuclei(g), u);
}

SimplicialComplex nucleus_complex(const Graph& g, std::span<const Nucleus> nuclei, VertexSet u) {
  return complement_complex(g, nuclei, u);
}

SimplicialComplex a_complex(const Graph& g, VertexSet u) {
  const EdgeSet all = g.all_edges();
  return SimplicialComplex::from_predicate(g.edge_count(), [&](EdgeSet f) {
    bool member = false;
    u.for_each([&](int v) { member = member || shade(g, v, f) != all; });
    return member;
  });
}

long long elser_via_euler(const Graph& g, int k, int max_vertices) {
  if (k < 0) throw std::invalid_argument("Elser exponent must be nonnegative");
  const int n = g.vertex_count();
  if (n > max_vertices) {
    throw GuardError("vertex-subset enumeration over " + std::to_string(n) +
                     " vertices exceeds guard " + std::to_string(max_vertices));
  }
  const auto nuclei = enumerate_nuclei(g);
  long long sum = 0;
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t b = 0; b < limit; ++b) {
    const VertexSet u(b);
    const long long sur = surjection_count(k, u.size());
    if (sur == 0) continue;
    const long long chi = reduced_euler_characteristic(complement_complex(g, nuclei, u));
    sum = checked_add(sum, checked_mul(sur, chi));
  }
  return ((g.edge_count() + n) % 2 == 0) ? sum : -sum;
}

}  // namespace nucleus
