#include "nucleus/homology.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <string>

#include "nucleus/errors.hpp"

namespace nucleus {

namespace {

int index_of(const std::vector<EdgeSet>& sorted, EdgeSet s) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), s);
  if (it == sorted.end() || *it != s) return -1;
  return static_cast<int>(it - sorted.begin());
}

struct Overflow {};

/// 64-bit integers with overflow trapped; the rank routine retries in
/// arbitrary precision when this fires.
struct CheckedOps {
  using Int = long long;
  static Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static Int gcd(Int a, Int b) { return std::gcd(a, b); }
  static bool negative(const Int& a) { return a < 0; }
};

struct BigOps {
  using Int = boost::multiprecision::cpp_int;
  static Int mul(const Int& a, const Int& b) { return a * b; }
  static Int sub(const Int& a, const Int& b) { return a - b; }
  static Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
  static bool negative(const Int& a) { return a < 0; }
};

template <typename Ops>
std::size_t rank_with(const std::vector<std::vector<std::pair<int, long long>>>& columns) {
  using Int = typename Ops::Int;
  using Column = std::vector<std::pair<int, Int>>;

  int row_count = 0;
  for (const auto& col : columns) {
    for (const auto& [r, v] : col) row_count = std::max(row_count, r + 1);
  }
  std::vector<Column> reduced;
  std::vector<int> pivot_owner(static_cast<std::size_t>(row_count), -1);

  for (const auto& input : columns) {
    Column c;
    c.reserve(input.size());
    for (const auto& [r, v] : input) {
      if (v != 0) c.emplace_back(r, Int(v));
    }
    std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    while (!c.empty()) {
      const int low = c.back().first;
      const int owner = pivot_owner[static_cast<std::size_t>(low)];
      if (owner < 0) {
        pivot_owner[static_cast<std::size_t>(low)] = static_cast<int>(reduced.size());
        reduced.push_back(std::move(c));
        break;
      }
      // c <- a*c - b*p, which cancels the shared lowest row.
      const Column& p = reduced[static_cast<std::size_t>(owner)];
      const Int a = p.back().second;
      const Int b = c.back().second;
      Column next;
      next.reserve(c.size() + p.size());
      std::size_t i = 0, j = 0;
      while (i < c.size() || j < p.size()) {
        if (j == p.size() || (i < c.size() && c[i].first < p[j].first)) {
          next.emplace_back(c[i].first, Ops::mul(a, c[i].second));
          ++i;
        } else if (i == c.size() || p[j].first < c[i].first) {
          next.emplace_back(p[j].first, Ops::sub(Int(0), Ops::mul(b, p[j].second)));
          ++j;
        } else {
          Int v = Ops::sub(Ops::mul(a, c[i].second), Ops::mul(b, p[j].second));
          if (v != 0) next.emplace_back(c[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      Int g(0);
      for (const auto& [r, v] : next) g = Ops::gcd(g, Ops::negative(v) ? Int(-v) : v);
      if (g > 1) {
        for (auto& [r, v] : next) v /= g;
      }
      c = std::move(next);
    }
  }
  return reduced.size();
}

}  // namespace

std::size_t exact_rank(const std::vector<std::vector<std::pair<int, long long>>>& columns) {
  try {
    return rank_with<CheckedOps>(columns);
  } catch (const Overflow&) {
    return rank_with<BigOps>(columns);
  }
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& k, int degree) {
  BoundaryMatrix d;
  d.degree = degree;
  d.rows = k.faces_of_dimension(degree - 1);
  d.cols = k.faces_of_dimension(degree);
  d.entries.resize(d.cols.size());
  for (std::size_t c = 0; c < d.cols.size(); ++c) {
    int position = 0;
    d.cols[c].for_each([&](int e) {
      const int r = index_of(d.rows, d.cols[c].without(e));
      d.entries[c].emplace_back(r, position % 2 == 0 ? 1 : -1);
      ++position;
    });
    std::sort(d.entries[c].begin(), d.entries[c].end());
  }
  return d;
}

bool boundary_composite_vanishes(const SimplicialComplex& k, int degree) {
  const BoundaryMatrix lower = boundary_matrix(k, degree);
  const BoundaryMatrix upper = boundary_matrix(k, degree + 1);
  if (lower.rows.empty() || upper.cols.empty()) return true;
  std::vector<long long> acc(lower.rows.size());
  for (const auto& col : upper.entries) {
    std::fill(acc.begin(), acc.end(), 0);
    for (const auto& [mid, sign] : col) {
      if (mid < 0) return false;  // boundary face missing: complex not closed
      for (const auto& [r, s2] : lower.entries[static_cast<std::size_t>(mid)]) {
        acc[static_cast<std::size_t>(r)] += sign * s2;
      }
    }
    if (std::any_of(acc.begin(), acc.end(), [](long long v) { return v != 0; })) return false;
  }
  return true;
}

long long HomologyProfile::euler_characteristic() const {
  long long chi = 0;
  for (int k = -1; k < ground_; ++k) chi += (k % 2 == 0 ? 1 : -1) * at(k);
  return chi;
}

std::vector<int> HomologyProfile::support() const {
  std::vector<int> out;
  for (int k = -1; k < ground_; ++k) {
    if (at(k) != 0) out.push_back(k);
  }
  return out;
}

HomologyProfile reduced_betti(const SimplicialComplex& k, std::size_t face_cap) {
  if (k.face_count() > face_cap) {
    throw GuardError("complex has " + std::to_string(k.face_count()) + " faces, cap is " +
                     std::to_string(face_cap));
  }
  const int m = k.ground_size();
  const auto f = k.f_vector();  // f[d+1] = number of d-faces
  // rank[d] = rank of the boundary map out of degree d, d = 0..m-1
  std::vector<long long> rank(static_cast<std::size_t>(m) + 1, 0);
  for (int d = 0; d < m; ++d) {
    if (f[static_cast<std::size_t>(d + 1)] == 0 || f[static_cast<std::size_t>(d)] == 0) continue;
    const BoundaryMatrix b = boundary_matrix(k, d);
    std::vector<std::vector<std::pair<int, long long>>> cols(b.entries.size());
    for (std::size_t c = 0; c < b.entries.size(); ++c) {
      for (const auto& [r, s] : b.entries[c]) cols[c].emplace_back(r, s);
    }
    rank[static_cast<std::size_t>(d)] = static_cast<long long>(exact_rank(cols));
  }
  std::vector<long long> betti(static_cast<std::size_t>(m) + 1, 0);
  for (int d = -1; d < m; ++d) {
    const long long chains = static_cast<long long>(f[static_cast<std::size_t>(d + 1)]);
    const long long out = d >= 0 ? rank[static_cast<std::size_t>(d)] : 0;
    const long long in = d + 1 < m ? rank[static_cast<std::size_t>(d + 1)] : 0;
    betti[static_cast<std::size_t>(d + 1)] = chains - out - in;
  }
  return HomologyProfile(m, std::move(betti));
}

}  // namespace nucleus
