#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "nucleus/complex.hpp"

namespace nucleus {

/// Default cap on the number of faces fed to a homology computation.
inline constexpr std::size_t kDefaultFaceCap = std::size_t{1} << 16;

/// Oriented boundary map from k-faces (columns) to (k-1)-faces (rows). Faces
/// are oriented by ascending edge index; the sign of dropping the element in
/// position p is (-1)^p. Degree 0 is the augmentation onto {{}}.
struct BoundaryMatrix {
  int degree = 0;
  std::vector<EdgeSet> rows;
  std::vector<EdgeSet> cols;
  /// Per column: (row index, +-1), ascending row index.
  std::vector<std::vector<std::pair<int, int>>> entries;
};

BoundaryMatrix boundary_matrix(const SimplicialComplex& k, int degree);

/// True iff the composite of the degree-k and degree-(k+1) boundary maps is
/// exactly zero.
bool boundary_composite_vanishes(const SimplicialComplex& k, int degree);

/// Rank over Q of a sparse integer matrix given by columns (row, value),
/// computed by fraction-free column elimination. Exact: falls back to
/// arbitrary precision if 64-bit arithmetic would overflow.
std::size_t exact_rank(const std::vector<std::vector<std::pair<int, long long>>>& columns);

/// Reduced Betti numbers over Q for degrees -1..m-1.
class HomologyProfile {
 public:
  HomologyProfile() = default;
  HomologyProfile(int ground_size, std::vector<long long> betti)
      : ground_(ground_size), betti_(std::move(betti)) {}

  int ground_size() const { return ground_; }
  int min_degree() const { return -1; }
  int max_degree() const { return ground_ - 1; }
  /// b~_k; zero outside -1..m-1.
  long long at(int k) const {
    if (k < -1 || k >= ground_) return 0;
    return betti_[static_cast<std::size_t>(k + 1)];
  }
  /// Sum over k of (-1)^k b~_k.
  long long euler_characteristic() const;
  /// Degrees with nonzero reduced Betti number.
  std::vector<int> support() const;
  bool is_acyclic() const { return support().empty(); }
  bool operator==(const HomologyProfile&) const = default;

 private:
  int ground_ = 0;
  std::vector<long long> betti_;
};

/// b~_k = dim ker d_k - rank d_{k+1}, degree -1 handled by the augmentation.
/// Throws GuardError if the complex has more than `face_cap` faces.
HomologyProfile reduced_betti(const SimplicialComplex& k, std::size_t face_cap = kDefaultFaceCap);

}  // namespace nucleus
