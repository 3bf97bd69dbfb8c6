#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nucleus/bitset.hpp"

namespace nucleus {

/// Abstract simplicial complex on the ground set {0..m-1}. Faces are stored
/// sorted by their integer encoding together with a 2^m membership bitmap.
/// The void complex (no faces) and the empty-face complex {{}} are distinct.
class SimplicialComplex {
 public:
  /// Void complex on ground size m.
  explicit SimplicialComplex(int ground_size = 0);

  /// Downward closure of `faces`. Throws std::out_of_range if a face leaves
  /// the ground set.
  static SimplicialComplex from_faces(int ground_size, std::span<const EdgeSet> faces);
  /// Takes `faces` as the complete face family and checks it is closed under
  /// taking subsets; throws std::logic_error otherwise.
  static SimplicialComplex from_closed_family(int ground_size, std::vector<EdgeSet> faces);
  /// Complex of all faces satisfying `member`, which must be downward closed.
  template <typename Pred>
  static SimplicialComplex from_predicate(int ground_size, Pred&& member) {
    std::vector<EdgeSet> faces;
    const std::uint32_t limit = std::uint32_t{1} << ground_size;
    for (std::uint32_t b = 0; b < limit; ++b) {
      if (member(EdgeSet(b))) faces.push_back(EdgeSet(b));
    }
    return from_closed_family(ground_size, std::move(faces));
  }
  static SimplicialComplex full_simplex(int ground_size);
  static SimplicialComplex empty_face(int ground_size);

  int ground_size() const { return ground_; }
  bool is_void() const { return faces_.empty(); }
  std::size_t face_count() const { return faces_.size(); }
  /// All faces in ascending integer order.
  const std::vector<EdgeSet>& faces() const { return faces_; }
  bool contains(EdgeSet s) const {
    if (!s.is_subset_of(EdgeSet::range(ground_))) return false;
    return (bitmap_[s.bits() >> 6] >> (s.bits() & 63U)) & 1U;
  }

  /// Faces with |s| = k + 1, ascending.
  std::vector<EdgeSet> faces_of_dimension(int k) const;
  /// f-vector indexed from dimension -1: entry d+1 counts d-faces.
  std::vector<std::size_t> f_vector() const;
  /// -2 for the void complex, -1 for {{}}.
  int dimension() const;
  /// Maximal faces, ascending.
  std::vector<EdgeSet> facets() const;

  bool is_subcomplex_of(const SimplicialComplex& other) const;
  bool operator==(const SimplicialComplex& other) const {
    return ground_ == other.ground_ && faces_ == other.faces_;
  }

 private:
  SimplicialComplex(int ground_size, std::vector<EdgeSet> sorted_faces);

  int ground_;
  std::vector<EdgeSet> faces_;
  std::vector<std::uint64_t> bitmap_;
};

/// Sum over faces of (-1)^(|s|-1); 0 for the void complex.
long long reduced_euler_characteristic(const SimplicialComplex& k);

/// {s : ground minus s is not a face of k}.
SimplicialComplex alexander_dual(const SimplicialComplex& k);

}  // namespace nucleus
