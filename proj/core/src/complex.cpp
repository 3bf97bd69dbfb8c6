#include "nucleus/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nucleus {

namespace {

std::vector<std::uint64_t> empty_bitmap(int ground) {
  const std::size_t bits = std::size_t{1} << ground;
  return std::vector<std::uint64_t>((bits + 63) / 64, 0);
}

void check_ground(int ground) {
  if (ground < 0 || ground > kMaxGroundSize) {
    throw std::out_of_range("ground size " + std::to_string(ground) + " unsupported");
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(int ground_size)
    : ground_(ground_size), bitmap_((check_ground(ground_size), empty_bitmap(ground_size))) {}

SimplicialComplex::SimplicialComplex(int ground_size, std::vector<EdgeSet> sorted_faces)
    : SimplicialComplex(ground_size) {
  faces_ = std::move(sorted_faces);
  for (EdgeSet s : faces_) bitmap_[s.bits() >> 6] |= std::uint64_t{1} << (s.bits() & 63U);
}

SimplicialComplex SimplicialComplex::from_faces(int ground_size, std::span<const EdgeSet> faces) {
  check_ground(ground_size);
  const EdgeSet ground = EdgeSet::range(ground_size);
  auto seen = empty_bitmap(ground_size);
  auto mark = [&](EdgeSet s) {
    auto& word = seen[s.bits() >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (s.bits() & 63U);
    const bool fresh = (word & bit) == 0;
    word |= bit;
    return fresh;
  };
  std::vector<EdgeSet> stack;
  for (EdgeSet s : faces) {
    if (!s.is_subset_of(ground)) throw std::out_of_range("face outside ground set");
    if (mark(s)) stack.push_back(s);
  }
  std::vector<EdgeSet> all;
  while (!stack.empty()) {
    const EdgeSet s = stack.back();
    stack.pop_back();
    all.push_back(s);
    s.for_each([&](int i) {
      const EdgeSet t = s.without(i);
      if (mark(t)) stack.push_back(t);
    });
  }
  std::sort(all.begin(), all.end());
  return SimplicialComplex(ground_size, std::move(all));
}

SimplicialComplex SimplicialComplex::from_closed_family(int ground_size, std::vector<EdgeSet> faces) {
  check_ground(ground_size);
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  SimplicialComplex k(ground_size, std::move(faces));
  const EdgeSet ground = EdgeSet::range(ground_size);
  for (EdgeSet s : k.faces_) {
    if (!s.is_subset_of(ground)) throw std::out_of_range("face outside ground set");
    s.for_each([&](int i) {
      if (!k.contains(s.without(i))) {
        throw std::logic_error("face family is not downward closed at face bits " +
                               std::to_string(s.bits()));
      }
    });
  }
  return k;
}

SimplicialComplex SimplicialComplex::full_simplex(int ground_size) {
  check_ground(ground_size);
  std::vector<EdgeSet> all;
  const std::uint32_t limit = std::uint32_t{1} << ground_size;
  all.reserve(limit);
  for (std::uint32_t b = 0; b < limit; ++b) all.emplace_back(b);
  return SimplicialComplex(ground_size, std::move(all));
}

SimplicialComplex SimplicialComplex::empty_face(int ground_size) {
  check_ground(ground_size);
  return SimplicialComplex(ground_size, std::vector<EdgeSet>{EdgeSet{}});
}

std::vector<EdgeSet> SimplicialComplex::faces_of_dimension(int k) const {
  std::vector<EdgeSet> out;
  for (EdgeSet s : faces_) {
    if (s.size() == k + 1) out.push_back(s);
  }
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f(static_cast<std::size_t>(ground_) + 1, 0);
  for (EdgeSet s : faces_) ++f[static_cast<std::size_t>(s.size())];
  return f;
}

int SimplicialComplex::dimension() const {
  int d = -2;
  for (EdgeSet s : faces_) d = std::max(d, s.size() - 1);
  return d;
}

std::vector<EdgeSet> SimplicialComplex::facets() const {
  std::vector<EdgeSet> out;
  for (EdgeSet s : faces_) {
    bool maximal = true;
    for (int i = 0; i < ground_ && maximal; ++i) {
      if (!s.contains(i) && contains(s.with(i))) maximal = false;
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  if (ground_ != other.ground_) return false;
  return std::all_of(faces_.begin(), faces_.end(), [&](EdgeSet s) { return other.contains(s); });
}

long long reduced_euler_characteristic(const SimplicialComplex& k) {
  long long chi = 0;
  for (EdgeSet s : k.faces()) chi += (s.size() % 2 == 1) ? 1 : -1;
  return chi;
}

SimplicialComplex alexander_dual(const SimplicialComplex& k) {
  const EdgeSet ground = EdgeSet::range(k.ground_size());
  return SimplicialComplex::from_predicate(k.ground_size(),
                                           [&](EdgeSet s) { return !k.contains(ground - s); });
}

}  // namespace nucleus
