#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "digifix/image.hpp"

namespace digifix {

/// A total function on the vertices 0..n-1 of an image, stored as a dense
/// target array. The domain size is targets.size(); an image "matches" the
/// map when it has that many vertices.
class SelfMap {
 public:
  SelfMap() = default;
  /// Throws InvalidInput when a target is outside [0, targets.size()).
  explicit SelfMap(std::vector<Vertex> targets);

  std::size_t size() const { return targets_.size(); }
  Vertex operator()(Vertex v) const { return targets_[v]; }
  Vertex at(Vertex v) const { return targets_.at(v); }
  std::span<const Vertex> targets() const { return targets_; }

  friend bool operator==(const SelfMap&, const SelfMap&) = default;
  friend auto operator<=>(const SelfMap&, const SelfMap&) = default;

 private:
  std::vector<Vertex> targets_;
};

SelfMap identity_map(std::size_t n);
SelfMap constant_map(std::size_t n, Vertex value);

/// Edge characterization: every edge {x,y} has f(x) ⟷= f(y).
bool is_continuous(const DigitalImage& x, const SelfMap& f);

/// Fix(f), ascending.
std::vector<Vertex> fix(const SelfMap& f);
/// Complement of Fix(f), ascending.
std::vector<Vertex> moved(const SelfMap& f);
std::size_t fix_count(const SelfMap& f);

/// (g ∘ f)(i) = g(f(i)).
SelfMap compose(const SelfMap& g, const SelfMap& f);

/// Maps the lexicographically least edge (x0, x1) as x0 -> x1 and everything
/// else to x0. Continuous with no fixed points. Throws InvalidInput when the
/// image has no edge.
SelfMap fixed_point_free_map(const DigitalImage& x);

enum class CycleMapKind { constant, rotation, flip_composed };

/// Maps on C_n with vertices x_0..x_{n-1}:
///   constant(j):      x_i -> x_j
///   rotation(d):      x_i -> x_{i+d}
///   flip_composed(d): x_i -> x_{d-i}
SelfMap cycle_map(std::size_t n, CycleMapKind kind, Vertex param);

/// Self-map induced by a coordinate transform. Throws when the image has no
/// coordinates or a transformed point is not a vertex.
SelfMap map_from_coordinates(const DigitalImage& x, const std::function<Point(const Point&)>& transform);

}  // namespace digifix
