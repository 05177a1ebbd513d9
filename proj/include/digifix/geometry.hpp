#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "digifix/image.hpp"
#include "digifix/selfmap.hpp"

namespace digifix {

/// Sequence of vertices with consecutive entries adjacent.
struct PathWitness {
  std::vector<Vertex> vertices;
  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

bool is_path(const DigitalImage& x, const PathWitness& p);

struct Geodesics {
  std::size_t distance = 0;
  std::uint64_t count = 0;  // number of geodesics, saturating at UINT64_MAX
  std::vector<PathWitness> paths;  // in lexicographic order, at most `cap`
  bool truncated = false;
  std::vector<Vertex> on_every;  // vertices lying on every geodesic, endpoints included
};

/// BFS distances from `source`; nullopt for unreachable vertices.
std::vector<std::optional<std::size_t>> bfs_distances(const DigitalImage& x, Vertex source);

/// Distance, count and (up to `cap`) listing of the minimal paths from a to b.
/// Throws InvalidInput when b is not reachable from a.
Geodesics minimal_paths(const DigitalImage& x, Vertex a, Vertex b, std::size_t cap = 1024);

struct ForcedFixedPoints {
  std::vector<Vertex> forced;  // closure of Fix(f)
  bool confirmed = false;      // forced ⊆ Fix(f)
};

/// Closure of Fix(f) under "a vertex on every minimal path between two marked
/// vertices is marked". The closure is checked against Fix(f) rather than
/// assumed.
ForcedFixedPoints forced_fixed_points(const DigitalImage& x, const SelfMap& f);

/// Cut vertices (iterative Hopcroft-Tarjan lowpoints), ascending.
std::vector<Vertex> articulation_points(const DigitalImage& x);

struct ArticulationViolation {
  Vertex articulation_point;
  Vertex fixed_a;
  Vertex fixed_b;
};

/// Articulation points that separate two fixed points of f but are not fixed.
/// Empty for every continuous f.
std::vector<ArticulationViolation> articulation_check(const DigitalImage& x, const SelfMap& f);

enum class FixConnectivity { empty, connected, disconnected };

struct FixStructure {
  FixConnectivity kind = FixConnectivity::empty;
  std::vector<std::vector<Vertex>> components;  // components of Fix(f) as a subimage
  bool image_is_cycle = false;
  /// On a cycle C_n a disconnected Fix(f) must be an antipodal pair with n
  /// even. False only when that fails.
  bool cycle_refinement_holds = true;
};

/// True when the image is C_n for some n >= 3 (connected, all degrees 2).
bool is_cycle_graph(const DigitalImage& x);

FixStructure fix_structure(const DigitalImage& x, const SelfMap& f);

}  // namespace digifix
