#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "digifix/vertex_set.hpp"

namespace digifix {

using Point = std::vector<int>;
using Edge = std::pair<Vertex, Vertex>;

class DigitalImage;

/// c_u adjacency on integer coordinates.
struct CuAdjacency {
  int u = 1;
  friend bool operator==(const CuAdjacency&, const CuAdjacency&) = default;
};

/// Edge list over vertex indices. Stored normalized: i < j, sorted, unique.
struct ExplicitAdjacency {
  std::vector<Edge> edges;
  friend bool operator==(const ExplicitAdjacency&, const ExplicitAdjacency&) = default;
};

/// NP_u adjacency on the Cartesian product of the factor images.
struct NpuAdjacency {
  int u = 1;
  std::vector<DigitalImage> factors;
};

/// How the adjacency relation of an image was defined.
using AdjacencySpec = std::variant<CuAdjacency, ExplicitAdjacency, NpuAdjacency>;

/// A finite digital image: vertices 0..n-1, optional lattice coordinates and a
/// symmetric irreflexive adjacency relation held as bitset rows.
///
/// Images are immutable once built. All algorithms read only the adjacency
/// rows; coordinates are carried as metadata.
class DigitalImage {
 public:
  DigitalImage() = default;

  /// Validates and takes ownership. Prefer build_image() / generate().
  DigitalImage(std::string name, std::optional<std::vector<Point>> points,
               std::vector<VertexSet> adjacency, AdjacencySpec spec);

  std::size_t size() const { return adjacency_.size(); }
  const std::string& name() const { return name_; }
  const AdjacencySpec& spec() const { return spec_; }

  bool has_points() const { return points_.has_value(); }
  const std::vector<Point>& points() const;
  const Point& point(Vertex v) const { return points().at(v); }
  /// Ambient dimension, 0 for abstract images.
  std::size_t dimension() const;
  /// Index of the vertex with these coordinates, if any.
  std::optional<Vertex> find_point(const Point& p) const;

  bool adjacent(Vertex a, Vertex b) const { return adjacency_[a].test(b); }
  /// a == b or a ↔ b.
  bool adjacent_or_equal(Vertex a, Vertex b) const { return a == b || adjacent(a, b); }
  /// Open neighborhood N(v) as a bitset row.
  const VertexSet& row(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].count(); }

  std::size_t edge_count() const;
  /// Edges (i, j), i < j, in lexicographic order.
  std::vector<Edge> edges() const;

  DigitalImage renamed(std::string name) const;

 private:
  std::string name_;
  std::optional<std::vector<Point>> points_;
  std::vector<VertexSet> adjacency_;
  AdjacencySpec spec_;
};

/// True iff x != y, every coordinate differs by at most 1, and between 1 and u
/// coordinates differ by exactly 1. Throws InvalidInput on dimension mismatch
/// or u outside [1, dim].
bool cu_adjacent(const Point& x, const Point& y, int u);

/// Image on lattice points. CU compiles adjacency from coordinates; Explicit
/// keeps the points as metadata; Npu requires the points to equal the
/// concatenated factor coordinates.
DigitalImage build_image(std::string name, std::vector<Point> points, AdjacencySpec spec);

/// Abstract image of n vertices (Explicit or Npu; CU needs coordinates).
DigitalImage build_image(std::string name, std::size_t n, AdjacencySpec spec);

/// Named images. Families and parameters:
///   interval a b        [a,b] with c_1
///   cycle n             C_n on abstract vertices x_0..x_{n-1}
///   box a b u           [1,a]x[1,b] with c_u, u in {1,2}
///   cube                {0,1}^3 with c_1
///   wedge_cycles_8      two 6-point 8-adjacency cycles sharing (0,0)
///   fig_xexample        ([0,6]x{0,2}) ∪ {(0,1),(2,1),(4,1),(6,1)}, 4-adjacency
///   fig_sexample        ([0,5]x{0,2}) ∪ {(0,1),(2,1),(5,1)}, 4-adjacency
/// Lattice images list their points in lexicographic order.
DigitalImage generate(const std::string& family, const std::vector<int>& params = {});
std::vector<std::string> generator_families();

/// NP_u product. Vertex order is lexicographic, first factor slowest.
DigitalImage product(const std::vector<DigitalImage>& factors, int u);

/// A with b0 of B identified to a0 of A. A keeps its indices; the remaining
/// vertices of B follow in their original order.
DigitalImage wedge(const DigitalImage& a, const DigitalImage& b, Vertex a0, Vertex b0);

/// Vertex of B at index i lands at #A + i. No cross edges.
DigitalImage disjoint_union(const DigitalImage& a, const DigitalImage& b);

/// Subimage on `subset` with the restricted adjacency. Vertices keep the
/// ascending order of the subset.
DigitalImage induced_subimage(const DigitalImage& x, const std::vector<Vertex>& subset);

/// N*(v) = {v} ∪ N(v), ascending.
std::vector<Vertex> closed_neighborhood(const DigitalImage& x, Vertex v);
/// N(v), ascending.
std::vector<Vertex> open_neighborhood(const DigitalImage& x, Vertex v);

/// BFS partition; components ordered by smallest member, members ascending.
std::vector<std::vector<Vertex>> connected_components(const DigitalImage& x);
bool is_connected(const DigitalImage& x);

inline constexpr std::size_t kDefaultIsomorphismLimit = 24;

/// Witness bijection A -> B preserving adjacency in both directions.
/// Throws ResourceExceeded above `max_vertices`.
std::optional<std::vector<Vertex>> are_isomorphic(const DigitalImage& a, const DigitalImage& b,
                                                  std::size_t max_vertices = kDefaultIsomorphismLimit);

}  // namespace digifix
