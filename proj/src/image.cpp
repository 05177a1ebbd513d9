#include "digifix/image.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>

#include "digifix/error.hpp"

namespace digifix {

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

void check_points(const std::vector<Point>& points) {
  if (points.empty()) return;
  const auto dim = points.front().size();
  for (const auto& p : points)
    if (p.size() != dim) throw InvalidInput("points have inconsistent dimensions");
  std::set<Point> seen;
  for (const auto& p : points)
    if (!seen.insert(p).second) throw InvalidInput("duplicate point (" + join_ints(p) + ")");
}

std::vector<VertexSet> empty_rows(std::size_t n) { return std::vector<VertexSet>(n, VertexSet(n)); }

ExplicitAdjacency normalize_edges(const std::vector<Edge>& edges, std::size_t n) {
  ExplicitAdjacency out;
  for (auto [a, b] : edges) {
    if (a >= n || b >= n)
      throw InvalidInput("edge {" + std::to_string(a) + "," + std::to_string(b) +
                         "} references a vertex outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    if (a == b) throw InvalidInput("self-loop at vertex " + std::to_string(a));
    out.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
  return out;
}

std::vector<VertexSet> rows_from_edges(const std::vector<Edge>& edges, std::size_t n) {
  auto rows = empty_rows(n);
  for (auto [a, b] : edges) {
    rows[a].set(b);
    rows[b].set(a);
  }
  return rows;
}

std::vector<VertexSet> rows_from_cu(const std::vector<Point>& points, int u) {
  const auto n = points.size();
  auto rows = empty_rows(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (cu_adjacent(points[i], points[j], u)) {
        rows[i].set(static_cast<Vertex>(j));
        rows[j].set(static_cast<Vertex>(i));
      }
  return rows;
}

std::vector<Edge> edges_of(const std::vector<VertexSet>& rows) {
  std::vector<Edge> out;
  for (Vertex i = 0; i < rows.size(); ++i)
    for (Vertex j : rows[i].to_vector())
      if (i < j) out.emplace_back(i, j);
  return out;
}

// Mixed-radix decode of a product index, first factor slowest.
std::vector<Vertex> decode(std::size_t index, const std::vector<std::size_t>& sizes) {
  std::vector<Vertex> digits(sizes.size());
  for (std::size_t k = sizes.size(); k-- > 0;) {
    digits[k] = static_cast<Vertex>(index % sizes[k]);
    index /= sizes[k];
  }
  return digits;
}

struct ProductParts {
  std::vector<VertexSet> rows;
  std::optional<std::vector<Point>> points;
};

ProductParts product_parts(const std::vector<DigitalImage>& factors, int u) {
  if (factors.empty()) throw InvalidInput("product needs at least one factor");
  if (u < 1 || static_cast<std::size_t>(u) > factors.size())
    throw InvalidInput("NP_u requires 1 <= u <= number of factors (u=" + std::to_string(u) + ")");
  std::vector<std::size_t> sizes;
  std::size_t n = 1;
  bool all_points = true;
  for (const auto& f : factors) {
    if (f.size() == 0) throw InvalidInput("product factor '" + f.name() + "' is empty");
    sizes.push_back(f.size());
    n *= f.size();
    all_points = all_points && f.has_points();
  }
  std::vector<std::vector<Vertex>> coords(n);
  for (std::size_t i = 0; i < n; ++i) coords[i] = decode(i, sizes);

  ProductParts parts;
  parts.rows = empty_rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      int adjacent_factors = 0;
      bool ok = true;
      for (std::size_t k = 0; k < factors.size() && ok; ++k) {
        const auto a = coords[i][k];
        const auto b = coords[j][k];
        if (a == b) continue;
        if (factors[k].adjacent(a, b))
          ++adjacent_factors;
        else
          ok = false;
      }
      if (ok && adjacent_factors >= 1 && adjacent_factors <= u) {
        parts.rows[i].set(static_cast<Vertex>(j));
        parts.rows[j].set(static_cast<Vertex>(i));
      }
    }
  }
  if (all_points) {
    std::vector<Point> pts(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < factors.size(); ++k) {
        const auto& p = factors[k].point(coords[i][k]);
        pts[i].insert(pts[i].end(), p.begin(), p.end());
      }
    parts.points = std::move(pts);
  }
  return parts;
}

// Coordinates survive a wedge / union only when they stay consistent.
std::optional<std::vector<Point>> merged_points(const DigitalImage& a, const DigitalImage& b,
                                                std::optional<Vertex> skip_b) {
  if (!a.has_points() || !b.has_points()) return std::nullopt;
  if (a.size() > 0 && b.size() > 0 && a.dimension() != b.dimension()) return std::nullopt;
  std::vector<Point> pts = a.points();
  for (Vertex v = 0; v < b.size(); ++v)
    if (!skip_b || v != *skip_b) pts.push_back(b.point(v));
  std::set<Point> distinct(pts.begin(), pts.end());
  if (distinct.size() != pts.size()) return std::nullopt;
  return pts;
}

std::vector<Point> lattice_box(const std::vector<std::pair<int, int>>& ranges) {
  std::vector<Point> out{Point{}};
  for (auto [lo, hi] : ranges) {
    std::vector<Point> next;
    for (const auto& p : out)
      for (int c = lo; c <= hi; ++c) {
        auto q = p;
        q.push_back(c);
        next.push_back(std::move(q));
      }
    out = std::move(next);
  }
  return out;
}

void require_params(const std::string& family, const std::vector<int>& params, std::size_t n) {
  if (params.size() != n)
    throw InvalidInput("generator '" + family + "' expects " + std::to_string(n) + " parameter(s), got " +
                       std::to_string(params.size()));
}

DigitalImage bars_figure(const std::string& name, int width, const std::vector<int>& middle_columns) {
  std::vector<Point> pts;
  for (int x = 0; x <= width; ++x) {
    pts.push_back({x, 0});
    pts.push_back({x, 2});
  }
  for (int x : middle_columns) pts.push_back({x, 1});
  std::sort(pts.begin(), pts.end());
  return build_image(name, std::move(pts), CuAdjacency{1});
}

}  // namespace

DigitalImage::DigitalImage(std::string name, std::optional<std::vector<Point>> points,
                           std::vector<VertexSet> adjacency, AdjacencySpec spec)
    : name_(std::move(name)), points_(std::move(points)), adjacency_(std::move(adjacency)), spec_(std::move(spec)) {
  const auto n = adjacency_.size();
  for (Vertex i = 0; i < n; ++i) {
    if (adjacency_[i].capacity() != n) throw InvalidInput("adjacency row width does not match vertex count");
    if (adjacency_[i].test(i)) throw InvalidInput("adjacency is not irreflexive at vertex " + std::to_string(i));
  }
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j : adjacency_[i].to_vector())
      if (!adjacency_[j].test(i)) throw InvalidInput("adjacency is not symmetric");
  if (points_) {
    if (points_->size() != n) throw InvalidInput("point count does not match vertex count");
    check_points(*points_);
  }
  if (const auto* cu = std::get_if<CuAdjacency>(&spec_)) {
    if (!points_) throw InvalidInput("c_u adjacency requires coordinates");
    if (rows_from_cu(*points_, cu->u) != adjacency_)
      throw InvalidInput("adjacency disagrees with c_" + std::to_string(cu->u) + " on the coordinates");
  }
}

const std::vector<Point>& DigitalImage::points() const {
  if (!points_) throw InvalidInput("image '" + name_ + "' has no coordinates");
  return *points_;
}

std::size_t DigitalImage::dimension() const {
  if (!points_ || points_->empty()) return 0;
  return points_->front().size();
}

std::optional<Vertex> DigitalImage::find_point(const Point& p) const {
  if (!points_) return std::nullopt;
  auto it = std::find(points_->begin(), points_->end(), p);
  if (it == points_->end()) return std::nullopt;
  return static_cast<Vertex>(it - points_->begin());
}

std::size_t DigitalImage::edge_count() const {
  std::size_t twice = 0;
  for (const auto& r : adjacency_) twice += r.count();
  return twice / 2;
}

std::vector<Edge> DigitalImage::edges() const { return edges_of(adjacency_); }

DigitalImage DigitalImage::renamed(std::string name) const {
  DigitalImage copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

bool cu_adjacent(const Point& x, const Point& y, int u) {
  if (x.size() != y.size())
    throw InvalidInput("cu_adjacent: dimension mismatch (" + std::to_string(x.size()) + " vs " +
                       std::to_string(y.size()) + ")");
  if (u < 1 || static_cast<std::size_t>(u) > x.size())
    throw InvalidInput("cu_adjacent: u=" + std::to_string(u) + " outside [1," + std::to_string(x.size()) + "]");
  int differing = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const int d = std::abs(x[i] - y[i]);
    if (d > 1) return false;
    differing += d;
  }
  return differing >= 1 && differing <= u;
}

DigitalImage build_image(std::string name, std::vector<Point> points, AdjacencySpec spec) {
  check_points(points);
  const auto n = points.size();
  if (const auto* cu = std::get_if<CuAdjacency>(&spec)) {
    if (n > 0 && (cu->u < 1 || static_cast<std::size_t>(cu->u) > points.front().size()))
      throw InvalidInput("c_u requires 1 <= u <= dimension (u=" + std::to_string(cu->u) + ")");
    auto rows = rows_from_cu(points, cu->u);
    return DigitalImage(std::move(name), std::move(points), std::move(rows), spec);
  }
  if (const auto* ex = std::get_if<ExplicitAdjacency>(&spec)) {
    auto normalized = normalize_edges(ex->edges, n);
    auto rows = rows_from_edges(normalized.edges, n);
    return DigitalImage(std::move(name), std::move(points), std::move(rows), std::move(normalized));
  }
  const auto& np = std::get<NpuAdjacency>(spec);
  auto parts = product_parts(np.factors, np.u);
  if (parts.rows.size() != n) throw InvalidInput("point count does not match the product of factor sizes");
  if (parts.points && *parts.points != points)
    throw InvalidInput("points do not match the concatenated factor coordinates");
  return DigitalImage(std::move(name), std::move(points), std::move(parts.rows), spec);
}

DigitalImage build_image(std::string name, std::size_t n, AdjacencySpec spec) {
  if (std::holds_alternative<CuAdjacency>(spec)) throw InvalidInput("c_u adjacency requires coordinates");
  if (const auto* ex = std::get_if<ExplicitAdjacency>(&spec)) {
    auto normalized = normalize_edges(ex->edges, n);
    auto rows = rows_from_edges(normalized.edges, n);
    return DigitalImage(std::move(name), std::nullopt, std::move(rows), std::move(normalized));
  }
  const auto& np = std::get<NpuAdjacency>(spec);
  auto parts = product_parts(np.factors, np.u);
  if (parts.rows.size() != n) throw InvalidInput("vertex count does not match the product of factor sizes");
  return DigitalImage(std::move(name), std::move(parts.points), std::move(parts.rows), spec);
}

std::vector<std::string> generator_families() {
  return {"interval", "cycle", "box", "cube", "wedge_cycles_8", "fig_xexample", "fig_sexample"};
}

DigitalImage generate(const std::string& family, const std::vector<int>& params) {
  if (family == "interval") {
    require_params(family, params, 2);
    const int a = params[0], b = params[1];
    if (a > b) throw InvalidInput("interval requires a <= b");
    return build_image("interval(" + join_ints(params) + ")", lattice_box({{a, b}}), CuAdjacency{1});
  }
  if (family == "cycle") {
    require_params(family, params, 1);
    const int n = params[0];
    if (n < 1) throw InvalidInput("cycle requires n >= 1");
    ExplicitAdjacency adj;
    for (int i = 0; i < n; ++i) {
      const auto next = static_cast<Vertex>((i + 1) % n);
      if (next != static_cast<Vertex>(i)) adj.edges.emplace_back(static_cast<Vertex>(i), next);
    }
    return build_image("cycle(" + std::to_string(n) + ")", static_cast<std::size_t>(n), adj);
  }
  if (family == "box") {
    require_params(family, params, 3);
    const int a = params[0], b = params[1], u = params[2];
    if (a < 1 || b < 1) throw InvalidInput("box requires a, b >= 1");
    if (u != 1 && u != 2) throw InvalidInput("box requires u in {1,2}");
    return build_image("box(" + join_ints(params) + ")", lattice_box({{1, a}, {1, b}}), CuAdjacency{u});
  }
  if (family == "cube") {
    require_params(family, params, 0);
    return build_image("cube", lattice_box({{0, 1}, {0, 1}, {0, 1}}), CuAdjacency{1});
  }
  if (family == "wedge_cycles_8") {
    require_params(family, params, 0);
    std::vector<Point> pts = {{0, 0},  {1, -1},  {2, -1},  {3, 0},  {2, 1},  {1, 1},
                              {-1, -1}, {-2, -1}, {-3, 0}, {-2, 1}, {-1, 1}};
    std::sort(pts.begin(), pts.end());
    return build_image("wedge_cycles_8", std::move(pts), CuAdjacency{2});
  }
  if (family == "fig_xexample") {
    require_params(family, params, 0);
    return bars_figure("fig_xexample", 6, {0, 2, 4, 6});
  }
  if (family == "fig_sexample") {
    require_params(family, params, 0);
    return bars_figure("fig_sexample", 5, {0, 2, 5});
  }
  throw InvalidInput("unknown image family '" + family + "'");
}

DigitalImage product(const std::vector<DigitalImage>& factors, int u) {
  auto parts = product_parts(factors, u);
  std::string name = "product" + std::to_string(u) + "(";
  for (std::size_t k = 0; k < factors.size(); ++k) name += (k ? "," : "") + factors[k].name();
  name += ")";
  return DigitalImage(std::move(name), std::move(parts.points), std::move(parts.rows), NpuAdjacency{u, factors});
}

DigitalImage wedge(const DigitalImage& a, const DigitalImage& b, Vertex a0, Vertex b0) {
  if (a0 >= a.size() || b0 >= b.size()) throw InvalidInput("wedge point index out of range");
  const auto n = a.size() + b.size() - 1;
  std::vector<Vertex> b_index(b.size());
  Vertex next = static_cast<Vertex>(a.size());
  for (Vertex v = 0; v < b.size(); ++v) b_index[v] = (v == b0) ? a0 : next++;
  std::vector<Edge> edges = a.edges();
  for (auto [x, y] : b.edges()) edges.emplace_back(b_index[x], b_index[y]);
  auto normalized = normalize_edges(edges, n);
  auto rows = rows_from_edges(normalized.edges, n);
  auto pts = merged_points(a, b, b0);
  if (pts && a.point(a0) != b.point(b0)) pts.reset();
  std::string name = "wedge(" + a.name() + "," + b.name() + ";" + std::to_string(a0) + ")";
  return DigitalImage(std::move(name), std::move(pts), std::move(rows), std::move(normalized));
}

DigitalImage disjoint_union(const DigitalImage& a, const DigitalImage& b) {
  const auto n = a.size() + b.size();
  const auto shift = static_cast<Vertex>(a.size());
  std::vector<Edge> edges = a.edges();
  for (auto [x, y] : b.edges()) edges.emplace_back(x + shift, y + shift);
  auto normalized = normalize_edges(edges, n);
  auto rows = rows_from_edges(normalized.edges, n);
  std::string name = "union(" + a.name() + "," + b.name() + ")";
  return DigitalImage(std::move(name), merged_points(a, b, std::nullopt), std::move(rows), std::move(normalized));
}

DigitalImage induced_subimage(const DigitalImage& x, const std::vector<Vertex>& subset) {
  std::vector<Vertex> members = subset;
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw InvalidInput("subset contains duplicate indices");
  for (Vertex v : members)
    if (v >= x.size()) throw InvalidInput("subset index " + std::to_string(v) + " out of range");
  std::map<Vertex, Vertex> local;
  for (Vertex i = 0; i < members.size(); ++i) local[members[i]] = i;
  std::string name = x.name() + "[" + std::to_string(members.size()) + "]";
  if (x.has_points() && std::holds_alternative<CuAdjacency>(x.spec())) {
    std::vector<Point> pts;
    for (Vertex v : members) pts.push_back(x.point(v));
    return build_image(std::move(name), std::move(pts), x.spec());
  }
  std::vector<Edge> edges;
  for (auto [a, b] : x.edges())
    if (local.count(a) && local.count(b)) edges.emplace_back(local[a], local[b]);
  if (x.has_points()) {
    std::vector<Point> pts;
    for (Vertex v : members) pts.push_back(x.point(v));
    return build_image(std::move(name), std::move(pts), ExplicitAdjacency{edges});
  }
  return build_image(std::move(name), members.size(), ExplicitAdjacency{edges});
}

std::vector<Vertex> closed_neighborhood(const DigitalImage& x, Vertex v) {
  if (v >= x.size()) throw InvalidInput("vertex index " + std::to_string(v) + " out of range");
  auto row = x.row(v);
  row.set(v);
  return row.to_vector();
}

std::vector<Vertex> open_neighborhood(const DigitalImage& x, Vertex v) {
  if (v >= x.size()) throw InvalidInput("vertex index " + std::to_string(v) + " out of range");
  return x.row(v).to_vector();
}

std::vector<std::vector<Vertex>> connected_components(const DigitalImage& x) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(x.size(), false);
  for (Vertex s = 0; s < x.size(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    std::deque<Vertex> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (Vertex w : x.row(v).to_vector())
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const DigitalImage& x) { return connected_components(x).size() <= 1; }

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const DigitalImage& a, const DigitalImage& b) : a_(a), b_(b) {
    const auto n = a.size();
    // BFS order over A so that most vertices meet an already-mapped neighbor.
    std::vector<bool> seen(n, false);
    for (Vertex s = 0; s < n; ++s) {
      if (seen[s]) continue;
      std::deque<Vertex> queue{s};
      seen[s] = true;
      while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        order_.push_back(v);
        for (Vertex w : a.row(v).to_vector())
          if (!seen[w]) {
            seen[w] = true;
            queue.push_back(w);
          }
      }
    }
    map_.assign(n, 0);
    used_.assign(n, false);
  }

  std::optional<std::vector<Vertex>> run() {
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t pos) {
    if (pos == order_.size()) return true;
    const Vertex v = order_[pos];
    for (Vertex w = 0; w < b_.size(); ++w) {
      if (used_[w] || a_.degree(v) != b_.degree(w)) continue;
      bool ok = true;
      for (std::size_t k = 0; k < pos && ok; ++k) {
        const Vertex u = order_[k];
        ok = a_.adjacent(v, u) == b_.adjacent(w, map_[u]);
      }
      if (!ok) continue;
      map_[v] = w;
      used_[w] = true;
      if (extend(pos + 1)) return true;
      used_[w] = false;
    }
    return false;
  }

  const DigitalImage& a_;
  const DigitalImage& b_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Vertex>> are_isomorphic(const DigitalImage& a, const DigitalImage& b,
                                                  std::size_t max_vertices) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return std::nullopt;
  if (a.size() > max_vertices)
    throw ResourceExceeded("isomorphism search limited to " + std::to_string(max_vertices) + " vertices");
  std::vector<std::size_t> da, db;
  for (Vertex v = 0; v < a.size(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return std::nullopt;
  return IsomorphismSearch(a, b).run();
}

}  // namespace digifix
