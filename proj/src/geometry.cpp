#include "digifix/geometry.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "digifix/error.hpp"

namespace digifix {

namespace {

void require_vertex(const DigitalImage& x, Vertex v) {
  if (v >= x.size()) throw InvalidInput("vertex index " + std::to_string(v) + " out of range");
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

// Vertices that lie on every geodesic between a and b: those on some geodesic
// that are alone in their distance layer.
std::vector<Vertex> on_every_geodesic(const std::vector<std::optional<std::size_t>>& from_a,
                                      const std::vector<std::optional<std::size_t>>& from_b, std::size_t distance) {
  std::vector<std::vector<Vertex>> layers(distance + 1);
  for (Vertex v = 0; v < from_a.size(); ++v)
    if (from_a[v] && from_b[v] && *from_a[v] + *from_b[v] == distance) layers[*from_a[v]].push_back(v);
  std::vector<Vertex> out;
  for (const auto& layer : layers)
    if (layer.size() == 1) out.push_back(layer.front());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool is_path(const DigitalImage& x, const PathWitness& p) {
  for (Vertex v : p.vertices)
    if (v >= x.size()) return false;
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
    if (!x.adjacent(p.vertices[i], p.vertices[i + 1])) return false;
  return !p.vertices.empty();
}

std::vector<std::optional<std::size_t>> bfs_distances(const DigitalImage& x, Vertex source) {
  require_vertex(x, source);
  std::vector<std::optional<std::size_t>> dist(x.size());
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (Vertex w : x.row(v).to_vector())
      if (!dist[w]) {
        dist[w] = *dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

Geodesics minimal_paths(const DigitalImage& x, Vertex a, Vertex b, std::size_t cap) {
  require_vertex(x, b);
  const auto from_a = bfs_distances(x, a);
  if (!from_a[b]) throw InvalidInput("vertices " + std::to_string(a) + " and " + std::to_string(b) + " are not connected");
  const auto from_b = bfs_distances(x, b);
  Geodesics out;
  out.distance = *from_a[b];

  // Path counts from a over the BFS parent DAG, restricted to geodesic vertices.
  auto on_dag = [&](Vertex v) { return from_a[v] && from_b[v] && *from_a[v] + *from_b[v] == out.distance; };
  std::vector<std::uint64_t> ways(x.size(), 0);
  std::vector<Vertex> by_layer;
  for (Vertex v = 0; v < x.size(); ++v)
    if (on_dag(v)) by_layer.push_back(v);
  std::stable_sort(by_layer.begin(), by_layer.end(), [&](Vertex p, Vertex q) { return *from_a[p] < *from_a[q]; });
  ways[a] = 1;
  for (Vertex v : by_layer)
    for (Vertex w : x.row(v).to_vector())
      if (on_dag(w) && *from_a[w] == *from_a[v] + 1) ways[w] = saturating_add(ways[w], ways[v]);
  out.count = ways[b];
  out.on_every = on_every_geodesic(from_a, from_b, out.distance);

  // Materialize in lexicographic order by DFS with ascending neighbors.
  std::vector<Vertex> stack{a};
  auto dfs = [&](auto&& self, Vertex v) -> void {
    if (out.truncated) return;
    if (v == b) {
      if (out.paths.size() >= cap) {
        out.truncated = true;
        return;
      }
      out.paths.push_back(PathWitness{stack});
      return;
    }
    for (Vertex w : x.row(v).to_vector()) {
      if (!on_dag(w) || *from_a[w] != *from_a[v] + 1) continue;
      stack.push_back(w);
      self(self, w);
      stack.pop_back();
    }
  };
  dfs(dfs, a);
  return out;
}

ForcedFixedPoints forced_fixed_points(const DigitalImage& x, const SelfMap& f) {
  if (f.size() != x.size()) throw InvalidInput("map and image sizes differ");
  const auto n = x.size();
  std::vector<std::vector<std::optional<std::size_t>>> dist(n);
  for (Vertex v = 0; v < n; ++v) dist[v] = bfs_distances(x, v);

  std::vector<bool> marked(n, false);
  for (Vertex v : fix(f)) marked[v] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Vertex> current;
    for (Vertex v = 0; v < n; ++v)
      if (marked[v]) current.push_back(v);
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        const auto d = dist[current[i]][current[j]];
        if (!d) continue;
        for (Vertex y : on_every_geodesic(dist[current[i]], dist[current[j]], *d))
          if (!marked[y]) {
            marked[y] = true;
            changed = true;
          }
      }
  }
  ForcedFixedPoints out;
  for (Vertex v = 0; v < n; ++v)
    if (marked[v]) out.forced.push_back(v);
  out.confirmed = std::all_of(out.forced.begin(), out.forced.end(), [&](Vertex v) { return f(v) == v; });
  return out;
}

std::vector<Vertex> articulation_points(const DigitalImage& x) {
  const auto n = x.size();
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> disc(n, kUnseen), low(n, 0);
  std::vector<bool> is_cut(n, false);
  std::size_t timer = 0;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::vector<Vertex> nbrs;
    std::size_t next = 0;
    std::size_t children = 0;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != kUnseen) continue;
    std::vector<Frame> stack;
    disc[root] = low[root] = timer++;
    stack.push_back(Frame{root, root, x.row(root).to_vector()});
    while (!stack.empty()) {
      auto& top = stack.back();
      if (top.next < top.nbrs.size()) {
        const Vertex w = top.nbrs[top.next++];
        if (disc[w] == kUnseen) {
          ++top.children;
          disc[w] = low[w] = timer++;
          const Vertex parent = top.v;
          stack.push_back(Frame{w, parent, x.row(w).to_vector()});
        } else if (w != top.parent) {
          low[top.v] = std::min(low[top.v], disc[w]);
        }
        continue;
      }
      const Frame done = std::move(stack.back());
      stack.pop_back();
      if (stack.empty()) {
        if (done.children >= 2) is_cut[done.v] = true;
        continue;
      }
      auto& up = stack.back();
      low[up.v] = std::min(low[up.v], low[done.v]);
      if (up.v != root && low[done.v] >= disc[up.v]) is_cut[up.v] = true;
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[v]) out.push_back(v);
  return out;
}

std::vector<ArticulationViolation> articulation_check(const DigitalImage& x, const SelfMap& f) {
  if (f.size() != x.size()) throw InvalidInput("map and image sizes differ");
  std::vector<ArticulationViolation> out;
  const auto fixed = fix(f);
  for (Vertex v : articulation_points(x)) {
    if (f(v) == v) continue;
    std::vector<Vertex> keep;
    for (Vertex w = 0; w < x.size(); ++w)
      if (w != v) keep.push_back(w);
    const auto rest = induced_subimage(x, keep);
    // Local index in `rest` is the original index shifted past v.
    auto local = [&](Vertex w) { return w < v ? w : w - 1; };
    std::vector<std::size_t> component(rest.size(), 0);
    const auto comps = connected_components(rest);
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (Vertex w : comps[c]) component[w] = c;
    for (std::size_t i = 0; i < fixed.size(); ++i)
      for (std::size_t j = i + 1; j < fixed.size(); ++j)
        if (component[local(fixed[i])] != component[local(fixed[j])]) {
          out.push_back({v, fixed[i], fixed[j]});
          i = fixed.size();
          break;
        }
  }
  return out;
}

bool is_cycle_graph(const DigitalImage& x) {
  if (x.size() < 3 || !is_connected(x)) return false;
  for (Vertex v = 0; v < x.size(); ++v)
    if (x.degree(v) != 2) return false;
  return true;
}

FixStructure fix_structure(const DigitalImage& x, const SelfMap& f) {
  if (f.size() != x.size()) throw InvalidInput("map and image sizes differ");
  FixStructure out;
  const auto fixed = fix(f);
  out.image_is_cycle = is_cycle_graph(x);
  if (fixed.empty()) return out;
  const auto sub = induced_subimage(x, fixed);
  for (const auto& comp : connected_components(sub)) {
    std::vector<Vertex> original;
    for (Vertex w : comp) original.push_back(fixed[w]);
    out.components.push_back(std::move(original));
  }
  out.kind = out.components.size() == 1 ? FixConnectivity::connected : FixConnectivity::disconnected;
  if (out.image_is_cycle && out.kind == FixConnectivity::disconnected) {
    const auto n = x.size();
    bool ok = fixed.size() == 2 && n % 2 == 0;
    if (ok) ok = *bfs_distances(x, fixed[0])[fixed[1]] == n / 2;
    out.cycle_refinement_holds = ok;
  }
  return out;
}

}  // namespace digifix
