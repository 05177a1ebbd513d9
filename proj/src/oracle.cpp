#include "digifix/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "digifix/error.hpp"

namespace digifix::oracle {

namespace {

bool mask_connected(const DigitalImage& x, std::uint32_t mask) {
  if (mask == 0) return true;
  const auto start = static_cast<Vertex>(__builtin_ctz(mask));
  std::uint32_t seen = 1U << start;
  std::deque<Vertex> queue{start};
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (Vertex w = 0; w < x.size(); ++w)
      if ((mask >> w & 1U) && !(seen >> w & 1U) && x.adjacent(v, w)) {
        seen |= 1U << w;
        queue.push_back(w);
      }
  }
  return seen == mask;
}

std::size_t distance(const DigitalImage& x, Vertex a, Vertex b) {
  std::vector<std::size_t> d(x.size(), SIZE_MAX);
  std::deque<Vertex> queue{a};
  d[a] = 0;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (Vertex w = 0; w < x.size(); ++w)
      if (x.adjacent(v, w) && d[w] == SIZE_MAX) {
        d[w] = d[v] + 1;
        queue.push_back(w);
      }
  }
  return d[b];
}

}  // namespace

void for_each_function(std::size_t n, const std::function<void(const Targets&)>& fn) {
  Targets t(n, 0);
  if (n == 0) {
    fn(t);
    return;
  }
  while (true) {
    fn(t);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++t[i] < n) break;
      t[i] = 0;
      if (i == 0) return;
    }
  }
}

bool continuous_by_edges(const DigitalImage& x, const Targets& t) {
  for (Vertex a = 0; a < x.size(); ++a)
    for (Vertex b = a + 1; b < x.size(); ++b)
      if (x.adjacent(a, b) && t[a] != t[b] && !x.adjacent(t[a], t[b])) return false;
  return true;
}

bool continuous_by_subsets(const DigitalImage& x, const Targets& t) {
  if (x.size() > 20) throw ResourceExceeded("subset oracle is limited to 20 vertices");
  const std::uint32_t all = (1U << x.size()) - 1;
  for (std::uint32_t s = 1; s <= all; ++s) {
    if (!mask_connected(x, s)) continue;
    std::uint32_t image = 0;
    for (Vertex v = 0; v < x.size(); ++v)
      if (s >> v & 1U) image |= 1U << t[v];
    if (!mask_connected(x, image)) return false;
  }
  return true;
}

std::vector<Targets> continuous_maps(const DigitalImage& x) {
  std::vector<Targets> out;
  for_each_function(x.size(), [&](const Targets& t) {
    if (continuous_by_edges(x, t)) out.push_back(t);
  });
  return out;
}

std::size_t fixed_count(const Targets& t) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < t.size(); ++i) k += t[i] == i;
  return k;
}

std::set<std::size_t> spectrum(const DigitalImage& x) {
  std::set<std::size_t> out;
  for_each_function(x.size(), [&](const Targets& t) {
    if (continuous_by_edges(x, t)) out.insert(fixed_count(t));
  });
  return out;
}

std::size_t pull_index(const DigitalImage& x, Vertex p) {
  std::size_t best = 0;
  for_each_function(x.size(), [&](const Targets& t) {
    if (t[p] == p || !continuous_by_edges(x, t)) return;
    const auto moved = t.size() - fixed_count(t);
    if (best == 0 || moved < best) best = moved;
  });
  return best;
}

std::vector<std::vector<Targets>> homotopy_partition(const DigitalImage& x) {
  const auto maps = continuous_maps(x);
  const auto m = maps.size();
  auto one_step = [&](const Targets& f, const Targets& g) {
    for (Vertex v = 0; v < x.size(); ++v)
      if (f[v] != g[v] && !x.adjacent(f[v], g[v])) return false;
    return true;
  };
  std::vector<std::size_t> label(m, SIZE_MAX);
  std::size_t next = 0;
  for (std::size_t s = 0; s < m; ++s) {
    if (label[s] != SIZE_MAX) continue;
    label[s] = next;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const auto i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < m; ++j)
        if (label[j] == SIZE_MAX && one_step(maps[i], maps[j])) {
          label[j] = next;
          queue.push_back(j);
        }
    }
    ++next;
  }
  std::vector<std::vector<Targets>> classes(next);
  for (std::size_t i = 0; i < m; ++i) classes[label[i]].push_back(maps[i]);
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end());
  return classes;
}

std::vector<Vertex> on_every_geodesic(const DigitalImage& x, Vertex a, Vertex b) {
  const auto d = distance(x, a, b);
  if (d == SIZE_MAX) throw InvalidInput("vertices are not connected");
  std::vector<std::size_t> hits(x.size(), 0);
  std::size_t paths = 0;
  std::vector<Vertex> walk{a};
  auto extend = [&](auto&& self) -> void {
    if (walk.size() == d + 1) {
      if (walk.back() != b) return;
      ++paths;
      std::vector<bool> seen(x.size(), false);
      for (Vertex v : walk) seen[v] = true;
      for (Vertex v = 0; v < x.size(); ++v) hits[v] += seen[v];
      return;
    }
    for (Vertex w = 0; w < x.size(); ++w)
      if (x.adjacent(walk.back(), w)) {
        walk.push_back(w);
        self(self);
        walk.pop_back();
      }
  };
  extend(extend);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < x.size(); ++v)
    if (hits[v] == paths) out.push_back(v);
  return out;
}

}  // namespace digifix::oracle
