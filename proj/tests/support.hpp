#pragma once

#include <random>
#include <string>
#include <vector>

#include "digifix/image.hpp"

namespace digifix::testing {

inline DigitalImage random_graph(std::mt19937& rng, std::size_t n, bool connected, double density = -1) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  while (true) {
    const double p = density >= 0 ? density : 0.2 + 0.5 * unit(rng);
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j)
        if (unit(rng) < p) edges.emplace_back(i, j);
    auto x = build_image("random", n, ExplicitAdjacency{edges});
    if (!connected || is_connected(x)) return x;
  }
}

inline std::vector<DigitalImage> small_pool() {
  std::vector<DigitalImage> pool;
  for (int k = 0; k < 6; ++k) pool.push_back(generate("interval", {0, k}));
  for (int n = 1; n <= 7; ++n) pool.push_back(generate("cycle", {n}));
  pool.push_back(generate("box", {2, 2, 1}));
  pool.push_back(generate("box", {2, 3, 1}));
  pool.push_back(generate("box", {2, 3, 2}));
  pool.push_back(build_image("tee", {{0, 0}, {1, 0}, {2, 0}, {1, 1}}, CuAdjacency{1}));
  pool.push_back(build_image("house", 5, ExplicitAdjacency{{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {3, 4}}}));
  pool.push_back(wedge(generate("cycle", {5}), generate("interval", {0, 1}), 0, 0));
  return pool;
}

}  // namespace digifix::testing
