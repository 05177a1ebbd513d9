#include <doctest.h>

#include <random>

#include "digifix/error.hpp"
#include "digifix/homotopy.hpp"
#include "digifix/lasso.hpp"

using namespace digifix;

TEST_CASE("right angles") {
  const auto box = generate("box", {2, 3, 1});
  CHECK(right_angle(box, 1, 0, 3));
  CHECK_FALSE(right_angle(generate("cycle", {5}), 0, 1, 2));
  CHECK_THROWS_AS(right_angle(box, 0, 1, 0), InvalidInput);
  CHECK_THROWS_AS(right_angle(box, 0, 5, 1), InvalidInput);
}

TEST_CASE("lasso on fig_xexample") {
  const auto x = generate("fig_xexample");
  const auto a = *x.find_point({0, 1});
  const auto b = *x.find_point({0, 0});
  const auto l = find_lasso(x, a, b);
  REQUIRE(l);
  CHECK(is_valid_lasso(x, *l));
  std::vector<Point> path;
  for (Vertex v : l->path) path.push_back(x.point(v));
  CHECK(path == std::vector<Point>{{0, 1}, {0, 0}, {1, 0}, {2, 0}});
  CHECK(l->loop.size() == 8);
  CHECK_THROWS_AS(find_lasso(x, a, *x.find_point({6, 2})), InvalidInput);
}

TEST_CASE("lasso violations") {
  const auto c7 = generate("cycle", {7});
  const auto tail = wedge(c7, generate("interval", {0, 2}), 0, 0);
  const Lasso good{{0, 1, 2, 3, 4, 5, 6}, {8, 7, 0}};
  CHECK_FALSE(lasso_violation(tail, good));
  CHECK(lasso_violation(tail, Lasso{{0, 1, 2, 3, 4, 5}, {8, 7, 0}}));
  CHECK(lasso_violation(tail, Lasso{{0, 1, 2, 3}, {8, 7, 0}}));
  CHECK(lasso_violation(tail, Lasso{{0, 1, 2, 3, 4, 5, 6}, {8, 7, 1}}));
  CHECK(lasso_violation(tail, Lasso{{0, 1, 2, 3, 4, 5, 6}, {0}}));
  CHECK(lasso_violation(tail, Lasso{{0, 1, 2, 3, 4, 5, 6}, {1, 0}}));
  const auto chord = build_image("chord", 7,
                                 ExplicitAdjacency{{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}, {1, 4}}});
  CHECK(lasso_violation(chord, Lasso{{0, 1, 2, 3, 4, 5, 6}, {2, 1, 0}}));
}

TEST_CASE("certificates") {
  CHECK(lasso_rigidity_certificate(generate("fig_xexample")).certified);
  CHECK(lasso_rigidity_certificate(generate("fig_sexample")).certified);
  for (int n = 3; n <= 9; ++n) {
    const auto cert = lasso_rigidity_certificate(generate("cycle", {n}));
    CHECK_FALSE(cert.certified);
    CHECK(cert.missing.size() == static_cast<std::size_t>(2 * n));
  }
  LassoOptions tiny;
  tiny.node_budget = 3;
  CHECK_THROWS_AS(lasso_rigidity_certificate(generate("fig_sexample"), tiny), ResourceExceeded);
  LassoOptions short_loops;
  short_loops.max_loop = 6;
  CHECK_FALSE(lasso_rigidity_certificate(generate("fig_xexample"), short_loops).certified);
}

TEST_CASE("certified images are rigid") {
  // Random 4-adjacency images inside a 7x3 window, the shape of the examples.
  std::mt19937 rng(3);
  std::bernoulli_distribution keep(0.8);
  std::size_t certified = 0;
  for (int i = 0; i < 400; ++i) {
    std::vector<Point> points;
    for (int x = 0; x < 7; ++x)
      for (int y = 0; y < 3; ++y)
        if (y != 1 ? keep(rng) : rng() % 3 == 0) points.push_back({x, y});
    if (points.size() < 5) continue;
    const auto image = build_image("sample", points, CuAdjacency{1});
    if (!is_connected(image)) continue;
    const auto cert = lasso_rigidity_certificate(image);
    for (const auto& [pair, l] : cert.lassos) CHECK(is_valid_lasso(image, l));
    if (!cert.certified) continue;
    ++certified;
    CHECK(is_rigid_image(image));
  }
  CHECK(certified > 0);
}
