#include <doctest.h>

#include <algorithm>

#include "digifix/error.hpp"
#include "digifix/image.hpp"

using namespace digifix;

TEST_CASE("cu adjacency") {
  CHECK(cu_adjacent({0, 0}, {1, 0}, 1));
  CHECK_FALSE(cu_adjacent({0, 0}, {1, 1}, 1));
  CHECK(cu_adjacent({0, 0}, {1, 1}, 2));
  CHECK_FALSE(cu_adjacent({0, 0}, {0, 0}, 2));
  CHECK_FALSE(cu_adjacent({0, 0}, {2, 0}, 2));
  CHECK(cu_adjacent({0, 0, 0}, {1, 1, 1}, 3));
  CHECK_FALSE(cu_adjacent({0, 0, 0}, {1, 1, 1}, 2));
  CHECK_THROWS_AS(cu_adjacent({0, 0}, {1}, 1), InvalidInput);
  CHECK_THROWS_AS(cu_adjacent({0, 0}, {1, 0}, 3), InvalidInput);
}

TEST_CASE("generator sizes") {
  const auto cube = generate("cube");
  CHECK(cube.size() == 8);
  CHECK(cube.edge_count() == 12);
  CHECK(generate("fig_xexample").size() == 18);
  CHECK(generate("fig_sexample").size() == 15);
  CHECK(generate("wedge_cycles_8").size() == 11);
  CHECK(generate("interval", {-2, 3}).size() == 6);
  CHECK(generate("box", {3, 2, 2}).edge_count() == 11);
  CHECK(generate("box", {3, 2, 1}).edge_count() == 7);

  for (int n = 3; n <= 9; ++n) {
    const auto c = generate("cycle", {n});
    CHECK(c.edge_count() == static_cast<std::size_t>(n));
    for (Vertex v = 0; v < c.size(); ++v) CHECK(c.degree(v) == 2);
  }
  CHECK(generate("cycle", {1}).edge_count() == 0);
  CHECK(generate("cycle", {2}).edge_count() == 1);

  CHECK_THROWS_AS(generate("torus"), InvalidInput);
  CHECK_THROWS_AS(generate("cycle"), InvalidInput);
  CHECK_THROWS_AS(generate("interval", {3, 1}), InvalidInput);
  CHECK_THROWS_AS(generate("box", {2, 2, 3}), InvalidInput);
}

TEST_CASE("build_image validation") {
  CHECK_THROWS_AS(build_image("dup", {{0, 0}, {0, 0}}, CuAdjacency{1}), InvalidInput);
  CHECK_THROWS_AS(build_image("mixed", {{0, 0}, {1}}, CuAdjacency{1}), InvalidInput);
  CHECK_THROWS_AS(build_image("abstract", 3, CuAdjacency{1}), InvalidInput);
  CHECK_THROWS_AS(build_image("loop", 3, ExplicitAdjacency{{{1, 1}}}), InvalidInput);
  CHECK_THROWS_AS(build_image("range", 3, ExplicitAdjacency{{{0, 3}}}), InvalidInput);

  const auto x = build_image("e", 3, ExplicitAdjacency{{{2, 0}, {0, 2}, {1, 2}}});
  CHECK(x.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
  CHECK(std::get<ExplicitAdjacency>(x.spec()).edges == std::vector<Edge>{{0, 2}, {1, 2}});
}

TEST_CASE("neighborhoods and components") {
  const auto x = generate("interval", {0, 3});
  CHECK(open_neighborhood(x, 1) == std::vector<Vertex>{0, 2});
  CHECK(closed_neighborhood(x, 1) == std::vector<Vertex>{0, 1, 2});
  CHECK(is_connected(x));

  const auto u = disjoint_union(generate("interval", {0, 1}), generate("cycle", {3}));
  CHECK(u.size() == 5);
  CHECK(connected_components(u) == std::vector<std::vector<Vertex>>{{0, 1}, {2, 3, 4}});
  CHECK_FALSE(is_connected(u));
}

TEST_CASE("product, wedge, subimage") {
  const auto i2 = generate("interval", {0, 1});
  const auto square = product({i2, i2}, 1);
  CHECK(square.size() == 4);
  CHECK(square.edge_count() == 4);
  CHECK(are_isomorphic(square, generate("cycle", {4})).has_value());
  const auto k4 = product({i2, i2}, 2);
  CHECK(k4.edge_count() == 6);
  CHECK(are_isomorphic(k4, generate("box", {2, 2, 2})).has_value());
  CHECK(k4.point(3) == Point{1, 1});

  const auto w = wedge(generate("cycle", {4}), generate("cycle", {5}), 0, 2);
  CHECK(w.size() == 8);
  CHECK(w.edge_count() == 9);
  CHECK(w.degree(0) == 4);

  const auto sub = induced_subimage(generate("cycle", {6}), {0, 1, 2, 4});
  CHECK(sub.size() == 4);
  CHECK(sub.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("isomorphism") {
  const auto c6 = generate("cycle", {6});
  const auto relabelled = build_image("c6", 6, ExplicitAdjacency{{{0, 3}, {3, 1}, {1, 4}, {4, 2}, {2, 5}, {5, 0}}});
  const auto iso = are_isomorphic(c6, relabelled);
  REQUIRE(iso);
  for (auto [a, b] : c6.edges()) CHECK(relabelled.adjacent((*iso)[a], (*iso)[b]));
  CHECK_FALSE(are_isomorphic(c6, generate("interval", {0, 5})));
  CHECK_FALSE(are_isomorphic(c6, generate("cycle", {5})));
}
