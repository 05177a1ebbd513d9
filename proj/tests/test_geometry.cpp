#include <doctest.h>

#include "digifix/error.hpp"
#include "digifix/geometry.hpp"
#include "digifix/oracle.hpp"
#include "digifix/spectrum.hpp"
#include "support.hpp"

using namespace digifix;

TEST_CASE("minimal paths") {
  const auto c6 = generate("cycle", {6});
  const auto g = minimal_paths(c6, 0, 3);
  CHECK(g.distance == 3);
  CHECK(g.count == 2);
  REQUIRE(g.paths.size() == 2);
  CHECK(g.paths[0].vertices == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(g.paths[1].vertices == std::vector<Vertex>{0, 5, 4, 3});
  CHECK(g.on_every == std::vector<Vertex>{0, 3});
  for (const auto& p : g.paths) CHECK(is_path(c6, p));

  const auto line = minimal_paths(generate("interval", {0, 4}), 4, 0);
  CHECK(line.count == 1);
  CHECK(line.on_every == std::vector<Vertex>{0, 1, 2, 3, 4});

  const auto self = minimal_paths(c6, 2, 2);
  CHECK(self.distance == 0);
  CHECK(self.on_every == std::vector<Vertex>{2});

  const auto grid = minimal_paths(generate("box", {3, 3, 1}), 0, 8, 2);
  CHECK(grid.count == 6);
  CHECK(grid.paths.size() == 2);
  CHECK(grid.truncated);

  CHECK_THROWS_AS(minimal_paths(disjoint_union(c6, c6), 0, 7), InvalidInput);
}

TEST_CASE("on_every matches brute force") {
  for (const auto& x : testing::small_pool())
    for (Vertex a = 0; a < x.size(); ++a)
      for (Vertex b = 0; b < x.size(); ++b) {
        if (!bfs_distances(x, a)[b]) continue;
        CHECK(minimal_paths(x, a, b).on_every == oracle::on_every_geodesic(x, a, b));
      }
}

TEST_CASE("articulation points") {
  CHECK(articulation_points(generate("interval", {0, 4})) == std::vector<Vertex>{1, 2, 3});
  CHECK(articulation_points(generate("cycle", {7})).empty());
  const auto w = generate("wedge_cycles_8");
  CHECK(articulation_points(w).size() == 1);
  CHECK(articulation_points(wedge(generate("cycle", {5}), generate("interval", {0, 2}), 0, 0)) ==
        std::vector<Vertex>{0, 5});
}

TEST_CASE("continuous maps never move separating or forced points") {
  for (const auto& x : testing::small_pool()) {
    enumerate_continuous_selfmaps(x, [&](std::span<const Vertex> t) {
      const SelfMap f(std::vector<Vertex>(t.begin(), t.end()));
      CHECK(articulation_check(x, f).empty());
      CHECK(forced_fixed_points(x, f).confirmed);
    });
  }
  // A discontinuous map can break both.
  const auto line = generate("interval", {0, 2});
  const SelfMap swap_middle({0, 0, 2});
  CHECK_FALSE(forced_fixed_points(line, swap_middle).confirmed);
  CHECK(articulation_check(line, swap_middle).size() == 1);
}

TEST_CASE("fixed sets on cycles") {
  const auto c6 = generate("cycle", {6});
  const auto flip = fix_structure(c6, cycle_map(6, CycleMapKind::flip_composed, 0));
  CHECK(flip.kind == FixConnectivity::disconnected);
  CHECK(flip.components == std::vector<std::vector<Vertex>>{{0}, {3}});
  CHECK(flip.image_is_cycle);
  CHECK(flip.cycle_refinement_holds);

  CHECK(fix_structure(c6, cycle_map(6, CycleMapKind::rotation, 1)).kind == FixConnectivity::empty);
  CHECK(fix_structure(c6, identity_map(6)).kind == FixConnectivity::connected);
  CHECK(fix_structure(generate("cycle", {7}), cycle_map(7, CycleMapKind::flip_composed, 0)).components.size() == 1);

  CHECK_FALSE(is_cycle_graph(generate("interval", {0, 3})));
  CHECK(is_cycle_graph(generate("box", {2, 2, 1})));
  CHECK_FALSE(is_cycle_graph(generate("cycle", {2})));
}
