#include <doctest.h>

#include "digifix/error.hpp"
#include "digifix/oracle.hpp"
#include "digifix/selfmap.hpp"
#include "digifix/spectrum.hpp"

using namespace digifix;

TEST_CASE("SelfMap basics") {
  CHECK_THROWS_AS(SelfMap({0, 3, 1}), InvalidInput);
  const SelfMap f({1, 1, 2, 0});
  CHECK(fix(f) == std::vector<Vertex>{1, 2});
  CHECK(moved(f) == std::vector<Vertex>{0, 3});
  CHECK(fix_count(f) == 2);
  CHECK(compose(f, f) == SelfMap({1, 1, 2, 1}));
  CHECK(fix_count(identity_map(5)) == 5);
  CHECK(fix_count(constant_map(5, 3)) == 1);
}

TEST_CASE("cycle maps") {
  CHECK(cycle_map(5, CycleMapKind::rotation, 2) == SelfMap({2, 3, 4, 0, 1}));
  CHECK(cycle_map(5, CycleMapKind::flip_composed, 1) == SelfMap({1, 0, 4, 3, 2}));
  CHECK(cycle_map(5, CycleMapKind::constant, 4) == constant_map(5, 4));
  const auto c = generate("cycle", {7});
  for (Vertex d = 0; d < 7; ++d) {
    CHECK(is_continuous(c, cycle_map(7, CycleMapKind::rotation, d)));
    CHECK(is_continuous(c, cycle_map(7, CycleMapKind::flip_composed, d)));
  }
}

TEST_CASE("continuity agrees with the oracles") {
  for (int n = 1; n <= 6; ++n) {
    const auto x = generate("cycle", {n});
    std::size_t ours = 0, brute = 0;
    oracle::for_each_function(x.size(), [&](const oracle::Targets& t) {
      const bool c = is_continuous(x, SelfMap(t));
      ours += c;
      brute += oracle::continuous_by_subsets(x, t);
      CHECK(c == oracle::continuous_by_edges(x, t));
    });
    CHECK(ours == brute);
    CHECK(count_continuous_selfmaps(x).maps_enumerated == ours);
  }
  CHECK(count_continuous_selfmaps(generate("cycle", {5})).maps_enumerated == 265);
}

TEST_CASE("fixed point free map") {
  const auto x = generate("box", {2, 3, 1});
  const auto f = fixed_point_free_map(x);
  CHECK(is_continuous(x, f));
  CHECK(fix_count(f) == 0);
  CHECK_THROWS_AS(fixed_point_free_map(generate("cycle", {1})), InvalidInput);
}

TEST_CASE("coordinate maps") {
  const auto x = generate("box", {3, 3, 1});
  const auto flip = map_from_coordinates(x, [](const Point& p) { return Point{p[1], p[0]}; });
  CHECK(is_continuous(x, flip));
  CHECK(fix_count(flip) == 3);
  CHECK_THROWS_AS(map_from_coordinates(x, [](const Point& p) { return Point{p[0] + 1, p[1]}; }), InvalidInput);
  CHECK_THROWS_AS(map_from_coordinates(generate("cycle", {5}), [](const Point& p) { return p; }), InvalidInput);
}
