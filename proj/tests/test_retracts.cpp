#include <doctest.h>

#include "digifix/error.hpp"
#include "digifix/retracts.hpp"
#include "support.hpp"

using namespace digifix;

TEST_CASE("cube face") {
  const auto cube = generate("cube");
  std::vector<Vertex> face;
  for (Vertex v = 0; v < 8; ++v)
    if (cube.point(v)[2] == 0) face.push_back(v);
  const auto w = find_retraction(cube, face);
  REQUIRE(w);
  CHECK(is_valid_retraction(cube, *w));
  CHECK(is_deformation_retraction(cube, *w) == Membership::member);
  CHECK(fixed_point_spectrum(induced_subimage(cube, face)).spectrum.is_subset_of(fixed_point_spectrum(cube).spectrum));
}

TEST_CASE("arcs of a cycle are not retracts") {
  const auto c8 = generate("cycle", {8});
  CHECK_FALSE(find_retraction(c8, {0, 1, 2, 3, 4, 5}));
  const auto point = find_retraction(c8, {3});
  REQUIRE(point);
  CHECK(point->map == constant_map(8, 3));
  CHECK(is_deformation_retraction(c8, *point) == Membership::not_member);
  const auto all = find_retraction(c8, {7, 0, 1, 2, 3, 4, 5, 6, 6});
  REQUIRE(all);
  CHECK(all->map == identity_map(8));
  CHECK(is_deformation_retraction(c8, *all) == Membership::member);
}

TEST_CASE("lexicographically least witness") {
  const auto line = generate("interval", {0, 4});
  const auto w = find_retraction(line, {1, 3});
  CHECK_FALSE(w);
  const auto end = find_retraction(line, {2, 3, 4});
  REQUIRE(end);
  CHECK(end->map == SelfMap({2, 2, 2, 3, 4}));
}

TEST_CASE("bad input") {
  const auto c5 = generate("cycle", {5});
  CHECK_THROWS_AS(find_retraction(c5, {}), InvalidInput);
  CHECK_THROWS_AS(find_retraction(c5, {5}), InvalidInput);
  CHECK_THROWS_AS(is_deformation_retraction(c5, RetractionWitness{{0}, identity_map(5)}), InvalidInput);
  CHECK_FALSE(is_valid_retraction(c5, RetractionWitness{{0, 1}, SelfMap({1, 1, 1, 1, 1})}));
  CHECK(is_valid_retraction(c5, RetractionWitness{{0, 1}, SelfMap({0, 1, 1, 1, 1})}));
}

TEST_CASE("retracts carry their spectra") {
  for (const auto& x : testing::small_pool()) {
    if (x.size() < 3 || !is_connected(x)) continue;
    const auto fx = fixed_point_spectrum(x).spectrum;
    for (Vertex a = 0; a < x.size(); ++a)
      for (Vertex b = a + 1; b < x.size(); ++b) {
        const std::vector<Vertex> subset{a, b};
        const auto w = find_retraction(x, subset);
        if (!w) continue;
        CHECK(is_valid_retraction(x, *w));
        CHECK(fixed_point_spectrum(induced_subimage(x, subset)).spectrum.is_subset_of(fx));
      }
  }
}
