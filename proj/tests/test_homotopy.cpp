#include <doctest.h>

#include "digifix/error.hpp"
#include "digifix/homotopy.hpp"
#include "digifix/oracle.hpp"
#include "support.hpp"

using namespace digifix;

TEST_CASE("one-step homotopies") {
  const auto x = generate("interval", {0, 2});
  CHECK(one_step_homotopic(x, identity_map(3), SelfMap({0, 0, 1})));
  CHECK_FALSE(one_step_homotopic(x, identity_map(3), SelfMap({2, 1, 0})));
  CHECK_FALSE(one_step_homotopic(x, identity_map(3), SelfMap({0, 2, 2})));
  const auto near = one_step_neighbors(x, identity_map(3));
  CHECK(std::find(near.begin(), near.end(), identity_map(3)) != near.end());
  for (const auto& g : near) CHECK(one_step_homotopic(x, identity_map(3), g));
}

TEST_CASE("contractible images have one class") {
  for (const char* name : {"cube"}) {
    const auto x = generate(name);
    const auto classes = homotopy_classes(x);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].fix_counts == fixed_point_spectrum(x).spectrum);
  }
  const auto box = generate("box", {2, 3, 1});
  CHECK(homotopy_classes(box).size() == 1);
  CHECK(homotopy_class(box, identity_map(6)).fix_counts == Spectrum::range(0, 6));
}

TEST_CASE("cycle classes") {
  const auto x = generate("cycle", {6});
  const auto classes = homotopy_classes(x);
  CHECK(classes.size() == 3);
  const auto flip = homotopy_class(x, cycle_map(6, CycleMapKind::flip_composed, 0));
  CHECK(flip.size == 6);
  CHECK(flip.fix_counts == Spectrum{0, 2});
  CHECK(homotopy_class(x, constant_map(6, 0)).fix_counts == Spectrum{0, 1, 2, 3, 4});
  for (int n : {5, 7, 9}) {
    const auto odd = generate("cycle", {n});
    CHECK(homotopy_class(odd, cycle_map(n, CycleMapKind::flip_composed, 0)).fix_counts == Spectrum{1});
  }
  CHECK(homotopic(x, identity_map(6), cycle_map(6, CycleMapKind::rotation, 3)) == Membership::member);
  CHECK(homotopic(x, identity_map(6), constant_map(6, 0)) == Membership::not_member);
}

TEST_CASE("homotopy paths") {
  const auto x = generate("cycle", {7});
  const auto path = find_homotopy_path(x, identity_map(7), cycle_map(7, CycleMapKind::rotation, 2));
  REQUIRE(path);
  CHECK(path->steps.front() == identity_map(7));
  CHECK(path->steps.back() == cycle_map(7, CycleMapKind::rotation, 2));
  CHECK(verify_homotopy_path(x, *path));
  CHECK_FALSE(find_homotopy_path(x, identity_map(7), constant_map(7, 0)));
  CHECK_FALSE(verify_homotopy_path(x, {{identity_map(7), cycle_map(7, CycleMapKind::rotation, 2)}}));
}

TEST_CASE("rigidity") {
  CHECK(is_rigid_image(generate("fig_xexample")));
  CHECK(is_rigid_image(generate("wedge_cycles_8")));
  CHECK_FALSE(is_rigid_image(generate("cycle", {8})));
  CHECK_FALSE(is_rigid_image(generate("box", {3, 3, 2})));
  const auto breaker = rigidity_breaker(generate("interval", {0, 4}));
  REQUIRE(breaker);
  CHECK(*breaker != identity_map(5));

  // A disjoint union is rigid iff both parts are.
  const auto x = generate("fig_xexample");
  CHECK(is_rigid_image(disjoint_union(x, generate("cycle", {1}))));
  CHECK_FALSE(is_rigid_image(disjoint_union(x, generate("interval", {0, 1}))));

  std::vector<Vertex> torn(18, 0);
  torn[17] = 17;
  CHECK_THROWS_AS(is_rigid_map(x, SelfMap(torn)), InvalidInput);
}

TEST_CASE("class budget") {
  HomotopyOptions o;
  o.class_budget = 10;
  const auto c = homotopy_class(generate("cycle", {6}), constant_map(6, 0), o);
  CHECK_FALSE(c.complete);
  CHECK(c.size == 10);
  CHECK_THROWS_AS(homotopy_classes(generate("cycle", {6}), o), ResourceExceeded);
}

TEST_CASE("classes match the brute-force partition") {
  for (const auto& x : testing::small_pool()) {
    if (x.size() > 5) continue;
    CAPTURE(x.name());
    std::vector<std::vector<oracle::Targets>> ours;
    for (const auto& c : homotopy_classes(x)) {
      ours.emplace_back();
      for (const auto& m : c.members) ours.back().emplace_back(m.targets().begin(), m.targets().end());
    }
    std::sort(ours.begin(), ours.end());
    CHECK(ours == oracle::homotopy_partition(x));
  }
}
