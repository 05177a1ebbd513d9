#include <doctest.h>

#include <algorithm>

#include "digifix/error.hpp"
#include "digifix/oracle.hpp"
#include "digifix/spectrum.hpp"
#include "support.hpp"

using namespace digifix;

namespace {

Spectrum brute(const DigitalImage& x) {
  const auto s = oracle::spectrum(x);
  return Spectrum(std::vector<std::size_t>(s.begin(), s.end()));
}

}  // namespace

TEST_CASE("Spectrum set operations") {
  const Spectrum a{3, 1, 1, 2};
  CHECK(a.values() == std::vector<std::size_t>{1, 2, 3});
  CHECK(Spectrum::range(2, 4) == Spectrum{2, 3, 4});
  CHECK(Spectrum::range(4, 2).empty());
  CHECK(Spectrum{1, 2}.is_subset_of(a));
  CHECK(a.united(Spectrum{7}) == Spectrum{1, 2, 3, 7});
}

TEST_CASE("combinators") {
  const auto s = Spectrum::range(0, 3);
  CHECK(combine_spectra(s, s, SpectrumOp::otimes) == Spectrum{0, 1, 2, 3, 4, 6, 9});
  CHECK(combine_spectra(Spectrum{1}, Spectrum{1}, SpectrumOp::oplus) == Spectrum{2});
  CHECK(combine_spectra(s, Spectrum{0}, SpectrumOp::oplus) == s);
  CHECK(combine_spectra(s, Spectrum{1}, SpectrumOp::otimes) == s);
}

TEST_CASE("spectrum matches brute force on the pool") {
  for (const auto& x : testing::small_pool()) {
    CAPTURE(x.name());
    CHECK(fixed_point_spectrum(x).spectrum == brute(x));
  }
}

TEST_CASE("thread count does not change results") {
  for (const char* name : {"fig_sexample", "cube", "wedge_cycles_8"}) {
    const auto x = generate(name);
    const auto one = fixed_point_spectrum(x, {1});
    const auto four = fixed_point_spectrum(x, {4});
    CHECK(one.spectrum == four.spectrum);
    CHECK(one.stats.maps_enumerated == four.stats.maps_enumerated);
    CHECK(one.stats.nodes_visited == four.stats.nodes_visited);
  }
  const auto c = generate("cycle", {8});
  CHECK(count_continuous_selfmaps(c, {1}).maps_enumerated == count_continuous_selfmaps(c, {4}).maps_enumerated);
}

TEST_CASE("budget") {
  CHECK_THROWS_AS(fixed_point_spectrum(generate("fig_sexample"), {1, 1000}), ResourceExceeded);
  CHECK_THROWS_AS(pull_index(generate("fig_sexample"), 0, {1, 100}), ResourceExceeded);
  std::uint64_t seen = 0;
  const auto stats = enumerate_continuous_selfmaps(generate("cycle", {6}), [&](auto) { ++seen; }, 10);
  CHECK(seen == 10);
  CHECK(stats.truncated);
}

TEST_CASE("spectrum properties on random connected graphs") {
  std::mt19937 rng(7);
  for (int i = 0; i < 120; ++i) {
    const auto n = std::uniform_int_distribution<std::size_t>(2, 7)(rng);
    const auto x = testing::random_graph(rng, n, true);
    const auto f = fixed_point_spectrum(x).spectrum;
    CAPTURE(x.edges().size());
    if (n == 2) {
      CHECK(f == Spectrum{0, 1, 2});
    } else {
      for (std::size_t k : {std::size_t{0}, std::size_t{1}, std::size_t{2}, std::size_t{3}, n}) CHECK(f.contains(k));
    }
    for (Vertex v = 0; v < n; ++v)
      for (std::size_t k = 0; k <= closed_neighborhood(x, v).size(); ++k) CHECK(f.contains(k));

    const auto pulls = pull_indices(x);
    std::size_t lowest = n;
    for (const auto& p : pulls) {
      REQUIRE(p.value);
      lowest = std::min(lowest, *p.value);
    }
    for (std::size_t k = n - lowest + 1; k < n; ++k) CHECK_FALSE(f.contains(k));
    for (std::size_t k : f.values()) {
      if (k >= n) continue;
      const auto within = std::count_if(pulls.begin(), pulls.end(), [&](const PullResult& p) { return *p.value <= n - k; });
      CHECK(static_cast<std::size_t>(within) >= n - k);
    }
  }
}

TEST_CASE("pull index against brute force") {
  std::mt19937 rng(11);
  for (int i = 0; i < 40; ++i) {
    const auto n = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
    const auto x = testing::random_graph(rng, n, i % 3 != 0);
    for (const auto& p : pull_indices(x)) {
      const auto expected = oracle::pull_index(x, p.point);
      CHECK(p.value.value_or(0) == expected);
      if (p.witness) {
        CHECK(is_continuous(x, *p.witness));
        CHECK((*p.witness)(p.point) != p.point);
        CHECK(n - fix_count(*p.witness) == *p.value);
      }
    }
  }
  CHECK_THROWS_AS(pull_index(generate("cycle", {1}), 0), InvalidInput);
  CHECK_THROWS_AS(pull_index(generate("cycle", {4}), 4), InvalidInput);
}

TEST_CASE("n-1 criterion") {
  const auto x = generate("interval", {0, 3});
  const auto pair = nminus1_criterion(x);
  REQUIRE(pair);
  CHECK(*pair == std::pair<Vertex, Vertex>{0, 1});
  const auto f = nminus1_map(x.size(), *pair);
  CHECK(is_continuous(x, f));
  CHECK(fix_count(f) == 3);
  CHECK_FALSE(nminus1_criterion(generate("cycle", {6})));
  CHECK_FALSE(nminus1_criterion(generate("cube")));
}

TEST_CASE("isomorphic images have equal spectra") {
  const auto a = generate("box", {2, 3, 1});
  const auto b = build_image("relabelled", 6, ExplicitAdjacency{{{5, 4}, {4, 3}, {5, 2}, {4, 1}, {3, 0}, {2, 1}, {1, 0}}});
  REQUIRE(are_isomorphic(a, b));
  CHECK(fixed_point_spectrum(a).spectrum == fixed_point_spectrum(b).spectrum);
}
