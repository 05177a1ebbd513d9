#include "digifix/acceptance.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "digifix/cli.hpp"
#include "digifix/error.hpp"
#include "digifix/geometry.hpp"
#include "digifix/homotopy.hpp"
#include "digifix/io.hpp"
#include "digifix/lasso.hpp"
#include "digifix/oracle.hpp"

namespace digifix {

namespace {

std::string show(const std::vector<std::size_t>& v, char open = '{', char close = '}') {
  std::string s(1, open);
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + close;
}
std::string show(const Spectrum& s) { return show(s.values()); }
std::string show(const std::set<std::size_t>& s) { return show(std::vector<std::size_t>(s.begin(), s.end())); }
std::string show(std::span<const Vertex> t) { return show(std::vector<std::size_t>(t.begin(), t.end()), '[', ']'); }
std::string show(const SelfMap& f) { return show(f.targets()); }

Spectrum to_spectrum(const std::set<std::size_t>& s) { return Spectrum(std::vector<std::size_t>(s.begin(), s.end())); }

class Check {
 public:
  explicit Check(CriterionResult& r) : r_(r) {}
  bool operator()(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      r_.passed = false;
      r_.failures.push_back(what);
    }
    return ok;
  }
  std::size_t count() const { return checks_; }

 private:
  CriterionResult& r_;
  std::size_t checks_ = 0;
};

struct Context {
  SearchOptions search;
  HomotopyOptions homotopy;
};

std::vector<SelfMap> all_maps(const DigitalImage& x) {
  std::vector<SelfMap> out;
  enumerate_continuous_selfmaps(x, [&](std::span<const Vertex> t) { out.emplace_back(std::vector<Vertex>(t.begin(), t.end())); });
  return out;
}

// F(C_n): {1}; {0..n} for 2 <= n <= 4; {0..floor(n/2)+1, n} above.
Spectrum cycle_formula(std::size_t n) {
  if (n == 1) return {1};
  if (n <= 4) return Spectrum::range(0, n);
  auto s = Spectrum::range(0, n / 2 + 1);
  s.insert(n);
  return s;
}

void criterion_cycle_spectrum(const Context& ctx, CriterionResult& r) {
  Check check(r);
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto x = generate("cycle", {static_cast<int>(n)});
    const auto got = fixed_point_spectrum(x, ctx.search).spectrum;
    check(got == cycle_formula(n), "F(C_" + std::to_string(n) + ") = " + show(got) + ", expected " + show(cycle_formula(n)));
    if (n <= 7) {
      const auto brute = oracle::spectrum(x);
      check(got == to_spectrum(brute), "F(C_" + std::to_string(n) + "): search " + show(got) + " but brute force " + show(brute));
    }
  }
  r.summary = "C_1..C_9 against the formula, brute force up to C_7";
}

void criterion_cycle_classes_spectra(const Context& ctx, CriterionResult& r) {
  Check check(r);
  for (std::size_t n = 5; n <= 8; ++n) {
    const auto x = generate("cycle", {static_cast<int>(n)});
    const auto label = "C_" + std::to_string(n);
    struct Case {
      const char* name;
      SelfMap f;
      Spectrum expected;
    };
    const Case cases[] = {
        {"S(id)", identity_map(n), Spectrum{0, n}},
        {"S(c)", constant_map(n, 0), Spectrum::range(0, n / 2 + 1)},
        {"S(l)", cycle_map(n, CycleMapKind::flip_composed, 0), n % 2 ? Spectrum{0, 1} : Spectrum{0, 2}},
    };
    for (const auto& c : cases) {
      const auto cls = homotopy_class(x, c.f, ctx.homotopy);
      if (!check(cls.complete, label + " " + c.name + ": class search incomplete")) continue;
      if (cls.fix_counts == c.expected) {
        check(true, "");
        continue;
      }
      std::string detail;
      if (std::string(c.name) == "S(l)") {
        // The class of l is {r_d o l}; count Fix(x_i -> x_{d-i}) directly.
        std::set<std::size_t> direct;
        for (std::size_t d = 0; d < n; ++d) {
          std::size_t k = 0;
          for (std::size_t i = 0; i < n; ++i) k += (d + n - i) % n == i;
          direct.insert(k);
        }
        detail = "; direct count of #Fix(x_i -> x_{d-i}) over d gives " + show(direct) +
                 (n % 2 ? " (2i = d mod n has exactly one solution for odd n)" : "");
      }
      check(false, label + " " + c.name + " = " + show(cls.fix_counts) + ", expected " + show(c.expected) + detail);
    }
  }
  r.summary = "homotopy classes of id, c and l on C_5..C_8";
}

void criterion_three_classes(const Context& ctx, CriterionResult& r) {
  Check check(r);
  for (std::size_t n = 5; n <= 7; ++n) {
    const auto x = generate("cycle", {static_cast<int>(n)});
    const auto label = "C_" + std::to_string(n);
    const auto classes = homotopy_classes(x, ctx.homotopy);
    check(classes.size() == 3, label + ": " + std::to_string(classes.size()) + " homotopy classes, expected 3");

    std::vector<SelfMap> rotations;
    for (Vertex d = 0; d < n; ++d) rotations.push_back(cycle_map(n, CycleMapKind::rotation, d));
    std::sort(rotations.begin(), rotations.end());
    const auto id = identity_map(n);
    const auto it = std::find_if(classes.begin(), classes.end(), [&](const HomotopyClass& c) {
      return std::binary_search(c.members.begin(), c.members.end(), id);
    });
    if (check(it != classes.end(), label + ": identity not found in any class"))
      check(it->members == rotations,
            label + ": class(id) has " + std::to_string(it->members.size()) + " members, expected the " +
                std::to_string(n) + " rotations");

    std::vector<std::vector<oracle::Targets>> ours;
    for (const auto& c : classes) {
      ours.emplace_back();
      for (const auto& m : c.members) ours.back().emplace_back(m.targets().begin(), m.targets().end());
    }
    std::sort(ours.begin(), ours.end());
    check(ours == oracle::homotopy_partition(x), label + ": classes differ from the brute-force partition");
  }
  r.summary = "class count, class(id) and full partition vs brute force on C_5..C_7";
}

void criterion_intervals(const Context& ctx, CriterionResult& r) {
  Check check(r);
  for (int a : {0, 1, -3}) {
    for (int len = 1; len <= 5; ++len) {
      const auto x = generate("interval", {a, a + len});
      const auto label = "[" + std::to_string(a) + "," + std::to_string(a + len) + "]";
      const auto expected = Spectrum::range(0, static_cast<std::size_t>(len) + 1);
      const auto got = fixed_point_spectrum(x, ctx.search).spectrum;
      check(got == expected, "F(" + label + ") = " + show(got) + ", expected " + show(expected));
      const auto cls = homotopy_class(x, identity_map(x.size()), ctx.homotopy);
      check(cls.complete && cls.fix_counts == expected, "S(id) on " + label + " = " + show(cls.fix_counts));
    }
  }
  r.summary = "F and S(id) on [a,b] for 1 <= b-a <= 5, three offsets";
}

std::string show_point(const DigitalImage& x, Vertex v) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.point(v).size(); ++i) s += (i ? "," : "") + std::to_string(x.point(v)[i]);
  return s + ")";
}

std::string broken_edge(const DigitalImage& x, const SelfMap& f) {
  for (auto [a, b] : x.edges())
    if (!x.adjacent_or_equal(f(a), f(b)))
      return ": edge " + show_point(x, a) + "-" + show_point(x, b) + " goes to " + show_point(x, f(a)) + ", " +
             show_point(x, f(b));
  return "";
}

void criterion_boxes(const Context& ctx, CriterionResult& r) {
  Check check(r);
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int u = 1; u <= 2; ++u) {
        const auto x = generate("box", {a, b, u});
        const auto label = "box(" + std::to_string(a) + "," + std::to_string(b) + ",c_" + std::to_string(u) + ")";
        const auto expected = Spectrum::range(0, static_cast<std::size_t>(a * b));
        const auto got = fixed_point_spectrum(x, ctx.search).spectrum;
        std::string note;
        if (a * b == 1) note = " (a single point has only the identity)";
        check(got == expected, "F(" + label + ") = " + show(got) + ", expected " + show(expected) + note);

        for (int t = 0; t < b; ++t) {
          const auto ft = "f_" + std::to_string(t) + " on " + label;
          if (a < 2 && t > 0) {
            check(false, ft + " is undefined: (1," + std::to_string(1) + ") would map to (2,2), outside [1,1]x[1," +
                             std::to_string(b) + "]");
            continue;
          }
          const auto f = map_from_coordinates(x, [t](const Point& p) {
            return p[0] == 1 && p[1] <= t ? Point{p[0] + 1, p[1] + 1} : p;
          });
          check(is_continuous(x, f), ft + " is not continuous" + broken_edge(x, f));
          check(fix_count(f) == static_cast<std::size_t>(a * b - t),
                ft + " has " + std::to_string(fix_count(f)) + " fixed points, expected " + std::to_string(a * b - t));
        }
      }
  r.summary = "F(box) for a,b in 1..3, u in {1,2}, and every f_t";
}

void criterion_cube(const Context& ctx, CriterionResult& r) {
  Check check(r);
  const auto x = generate("cube");
  const Spectrum expected{0, 1, 2, 3, 4, 5, 6, 8};
  const auto got = fixed_point_spectrum(x, ctx.search).spectrum;
  check(got == expected, "F(cube) = " + show(got) + ", expected " + show(expected));
  const auto brute = oracle::spectrum(x);
  check(to_spectrum(brute) == got, "F(cube): brute force over 8^8 functions gives " + show(brute));
  const auto pair = nminus1_criterion(x);
  check(!pair, "nminus1_criterion(cube) found a pair");

  // Labels x_0..x_7 of the cube vertices, then the maps g and h.
  const std::vector<Point> label = {{0, 0, 1}, {1, 0, 1}, {1, 0, 0}, {0, 0, 0},
                                    {0, 1, 1}, {1, 1, 1}, {1, 1, 0}, {0, 1, 0}};
  auto labelled = [&](std::map<int, int> moves) {
    std::vector<Vertex> t(8);
    for (int i = 0; i < 8; ++i) {
      const int j = moves.count(i) ? moves[i] : i;
      t[*x.find_point(label[i])] = *x.find_point(label[j]);
    }
    return SelfMap(t);
  };
  const auto g = labelled({{5, 0}, {6, 3}});
  const auto h = labelled({{5, 0}, {7, 0}, {6, 3}});
  check(is_continuous(x, g) && fix_count(g) == 6, "g is not a continuous map with 6 fixed points");
  check(is_continuous(x, h) && fix_count(h) == 5, "h is not a continuous map with 5 fixed points");
  r.summary = "F(cube) with brute force, no (n-1) pair, maps g and h";
}

void criterion_rigidity(const Context& ctx, CriterionResult& r) {
  Check check(r);
  const auto budget = ctx.search.node_budget;
  for (const char* name : {"wedge_cycles_8", "fig_xexample", "fig_sexample"})
    check(is_rigid_image(generate(name), budget), std::string(name) + " is not rigid");
  for (int k = 1; k <= 8; ++k)
    for (int a : {0, -2}) {
      const auto x = generate("interval", {a, a + k});
      check(!is_rigid_image(x, budget), x.name() + " is rigid");
    }
  for (int n = 1; n <= 12; ++n) {
    const auto x = generate("cycle", {n});
    check(!is_rigid_image(x, budget),
          "C_" + std::to_string(n) + " is rigid" + (n == 1 ? " (a single point: id is the only self-map)" : ""));
  }
  const auto x = generate("fig_xexample");
  const auto f = map_from_coordinates(x, [](const Point& p) { return Point{6 - p[0], 2 - p[1]}; });
  check(is_rigid_map(x, f, budget), "rotation of fig_xexample is not rigid");
  check(fix_count(f) == 0, "rotation of fig_xexample has fixed points");
  const auto cls = homotopy_class(x, f, ctx.homotopy);
  check(cls.complete && cls.size == 1 && cls.fix_counts == Spectrum{0},
        "S(rotation) = " + show(cls.fix_counts) + ", expected {0}");
  check(homotopy_class(x, identity_map(x.size()), ctx.homotopy).fix_counts == Spectrum{18}, "S(id) on fig_xexample != {18}");
  r.summary = "three rigid presets, intervals [a,a+k] for k in 1..8, C_1..C_12, rotation of fig_xexample";
}

void criterion_lasso(const Context& ctx, CriterionResult& r) {
  Check check(r);
  LassoOptions lo;
  lo.threads = ctx.search.threads;
  std::vector<DigitalImage> pool = {generate("fig_xexample"), generate("fig_sexample"), generate("wedge_cycles_8"),
                                    generate("cube")};
  for (int n = 3; n <= 10; ++n) pool.push_back(generate("cycle", {n}));
  for (int a = 1; a <= 3; ++a) pool.push_back(generate("box", {3, a + 1, 1}));
  pool.push_back(product({generate("cycle", {5}), generate("interval", {0, 1})}, 1));
  std::size_t certified = 0;
  for (const auto& x : pool) {
    const auto cert = lasso_rigidity_certificate(x, lo);
    const bool must = x.name().starts_with("fig_");
    if (must) check(cert.certified, x.name() + " not certified: " + std::to_string(cert.missing.size()) + " pairs missing");
    for (const auto& [pair, l] : cert.lassos) {
      const auto bad = lasso_violation(x, l);
      check(!bad, x.name() + ": lasso for (" + std::to_string(pair.first) + "," + std::to_string(pair.second) +
                      ") is invalid: " + bad.value_or(""));
      check(l.path.size() >= 2 && l.path[0] == pair.first && l.path[1] == pair.second,
            x.name() + ": lasso does not start with its pair");
    }
    if (cert.certified) {
      ++certified;
      check(is_rigid_image(x, ctx.search.node_budget), x.name() + " is certified but not rigid");
    }
  }
  r.summary = "fig_xexample and fig_sexample certified; " + std::to_string(certified) + " of " +
              std::to_string(pool.size()) + " pool images certified, each rigid";
}

void criterion_sexample(const Context& ctx, CriterionResult& r) {
  Check check(r);
  const auto x = generate("fig_sexample");
  const auto n = x.size();
  auto expected = Spectrum::range(0, 12);
  expected.insert(15);
  const auto got = fixed_point_spectrum(x, ctx.search);
  check(got.spectrum == expected, "F(fig_sexample) = " + show(got.spectrum) + ", expected " + show(expected));
  std::size_t lowest = n;
  for (const auto& p : pull_indices(x, ctx.search)) {
    if (!check(p.value.has_value(), "vertex " + std::to_string(p.point) + " cannot be moved")) continue;
    lowest = std::min(lowest, *p.value);
    check(*p.value >= 3, "P(" + std::to_string(p.point) + ") = " + std::to_string(*p.value) + " < 3");
    check(p.witness && is_continuous(x, *p.witness) && (*p.witness)(p.point) != p.point &&
              n - fix_count(*p.witness) == *p.value,
          "pull witness for vertex " + std::to_string(p.point) + " does not attain its value");
  }
  // min P >= m rules out n-m+1 .. n-1.
  for (std::size_t k = n - lowest + 1; k < n; ++k)
    check(!got.spectrum.contains(k), std::to_string(k) + " in F although min P = " + std::to_string(lowest));
  check(lowest >= 3 && !got.spectrum.contains(13) && !got.spectrum.contains(14), "13 or 14 not excluded");
  r.summary = "F(fig_sexample) exact, min P = " + std::to_string(lowest) + ", " +
              std::to_string(got.stats.nodes_visited) + " search nodes";
}

void criterion_interval_pull(const Context& ctx, CriterionResult& r) {
  Check check(r);
  const auto x = generate("interval", {1, 3});
  const std::size_t expected[] = {1, 2, 1};
  for (Vertex v = 0; v < 3; ++v) {
    const auto p = pull_index(x, v, ctx.search);
    const auto name = "P(" + std::to_string(x.point(v)[0]) + ")";
    check(p.value == expected[v], name + " = " + (p.value ? std::to_string(*p.value) : "none") + ", expected " +
                                      std::to_string(expected[v]));
    check(oracle::pull_index(x, v) == expected[v], name + ": brute force gives " + std::to_string(oracle::pull_index(x, v)));
  }
  r.summary = "P on [1,3] with brute force";
}

// Small images for the exhaustive property suites.
std::vector<DigitalImage> property_pool(std::size_t max_vertices) {
  std::vector<DigitalImage> pool;
  auto add = [&](DigitalImage x) {
    if (x.size() <= max_vertices) pool.push_back(std::move(x));
  };
  for (int k = 0; k < 7; ++k) add(generate("interval", {0, k}));
  for (int n = 1; n <= 7; ++n) add(generate("cycle", {n}));
  for (int a = 1; a <= 3; ++a)
    for (int b = a; a * b <= 7; ++b)
      for (int u = 1; u <= 2; ++u) add(generate("box", {a, b, u}));
  add(build_image("tee", {{0, 0}, {1, 0}, {2, 0}, {1, 1}}, CuAdjacency{1}));
  add(build_image("diagonal_pair", {{0, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 3}}, CuAdjacency{2}));
  add(build_image("star4", 5, ExplicitAdjacency{{{0, 1}, {0, 2}, {0, 3}, {0, 4}}}));
  add(build_image("k4", 4, ExplicitAdjacency{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}}));
  add(build_image("k23", 5, ExplicitAdjacency{{{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}}));
  add(build_image("house", 5, ExplicitAdjacency{{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {3, 4}}}));
  add(build_image("bowtie", 5, ExplicitAdjacency{{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}}));
  add(build_image("theta", 7, ExplicitAdjacency{{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {6, 3}}}));
  add(disjoint_union(generate("interval", {0, 1}), generate("cycle", {4})));
  add(wedge(generate("cycle", {4}), generate("interval", {0, 2}), 0, 0));
  add(product({generate("interval", {0, 1}), generate("interval", {0, 2})}, 2));
  return pool;
}

DigitalImage random_graph(std::mt19937& rng, std::size_t n, bool connected, const std::string& name) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  while (true) {
    const double density = 0.2 + 0.5 * unit(rng);
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j)
        if (unit(rng) < density) edges.emplace_back(i, j);
    auto x = build_image(name, n, ExplicitAdjacency{edges});
    if (!connected || is_connected(x)) return x;
  }
}

// Fix(f) on C_n as cycle positions: connected iff at most one maximal run.
bool cyclic_positions_connected(const std::vector<Vertex>& fixed, std::size_t n) {
  if (fixed.empty() || fixed.size() == n) return true;
  std::vector<bool> in(n, false);
  for (Vertex v : fixed) in[v] = true;
  std::size_t run_ends = 0;
  for (std::size_t i = 0; i < n; ++i) run_ends += in[i] && !in[(i + 1) % n];
  return run_ends <= 1;
}

void criterion_properties(const Context& ctx, CriterionResult& r) {
  Check check(r);
  std::mt19937 rng(20260509);
  std::ostringstream summary;

  // (a) edge characterization vs connected-subset definition, all functions.
  std::size_t functions = 0;
  for (const auto& x : property_pool(6)) {
    std::size_t mismatches = 0;
    oracle::for_each_function(x.size(), [&](const oracle::Targets& t) {
      ++functions;
      const bool by_edges = is_continuous(x, SelfMap(t));
      mismatches += by_edges != oracle::continuous_by_subsets(x, t) || by_edges != oracle::continuous_by_edges(x, t);
    });
    check(mismatches == 0, "(a) " + x.name() + ": " + std::to_string(mismatches) + " functions disagree");
  }
  summary << "(a) " << functions << " functions; ";

  // (b) N(x1) ⊆ N*(x2) for some pair <=> n-1 in F <=> some P = 1.
  for (int i = 0; i < 200; ++i) {
    const auto n = std::uniform_int_distribution<std::size_t>(2, 7)(rng);
    const auto x = random_graph(rng, n, true, "random" + std::to_string(i));
    const auto pair = nminus1_criterion(x);
    const bool in_f = fixed_point_spectrum(x, ctx.search).spectrum.contains(n - 1);
    const auto pulls = pull_indices(x, ctx.search);
    const bool p1 = std::any_of(pulls.begin(), pulls.end(), [](const PullResult& p) { return p.value == 1u; });
    check(pair.has_value() == in_f && in_f == p1,
          "(b) " + x.name() + " edges " + std::to_string(x.edge_count()) + ": criterion " + std::to_string(pair.has_value()) +
              ", n-1 in F " + std::to_string(in_f) + ", some P=1 " + std::to_string(p1));
    if (pair) {
      const auto f = nminus1_map(n, *pair);
      check(is_continuous(x, f) && fix_count(f) == n - 1, "(b) " + x.name() + ": witness map is wrong");
    }
  }
  summary << "(b) 200 graphs; ";

  // (c) disjoint unions and NP_v products.
  for (int i = 0; i < 60; ++i) {
    std::uniform_int_distribution<std::size_t> size(2, 4);
    const auto a = random_graph(rng, size(rng), false, "A");
    const auto b = random_graph(rng, size(rng), false, "B");
    const auto fa = fixed_point_spectrum(a, ctx.search).spectrum;
    const auto fb = fixed_point_spectrum(b, ctx.search).spectrum;
    const auto sum = combine_spectra(fa, fb, SpectrumOp::oplus);
    const auto got = fixed_point_spectrum(disjoint_union(a, b), ctx.search).spectrum;
    check(got == sum, "(c) F(A+B) = " + show(got) + " but F(A) (+) F(B) = " + show(sum) + " for A with " +
                          std::to_string(a.edge_count()) + " edges, B with " + std::to_string(b.edge_count()) + " edges");
  }
  for (int i = 0; i < 40; ++i) {
    std::uniform_int_distribution<std::size_t> size(1, 3);
    std::vector<DigitalImage> factors;
    const std::size_t v = i < 30 ? 2 : 3;
    for (std::size_t k = 0; k < v; ++k) factors.push_back(random_graph(rng, v == 2 ? size(rng) : 2, false, "Y"));
    Spectrum prod{1};
    for (const auto& y : factors) prod = combine_spectra(prod, fixed_point_spectrum(y, ctx.search).spectrum, SpectrumOp::otimes);
    const auto got = fixed_point_spectrum(product(factors, static_cast<int>(v)), ctx.search).spectrum;
    check(prod.is_subset_of(got), "(c) product of F over factors " + show(prod) + " not inside F(product) " + show(got));
  }
  for (const auto& [p, q] : std::vector<std::pair<int, int>>{{5, 2}, {6, 2}, {4, 3}, {5, 3}}) {
    const auto y1 = generate("cycle", {p});
    const auto y2 = generate("interval", {0, q - 1});
    const auto prod = combine_spectra(fixed_point_spectrum(y1, ctx.search).spectrum,
                                      fixed_point_spectrum(y2, ctx.search).spectrum, SpectrumOp::otimes);
    const auto got = fixed_point_spectrum(product({y1, y2}, 2), ctx.search).spectrum;
    check(prod.is_subset_of(got), "(c) C_" + std::to_string(p) + " x interval: " + show(prod) + " not inside " + show(got));
  }
  summary << "(c) 60 unions, 44 products; ";

  // (d) Fix(f) on C_n is connected or an antipodal pair.
  std::size_t cycle_maps = 0;
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto x = generate("cycle", {static_cast<int>(n)});
    for (const auto& f : all_maps(x)) {
      ++cycle_maps;
      const auto fixed = fix(f);
      const bool connected = cyclic_positions_connected(fixed, n);
      const bool antipodal = fixed.size() == 2 && n % 2 == 0 && fixed[1] - fixed[0] == n / 2;
      const auto s = fix_structure(x, f);
      check(connected || antipodal, "(d) C_" + std::to_string(n) + ": Fix" + show(f) + " = " + show(fixed));
      check((s.kind == FixConnectivity::disconnected) == !connected && s.cycle_refinement_holds,
            "(d) C_" + std::to_string(n) + ": fix_structure disagrees on " + show(f));
    }
  }
  summary << "(d) " << cycle_maps << " maps; ";

  // (e) vertices on every minimal path between fixed points are fixed.
  std::size_t intermediate = 0;
  for (const auto& x : property_pool(7)) {
    for (Vertex a = 0; a < x.size(); ++a) {
      const auto dist = bfs_distances(x, a);
      for (Vertex b = 0; b < x.size(); ++b) {
        if (!dist[b]) continue;
        const auto got = minimal_paths(x, a, b).on_every;
        check(got == oracle::on_every_geodesic(x, a, b), "(e) " + x.name() + ": on_every(" + std::to_string(a) + "," +
                                                             std::to_string(b) + ") differs from brute force");
      }
    }
    for (const auto& f : all_maps(x)) {
      ++intermediate;
      check(forced_fixed_points(x, f).confirmed, "(e) " + x.name() + ": forced point moved by " + show(f));
      check(articulation_check(x, f).empty(), "(e) " + x.name() + ": articulation point moved by " + show(f));
    }
  }
  summary << "(e) " << intermediate << " maps; ";

  // (f) one-step BFS classes vs the transitive closure computed by brute force.
  std::size_t partitions = 0;
  for (const auto& x : property_pool(5)) {
    ++partitions;
    std::vector<std::vector<oracle::Targets>> ours;
    for (const auto& c : homotopy_classes(x, ctx.homotopy)) {
      ours.emplace_back();
      for (const auto& m : c.members) ours.back().emplace_back(m.targets().begin(), m.targets().end());
    }
    std::sort(ours.begin(), ours.end());
    const auto brute = oracle::homotopy_partition(x);
    check(ours == brute, "(f) " + x.name() + ": " + std::to_string(ours.size()) + " classes vs " +
                             std::to_string(brute.size()) + " by brute force");
  }
  summary << "(f) " << partitions << " images";
  r.summary = summary.str();
}

void criterion_determinism(const Context& ctx, CriterionResult& r) {
  Check check(r);
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / ("digifix-determinism-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto path = [&](const std::string& name) { return (dir / name).string(); };
  auto run = [&](std::vector<std::string> args, std::string& out) {
    std::ostringstream o, e;
    const int code = run_command(args, o, e);
    out = o.str();
    return code;
  };
  std::string ignored;
  for (const auto& [file, gen] : std::vector<std::pair<std::string, std::vector<std::string>>>{
           {"c6", {"cycle", "6"}}, {"c7", {"cycle", "7"}}, {"xex", {"fig_xexample"}}, {"sex", {"fig_sexample"}},
           {"box", {"box", "3", "2", "2"}}}) {
    std::vector<std::string> args{"gen"};
    args.insert(args.end(), gen.begin(), gen.end());
    args.insert(args.end(), {"-o", path(file)});
    check(run(args, ignored) == kExitOk, "gen " + file + " failed");
  }
  io::save_map(path("flip7"), cycle_map(7, CycleMapKind::flip_composed, 0));
  io::save_map(path("const6"), constant_map(6, 2));
  const std::vector<std::vector<std::string>> commands = {
      {"spectrum", path("c7")},
      {"spectrum", path("sex")},
      {"sfix", path("c7"), "--map", path("flip7")},
      {"rigid", path("xex")},
      {"pull", path("sex")},
      {"classes", path("c6")},
      {"fixset", path("c6"), "--map", path("const6")},
      {"lasso", path("xex")},
      {"retract", path("box"), "--subset", "0,1,2"},
      {"criterion", path("box")},
  };
  const std::string budget = std::to_string(ctx.search.node_budget);
  for (const auto& cmd : commands) {
    std::vector<std::string> outputs;
    for (const char* threads : {"1", "4", "1", "4"}) {
      std::vector<std::string> args{"--threads", threads, "--budget", budget, "--format", "json"};
      args.insert(args.end(), cmd.begin(), cmd.end());
      std::string out;
      const int code = run(args, out);
      check(code == kExitOk, cmd[0] + " with --threads " + threads + " exited " + std::to_string(code));
      outputs.push_back(out);
    }
    check(std::all_of(outputs.begin(), outputs.end(), [&](const std::string& o) { return o == outputs[0]; }),
          cmd[0] + " " + fs::path(cmd[1]).filename().string() + ": reports differ across runs");
  }
  std::error_code ec;
  fs::remove_all(dir, ec);
  r.summary = std::to_string(commands.size()) + " commands, threads 1 and 4, two runs each";
}

using CriterionFn = void (*)(const Context&, CriterionResult&);

struct Entry {
  int id;
  const char* title;
  CriterionFn fn;
};

constexpr Entry kCriteria[] = {
    {1, "F(C_n) for n = 1..9", criterion_cycle_spectrum},
    {2, "S(id), S(c), S(l) on C_5..C_8", criterion_cycle_classes_spectra},
    {3, "three homotopy classes on C_5..C_7, class(id) = rotations", criterion_three_classes},
    {4, "F([a,b]) = {0..b-a+1}", criterion_intervals},
    {5, "F(box(a,b,u)) = {0..ab} and the maps f_t", criterion_boxes},
    {6, "F(cube) = {0..6,8}, no (n-1) pair", criterion_cube},
    {7, "rigid and non-rigid images, rigid rotation of fig_xexample", criterion_rigidity},
    {8, "lasso certificates imply rigidity", criterion_lasso},
    {9, "F(fig_sexample) = {0..12,15}, pull indices >= 3", criterion_sexample},
    {10, "pull indices on [1,3]", criterion_interval_pull},
    {11, "property suites (a)-(f)", criterion_properties},
    {12, "byte-identical json reports across runs and thread counts", criterion_determinism},
};
static_assert(std::size(kCriteria) == kCriterionCount);

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_done) {
  Context ctx;
  ctx.search = {options.threads, options.node_budget};
  ctx.homotopy.threads = options.threads;
  ctx.homotopy.node_budget = options.node_budget;
  std::vector<CriterionResult> results;
  for (const auto& e : kCriteria) {
    if (!options.only.empty() && !options.only.contains(e.id)) continue;
    CriterionResult r;
    r.id = e.id;
    r.title = e.title;
    const auto start = std::chrono::steady_clock::now();
    try {
      e.fn(ctx, r);
    } catch (const ResourceExceeded& ex) {
      r.passed = false;
      r.failures.push_back(std::string("budget exceeded: ") + ex.what());
    } catch (const std::exception& ex) {
      r.passed = false;
      r.failures.push_back(std::string("error: ") + ex.what());
    }
    r.elapsed = std::chrono::steady_clock::now() - start;
    if (on_done) on_done(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_criterion(const CriterionResult& r) {
  char head[64];
  std::snprintf(head, sizeof head, "%s %2d  ", r.passed ? "PASS" : "FAIL", r.id);
  char tail[32];
  std::snprintf(tail, sizeof tail, "  (%.2f s)", r.elapsed.count());
  std::string out = head + r.title + tail + "\n";
  if (!r.summary.empty()) out += "        " + r.summary + "\n";
  for (const auto& f : r.failures) out += "        - " + f + "\n";
  return out;
}

}  // namespace digifix
