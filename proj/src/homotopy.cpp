#include "digifix/homotopy.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "digifix/detail/map_search.hpp"
#include "digifix/error.hpp"
#include "digifix/parallel.hpp"

namespace digifix {

using detail::MapSearch;
using detail::NodeBudget;
using detail::VisitorBase;

namespace {

// Maps are keyed by their target bytes; targets are < 64 so they fit a char.
std::string key_of(std::span<const Vertex> t) {
  std::string k(t.size(), '\0');
  for (std::size_t i = 0; i < t.size(); ++i) k[i] = static_cast<char>(t[i]);
  return k;
}

SelfMap map_of(const std::string& key) {
  std::vector<Vertex> t(key.size());
  for (std::size_t i = 0; i < key.size(); ++i) t[i] = static_cast<unsigned char>(key[i]);
  return SelfMap(std::move(t));
}

std::size_t fixed_in_key(const std::string& key) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < key.size(); ++i) k += static_cast<unsigned char>(key[i]) == i;
  return k;
}

MapSearch neighbor_search(const DigitalImage& x, std::span<const Vertex> f) {
  MapSearch search(x);
  for (Vertex v = 0; v < x.size(); ++v) search.restrict_domain(v, search.closed(f[v]));
  return search;
}

std::vector<std::string> neighbor_keys(const DigitalImage& x, const std::string& f, NodeBudget& budget) {
  const auto m = map_of(f);
  auto search = neighbor_search(x, m.targets());
  struct Keys : VisitorBase {
    std::vector<std::string> keys;
    bool complete(std::span<const Vertex> t) {
      keys.push_back(key_of(t));
      return true;
    }
  } visitor;
  search.run(visitor, budget);
  return std::move(visitor.keys);
}

void require_continuous(const DigitalImage& x, const SelfMap& f) {
  if (!is_continuous(x, f)) throw InvalidInput("map is not continuous on image '" + x.name() + "'");
}

struct ClassSearch {
  HomotopyClass cls;
  bool target_reached = false;
  bool budget_hit = false;
  std::unordered_map<std::string, std::string> parent;  // only when tracking paths
};

// Layered BFS in the one-step map graph. Neighbor generation runs in parallel
// per layer; merging is sequential in frontier order, so the outcome does not
// depend on the schedule.
ClassSearch explore_class(const DigitalImage& x, const SelfMap& f, const HomotopyOptions& options,
                          const std::optional<SelfMap>& target, bool track_parents) {
  require_continuous(x, f);
  ClassSearch out;
  auto& cls = out.cls;
  NodeBudget budget(options.node_budget);
  const auto start_key = key_of(f.targets());
  const std::string target_key = target ? key_of(target->targets()) : std::string();

  std::unordered_set<std::string> visited{start_key};
  std::vector<std::string> retained{start_key};
  std::string best = start_key;
  std::vector<std::size_t> counts{fixed_in_key(start_key)};
  std::vector<std::string> frontier{start_key};
  bool budget_hit = false;
  if (target && start_key == target_key) out.target_reached = true;

  while (!frontier.empty() && !out.target_reached && !budget_hit) {
    std::vector<std::vector<std::string>> produced(frontier.size());
    parallel_for(frontier.size(), options.threads,
                 [&](std::size_t i) { produced[i] = neighbor_keys(x, frontier[i], budget); });
    std::vector<std::string> next;
    for (std::size_t i = 0; i < frontier.size() && !out.target_reached && !budget_hit; ++i) {
      for (auto& k : produced[i]) {
        if (visited.count(k)) continue;
        if (visited.size() >= options.class_budget) {
          budget_hit = true;
          break;
        }
        visited.insert(k);
        if (track_parents) out.parent.emplace(k, frontier[i]);
        counts.push_back(fixed_in_key(k));
        if (k < best) best = k;
        if (retained.size() <= options.member_cap) retained.push_back(k);
        if (target && k == target_key) {
          out.target_reached = true;
          break;
        }
        next.push_back(std::move(k));
      }
    }
    frontier = std::move(next);
  }

  out.budget_hit = budget_hit;
  // An early exit on the target leaves the class partially explored.
  cls.complete = !budget_hit && !out.target_reached;
  cls.size = visited.size();
  cls.representative = map_of(best);
  cls.fix_counts = Spectrum(std::move(counts));
  cls.members_retained = cls.complete && cls.size <= options.member_cap;
  if (cls.members_retained) {
    std::sort(retained.begin(), retained.end());
    for (const auto& k : retained) cls.members.push_back(map_of(k));
  }
  return out;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

bool one_step_homotopic(const DigitalImage& x, const SelfMap& f, const SelfMap& g) {
  if (f.size() != g.size()) throw InvalidInput("one_step_homotopic: maps act on images of different sizes");
  if (!is_continuous(x, f) || !is_continuous(x, g)) return false;
  for (Vertex v = 0; v < x.size(); ++v)
    if (!x.adjacent_or_equal(f(v), g(v))) return false;
  return true;
}

std::vector<SelfMap> one_step_neighbors(const DigitalImage& x, const SelfMap& f, std::uint64_t node_budget) {
  require_continuous(x, f);
  NodeBudget budget(node_budget);
  std::vector<SelfMap> out;
  for (const auto& k : neighbor_keys(x, key_of(f.targets()), budget)) out.push_back(map_of(k));
  return out;
}

HomotopyClass homotopy_class(const DigitalImage& x, const SelfMap& f, const HomotopyOptions& options) {
  return explore_class(x, f, options, std::nullopt, false).cls;
}

Membership homotopic(const DigitalImage& x, const SelfMap& f, const SelfMap& g, const HomotopyOptions& options) {
  if (f.size() != g.size()) throw InvalidInput("homotopic: maps act on images of different sizes");
  if (!is_continuous(x, g)) return Membership::not_member;
  auto search = explore_class(x, f, options, g, false);
  if (search.target_reached) return Membership::member;
  return search.budget_hit ? Membership::inconclusive : Membership::not_member;
}

std::optional<HomotopyPath> find_homotopy_path(const DigitalImage& x, const SelfMap& f, const SelfMap& g,
                                               const HomotopyOptions& options) {
  if (f.size() != g.size()) throw InvalidInput("find_homotopy_path: maps act on images of different sizes");
  if (!is_continuous(x, g)) return std::nullopt;
  auto search = explore_class(x, f, options, g, true);
  if (!search.target_reached) return std::nullopt;
  std::vector<SelfMap> reversed;
  std::string k = key_of(g.targets());
  const std::string start = key_of(f.targets());
  reversed.push_back(map_of(k));
  while (k != start) {
    k = search.parent.at(k);
    reversed.push_back(map_of(k));
  }
  return HomotopyPath{std::vector<SelfMap>(reversed.rbegin(), reversed.rend())};
}

std::optional<SelfMap> rigidity_breaker(const DigitalImage& x, std::uint64_t node_budget) {
  MapSearch search(x);
  for (Vertex v = 0; v < x.size(); ++v) search.restrict_domain(v, search.closed(v));
  search.set_prefer_identity(true);
  struct FirstOther : VisitorBase {
    std::vector<Vertex> found;
    bool complete(std::span<const Vertex> t) {
      for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i] != i) {
          found.assign(t.begin(), t.end());
          return false;
        }
      return true;
    }
  } visitor;
  NodeBudget budget(node_budget);
  search.run(visitor, budget);
  if (visitor.found.empty()) return std::nullopt;
  return SelfMap(visitor.found);
}

bool is_rigid_image(const DigitalImage& x, std::uint64_t node_budget) {
  return !rigidity_breaker(x, node_budget).has_value();
}

bool is_rigid_map(const DigitalImage& x, const SelfMap& f, std::uint64_t node_budget) {
  require_continuous(x, f);
  auto search = neighbor_search(x, f.targets());
  struct FirstOther : VisitorBase {
    std::span<const Vertex> self;
    bool other = false;
    bool complete(std::span<const Vertex> t) {
      other = !std::equal(t.begin(), t.end(), self.begin());
      return !other;
    }
  } visitor;
  visitor.self = f.targets();
  NodeBudget budget(node_budget);
  search.run(visitor, budget);
  return !visitor.other;
}

std::vector<HomotopyClass> homotopy_classes(const DigitalImage& x, const HomotopyOptions& options) {
  NodeBudget budget(options.node_budget);
  const auto parts = MapSearch(x).split_on_first();
  std::vector<detail::CollectAll> collected(parts.size());
  parallel_for(parts.size(), options.threads, [&](std::size_t i) {
    auto search = parts[i];
    search.run(collected[i], budget);
  });
  std::vector<std::string> keys;
  for (auto& c : collected)
    for (auto& t : c.maps) keys.push_back(key_of(t));
  collected.clear();
  if (keys.size() > options.class_budget)
    throw ResourceExceeded("image has " + std::to_string(keys.size()) + " continuous maps, above the budget of " +
                           std::to_string(options.class_budget));
  std::unordered_map<std::string, std::size_t> index;
  index.reserve(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) index.emplace(keys[i], i);

  DisjointSets sets(keys.size());
  constexpr std::size_t kChunk = 1024;
  for (std::size_t base = 0; base < keys.size(); base += kChunk) {
    const auto count = std::min(kChunk, keys.size() - base);
    std::vector<std::vector<std::string>> produced(count);
    parallel_for(count, options.threads,
                 [&](std::size_t i) { produced[i] = neighbor_keys(x, keys[base + i], budget); });
    for (std::size_t i = 0; i < count; ++i)
      for (const auto& k : produced[i]) sets.unite(base + i, index.at(k));
  }

  std::unordered_map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < keys.size(); ++i) groups[sets.find(i)].push_back(i);
  std::vector<HomotopyClass> classes;
  for (auto& [root, members] : groups) {
    HomotopyClass cls;
    std::vector<std::string> member_keys;
    std::vector<std::size_t> counts;
    for (auto i : members) {
      member_keys.push_back(keys[i]);
      counts.push_back(fixed_in_key(keys[i]));
    }
    std::sort(member_keys.begin(), member_keys.end());
    cls.representative = map_of(member_keys.front());
    cls.size = member_keys.size();
    cls.fix_counts = Spectrum(std::move(counts));
    cls.members_retained = cls.size <= options.member_cap;
    if (cls.members_retained)
      for (const auto& k : member_keys) cls.members.push_back(map_of(k));
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const HomotopyClass& a, const HomotopyClass& b) { return a.representative < b.representative; });
  return classes;
}

bool verify_homotopy_path(const DigitalImage& x, const HomotopyPath& path) {
  if (path.steps.empty()) return false;
  for (const auto& step : path.steps)
    if (step.size() != x.size() || !is_continuous(x, step)) return false;
  for (std::size_t i = 0; i + 1 < path.steps.size(); ++i)
    for (Vertex v = 0; v < x.size(); ++v)
      if (!x.adjacent_or_equal(path.steps[i](v), path.steps[i + 1](v))) return false;
  return true;
}

}  // namespace digifix
