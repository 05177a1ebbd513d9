#include "digifix/spectrum.hpp"

#include <algorithm>
#include <array>

#include "digifix/detail/map_search.hpp"
#include "digifix/error.hpp"
#include "digifix/parallel.hpp"

namespace digifix {

using detail::MapSearch;
using detail::NodeBudget;
using detail::VisitorBase;

namespace {

using Clock = std::chrono::steady_clock;

EnumerationStats to_stats(const detail::SearchCounters& c) {
  EnumerationStats s;
  s.maps_enumerated = c.maps;
  s.nodes_visited = c.nodes;
  return s;
}

// Counts 0..64 as a bitmask with a "smallest missing value >= k" table, so the
// subtree test "are all of lo..hi already known" is O(1).
class CountSet {
 public:
  CountSet() { next_missing_.fill(0); refresh(); }
  bool insert(std::size_t k) {
    if (test(k)) return false;
    words_[k / 64] |= std::uint64_t{1} << (k % 64);
    refresh();
    return true;
  }
  bool test(std::size_t k) const { return (words_[k / 64] >> (k % 64)) & 1U; }
  bool covers(std::size_t lo, std::size_t hi) const { return next_missing_[lo] > hi; }
  std::vector<std::size_t> values() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < kSlots; ++k)
      if (test(k)) out.push_back(k);
    return out;
  }

 private:
  static constexpr std::size_t kSlots = detail::kMaxSearchVertices + 1;
  void refresh() {
    std::size_t missing = kSlots;
    for (std::size_t k = kSlots; k-- > 0;) {
      if (!test(k)) missing = k;
      next_missing_[k] = missing;
    }
  }
  std::array<std::uint64_t, 2> words_{0, 0};
  std::array<std::size_t, kSlots> next_missing_{};
};

struct SpectrumVisitor : VisitorBase {
  explicit SpectrumVisitor(std::size_t n) : n(n) {}
  bool accept(std::size_t pos, Vertex v, Vertex t) {
    if (t == v) ++fixed;
    const std::size_t remaining = n - pos - 1;
    if (found.covers(fixed, fixed + remaining)) {
      if (t == v) --fixed;
      return false;
    }
    return true;
  }
  void leave(std::size_t, Vertex v, Vertex t) {
    if (t == v) --fixed;
  }
  bool complete(std::span<const Vertex>) {
    found.insert(fixed);
    return true;
  }
  std::size_t n;
  std::size_t fixed = 0;
  CountSet found;
};

struct PullVisitor : VisitorBase {
  explicit PullVisitor(std::size_t n) : best(n + 1) {}
  bool accept(std::size_t, Vertex v, Vertex t) {
    if (t != v) {
      if (moved + 1 >= best) return false;
      ++moved;
    }
    return true;
  }
  void leave(std::size_t, Vertex v, Vertex t) {
    if (t != v) --moved;
  }
  bool complete(std::span<const Vertex> t) {
    best = moved;
    witness.assign(t.begin(), t.end());
    return best > 1;  // 1 is the lower bound: nothing can beat it
  }
  std::size_t moved = 0;
  std::size_t best;
  std::vector<Vertex> witness;
};

struct CountVisitor : VisitorBase {
  bool complete(std::span<const Vertex>) { return true; }
};

}  // namespace

Spectrum::Spectrum(std::initializer_list<std::size_t> values) : Spectrum(std::vector<std::size_t>(values)) {}

Spectrum::Spectrum(std::vector<std::size_t> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

Spectrum Spectrum::range(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> v;
  for (std::size_t k = lo; k <= hi; ++k) v.push_back(k);
  return Spectrum(std::move(v));
}

bool Spectrum::contains(std::size_t v) const { return std::binary_search(values_.begin(), values_.end(), v); }

bool Spectrum::is_subset_of(const Spectrum& other) const {
  return std::includes(other.values_.begin(), other.values_.end(), values_.begin(), values_.end());
}

void Spectrum::insert(std::size_t v) {
  auto it = std::lower_bound(values_.begin(), values_.end(), v);
  if (it == values_.end() || *it != v) values_.insert(it, v);
}

Spectrum Spectrum::united(const Spectrum& other) const {
  std::vector<std::size_t> out;
  std::set_union(values_.begin(), values_.end(), other.values_.begin(), other.values_.end(), std::back_inserter(out));
  return Spectrum(std::move(out));
}

EnumerationStats& EnumerationStats::operator+=(const EnumerationStats& other) {
  maps_enumerated += other.maps_enumerated;
  nodes_visited += other.nodes_visited;
  elapsed += other.elapsed;
  truncated = truncated || other.truncated;
  return *this;
}

EnumerationStats enumerate_continuous_selfmaps(const DigitalImage& x, const MapVisitor& visitor,
                                               std::optional<std::uint64_t> limit, const SearchOptions& options) {
  const auto start = Clock::now();
  struct Forward : VisitorBase {
    const MapVisitor* visitor;
    std::optional<std::uint64_t> limit;
    std::uint64_t seen = 0;
    bool complete(std::span<const Vertex> t) {
      (*visitor)(t);
      ++seen;
      return !limit || seen < *limit;
    }
  } forward;
  forward.visitor = &visitor;
  forward.limit = limit;
  EnumerationStats stats;
  if (limit && *limit == 0) {
    stats.truncated = true;
    return stats;
  }
  MapSearch search(x);
  NodeBudget budget(options.node_budget);
  const auto counters = search.run(forward, budget);
  stats = to_stats(counters);
  stats.truncated = counters.stopped;
  stats.elapsed = Clock::now() - start;
  return stats;
}

EnumerationStats count_continuous_selfmaps(const DigitalImage& x, const SearchOptions& options) {
  const auto start = Clock::now();
  const auto parts = MapSearch(x).split_on_first();
  std::vector<EnumerationStats> per_root(parts.size());
  NodeBudget budget(options.node_budget);
  parallel_for(parts.size(), options.threads, [&](std::size_t i) {
    auto search = parts[i];
    CountVisitor visitor;
    per_root[i] = to_stats(search.run(visitor, budget));
  });
  EnumerationStats total;
  for (const auto& s : per_root) total += s;
  total.elapsed = Clock::now() - start;
  return total;
}

SpectrumResult fixed_point_spectrum(const DigitalImage& x, const SearchOptions& options) {
  const auto start = Clock::now();
  const auto parts = MapSearch(x).split_on_first();
  std::vector<EnumerationStats> per_root(parts.size());
  std::vector<std::vector<std::size_t>> found(parts.size());
  NodeBudget budget(options.node_budget);
  parallel_for(parts.size(), options.threads, [&](std::size_t i) {
    auto search = parts[i];
    SpectrumVisitor visitor(x.size());
    per_root[i] = to_stats(search.run(visitor, budget));
    found[i] = visitor.found.values();
  });
  SpectrumResult result;
  std::vector<std::size_t> all;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    result.stats += per_root[i];
    all.insert(all.end(), found[i].begin(), found[i].end());
  }
  result.spectrum = Spectrum(std::move(all));
  result.stats.elapsed = Clock::now() - start;
  return result;
}

PullResult pull_index(const DigitalImage& x, Vertex point, const SearchOptions& options) {
  if (x.size() <= 1) throw InvalidInput("pull index requires an image with more than one point");
  if (point >= x.size()) throw InvalidInput("vertex index " + std::to_string(point) + " out of range");
  const auto start = Clock::now();
  MapSearch search(x, detail::bfs_order(x, point));
  search.restrict_domain(point, ~detail::bit(point));
  search.set_prefer_identity(true);
  NodeBudget budget(options.node_budget);
  PullVisitor visitor(x.size());
  PullResult result;
  result.point = point;
  result.stats = to_stats(search.run(visitor, budget));
  result.stats.elapsed = Clock::now() - start;
  if (!visitor.witness.empty()) {
    result.value = visitor.best;
    result.witness = SelfMap(visitor.witness);
  }
  return result;
}

std::vector<PullResult> pull_indices(const DigitalImage& x, const SearchOptions& options) {
  if (x.size() <= 1) throw InvalidInput("pull index requires an image with more than one point");
  std::vector<PullResult> out(x.size());
  SearchOptions inner = options;
  inner.threads = 1;
  parallel_for(x.size(), options.threads,
               [&](std::size_t i) { out[i] = pull_index(x, static_cast<Vertex>(i), inner); });
  return out;
}

std::optional<std::pair<Vertex, Vertex>> nminus1_criterion(const DigitalImage& x) {
  for (Vertex a = 0; a < x.size(); ++a)
    for (Vertex b = 0; b < x.size(); ++b) {
      if (a == b) continue;
      auto closed_b = x.row(b);
      closed_b.set(b);
      if (x.row(a).is_subset_of(closed_b)) return std::pair{a, b};
    }
  return std::nullopt;
}

SelfMap nminus1_map(std::size_t n, std::pair<Vertex, Vertex> witness) {
  auto t = identity_map(n);
  std::vector<Vertex> targets(t.targets().begin(), t.targets().end());
  targets.at(witness.first) = witness.second;
  return SelfMap(std::move(targets));
}

Spectrum combine_spectra(const Spectrum& a, const Spectrum& b, SpectrumOp op) {
  std::vector<std::size_t> out;
  for (auto x : a.values())
    for (auto y : b.values()) out.push_back(op == SpectrumOp::oplus ? x + y : x * y);
  return Spectrum(std::move(out));
}

}  // namespace digifix
