#pragma once

// Backtracking enumeration of continuous self-maps on images of at most 64
// vertices. Candidate targets are kept as 64-bit masks; the candidate set of a
// vertex is its domain mask intersected with N*(f(u)) for every neighbor u
// assigned earlier in the order, so continuity holds incrementally.

#include <atomic>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "digifix/error.hpp"
#include "digifix/image.hpp"

namespace digifix::detail {

inline constexpr std::size_t kMaxSearchVertices = 64;

inline std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

inline std::uint64_t all_vertices_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : bit(static_cast<Vertex>(n)) - 1; }

inline std::uint64_t mask_of(const std::vector<Vertex>& vs) {
  std::uint64_t m = 0;
  for (Vertex v : vs) m |= bit(v);
  return m;
}

/// Shared node budget. Workers add their counts in batches.
class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t limit) : limit_(limit) {}
  void charge(std::uint64_t nodes) {
    if (used_.fetch_add(nodes, std::memory_order_relaxed) + nodes > limit_)
      throw ResourceExceeded("search node budget of " + std::to_string(limit_) + " exceeded");
  }
  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

/// BFS from `start`, then from each unvisited vertex in index order.
std::vector<Vertex> bfs_order(const DigitalImage& x, Vertex start = 0);

/// Default visitor hooks; derive and override what you need.
struct VisitorBase {
  bool accept(std::size_t /*pos*/, Vertex /*v*/, Vertex /*t*/) { return true; }
  void leave(std::size_t /*pos*/, Vertex /*v*/, Vertex /*t*/) {}
};

struct SearchCounters {
  std::uint64_t nodes = 0;  // includes the root
  std::uint64_t maps = 0;
  bool stopped = false;  // a visitor asked to stop
};

class MapSearch {
 public:
  /// Unrestricted domains, BFS order from vertex 0.
  explicit MapSearch(const DigitalImage& x);
  MapSearch(const DigitalImage& x, std::vector<Vertex> order);

  std::size_t size() const { return n_; }
  const std::vector<Vertex>& order() const { return order_; }
  std::uint64_t closed(Vertex v) const { return closed_[v]; }
  std::uint64_t domain(Vertex v) const { return domain_[v]; }
  void restrict_domain(Vertex v, std::uint64_t mask) { domain_[v] &= mask; }
  void set_prefer_identity(bool on) { prefer_identity_ = on; }

  /// One copy per admissible value of the first vertex in the order. The
  /// subtrees partition the search space. Empty images yield one copy.
  std::vector<MapSearch> split_on_first() const;

  /// Visitor must provide accept/leave (see VisitorBase) and
  /// `bool complete(std::span<const Vertex>)`; returning false from complete
  /// stops the search. accept may return false to skip the subtree, in which
  /// case leave is not called for that assignment.
  template <class Visitor>
  SearchCounters run(Visitor& visitor, NodeBudget& budget) {
    counters_ = SearchCounters{};
    counters_.nodes = 1;
    pending_ = 1;
    budget_ = &budget;
    targets_.assign(n_, 0);
    counters_.stopped = !descend(0, visitor);
    budget.charge(pending_);
    pending_ = 0;
    return counters_;
  }

 private:
  template <class Visitor>
  bool descend(std::size_t pos, Visitor& visitor) {
    if (pos == n_) {
      ++counters_.maps;
      return visitor.complete(std::span<const Vertex>(targets_));
    }
    const Vertex v = order_[pos];
    std::uint64_t cand = domain_[v];
    for (Vertex u : prev_[pos]) cand &= closed_[targets_[u]];
    if (prefer_identity_ && (cand & bit(v))) {
      if (!try_value(pos, v, v, visitor)) return false;
      cand &= ~bit(v);
    }
    while (cand) {
      const auto t = static_cast<Vertex>(std::countr_zero(cand));
      cand &= cand - 1;
      if (!try_value(pos, v, t, visitor)) return false;
    }
    return true;
  }

  template <class Visitor>
  bool try_value(std::size_t pos, Vertex v, Vertex t, Visitor& visitor) {
    ++counters_.nodes;
    if (++pending_ >= kChargeBatch) {
      budget_->charge(pending_);
      pending_ = 0;
    }
    targets_[v] = t;
    if (!visitor.accept(pos, v, t)) return true;
    const bool go_on = descend(pos + 1, visitor);
    visitor.leave(pos, v, t);
    return go_on;
  }

  static constexpr std::uint64_t kChargeBatch = 1 << 14;

  std::size_t n_ = 0;
  std::vector<Vertex> order_;
  std::vector<std::vector<Vertex>> prev_;  // earlier neighbors, per position
  std::vector<std::uint64_t> closed_;
  std::vector<std::uint64_t> domain_;
  bool prefer_identity_ = false;

  std::vector<Vertex> targets_;
  SearchCounters counters_;
  std::uint64_t pending_ = 0;
  NodeBudget* budget_ = nullptr;
};

/// Visitor collecting every complete map.
struct CollectAll : VisitorBase {
  std::vector<std::vector<Vertex>> maps;
  bool complete(std::span<const Vertex> t) {
    maps.emplace_back(t.begin(), t.end());
    return true;
  }
};

}  // namespace digifix::detail
