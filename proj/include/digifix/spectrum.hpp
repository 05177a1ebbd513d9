#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "digifix/image.hpp"
#include "digifix/selfmap.hpp"

namespace digifix {

/// Sorted set of non-negative integers.
class Spectrum {
 public:
  Spectrum() = default;
  Spectrum(std::initializer_list<std::size_t> values);
  explicit Spectrum(std::vector<std::size_t> values);
  /// {lo, lo+1, ..., hi}; empty when lo > hi.
  static Spectrum range(std::size_t lo, std::size_t hi);

  const std::vector<std::size_t>& values() const { return values_; }
  bool contains(std::size_t v) const;
  bool empty() const { return values_.empty(); }
  std::size_t size() const { return values_.size(); }
  bool is_subset_of(const Spectrum& other) const;
  void insert(std::size_t v);
  Spectrum united(const Spectrum& other) const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::vector<std::size_t> values_;
};

struct EnumerationStats {
  std::uint64_t maps_enumerated = 0;
  std::uint64_t nodes_visited = 0;
  std::chrono::nanoseconds elapsed{0};
  bool truncated = false;

  EnumerationStats& operator+=(const EnumerationStats& other);
};

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000;

struct SearchOptions {
  unsigned threads = 0;  // 0: one per hardware thread
  std::uint64_t node_budget = kDefaultNodeBudget;
};

using MapVisitor = std::function<void(std::span<const Vertex>)>;

/// Visits every continuous self-map exactly once, in backtracking order
/// (BFS vertex order from vertex 0, targets ascending). Stops after `limit`
/// maps with truncated = true. Sequential. Throws ResourceExceeded when the
/// node budget runs out.
EnumerationStats enumerate_continuous_selfmaps(const DigitalImage& x, const MapVisitor& visitor,
                                               std::optional<std::uint64_t> limit = std::nullopt,
                                               const SearchOptions& options = {});

/// Number of continuous self-maps (parallel, full enumeration).
EnumerationStats count_continuous_selfmaps(const DigitalImage& x, const SearchOptions& options = {});

struct SpectrumResult {
  Spectrum spectrum;
  EnumerationStats stats;
};

/// F(X) = {#Fix(f) : f continuous}. Exact or ResourceExceeded.
///
/// The search is split on the image of the first vertex; each subtree is
/// searched sequentially and skips any branch whose reachable fixed-point
/// counts are already all known within that subtree. Result and stats do not
/// depend on the thread count.
SpectrumResult fixed_point_spectrum(const DigitalImage& x, const SearchOptions& options = {});

struct PullResult {
  Vertex point = 0;
  std::optional<std::size_t> value;  // nullopt: no continuous map moves the point
  std::optional<SelfMap> witness;    // a map attaining the minimum
  EnumerationStats stats;
};

/// P(x) = min #moved(f) over continuous f with f(x) != x, by branch and bound.
/// Throws InvalidInput when #X <= 1 or x is out of range.
PullResult pull_index(const DigitalImage& x, Vertex point, const SearchOptions& options = {});
/// P for every vertex, index order.
std::vector<PullResult> pull_indices(const DigitalImage& x, const SearchOptions& options = {});

/// First pair (x1, x2), x1 != x2, in lexicographic order with
/// N(x1) ⊆ N*(x2). Such a pair exists iff #X - 1 ∈ F(X).
std::optional<std::pair<Vertex, Vertex>> nminus1_criterion(const DigitalImage& x);

/// The continuous map with exactly #X - 1 fixed points built from a witness
/// pair: x1 -> x2, everything else fixed.
SelfMap nminus1_map(std::size_t n, std::pair<Vertex, Vertex> witness);

enum class SpectrumOp { oplus, otimes };

/// Sum-set (oplus) or product-set (otimes).
Spectrum combine_spectra(const Spectrum& a, const Spectrum& b, SpectrumOp op);

}  // namespace digifix
