#include "digifix/retracts.hpp"

#include <algorithm>
#include <string>

#include "digifix/detail/map_search.hpp"
#include "digifix/error.hpp"
#include "digifix/parallel.hpp"

namespace digifix {

using detail::MapSearch;

bool is_valid_retraction(const DigitalImage& x, const RetractionWitness& w) {
  if (w.map.size() != x.size() || w.subset.empty() || !is_continuous(x, w.map)) return false;
  std::vector<bool> in_subset(x.size(), false);
  for (Vertex a : w.subset) {
    if (a >= x.size()) return false;
    in_subset[a] = true;
  }
  for (Vertex v = 0; v < x.size(); ++v) {
    if (!in_subset[w.map(v)]) return false;
    if (in_subset[v] && w.map(v) != v) return false;
  }
  return true;
}

std::optional<RetractionWitness> find_retraction(const DigitalImage& x, std::vector<Vertex> subset,
                                                 const SearchOptions& options) {
  if (subset.empty()) throw InvalidInput("retraction subset is empty");
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (Vertex a : subset)
    if (a >= x.size()) throw InvalidInput("subset index " + std::to_string(a) + " out of range");

  // Index order makes the first map found the lexicographically least one.
  std::vector<Vertex> order(x.size());
  for (Vertex v = 0; v < x.size(); ++v) order[v] = v;
  MapSearch search(x, order);
  const auto into = detail::mask_of(subset);
  for (Vertex v = 0; v < x.size(); ++v) search.restrict_domain(v, into);
  for (Vertex a : subset) search.restrict_domain(a, detail::bit(a));

  struct First : detail::VisitorBase {
    std::vector<Vertex> found;
    bool complete(std::span<const Vertex> t) {
      found.assign(t.begin(), t.end());
      return false;
    }
  };
  const auto parts = search.split_on_first();
  std::vector<First> firsts(parts.size());
  detail::NodeBudget budget(options.node_budget);
  parallel_for(parts.size(), options.threads, [&](std::size_t i) {
    auto part = parts[i];
    part.run(firsts[i], budget);
  });
  for (auto& f : firsts)
    if (!f.found.empty()) return RetractionWitness{subset, SelfMap(std::move(f.found))};
  return std::nullopt;
}

Membership is_deformation_retraction(const DigitalImage& x, const RetractionWitness& w,
                                     const HomotopyOptions& options) {
  if (!is_valid_retraction(x, w)) throw InvalidInput("not a retraction of image '" + x.name() + "'");
  return homotopic(x, identity_map(x.size()), w.map, options);
}

}  // namespace digifix
