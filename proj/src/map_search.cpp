#include "digifix/detail/map_search.hpp"

#include <deque>

namespace digifix::detail {

std::vector<Vertex> bfs_order(const DigitalImage& x, Vertex start) {
  const auto n = x.size();
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<bool> seen(n, false);
  auto sweep = [&](Vertex s) {
    std::deque<Vertex> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (Vertex w : x.row(v).to_vector())
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
    }
  };
  if (n == 0) return order;
  sweep(start);
  for (Vertex s = 0; s < n; ++s)
    if (!seen[s]) sweep(s);
  return order;
}

MapSearch::MapSearch(const DigitalImage& x) : MapSearch(x, bfs_order(x, 0)) {}

MapSearch::MapSearch(const DigitalImage& x, std::vector<Vertex> order) : n_(x.size()), order_(std::move(order)) {
  if (n_ > kMaxSearchVertices)
    throw ResourceExceeded("map enumeration supports at most " + std::to_string(kMaxSearchVertices) +
                           " vertices; image '" + x.name() + "' has " + std::to_string(n_));
  if (order_.size() != n_) throw InvalidInput("search order must list every vertex once");
  closed_.resize(n_);
  for (Vertex v = 0; v < n_; ++v) closed_[v] = x.row(v).low_word() | bit(v);
  domain_.assign(n_, all_vertices_mask(n_));
  std::vector<bool> placed(n_, false);
  prev_.resize(n_);
  for (std::size_t pos = 0; pos < n_; ++pos) {
    const Vertex v = order_[pos];
    if (v >= n_ || placed[v]) throw InvalidInput("search order must list every vertex once");
    for (std::size_t k = 0; k < pos; ++k)
      if (x.adjacent(v, order_[k])) prev_[pos].push_back(order_[k]);
    placed[v] = true;
  }
}

std::vector<MapSearch> MapSearch::split_on_first() const {
  if (n_ == 0) return {*this};
  std::vector<MapSearch> out;
  const Vertex first = order_.front();
  auto roots = domain_[first];
  while (roots) {
    const auto t = static_cast<Vertex>(std::countr_zero(roots));
    roots &= roots - 1;
    MapSearch sub = *this;
    sub.domain_[first] = bit(t);
    out.push_back(std::move(sub));
  }
  return out;
}

}  // namespace digifix::detail
