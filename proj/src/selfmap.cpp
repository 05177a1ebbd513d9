#include "digifix/selfmap.hpp"

#include <string>

#include "digifix/error.hpp"

namespace digifix {

namespace {

void require_match(const DigitalImage& x, const SelfMap& f) {
  if (x.size() != f.size())
    throw InvalidInput("map has " + std::to_string(f.size()) + " entries but image '" + x.name() + "' has " +
                       std::to_string(x.size()) + " vertices");
}

}  // namespace

SelfMap::SelfMap(std::vector<Vertex> targets) : targets_(std::move(targets)) {
  for (std::size_t i = 0; i < targets_.size(); ++i)
    if (targets_[i] >= targets_.size())
      throw InvalidInput("map target " + std::to_string(targets_[i]) + " at index " + std::to_string(i) +
                         " is out of range");
}

SelfMap identity_map(std::size_t n) {
  std::vector<Vertex> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<Vertex>(i);
  return SelfMap(std::move(t));
}

SelfMap constant_map(std::size_t n, Vertex value) { return SelfMap(std::vector<Vertex>(n, value)); }

bool is_continuous(const DigitalImage& x, const SelfMap& f) {
  require_match(x, f);
  for (auto [a, b] : x.edges())
    if (!x.adjacent_or_equal(f(a), f(b))) return false;
  return true;
}

std::vector<Vertex> fix(const SelfMap& f) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < f.size(); ++v)
    if (f(v) == v) out.push_back(v);
  return out;
}

std::vector<Vertex> moved(const SelfMap& f) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < f.size(); ++v)
    if (f(v) != v) out.push_back(v);
  return out;
}

std::size_t fix_count(const SelfMap& f) {
  std::size_t k = 0;
  for (Vertex v = 0; v < f.size(); ++v) k += (f(v) == v);
  return k;
}

SelfMap compose(const SelfMap& g, const SelfMap& f) {
  if (g.size() != f.size()) throw InvalidInput("compose: maps act on images of different sizes");
  std::vector<Vertex> t(f.size());
  for (Vertex v = 0; v < f.size(); ++v) t[v] = g(f(v));
  return SelfMap(std::move(t));
}

SelfMap fixed_point_free_map(const DigitalImage& x) {
  const auto edges = x.edges();
  if (edges.empty())
    throw InvalidInput("image '" + x.name() + "' has no edge: every self-map has a fixed point");
  const auto [x0, x1] = edges.front();
  std::vector<Vertex> t(x.size(), x0);
  t[x0] = x1;
  return SelfMap(std::move(t));
}

SelfMap cycle_map(std::size_t n, CycleMapKind kind, Vertex param) {
  if (n < 1) throw InvalidInput("cycle_map requires n >= 1");
  if (param >= n) throw InvalidInput("cycle_map parameter " + std::to_string(param) + " out of range");
  std::vector<Vertex> t(n);
  for (std::size_t i = 0; i < n; ++i) {
    switch (kind) {
      case CycleMapKind::constant:
        t[i] = param;
        break;
      case CycleMapKind::rotation:
        t[i] = static_cast<Vertex>((i + param) % n);
        break;
      case CycleMapKind::flip_composed:
        t[i] = static_cast<Vertex>((param + n - i) % n);
        break;
    }
  }
  return SelfMap(std::move(t));
}

SelfMap map_from_coordinates(const DigitalImage& x, const std::function<Point(const Point&)>& transform) {
  std::vector<Vertex> t(x.size());
  for (Vertex v = 0; v < x.size(); ++v) {
    auto target = x.find_point(transform(x.point(v)));
    if (!target) throw InvalidInput("coordinate transform leaves the image at vertex " + std::to_string(v));
    t[v] = *target;
  }
  return SelfMap(std::move(t));
}

}  // namespace digifix
