#pragma once

// Brute-force reference implementations. They share nothing with the search
// code beyond DigitalImage::adjacent and are meant for cross-checking on small
// images only.

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "digifix/image.hpp"

namespace digifix::oracle {

using Targets = std::vector<Vertex>;

/// Calls fn for each of the n^n functions on n vertices, odometer order.
void for_each_function(std::size_t n, const std::function<void(const Targets&)>& fn);

/// Every edge {x, y} has t[x] == t[y] or t[x] ↔ t[y].
bool continuous_by_edges(const DigitalImage& x, const Targets& t);

/// Every connected subset has a connected image. Up to 20 vertices.
bool continuous_by_subsets(const DigitalImage& x, const Targets& t);

/// All continuous self-maps by filtering the n^n functions.
std::vector<Targets> continuous_maps(const DigitalImage& x);

std::set<std::size_t> spectrum(const DigitalImage& x);

/// Minimum number of moved points over continuous maps moving p; 0 if none.
std::size_t pull_index(const DigitalImage& x, Vertex p);

/// Partition of the continuous maps into classes of the transitive closure of
/// the pointwise adjacent-or-equal relation. Classes and members sorted.
std::vector<std::vector<Targets>> homotopy_partition(const DigitalImage& x);

/// Vertices lying on every minimal path from a to b, by listing all walks of
/// length d(a, b) from a that end at b.
std::vector<Vertex> on_every_geodesic(const DigitalImage& x, Vertex a, Vertex b);

std::size_t fixed_count(const Targets& t);

}  // namespace digifix::oracle
