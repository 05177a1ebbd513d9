#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "digifix/image.hpp"

namespace digifix {

/// A simple loop `loop` (length m = loop.size(), closing back to loop[0]) and
/// an attaching path `path` = r(0..k) with r(k) = loop[0].
///
/// "Simple" means the loop or path is an isomorphism onto its image, so both
/// are chordless. The path may pass through loop vertices, but its vertex
/// before the junction is neither equal nor adjacent to loop[1] or loop[m-1].
struct Lasso {
  std::vector<Vertex> loop;
  std::vector<Vertex> path;
};

/// a, b, c are consecutive along an edge pair a-b-c; true when some
/// d outside {a, b, c} closes the square a-b-c-d. Throws InvalidInput unless
/// a↔b, b↔c and a≠c.
bool right_angle(const DigitalImage& x, Vertex a, Vertex b, Vertex c);

/// First violated lasso condition (including the no-right-angle ones), or
/// nullopt for a valid lasso with no right angles.
std::optional<std::string> lasso_violation(const DigitalImage& x, const Lasso& lasso);

inline bool is_valid_lasso(const DigitalImage& x, const Lasso& lasso) { return !lasso_violation(x, lasso); }

inline constexpr std::uint64_t kDefaultLassoBudget = 50'000'000;

struct LassoOptions {
  std::optional<std::size_t> max_loop;  // defaults to #X
  std::uint64_t node_budget = kDefaultLassoBudget;
  unsigned threads = 0;
};

/// Lasso with no right angles whose path starts x, x_prime. Paths are tried by
/// increasing length, then lexicographically; loops lexicographically from
/// the junction. Throws InvalidInput unless x↔x_prime and ResourceExceeded
/// when the search visits more than options.node_budget partial paths.
std::optional<Lasso> find_lasso(const DigitalImage& x, Vertex x0, Vertex x_prime, const LassoOptions& options = {});

struct LassoCertificate {
  bool certified = false;
  /// One lasso per ordered adjacent pair, pairs ascending.
  std::vector<std::pair<std::pair<Vertex, Vertex>, Lasso>> lassos;
  /// Ordered adjacent pairs with no lasso, ascending. Empty iff certified.
  std::vector<std::pair<Vertex, Vertex>> missing;
};

/// Tries every ordered adjacent pair. A certified image is rigid; an
/// uncertified one may or may not be.
LassoCertificate lasso_rigidity_certificate(const DigitalImage& x, const LassoOptions& options = {});

}  // namespace digifix
