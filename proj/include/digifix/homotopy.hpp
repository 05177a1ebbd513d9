#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "digifix/image.hpp"
#include "digifix/selfmap.hpp"
#include "digifix/spectrum.hpp"

namespace digifix {

/// A chain of self-maps where consecutive steps are pointwise adjacent-or-equal.
/// Each link is a one-step homotopy, so a valid path certifies first ≃ last.
struct HomotopyPath {
  std::vector<SelfMap> steps;
};

struct HomotopyOptions {
  std::uint64_t class_budget = 10'000'000;  // maps explored per class
  std::uint64_t member_cap = 1'000'000;     // retain member lists up to this size
  unsigned threads = 0;
  std::uint64_t node_budget = kDefaultNodeBudget;
};

/// Homotopy class of a continuous self-map.
///
/// When `complete` is false the class was cut off at the budget and
/// `fix_counts` is only a lower bound of S(f).
struct HomotopyClass {
  SelfMap representative;        // lexicographically least member seen
  std::vector<SelfMap> members;  // sorted; empty unless members_retained
  bool members_retained = false;
  Spectrum fix_counts;  // S(f) when complete
  std::uint64_t size = 0;
  bool complete = true;

  /// M(f) and X(f).
  std::size_t min_fixed() const { return fix_counts.values().front(); }
  std::size_t max_fixed() const { return fix_counts.values().back(); }
};

/// Both maps continuous and f(x) ⟷= g(x) for every x.
bool one_step_homotopic(const DigitalImage& x, const SelfMap& f, const SelfMap& g);

/// Every continuous g with g(x) ∈ N*(f(x)) for all x, including f itself,
/// in backtracking order.
std::vector<SelfMap> one_step_neighbors(const DigitalImage& x, const SelfMap& f,
                                        std::uint64_t node_budget = kDefaultNodeBudget);

/// BFS over the one-step map graph starting at f. Throws InvalidInput when f
/// is not continuous.
HomotopyClass homotopy_class(const DigitalImage& x, const SelfMap& f, const HomotopyOptions& options = {});

enum class Membership { member, not_member, inconclusive };

/// Whether g lies in the class of f; BFS from f stops as soon as g is reached.
Membership homotopic(const DigitalImage& x, const SelfMap& f, const SelfMap& g,
                     const HomotopyOptions& options = {});

/// A continuous map other than id that is one-step homotopic to id, if any.
std::optional<SelfMap> rigidity_breaker(const DigitalImage& x, std::uint64_t node_budget = kDefaultNodeBudget);
/// The image is rigid iff rigidity_breaker finds nothing.
bool is_rigid_image(const DigitalImage& x, std::uint64_t node_budget = kDefaultNodeBudget);

/// f is rigid iff its only one-step neighbor is f. Throws InvalidInput when f
/// is not continuous.
bool is_rigid_map(const DigitalImage& x, const SelfMap& f, std::uint64_t node_budget = kDefaultNodeBudget);

/// All homotopy classes, ordered by representative. Throws ResourceExceeded
/// when the image has more than options.class_budget continuous maps.
std::vector<HomotopyClass> homotopy_classes(const DigitalImage& x, const HomotopyOptions& options = {});

/// Every step continuous and consecutive steps pointwise adjacent-or-equal.
bool verify_homotopy_path(const DigitalImage& x, const HomotopyPath& path);

/// Shortest chain of one-step homotopies from f to g, when g is reachable
/// within the class budget.
std::optional<HomotopyPath> find_homotopy_path(const DigitalImage& x, const SelfMap& f, const SelfMap& g,
                                               const HomotopyOptions& options = {});

}  // namespace digifix
