#pragma once

#include <optional>
#include <vector>

#include "digifix/homotopy.hpp"
#include "digifix/image.hpp"
#include "digifix/selfmap.hpp"
#include "digifix/spectrum.hpp"

namespace digifix {

/// A continuous self-map of X with image inside `subset` that fixes every
/// vertex of `subset`. `subset` is sorted.
struct RetractionWitness {
  std::vector<Vertex> subset;
  SelfMap map;
};

bool is_valid_retraction(const DigitalImage& x, const RetractionWitness& w);

/// Lexicographically least retraction of X onto `subset`, if any. Throws
/// InvalidInput for an empty subset or an out-of-range index.
std::optional<RetractionWitness> find_retraction(const DigitalImage& x, std::vector<Vertex> subset,
                                                 const SearchOptions& options = {});

/// Whether the retraction, seen as a self-map of X, is homotopic to id_X.
/// Inconclusive when the class search runs out of budget.
Membership is_deformation_retraction(const DigitalImage& x, const RetractionWitness& w,
                                     const HomotopyOptions& options = {});

}  // namespace digifix
