#pragma once

#include <random>

#include "steenrod/complexes.hpp"

namespace steenrod::testing {

struct RandomOptions {
  int max_dim = 4;
  std::size_t max_simplices = 30;
  /// Chance of reusing an existing compatible face instead of making a new one.
  double reuse = 0.5;
};

/// A random valid delta-complex with at most `max_simplices` simplices. Faces
/// are chosen one at a time, highest index first, each constrained by the face
/// identities against the faces already chosen, so loops, parallel edges and
/// other identifications occur.
DeltaComplex random_delta_complex(std::mt19937& rng, const RandomOptions& opt = {});

struct RandomMap {
  ComplexPtr source;
  ComplexPtr target;
  DeltaMap map;
};

/// A random delta-map into `target`: the source is grown by lifting random
/// target simplices, reusing compatible lifts at random.
RandomMap random_lift(std::mt19937& rng, const ComplexPtr& target, const RandomOptions& opt = {});

}  // namespace steenrod::testing
