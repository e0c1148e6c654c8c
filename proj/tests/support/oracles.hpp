#pragma once

#include <vector>

#include "steenrod/diagonal.hpp"
#include "steenrod/smith.hpp"

namespace steenrod::testing {

/// Order-preserving surjections [m] ->> [n], counted by testing every map.
std::size_t count_surjections_brute(int m, int n);

/// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1}, where
/// D_k is the gcd of all k×k minors (cofactor expansion). Small matrices only.
std::vector<Coeff> invariant_factors_by_minors(const IntMatrix& a);

struct SignedTarget {
  std::size_t target = 0;
  Coeff sign = 1;
  friend bool operator==(const SignedTarget&, const SignedTarget&) = default;
};

/// Every signed generator ±σ of degree n (n ≤ 2) for which some assignment of
/// the lower faces of Δⁿ, each to 0 or to a signed generator, is a chain map
/// and a Steenrod morphism for i ≤ n + 1. Exhaustive search.
std::vector<SignedTarget> brute_force_witnesses(const SteenrodStructure& s, int n);

/// All integer vectors x with entries in [-bound, bound] on `support` with
/// ∂x = rhs in C⊗C. Exhaustive.
std::vector<TensorChain> solve_on_support(const ChainComplex& c, const std::vector<TensorBasis>& support,
                                          const TensorChain& rhs, Coeff bound);

}  // namespace steenrod::testing
