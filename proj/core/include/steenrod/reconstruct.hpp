#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "steenrod/diagonal.hpp"

namespace steenrod {

/// A Steenrod coalgebra morphism N(Δⁿ) → C, n ≤ 2, found by sending the top
/// generator of Δⁿ to a generator of C.
struct SimplexWitness {
  int dim = 0;
  std::size_t target = 0;
  std::string target_id;
  /// Coefficient of the target; -1 survives only on non-canonical input.
  Coeff sign = 1;
  /// The full assignment: images[d][k] is the image of the k-th
  /// d-dimensional face of Δⁿ (standard_simplex order).
  std::vector<std::vector<Chain>> images;

  /// "w(<target id>)", or "w(-<target id>)" for a negative target.
  [[nodiscard]] std::string label() const { return "w(" + std::string(sign < 0 ? "-" : "") + target_id + ")"; }
};

/// A signed candidate that failed verification.
struct RejectedCandidate {
  int dim = 0;
  std::size_t target = 0;
  std::string target_id;
  Coeff sign = 1;
  std::string reason;
};

struct SimplexEnumeration {
  std::vector<SimplexWitness> witnesses;
  std::vector<RejectedCandidate> rejected;
};

/// The model N(Δⁿ) with its canonical structure, shared across calls.
const SteenrodStructure& simplex_model(int n);

/// Expands a witness into a chain map N(Δⁿ) → C on the shared model carrier.
ChainMap witness_map(const SimplexWitness& w, const SteenrodStructure& s);

/// The n-simplices of hom(★, C) for C = s.carrier(), n ∈ {0, 1, 2}. For each
/// generator σ of degree n and each sign, the face images are read off the
/// coproduct values of ±σ and the resulting candidate is verified as a chain
/// map and as a Steenrod morphism for i ≤ n + 1.
SimplexEnumeration enumerate_simplices(const SteenrodStructure& s, int n);

/// hom(★, C) in dimensions ≤ 2, as a delta-complex labelled "w(<target>)".
struct ReconstructedComplex {
  ChainComplexPtr carrier;
  ComplexPtr complex;
  /// witnesses[d][k] belongs to the k-th d-simplex of `complex`.
  std::vector<std::vector<SimplexWitness>> witnesses;
  std::vector<RejectedCandidate> rejected;
  /// Face lookups that found no witness; the affected simplices are left out.
  ValidationReport issues;

  /// Index of the witness of dimension d with the given signed target.
  [[nodiscard]] std::optional<std::size_t> find(int d, std::size_t target, Coeff sign = 1) const;
};

ReconstructedComplex reconstruct_2_skeleton(const SteenrodStructure& s);

/// Checks that σ ↦ w(σ) is a face-preserving bijection from the 2-skeleton
/// of X onto the reconstruction of N(X) with its canonical structure.
ValidationReport unit_comparison(const DeltaComplex& x);

/// Raised by induced_map when a generator is not sent to a single generator
/// with coefficient +1 that carries a witness.
class NonSimplexImage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// ĝ: each witness w of the source goes to the witness whose target is
/// g(target(w)).
DeltaMap induced_map(const ChainMap& g, const ReconstructedComplex& src, const ReconstructedComplex& tgt);

}  // namespace steenrod
