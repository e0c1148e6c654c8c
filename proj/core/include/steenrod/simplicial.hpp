#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "steenrod/complexes.hpp"

namespace steenrod {

/// An order-preserving surjection [m] ->> [n], stored by its values.
class Surjection {
 public:
  /// Identity on [n].
  static Surjection identity(int n);
  /// The surjection whose Eilenberg-Zilber word is s_{j_k} ... s_{j_1}, given
  /// the set {j_1 < ... < j_k} of positions t with eta(t) == eta(t+1).
  static Surjection from_degeneracies(int m, const std::vector<int>& positions);
  /// Every surjection [m] ->> [n], in lexicographic order of the value tuple.
  static std::vector<Surjection> all(int m, int n);
  /// Number of surjections [m] ->> [n], i.e. binomial(m, n).
  static std::size_t count(int m, int n);

  [[nodiscard]] int source_dim() const { return static_cast<int>(values_.size()) - 1; }
  [[nodiscard]] int target_dim() const { return values_.empty() ? -1 : values_.back(); }
  [[nodiscard]] bool is_identity() const { return source_dim() == target_dim(); }
  [[nodiscard]] const std::vector<int>& values() const { return values_; }
  [[nodiscard]] int operator()(int t) const { return values_.at(static_cast<std::size_t>(t)); }

  /// Positions t with eta(t) == eta(t+1), increasing.
  [[nodiscard]] std::vector<int> degeneracy_positions() const;
  /// The normal-form word, indices decreasing: "s2s0"; empty for the identity.
  [[nodiscard]] std::string word() const;

  /// this ∘ inner.
  [[nodiscard]] Surjection after(const Surjection& inner) const;

  auto operator<=>(const Surjection&) const = default;

 private:
  explicit Surjection(std::vector<int> values) : values_(std::move(values)) {}
  std::vector<int> values_;
};

/// A simplex of a simplicial set in Eilenberg-Zilber normal form: the
/// degeneracy `eta` applied to the nondegenerate simplex `base`.
struct DegenerateSimplex {
  Surjection eta;
  Cell base;

  [[nodiscard]] int dim() const { return eta.source_dim(); }
  auto operator<=>(const DegenerateSimplex&) const = default;
};

/// The simplicial set freely generated by a delta-complex core: every
/// m-simplex is a unique pair (eta: [m] ->> [n], sigma in core_n). Degenerate
/// simplices are enumerated on demand; `max_dim` is the default enumeration
/// bound used by the functors below.
///
/// Within a dimension m the simplices are ordered by decreasing n, then by
/// surjection (lexicographic), then by core order, so the nondegenerate
/// simplices come first.
class SimplicialSet {
 public:
  SimplicialSet(ComplexPtr core, int max_dim);

  [[nodiscard]] const DeltaComplex& core() const { return *core_; }
  [[nodiscard]] const ComplexPtr& core_ptr() const { return core_; }
  [[nodiscard]] int max_dim() const { return max_dim_; }

  [[nodiscard]] std::size_t count(int m) const;
  [[nodiscard]] std::vector<DegenerateSimplex> simplices(int m) const;
  /// Position of x in `simplices(x.dim())`.
  [[nodiscard]] std::size_t index_of(const DegenerateSimplex& x) const;

  [[nodiscard]] DegenerateSimplex face(const DegenerateSimplex& x, int i) const;
  [[nodiscard]] DegenerateSimplex degeneracy(const DegenerateSimplex& x, int j) const;
  /// Core label for a nondegenerate simplex, "s1s0(v)" otherwise.
  [[nodiscard]] std::string label(const DegenerateSimplex& x) const;

 private:
  ComplexPtr core_;
  int max_dim_;
};

/// Drops the degeneracy operators: every simplex of S up to `max_dim` becomes a
/// simplex of a delta-complex, labelled by `SimplicialSet::label`. Cell order
/// follows `SimplicialSet::simplices`. Throws std::invalid_argument when
/// max_dim is below the core dimension.
DeltaComplex forget(const SimplicialSet& s, int max_dim);

/// Adds all possible degeneracies to X.
SimplicialSet freely_degenerate(const ComplexPtr& x, int max_dim);

/// The inclusion of X as the nondegenerate part of forget(freely_degenerate(X)).
DeltaMap degeneracy_inclusion(const ComplexPtr& x, const ComplexPtr& forgotten);

/// A map of simplicial sets given on nondegenerate source simplices and
/// extended by g(eta . sigma) = eta . g(sigma).
class SimplicialMap {
 public:
  SimplicialMap(std::shared_ptr<const SimplicialSet> source, std::shared_ptr<const SimplicialSet> target);

  void assign(Cell core_simplex, DegenerateSimplex image);
  [[nodiscard]] std::optional<DegenerateSimplex> image(const DegenerateSimplex& x) const;

  [[nodiscard]] const SimplicialSet& source() const { return *source_; }
  [[nodiscard]] const SimplicialSet& target() const { return *target_; }

 private:
  std::shared_ptr<const SimplicialSet> source_;
  std::shared_ptr<const SimplicialSet> target_;
  std::vector<std::vector<std::optional<DegenerateSimplex>>> images_;
};

/// Checks completeness on the core and, for every source simplex up to
/// max_dim, dimension preservation, d_i g = g d_i and s_j g = g s_j.
ValidationReport validate_map(const SimplicialMap& g, int max_dim);

/// The natural map d(f(S)) -> S: each promoted simplex of f(S) goes back to
/// the degenerate simplex it came from; added degeneracies follow by
/// extension.
SimplicialMap adjunction_unit(const SimplicialSet& s, int max_dim);

}  // namespace steenrod
