#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "steenrod/complexes.hpp"
#include "steenrod/smith.hpp"

namespace steenrod {

class MissingBasepoint : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Breadth-first spanning tree of the 1-skeleton component of `base`. Edges
/// are arcs F_1σ → F_0σ, traversed in either direction; at each vertex the
/// unexplored edges are taken in lexicographic order of their ids. Returns the
/// tree edges in discovery order.
std::vector<Cell> spanning_tree(const DeltaComplex& x, const std::string& base);

/// x_g^{±1}.
struct Letter {
  std::size_t generator = 0;
  int exponent = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

/// Cancels adjacent x x^-1 pairs.
Word freely_reduce(Word w);

/// Edge-path presentation of π1 of the component of the basepoint.
struct GroupPresentation {
  std::string base;
  /// One generator per edge of the component, in complex order.
  std::vector<std::string> generators;
  std::vector<Cell> edges;
  /// Indices into `generators`, discovery order.
  std::vector<std::size_t> tree;
  /// Tree relators first, then x_{F2σ} x_{F0σ} x_{F1σ}^-1 per triangle.
  std::vector<Word> relators;

  [[nodiscard]] std::optional<std::size_t> generator_of(Cell edge) const;
  /// "⟨ a, b, c | a, c a^-1 b^-1 ⟩".
  [[nodiscard]] std::string render() const;
  [[nodiscard]] std::string render(const Word& w) const;
};

/// Throws MissingBasepoint when `base` is not a vertex of X.
GroupPresentation presentation(const DeltaComplex& x, const std::string& base);
/// Basepoint = first vertex.
GroupPresentation presentation(const DeltaComplex& x);

struct AbelianInvariants {
  std::size_t rank = 0;
  std::vector<Coeff> torsion;

  /// "Z^2 ⊕ Z/2"; "0" for the trivial group.
  [[nodiscard]] std::string render() const;
  /// "rank 1, torsion [2]".
  [[nodiscard]] std::string summary() const;
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Relator exponent sums: one row per relator, one column per generator.
IntMatrix exponent_matrix(const GroupPresentation& p);

AbelianInvariants abelianization(const GroupPresentation& p);

/// The abelianization as Z^g / (relator rows), split into cyclic factors.
/// Factors are listed torsion first, then free.
struct AbelianCoordinates {
  AbelianInvariants invariants;
  /// Order of each factor, 0 for Z.
  std::vector<Coeff> orders;
  /// factors × generators: coordinates of a generator exponent vector.
  IntMatrix to_factors;
  /// generators × factors: an exponent vector representing each factor's
  /// generator.
  IntMatrix from_factors;
};
AbelianCoordinates abelian_coordinates(const GroupPresentation& p);

struct InducedHomomorphism {
  /// Word in the target generators for each source generator.
  std::vector<Word> images;
  AbelianInvariants source;
  AbelianInvariants target;
  /// Target factors × source factors in the cyclic-factor coordinates
  /// (torsion first, then free); torsion rows are reduced modulo the order.
  IntMatrix abelian;
  /// The block between the free factors.
  IntMatrix free_block;
};

/// π1(ĝ): each source generator x_e, read as the loop γ(F1 e)·e·γ(F0 e)^-1 through
/// the source tree, is sent to the image path conjugated by the target tree
/// path from the target basepoint to ĝ(base). Throws std::invalid_argument when
/// ĝ(base) lies outside the target basepoint's component.
InducedHomomorphism induced_homomorphism(const DeltaMap& g, const GroupPresentation& src, const GroupPresentation& tgt);

/// Determinant of a square integer matrix (Bareiss, exact).
Coeff determinant(const IntMatrix& m);

}  // namespace steenrod
