#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "steenrod/report.hpp"

namespace steenrod {

/// Position of a simplex inside a complex: its dimension and its index in the
/// ordered list of simplices of that dimension.
struct Cell {
  int dim = 0;
  std::size_t index = 0;

  auto operator<=>(const Cell&) const = default;
};

/// A finite delta-complex: graded sets of labelled simplices with face
/// operators F_0..F_n on every n-simplex (n >= 1).
///
/// Simplices are kept in insertion order per dimension. Face references are
/// stored by label and resolved as soon as the referenced label exists, so a
/// complex read from a file may be inspected by `validate_delta` even when it
/// has dangling or wrongly-dimensioned faces. Every other operation in the
/// library assumes a valid complex.
class DeltaComplex {
 public:
  DeltaComplex() = default;
  explicit DeltaComplex(std::string name) : name_(std::move(name)) {}

  /// Adds an n-simplex. `faces[i]` is the label of F_i; vertices take no
  /// faces. Throws std::invalid_argument on a duplicate label, a negative
  /// dimension or a face list of the wrong length.
  Cell add(std::string id, int dim, std::vector<std::string> faces = {});

  [[nodiscard]] const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Highest dimension holding a simplex, -1 for the empty complex.
  [[nodiscard]] int dimension() const;
  [[nodiscard]] std::size_t count(int dim) const;
  [[nodiscard]] std::vector<std::size_t> counts() const;
  [[nodiscard]] std::size_t total() const;
  [[nodiscard]] std::vector<Cell> cells(int dim) const;

  [[nodiscard]] const std::string& id(Cell c) const { return entry(c).id; }
  [[nodiscard]] std::optional<Cell> find(std::string_view id) const;

  /// Raw face labels as supplied at construction.
  [[nodiscard]] const std::vector<std::string>& face_ids(Cell c) const { return entry(c).face_ids; }
  /// F_i(c) when the reference resolves to a simplex of dimension dim-1.
  [[nodiscard]] std::optional<Cell> try_face(Cell c, int i) const;
  /// F_i(c); throws std::logic_error on an unresolved face.
  [[nodiscard]] Cell face(Cell c, int i) const;

  /// The face of `c` spanned by the vertices whose bits are set in `mask`
  /// (bit k = vertex k of c). Vertices are deleted from the highest down.
  [[nodiscard]] Cell face_by_vertices(Cell c, std::uint32_t mask) const;
  /// The k-th vertex of c.
  [[nodiscard]] Cell vertex(Cell c, int k) const;

  friend bool operator==(const DeltaComplex& a, const DeltaComplex& b);

 private:
  static constexpr std::size_t kUnresolved = static_cast<std::size_t>(-1);

  struct Entry {
    std::string id;
    std::vector<std::string> face_ids;
    std::vector<std::size_t> faces;  // index into dimension dim-1, or kUnresolved
  };

  [[nodiscard]] const Entry& entry(Cell c) const { return by_dim_.at(static_cast<std::size_t>(c.dim)).at(c.index); }

  std::string name_;
  std::vector<std::vector<Entry>> by_dim_;
  std::unordered_map<std::string, Cell> index_;
  std::unordered_multimap<std::string, std::pair<Cell, int>> pending_;
};

using ComplexPtr = std::shared_ptr<const DeltaComplex>;

/// Lists dangling face references, faces of the wrong dimension and every
/// violated face identity F_i F_j = F_{j-1} F_i (i < j).
ValidationReport validate_delta(const DeltaComplex& x);

/// Throws std::invalid_argument carrying the report text unless `x` is valid.
void require_valid(const DeltaComplex& x);

/// The standard n-simplex. Simplices are the nonempty subsets of {0..n} in
/// lexicographic order of their increasing vertex tuples; labels concatenate
/// the vertex numbers ("012"), comma-separated once n > 9.
DeltaComplex standard_simplex(int n);

/// Label of the face of the standard simplex spanned by `mask`.
std::string standard_simplex_label(int n, std::uint32_t mask);

/// All simplices of dimension <= k.
DeltaComplex skeleton(const DeltaComplex& x, int k);

/// A dimension-preserving assignment between two delta-complexes.
class DeltaMap {
 public:
  DeltaMap(ComplexPtr source, ComplexPtr target);

  void assign(Cell from, Cell to);
  [[nodiscard]] std::optional<Cell> image(Cell c) const;
  /// Image of an assigned simplex; throws std::logic_error otherwise.
  [[nodiscard]] Cell at(Cell c) const;

  [[nodiscard]] const DeltaComplex& source() const { return *source_; }
  [[nodiscard]] const DeltaComplex& target() const { return *target_; }
  [[nodiscard]] const ComplexPtr& source_ptr() const { return source_; }
  [[nodiscard]] const ComplexPtr& target_ptr() const { return target_; }

  friend bool operator==(const DeltaMap& a, const DeltaMap& b);

 private:
  ComplexPtr source_;
  ComplexPtr target_;
  std::vector<std::vector<std::optional<Cell>>> images_;
};

/// Lists unassigned simplices, dimension changes and every simplex where
/// f(F_i s) != F_i(f s).
ValidationReport validate_map(const DeltaMap& f);

DeltaMap identity_map(const ComplexPtr& x);
/// g after f. Throws std::invalid_argument if f's target is not g's source.
DeltaMap compose(const DeltaMap& g, const DeltaMap& f);
/// The coface inclusion d_i: Delta^{n-1} -> Delta^n missing vertex i.
DeltaMap coface_map(int n, int i);
/// The characteristic map Delta^n -> X of an n-simplex.
DeltaMap characteristic_map(const ComplexPtr& x, Cell simplex);

}  // namespace steenrod
