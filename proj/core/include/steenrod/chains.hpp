#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "steenrod/complexes.hpp"
#include "steenrod/integer.hpp"
#include "steenrod/report.hpp"
#include "steenrod/simplicial.hpp"
#include "steenrod/smith.hpp"

namespace steenrod {

/// A homogeneous integer chain: generator index -> nonzero coefficient.
class Chain {
 public:
  Chain() = default;
  explicit Chain(int degree) : degree_(degree) {}
  Chain(int degree, std::size_t generator, Coeff coeff = 1) : degree_(degree) { add(generator, coeff); }

  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] const std::map<std::size_t, Coeff>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Coeff coefficient(std::size_t generator) const;

  void add(std::size_t generator, Coeff coeff);
  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  [[nodiscard]] Chain scaled(Coeff k) const;

  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  int degree_ = 0;
  std::map<std::size_t, Coeff> terms_;
};

/// A free graded integer complex with labelled generators.
class ChainComplex {
 public:
  ChainComplex() = default;
  explicit ChainComplex(std::string name) : name_(std::move(name)) {}

  /// Appends a generator in `degree` with the given boundary (degree - 1,
  /// ignored in degree 0). Throws on duplicate labels within a degree.
  std::size_t add_generator(int degree, std::string id, Chain boundary = {});

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] int top_degree() const { return static_cast<int>(ids_.size()) - 1; }
  [[nodiscard]] std::size_t rank(int degree) const;
  [[nodiscard]] const std::string& id(int degree, std::size_t index) const;
  [[nodiscard]] std::optional<std::size_t> find(int degree, const std::string& id) const;
  [[nodiscard]] const Chain& boundary(int degree, std::size_t index) const;
  [[nodiscard]] Chain boundary(const Chain& c) const;

  friend bool operator==(const ChainComplex& a, const ChainComplex& b) {
    return a.ids_ == b.ids_ && a.boundaries_ == b.boundaries_;
  }

 private:
  std::string name_;
  std::vector<std::vector<std::string>> ids_;
  std::vector<std::unordered_map<std::string, std::size_t>> index_;
  std::vector<std::vector<Chain>> boundaries_;
};

using ChainComplexPtr = std::shared_ptr<const ChainComplex>;

/// Lists generators with nonzero ∂∂.
ValidationReport verify_boundary_squared(const ChainComplex& c);

/// N(X): one generator per simplex, ∂σ = Σ (-1)^i F_i σ. Generator indices
/// equal cell indices.
ChainComplex normalized_chains(const DeltaComplex& x);

/// C(S) = N(forget(S, max_dim)).
ChainComplex unnormalized_chains(const SimplicialSet& s, int max_dim);

/// A degree-preserving linear map given on generators; missing images are 0.
class ChainMap {
 public:
  ChainMap(ChainComplexPtr source, ChainComplexPtr target);

  void set(int degree, std::size_t generator, Chain image);
  [[nodiscard]] const Chain& image(int degree, std::size_t generator) const;
  [[nodiscard]] Chain apply(const Chain& c) const;

  [[nodiscard]] const ChainComplex& source() const { return *source_; }
  [[nodiscard]] const ChainComplex& target() const { return *target_; }
  [[nodiscard]] const ChainComplexPtr& source_ptr() const { return source_; }
  [[nodiscard]] const ChainComplexPtr& target_ptr() const { return target_; }

  friend bool operator==(const ChainMap& a, const ChainMap& b);

 private:
  ChainComplexPtr source_;
  ChainComplexPtr target_;
  std::vector<std::vector<Chain>> images_;
};

/// N(f) for a valid delta map, on freshly built normalized chains.
/// Throws std::invalid_argument if f does not pass validate_map.
ChainMap chains_of_map(const DeltaMap& f);
/// Same, reusing carriers that must be normalized_chains of f's complexes.
ChainMap chains_of_map(const DeltaMap& f, ChainComplexPtr source, ChainComplexPtr target);

ChainMap identity_chain_map(const ChainComplexPtr& c);
/// g after f.
ChainMap compose(const ChainMap& g, const ChainMap& f);

/// Lists generators where ∂f != f∂ or where an image has the wrong degree.
ValidationReport verify_chain_map(const ChainMap& f);

/// Basis element a⊗b of C⊗C.
struct TensorBasis {
  int left_degree = 0;
  std::size_t left = 0;
  int right_degree = 0;
  std::size_t right = 0;

  auto operator<=>(const TensorBasis&) const = default;
};

/// A sparse element of C⊗C.
class TensorChain {
 public:
  void add(const TensorBasis& b, Coeff coeff);
  TensorChain& operator+=(const TensorChain& other);
  TensorChain& operator-=(const TensorChain& other);
  [[nodiscard]] TensorChain scaled(Coeff k) const;

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const std::map<TensorBasis, Coeff>& terms() const { return terms_; }
  [[nodiscard]] Coeff coefficient(const TensorBasis& b) const;

  friend TensorChain operator+(TensorChain a, const TensorChain& b) { return a += b; }
  friend TensorChain operator-(TensorChain a, const TensorChain& b) { return a -= b; }
  friend bool operator==(const TensorChain&, const TensorChain&) = default;

 private:
  std::map<TensorBasis, Coeff> terms_;
};

/// a⊗b for homogeneous chains.
TensorChain tensor(const Chain& a, const Chain& b);
/// ∂(a⊗b) = ∂a⊗b + (-1)^{|a|} a⊗∂b.
TensorChain tensor_boundary(const ChainComplex& c, const TensorChain& t);
/// T(a⊗b) = (-1)^{|a||b|} b⊗a.
TensorChain koszul_swap(const TensorChain& t);
/// (f⊗f)(t).
TensorChain tensor_apply(const ChainMap& f, const TensorChain& t);

/// C⊗C truncated at max_degree. Basis of degree k: pairs (a, b) with
/// |a| + |b| = k, ordered by |a| then by generator order; labels "a⊗b".
ChainComplex tensor_square(const ChainComplex& c, int max_degree);

struct DegreeHomology {
  std::size_t betti = 0;
  std::vector<Coeff> torsion;

  friend bool operator==(const DegreeHomology&, const DegreeHomology&) = default;
};

struct HomologySummary {
  std::vector<DegreeHomology> degrees;

  [[nodiscard]] std::vector<std::size_t> betti() const;
  friend bool operator==(const HomologySummary&, const HomologySummary&) = default;
};

/// Integral homology from Smith normal forms of the boundary matrices.
HomologySummary homology(const ChainComplex& c);

/// Integer matrix of ∂: C_degree -> C_{degree-1} (rows: degree-1 generators).
IntMatrix boundary_matrix(const ChainComplex& c, int degree);

/// "+v -2*w" style rendering, generators in label order; "0" for zero.
std::string render(const ChainComplex& c, const Chain& x);
/// Signed "a⊗b" terms in lexicographic order of (left label, right label).
std::string render(const ChainComplex& c, const TensorChain& t);

}  // namespace steenrod
