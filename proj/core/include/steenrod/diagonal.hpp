#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "steenrod/chains.hpp"

namespace steenrod {

/// A generator of the bar resolution of Z over Z[S2]: e_i, or T·e_i when
/// `twisted`.
struct BarGenerator {
  int degree = 0;
  bool twisted = false;

  auto operator<=>(const BarGenerator&) const = default;
};

struct BarTerm {
  Coeff coeff = 0;
  BarGenerator generator;

  friend bool operator==(const BarTerm&, const BarTerm&) = default;
};

/// d(e_i) = (-1)^i e_{i-1} + T e_{i-1}; empty for i = 0. Terms are listed
/// untwisted first.
std::vector<BarTerm> bar_differential(int i);

/// "T·e0 - e0" style rendering; "0" when empty.
std::string render(const std::vector<BarTerm>& terms);

/// One term of the interval-cut formula on the standard n-simplex: the faces
/// spanned by the vertex masks `left` and `right`, with a sign.
struct IntervalCut {
  std::uint32_t left = 0;
  std::uint32_t right = 0;
  Coeff sign = 1;
};

/// Terms of ξ(e_i ⊗ [0..n]). [0..n] is cut at 0 <= p_1 <= ... <= p_{i+1} <= n
/// into i+2 intervals that go alternately to the left and right factors; only
/// cuts giving nondegenerate faces survive. The sign is the Koszul sign that
/// reorders the i bar symbols followed by the n vertex gaps into factor order,
/// where each interval carries its gaps and then, except for the last two
/// intervals, one bar symbol.
std::vector<IntervalCut> interval_cut_terms(int n, int i);

/// The components ξ(e_i ⊗ σ) of a Steenrod structure, stored for untwisted
/// e_i only. Missing components are zero.
class SteenrodStructure {
 public:
  explicit SteenrodStructure(ChainComplexPtr carrier);

  [[nodiscard]] const ChainComplex& carrier() const { return *carrier_; }
  [[nodiscard]] const ChainComplexPtr& carrier_ptr() const { return carrier_; }

  void set_component(int i, int degree, std::size_t generator, TensorChain value);
  [[nodiscard]] const TensorChain& component(int i, int degree, std::size_t generator) const;
  /// Highest i with a stored nonzero component, -1 if none.
  [[nodiscard]] int max_stored_i() const;

 private:
  ChainComplexPtr carrier_;
  std::map<std::tuple<int, int, std::size_t>, TensorChain> components_;
  TensorChain zero_;
};

/// The canonical structure on N(X): Alexander-Whitney for e_0, interval cuts
/// for e_i, applied to each simplex through its vertices.
SteenrodStructure canonical_structure(const DeltaComplex& x);
/// Same on a carrier that must be normalized_chains(x).
SteenrodStructure canonical_structure(const DeltaComplex& x, ChainComplexPtr carrier);

/// ξ(e_i ⊗ c), or ξ(T e_i ⊗ c) = T ξ(e_i ⊗ c) when twisted. Throws
/// std::invalid_argument when c is not a chain of the carrier.
TensorChain evaluate(const SteenrodStructure& s, int i, bool twisted, const Chain& c);

/// i_max used when none is given: top degree of the carrier plus one.
int default_i_max(const ChainComplex& c);

/// Checks for every generator σ and i <= i_max: component degrees, the
/// chain-map identity ∂ξ(e_i⊗σ) = ξ(d e_i⊗σ) + (-1)^i ξ(e_i⊗∂σ), the same
/// identity for T e_i, and ξ(e_i⊗σ) = 0 for i > |σ|.
ValidationReport verify_structure(const SteenrodStructure& s, int i_max);

struct MorphismViolation {
  std::string generator;
  int degree = 0;
  int i = 0;
  TensorChain lhs;  // (f⊗f) ξ_src(e_i ⊗ σ)
  TensorChain rhs;  // ξ_tgt(e_i ⊗ fσ)
  std::string lhs_text;
  std::string rhs_text;
};

struct MorphismCertificate {
  int max_degree = -1;
  int i_max = -1;
  std::vector<MorphismViolation> violations;

  [[nodiscard]] bool ok() const { return violations.empty(); }
  /// Lowest i at which something failed, -1 when none did.
  [[nodiscard]] int first_failing_i() const;
  /// One line per violation.
  [[nodiscard]] std::string to_string() const;
};

/// Compares (f⊗f)ξ_src(e_i⊗σ) with ξ_tgt(e_i⊗fσ) for every source generator
/// and i <= i_max. Throws std::invalid_argument when the carriers are not
/// f's source and target.
MorphismCertificate verify_morphism(const ChainMap& f, const SteenrodStructure& src, const SteenrodStructure& tgt,
                                    int i_max);

}  // namespace steenrod
