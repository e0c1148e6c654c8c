#include "steenrod/diagonal.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace steenrod {

std::vector<BarTerm> bar_differential(int i) {
  if (i < 0) throw std::invalid_argument("bar_differential: negative degree");
  if (i == 0) return {};
  return {{sign_of_parity(i), {i - 1, false}}, {1, {i - 1, true}}};
}

std::string render(const std::vector<BarTerm>& terms) {
  if (terms.empty()) return "0";
  std::vector<BarTerm> sorted = terms;
  // T·e first, matching the way the differential is usually written.
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const BarTerm& a, const BarTerm& b) { return a.generator.twisted && !b.generator.twisted; });
  std::string out;
  for (const auto& t : sorted) {
    if (t.coeff == 0) continue;
    const std::string body = std::string(t.generator.twisted ? "T·" : "") + "e" + std::to_string(t.generator.degree);
    const Coeff mag = t.coeff < 0 ? -t.coeff : t.coeff;
    if (!out.empty()) out += t.coeff < 0 ? " - " : " + ";
    else if (t.coeff < 0) out += "-";
    if (mag != 1) out += std::to_string(mag) + "*";
    out += body;
  }
  return out.empty() ? "0" : out;
}

namespace {

long long inversions(const std::vector<int>& seq) {
  long long n = 0;
  for (std::size_t a = 0; a < seq.size(); ++a) {
    for (std::size_t b = a + 1; b < seq.size(); ++b) n += seq[a] > seq[b] ? 1 : 0;
  }
  return n;
}

std::uint32_t interval_mask(int a, int b) {
  std::uint32_t m = 0;
  for (int v = a; v <= b; ++v) m |= 1u << v;
  return m;
}

void cut_terms(int n, int i, std::vector<int>& cuts, std::vector<IntervalCut>& out) {
  if (static_cast<int>(cuts.size()) < i + 1) {
    const int from = cuts.empty() ? 0 : cuts.back();
    for (int p = from; p <= n; ++p) {
      cuts.push_back(p);
      cut_terms(n, i, cuts, out);
      cuts.pop_back();
    }
    return;
  }
  std::vector<int> pts{0};
  pts.insert(pts.end(), cuts.begin(), cuts.end());
  pts.push_back(n);

  std::uint32_t factor[2] = {0, 0};
  int length[2] = {0, 0};
  // Symbols: bar jumps are 0..i-1, vertex gaps g (1-based) are i+g-1.
  std::vector<int> order[2];
  for (int j = 1; j <= i + 2; ++j) {
    const int a = pts[static_cast<std::size_t>(j) - 1];
    const int b = pts[static_cast<std::size_t>(j)];
    const int k = (j % 2 == 1) ? 0 : 1;
    factor[k] |= interval_mask(a, b);
    length[k] += b - a + 1;
    for (int g = a + 1; g <= b; ++g) order[k].push_back(i + g - 1);
    if (j <= i) order[k].push_back(j - 1);
  }
  if (std::popcount(factor[0]) != length[0] || std::popcount(factor[1]) != length[1]) return;

  std::vector<int> target = order[0];
  target.insert(target.end(), order[1].begin(), order[1].end());
  out.push_back({factor[0], factor[1], sign_of_parity(inversions(target))});
}

}  // namespace

std::vector<IntervalCut> interval_cut_terms(int n, int i) {
  if (n < 0 || i < 0) throw std::invalid_argument("interval_cut_terms: negative argument");
  if (n > 30) throw std::invalid_argument("interval_cut_terms: simplex dimension too large");
  std::vector<IntervalCut> out;
  if (i > n) return out;
  std::vector<int> cuts;
  cut_terms(n, i, cuts, out);
  return out;
}

SteenrodStructure::SteenrodStructure(ChainComplexPtr carrier) : carrier_(std::move(carrier)) {
  if (!carrier_) throw std::invalid_argument("SteenrodStructure needs a carrier");
}

void SteenrodStructure::set_component(int i, int degree, std::size_t generator, TensorChain value) {
  if (i < 0) throw std::invalid_argument("set_component: negative i");
  if (generator >= carrier_->rank(degree)) throw std::out_of_range("set_component: no such generator");
  if (value.is_zero()) {
    components_.erase({i, degree, generator});
  } else {
    components_[{i, degree, generator}] = std::move(value);
  }
}

const TensorChain& SteenrodStructure::component(int i, int degree, std::size_t generator) const {
  auto it = components_.find({i, degree, generator});
  return it == components_.end() ? zero_ : it->second;
}

int SteenrodStructure::max_stored_i() const {
  int m = -1;
  for (const auto& entry : components_) m = std::max(m, std::get<0>(entry.first));
  return m;
}

SteenrodStructure canonical_structure(const DeltaComplex& x) {
  return canonical_structure(x, std::make_shared<const ChainComplex>(normalized_chains(x)));
}

SteenrodStructure canonical_structure(const DeltaComplex& x, ChainComplexPtr carrier) {
  SteenrodStructure s(std::move(carrier));
  for (int n = 0; n <= x.dimension(); ++n) {
    for (int i = 0; i <= n; ++i) {
      const auto terms = interval_cut_terms(n, i);
      for (const Cell c : x.cells(n)) {
        TensorChain value;
        for (const auto& t : terms) {
          const Cell a = x.face_by_vertices(c, t.left);
          const Cell b = x.face_by_vertices(c, t.right);
          value.add({a.dim, a.index, b.dim, b.index}, t.sign);
        }
        s.set_component(i, n, c.index, std::move(value));
      }
    }
  }
  return s;
}

TensorChain evaluate(const SteenrodStructure& s, int i, bool twisted, const Chain& c) {
  if (i < 0) throw std::invalid_argument("evaluate: negative i");
  TensorChain out;
  if (c.is_zero()) return out;
  if (c.degree() < 0 || c.degree() > s.carrier().top_degree()) {
    throw std::invalid_argument("evaluate: chain degree " + std::to_string(c.degree()) + " is outside the carrier");
  }
  for (const auto& [g, k] : c.terms()) {
    if (g >= s.carrier().rank(c.degree())) throw std::invalid_argument("evaluate: chain names a generator outside the carrier");
    out += s.component(i, c.degree(), g).scaled(k);
  }
  return twisted ? koszul_swap(out) : out;
}

int default_i_max(const ChainComplex& c) { return c.top_degree() + 1; }

namespace {

// ξ(d e_i ⊗ c), with the twist applied on top when `twisted`.
TensorChain bar_boundary_term(const SteenrodStructure& s, int i, bool twisted, const Chain& c) {
  TensorChain out;
  for (const auto& t : bar_differential(i)) {
    // T·T = 1 on the resolution.
    const bool twist = t.generator.twisted != twisted;
    out += evaluate(s, t.generator.degree, twist, c).scaled(t.coeff);
  }
  return out;
}

std::string where(const ChainComplex& c, int degree, std::size_t g, int i, bool twisted) {
  return std::string(twisted ? "T·e" : "e") + std::to_string(i) + "⊗" + c.id(degree, g);
}

}  // namespace

ValidationReport verify_structure(const SteenrodStructure& s, int i_max) {
  ValidationReport report;
  const auto& c = s.carrier();
  for (int d = 0; d <= c.top_degree(); ++d) {
    for (std::size_t g = 0; g < c.rank(d); ++g) {
      const Chain sigma(d, g, 1);
      for (int i = 0; i <= i_max; ++i) {
        const TensorChain& value = s.component(i, d, g);
        bool degrees_ok = true;
        for (const auto& [b, k] : value.terms()) {
          if (b.left_degree + b.right_degree != d + i || b.left >= c.rank(b.left_degree) || b.right >= c.rank(b.right_degree)) {
            degrees_ok = false;
          }
        }
        if (!degrees_ok) {
          report.add("degree", where(c, d, g, i, false), "component is not a chain of degree " + std::to_string(d + i));
          continue;
        }
        if (i > d && !value.is_zero()) {
          report.add("vanishing", where(c, d, g, i, false), "expected 0 for i > " + std::to_string(d) + ", got " + render(c, value));
        }
        for (const bool twisted : {false, true}) {
          const TensorChain lhs = tensor_boundary(c, evaluate(s, i, twisted, sigma));
          TensorChain rhs = bar_boundary_term(s, i, twisted, sigma);
          if (d > 0) rhs += evaluate(s, i, twisted, c.boundary(d, g)).scaled(sign_of_parity(i));
          if (lhs == rhs) continue;
          report.add(twisted ? "equivariance" : "chain-map", where(c, d, g, i, twisted),
                     "∂ξ = " + render(c, lhs) + " but ξ(d e⊗σ) ± ξ(e⊗∂σ) = " + render(c, rhs));
        }
      }
    }
  }
  return report;
}

int MorphismCertificate::first_failing_i() const {
  int m = -1;
  for (const auto& v : violations) m = (m < 0) ? v.i : std::min(m, v.i);
  return m;
}

std::string MorphismCertificate::to_string() const {
  std::string out;
  for (const auto& v : violations) {
    out += "morphism: e" + std::to_string(v.i) + "⊗" + v.generator + " (degree " + std::to_string(v.degree) +
           "): (f⊗f)ξ = " + v.lhs_text + " but ξ(f) = " + v.rhs_text + "\n";
  }
  return out;
}

MorphismCertificate verify_morphism(const ChainMap& f, const SteenrodStructure& src, const SteenrodStructure& tgt,
                                    int i_max) {
  const bool same_source = f.source_ptr() == src.carrier_ptr() || f.source() == src.carrier();
  const bool same_target = f.target_ptr() == tgt.carrier_ptr() || f.target() == tgt.carrier();
  if (!same_source || !same_target) {
    throw std::invalid_argument("verify_morphism: the structures are not carried by the map's source and target");
  }
  MorphismCertificate cert;
  const auto& c = f.source();
  cert.max_degree = c.top_degree();
  cert.i_max = i_max;
  for (int i = 0; i <= i_max; ++i) {
    for (int d = 0; d <= c.top_degree(); ++d) {
      for (std::size_t g = 0; g < c.rank(d); ++g) {
        TensorChain lhs = tensor_apply(f, src.component(i, d, g));
        TensorChain rhs = evaluate(tgt, i, false, f.image(d, g));
        if (lhs == rhs) continue;
        MorphismViolation v{c.id(d, g), d, i, std::move(lhs), std::move(rhs), {}, {}};
        v.lhs_text = render(f.target(), v.lhs);
        v.rhs_text = render(f.target(), v.rhs);
        cert.violations.push_back(std::move(v));
      }
    }
  }
  return cert;
}

}  // namespace steenrod
