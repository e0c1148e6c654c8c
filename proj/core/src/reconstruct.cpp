#include "steenrod/reconstruct.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>

namespace steenrod {

namespace {

struct Model {
  ComplexPtr simplex;
  SteenrodStructure structure;
};

const Model& model(int n) {
  if (n < 0 || n > 2) throw std::invalid_argument("simplex models exist for n <= 2 only");
  static const std::array<Model, 3> models = [] {
    auto make = [](int k) {
      auto x = std::make_shared<const DeltaComplex>(standard_simplex(k));
      return Model{x, canonical_structure(*x)};
    };
    return std::array<Model, 3>{make(0), make(1), make(2)};
  }();
  return models[static_cast<std::size_t>(n)];
}

Coeff model_coefficient(int n, int i, const std::string& left, const std::string& right) {
  const auto& m = model(n);
  const auto l = m.simplex->find(left);
  const auto r = m.simplex->find(right);
  return m.structure.component(i, n, 0).coefficient({l->dim, l->index, r->dim, r->index});
}

// Σ_x coeff(x ⊗ σ) x over left factors of degree `degree`.
Chain left_slice(const TensorChain& t, int degree, int sigma_degree, std::size_t sigma) {
  Chain out(degree);
  for (const auto& [b, k] : t.terms()) {
    if (b.left_degree == degree && b.right_degree == sigma_degree && b.right == sigma) out.add(b.left, k);
  }
  return out;
}

// Σ_y coeff(σ ⊗ y) y over right factors of degree `degree`.
Chain right_slice(const TensorChain& t, int degree, int sigma_degree, std::size_t sigma) {
  Chain out(degree);
  for (const auto& [b, k] : t.terms()) {
    if (b.right_degree == degree && b.left_degree == sigma_degree && b.left == sigma) out.add(b.right, k);
  }
  return out;
}

// Exact division of every coefficient, or nothing.
std::optional<Chain> divided(const Chain& c, Coeff k) {
  if (k == 0) return std::nullopt;
  Chain out(c.degree());
  for (const auto& [g, x] : c.terms()) {
    if (x % k != 0) return std::nullopt;
    out.add(g, x / k);
  }
  return out;
}

std::vector<Coeff> divisors(Coeff n) {
  n = std::llabs(n);
  std::vector<Coeff> out;
  for (Coeff d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All (u, w) of degree-1 chains with u ⊗ w = p and u + w = r.
std::vector<std::pair<Chain, Chain>> split_edges(const TensorChain& p, const Chain& r) {
  std::vector<std::pair<Chain, Chain>> out;
  auto consistent = [&p](const Chain& u, const Chain& w) { return tensor(u, w) == p; };
  if (p.is_zero()) {
    for (auto cand : {std::pair{Chain(1), r}, std::pair{r, Chain(1)}}) {
      if (consistent(cand.first, cand.second)) out.push_back(cand);
    }
    return out;
  }
  const TensorBasis first = p.terms().begin()->first;
  Chain column(1);
  for (const auto& [b, k] : p.terms()) {
    if (b.right == first.right) column.add(b.left, k);
  }
  Coeff g = 0;
  for (const auto& term : column.terms()) g = std::gcd(g, term.second);
  const Chain primitive = *divided(column, g);
  for (const Coeff d : divisors(g)) {
    for (const Coeff sd : {d, -d}) {
      const Chain u = primitive.scaled(sd);
      const Chain w = r - u;
      if (consistent(u, w)) out.emplace_back(u, w.is_zero() ? Chain(1) : w);
    }
  }
  return out;
}

using Images = std::vector<std::vector<Chain>>;

Images empty_images(int n) {
  Images out(static_cast<std::size_t>(n) + 1);
  for (int d = 0; d <= n; ++d) out[static_cast<std::size_t>(d)].assign(model(n).simplex->count(d), Chain(d));
  return out;
}

// Candidate face assignments for top ↦ sign·σ, read off the coproduct values.
std::vector<Images> candidates(const SteenrodStructure& s, int n, std::size_t sigma, Coeff sign) {
  std::vector<Images> out;
  Images img = empty_images(n);
  auto at = [&img, n](const std::string& id) -> Chain& {
    const auto c = model(n).simplex->find(id);
    return img[static_cast<std::size_t>(c->dim)][c->index];
  };
  at(standard_simplex_label(n, (1U << (n + 1)) - 1)) = Chain(n, sigma, sign);
  if (n == 0) {
    out.push_back(img);
    return out;
  }
  const TensorChain x0 = s.component(0, n, sigma);
  if (n == 1) {
    at("0") = left_slice(x0, 0, 1, sigma);
    at("1") = right_slice(x0, 0, 1, sigma);
    out.push_back(img);
    return out;
  }
  // n == 2.
  at("0") = left_slice(x0, 0, 2, sigma);
  at("2") = right_slice(x0, 0, 2, sigma);
  TensorChain middle;
  for (const auto& [b, k] : x0.terms()) {
    if (b.left_degree == 1) middle.add(b, checked_mul(sign, k));
  }
  const TensorChain x1 = s.component(1, 2, sigma);
  const auto f02 = divided(left_slice(x1, 1, 2, sigma), model_coefficient(2, 1, "02", "012"));
  const Coeff right_01 = model_coefficient(2, 1, "012", "01");
  const Coeff right_12 = model_coefficient(2, 1, "012", "12");
  if (!f02 || right_01 != right_12) return out;
  const auto edge_sum = divided(right_slice(x1, 1, 2, sigma), right_01);
  if (!edge_sum) return out;
  at("02") = *f02;
  for (const auto& [u, w] : split_edges(middle, *edge_sum)) {
    at("01") = u;
    at("12") = w;
    Chain f1 = at("0") + s.carrier().boundary(u);
    at("1") = f1.is_zero() ? Chain(0) : f1;
    out.push_back(img);
  }
  return out;
}

ChainMap to_chain_map(const Images& img, int n, const SteenrodStructure& s) {
  ChainMap f(model(n).structure.carrier_ptr(), s.carrier_ptr());
  for (int d = 0; d <= n; ++d) {
    for (std::size_t k = 0; k < img[static_cast<std::size_t>(d)].size(); ++k) f.set(d, k, img[static_cast<std::size_t>(d)][k]);
  }
  return f;
}

}  // namespace

const SteenrodStructure& simplex_model(int n) { return model(n).structure; }

ChainMap witness_map(const SimplexWitness& w, const SteenrodStructure& s) { return to_chain_map(w.images, w.dim, s); }

SimplexEnumeration enumerate_simplices(const SteenrodStructure& s, int n) {
  if (n < 0 || n > 2) throw std::invalid_argument("enumerate_simplices: n must be 0, 1 or 2");
  SimplexEnumeration out;
  const auto& c = s.carrier();
  for (std::size_t sigma = 0; sigma < c.rank(n); ++sigma) {
    for (const Coeff sign : {Coeff{1}, Coeff{-1}}) {
      std::string reason = "no face assignment is compatible with the coproduct";
      bool found = false;
      for (const auto& img : candidates(s, n, sigma, sign)) {
        const ChainMap f = to_chain_map(img, n, s);
        const auto chain_report = verify_chain_map(f);
        if (!chain_report.ok()) {
          reason = chain_report.items().front().kind + ": " + chain_report.items().front().where + ": " +
                   chain_report.items().front().detail;
          continue;
        }
        const auto cert = verify_morphism(f, simplex_model(n), s, n + 1);
        if (!cert.ok()) {
          const std::string all = cert.to_string();
          reason = all.substr(0, all.find('\n'));
          continue;
        }
        out.witnesses.push_back({n, sigma, c.id(n, sigma), sign, img});
        found = true;
        break;
      }
      if (!found) out.rejected.push_back({n, sigma, c.id(n, sigma), sign, reason});
    }
  }
  return out;
}

std::optional<std::size_t> ReconstructedComplex::find(int d, std::size_t target, Coeff sign) const {
  if (d < 0 || d >= static_cast<int>(witnesses.size())) return std::nullopt;
  const auto& list = witnesses[static_cast<std::size_t>(d)];
  for (std::size_t k = 0; k < list.size(); ++k) {
    if (list[k].target == target && list[k].sign == sign) return k;
  }
  return std::nullopt;
}

ReconstructedComplex reconstruct_2_skeleton(const SteenrodStructure& s) {
  ReconstructedComplex out;
  out.carrier = s.carrier_ptr();
  auto complex = std::make_shared<DeltaComplex>("hom(*, " + s.carrier().name() + ")");
  const int top = std::min(2, s.carrier().top_degree());
  out.witnesses.resize(static_cast<std::size_t>(std::max(top + 1, 0)));
  for (int n = 0; n <= top; ++n) {
    auto found = enumerate_simplices(s, n);
    out.rejected.insert(out.rejected.end(), found.rejected.begin(), found.rejected.end());
    for (auto& w : found.witnesses) {
      std::vector<std::string> faces;
      bool complete = true;
      for (int i = 0; i <= n && n > 0; ++i) {
        // w ∘ d_i is the morphism N(Δ^{n-1}) → C sending the top cell to the
        // image of the i-th face.
        const DeltaMap coface = coface_map(n, i);
        const Chain& image = w.images[static_cast<std::size_t>(n) - 1][coface.at({n - 1, 0}).index];
        std::optional<std::size_t> k;
        if (image.terms().size() == 1) k = out.find(n - 1, image.terms().begin()->first, image.terms().begin()->second);
        if (!k) {
          out.issues.add("face-lookup", w.label(),
                         "F" + std::to_string(i) + " image " + render(s.carrier(), image) + " carries no witness");
          complete = false;
          break;
        }
        const SimplexWitness& face = out.witnesses[static_cast<std::size_t>(n) - 1][*k];
        bool agrees = true;
        for (int d = 0; d < n; ++d) {
          for (const Cell cell : coface.source().cells(d)) {
            const Cell up = coface.at(cell);
            agrees = agrees && face.images[static_cast<std::size_t>(d)][cell.index] ==
                                   w.images[static_cast<std::size_t>(up.dim)][up.index];
          }
        }
        if (!agrees) {
          out.issues.add("face-mismatch", w.label(), "F" + std::to_string(i) + " differs from " + face.label());
          complete = false;
          break;
        }
        faces.push_back(face.label());
      }
      if (!complete) continue;
      complex->add(w.label(), n, std::move(faces));
      out.witnesses[static_cast<std::size_t>(n)].push_back(std::move(w));
    }
  }
  out.complex = std::move(complex);
  return out;
}

ValidationReport unit_comparison(const DeltaComplex& x) {
  require_valid(x);
  ValidationReport report;
  const auto recon = reconstruct_2_skeleton(canonical_structure(x));
  report.append(recon.issues);
  const int top = std::min(2, x.dimension());
  for (int d = 0; d <= top; ++d) {
    const std::size_t have = d < static_cast<int>(recon.witnesses.size()) ? recon.witnesses[static_cast<std::size_t>(d)].size() : 0;
    if (have != x.count(d)) {
      report.add("count", "dimension " + std::to_string(d),
                 std::to_string(x.count(d)) + " simplices but " + std::to_string(have) + " witnesses");
    }
    for (const Cell c : x.cells(d)) {
      const auto k = recon.find(d, c.index);
      if (!k) {
        report.add("missing", x.id(c), "no witness targets this simplex");
        continue;
      }
      const Cell w{d, *k};
      for (int i = 0; i <= d && d > 0; ++i) {
        const auto expected = recon.find(d - 1, x.face(c, i).index);
        const auto& actual = recon.complex->face_ids(w)[static_cast<std::size_t>(i)];
        if (!expected || recon.witnesses[static_cast<std::size_t>(d) - 1][*expected].label() != actual) {
          report.add("face", x.id(c), "F" + std::to_string(i) + " of the witness is " + actual + ", expected w(" +
                                          x.id(x.face(c, i)) + ")");
        }
      }
    }
  }
  return report;
}

DeltaMap induced_map(const ChainMap& g, const ReconstructedComplex& src, const ReconstructedComplex& tgt) {
  if (!(g.source() == *src.carrier) || !(g.target() == *tgt.carrier)) {
    throw std::invalid_argument("induced_map: the chain map does not run between the reconstructed carriers");
  }
  DeltaMap out(src.complex, tgt.complex);
  for (std::size_t d = 0; d < src.witnesses.size(); ++d) {
    for (std::size_t k = 0; k < src.witnesses[d].size(); ++k) {
      const auto& w = src.witnesses[d][k];
      const Chain image = g.image(static_cast<int>(d), w.target).scaled(w.sign);
      if (image.terms().size() != 1 || image.terms().begin()->second != 1) {
        throw NonSimplexImage("induced_map: " + w.label() + " goes to " + render(g.target(), image) +
                              ", not a single generator with coefficient +1");
      }
      const auto hit = tgt.find(static_cast<int>(d), image.terms().begin()->first);
      if (!hit) {
        throw NonSimplexImage("induced_map: " + w.label() + " goes to " + render(g.target(), image) +
                              ", which carries no witness");
      }
      out.assign({static_cast<int>(d), k}, {static_cast<int>(d), *hit});
    }
  }
  return out;
}

}  // namespace steenrod
