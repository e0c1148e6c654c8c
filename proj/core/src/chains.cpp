#include "steenrod/chains.hpp"

#include <algorithm>
#include <stdexcept>

namespace steenrod {

Coeff Chain::coefficient(std::size_t generator) const {
  auto it = terms_.find(generator);
  return it == terms_.end() ? 0 : it->second;
}

void Chain::add(std::size_t generator, Coeff coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(generator, coeff);
  if (inserted) return;
  it->second = checked_add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

Chain& Chain::operator+=(const Chain& other) {
  if (is_zero()) degree_ = other.degree_;
  for (const auto& [g, c] : other.terms_) add(g, c);
  return *this;
}

Chain& Chain::operator-=(const Chain& other) {
  if (is_zero()) degree_ = other.degree_;
  for (const auto& [g, c] : other.terms_) add(g, -c);
  return *this;
}

Chain Chain::scaled(Coeff k) const {
  Chain out(degree_);
  for (const auto& [g, c] : terms_) out.add(g, checked_mul(k, c));
  return out;
}

std::size_t ChainComplex::add_generator(int degree, std::string id, Chain boundary) {
  if (degree < 0) throw std::invalid_argument("add_generator: negative degree");
  const auto d = static_cast<std::size_t>(degree);
  if (ids_.size() <= d) {
    ids_.resize(d + 1);
    index_.resize(d + 1);
    boundaries_.resize(d + 1);
  }
  if (index_[d].contains(id)) throw std::invalid_argument("add_generator: duplicate generator '" + id + "'");
  if (degree == 0) {
    boundary = Chain(-1);
  } else if (!boundary.is_zero() && boundary.degree() != degree - 1) {
    throw std::invalid_argument("add_generator: boundary of '" + id + "' has the wrong degree");
  } else if (boundary.is_zero()) {
    boundary = Chain(degree - 1);
  }
  const std::size_t k = ids_[d].size();
  index_[d].emplace(id, k);
  ids_[d].push_back(std::move(id));
  boundaries_[d].push_back(std::move(boundary));
  return k;
}

std::size_t ChainComplex::rank(int degree) const {
  if (degree < 0 || degree > top_degree()) return 0;
  return ids_[static_cast<std::size_t>(degree)].size();
}

const std::string& ChainComplex::id(int degree, std::size_t index) const {
  return ids_.at(static_cast<std::size_t>(degree)).at(index);
}

std::optional<std::size_t> ChainComplex::find(int degree, const std::string& id) const {
  if (degree < 0 || degree > top_degree()) return std::nullopt;
  const auto& idx = index_[static_cast<std::size_t>(degree)];
  auto it = idx.find(id);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

const Chain& ChainComplex::boundary(int degree, std::size_t index) const {
  return boundaries_.at(static_cast<std::size_t>(degree)).at(index);
}

Chain ChainComplex::boundary(const Chain& c) const {
  Chain out(c.degree() - 1);
  for (const auto& [g, k] : c.terms()) out += boundary(c.degree(), g).scaled(k);
  return out;
}

ValidationReport verify_boundary_squared(const ChainComplex& c) {
  ValidationReport report;
  for (int d = 2; d <= c.top_degree(); ++d) {
    for (std::size_t g = 0; g < c.rank(d); ++g) {
      const Chain dd = c.boundary(c.boundary(d, g));
      if (!dd.is_zero()) report.add("boundary-squared", c.id(d, g), "∂∂ = " + render(c, dd));
    }
  }
  return report;
}

ChainComplex normalized_chains(const DeltaComplex& x) {
  require_valid(x);
  ChainComplex out(x.name());
  for (int d = 0; d <= x.dimension(); ++d) {
    for (const Cell c : x.cells(d)) {
      Chain b(d - 1);
      for (int i = 0; i <= d && d > 0; ++i) b.add(x.face(c, i).index, sign_of_parity(i));
      out.add_generator(d, x.id(c), std::move(b));
    }
  }
  return out;
}

ChainComplex unnormalized_chains(const SimplicialSet& s, int max_dim) { return normalized_chains(forget(s, max_dim)); }

ChainMap::ChainMap(ChainComplexPtr source, ChainComplexPtr target) : source_(std::move(source)), target_(std::move(target)) {
  if (!source_ || !target_) throw std::invalid_argument("ChainMap needs both complexes");
  images_.resize(static_cast<std::size_t>(source_->top_degree() + 1));
  for (int d = 0; d <= source_->top_degree(); ++d) {
    images_[static_cast<std::size_t>(d)].assign(source_->rank(d), Chain(d));
  }
}

void ChainMap::set(int degree, std::size_t generator, Chain image) {
  if (image.is_zero()) image = Chain(degree);
  images_.at(static_cast<std::size_t>(degree)).at(generator) = std::move(image);
}

const Chain& ChainMap::image(int degree, std::size_t generator) const {
  return images_.at(static_cast<std::size_t>(degree)).at(generator);
}

Chain ChainMap::apply(const Chain& c) const {
  Chain out(c.degree());
  for (const auto& [g, k] : c.terms()) out += image(c.degree(), g).scaled(k);
  return out;
}

bool operator==(const ChainMap& a, const ChainMap& b) {
  return *a.source_ == *b.source_ && *a.target_ == *b.target_ && a.images_ == b.images_;
}

ChainMap chains_of_map(const DeltaMap& f) {
  return chains_of_map(f, std::make_shared<const ChainComplex>(normalized_chains(f.source())),
                       std::make_shared<const ChainComplex>(normalized_chains(f.target())));
}

ChainMap chains_of_map(const DeltaMap& f, ChainComplexPtr source, ChainComplexPtr target) {
  const auto report = validate_map(f);
  if (!report.ok()) throw std::invalid_argument("chains_of_map: invalid delta map:\n" + report.to_string());
  ChainMap out(std::move(source), std::move(target));
  for (int d = 0; d <= f.source().dimension(); ++d) {
    for (const Cell c : f.source().cells(d)) out.set(d, c.index, Chain(d, f.at(c).index, 1));
  }
  return out;
}

ChainMap identity_chain_map(const ChainComplexPtr& c) {
  ChainMap out(c, c);
  for (int d = 0; d <= c->top_degree(); ++d) {
    for (std::size_t g = 0; g < c->rank(d); ++g) out.set(d, g, Chain(d, g, 1));
  }
  return out;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (!(f.target() == g.source())) throw std::invalid_argument("compose: target of f is not the source of g");
  ChainMap out(f.source_ptr(), g.target_ptr());
  for (int d = 0; d <= f.source().top_degree(); ++d) {
    for (std::size_t k = 0; k < f.source().rank(d); ++k) out.set(d, k, g.apply(f.image(d, k)));
  }
  return out;
}

ValidationReport verify_chain_map(const ChainMap& f) {
  ValidationReport report;
  const auto& src = f.source();
  const auto& tgt = f.target();
  for (int d = 0; d <= src.top_degree(); ++d) {
    for (std::size_t g = 0; g < src.rank(d); ++g) {
      const Chain& img = f.image(d, g);
      if (!img.is_zero() && img.degree() != d) {
        report.add("degree", src.id(d, g), "image has degree " + std::to_string(img.degree()));
        continue;
      }
      bool in_range = true;
      for (const auto& term : img.terms()) in_range = in_range && term.first < tgt.rank(d);
      if (!in_range) {
        report.add("range", src.id(d, g), "image names a generator outside the target");
        continue;
      }
      if (d == 0) continue;
      const Chain lhs = tgt.boundary(img);
      const Chain rhs = f.apply(src.boundary(d, g));
      if (!(lhs - rhs).is_zero()) {
        report.add("chain-map", src.id(d, g) + " (degree " + std::to_string(d) + ")",
                   "∂f = " + render(tgt, lhs) + " but f∂ = " + render(tgt, rhs));
      }
    }
  }
  return report;
}

Coeff TensorChain::coefficient(const TensorBasis& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? 0 : it->second;
}

void TensorChain::add(const TensorBasis& b, Coeff coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(b, coeff);
  if (inserted) return;
  it->second = checked_add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

TensorChain& TensorChain::operator+=(const TensorChain& other) {
  for (const auto& [b, c] : other.terms_) add(b, c);
  return *this;
}

TensorChain& TensorChain::operator-=(const TensorChain& other) {
  for (const auto& [b, c] : other.terms_) add(b, -c);
  return *this;
}

TensorChain TensorChain::scaled(Coeff k) const {
  TensorChain out;
  for (const auto& [b, c] : terms_) out.add(b, checked_mul(k, c));
  return out;
}

TensorChain tensor(const Chain& a, const Chain& b) {
  TensorChain out;
  for (const auto& [ga, ca] : a.terms()) {
    for (const auto& [gb, cb] : b.terms()) out.add({a.degree(), ga, b.degree(), gb}, checked_mul(ca, cb));
  }
  return out;
}

TensorChain tensor_boundary(const ChainComplex& c, const TensorChain& t) {
  TensorChain out;
  for (const auto& [b, k] : t.terms()) {
    if (b.left_degree > 0) {
      for (const auto& [g, x] : c.boundary(b.left_degree, b.left).terms()) {
        out.add({b.left_degree - 1, g, b.right_degree, b.right}, checked_mul(k, x));
      }
    }
    if (b.right_degree > 0) {
      const Coeff sign = sign_of_parity(b.left_degree);
      for (const auto& [g, x] : c.boundary(b.right_degree, b.right).terms()) {
        out.add({b.left_degree, b.left, b.right_degree - 1, g}, checked_mul(sign * k, x));
      }
    }
  }
  return out;
}

TensorChain koszul_swap(const TensorChain& t) {
  TensorChain out;
  for (const auto& [b, k] : t.terms()) {
    const Coeff sign = sign_of_parity(static_cast<long long>(b.left_degree) * b.right_degree);
    out.add({b.right_degree, b.right, b.left_degree, b.left}, sign * k);
  }
  return out;
}

TensorChain tensor_apply(const ChainMap& f, const TensorChain& t) {
  TensorChain out;
  for (const auto& [b, k] : t.terms()) {
    out += tensor(f.image(b.left_degree, b.left), f.image(b.right_degree, b.right)).scaled(k);
  }
  return out;
}

ChainComplex tensor_square(const ChainComplex& c, int max_degree) {
  ChainComplex out(c.name() + "⊗" + c.name());
  auto label = [&c](const TensorBasis& b) { return c.id(b.left_degree, b.left) + "⊗" + c.id(b.right_degree, b.right); };
  for (int k = 0; k <= max_degree; ++k) {
    for (int p = 0; p <= k; ++p) {
      for (std::size_t a = 0; a < c.rank(p); ++a) {
        for (std::size_t b = 0; b < c.rank(k - p); ++b) {
          const TensorBasis basis{p, a, k - p, b};
          TensorChain single;
          single.add(basis, 1);
          Chain bd(k - 1);
          const TensorChain boundary = tensor_boundary(c, single);
          for (const auto& [tb, coeff] : boundary.terms()) {
            auto idx = out.find(k - 1, label(tb));
            if (!idx) throw std::logic_error("tensor_square: boundary term missing from lower degree");
            bd.add(*idx, coeff);
          }
          out.add_generator(k, label(basis), std::move(bd));
        }
      }
    }
    if (out.top_degree() < k) break;  // nothing in this degree, nothing above either
  }
  return out;
}

std::vector<std::size_t> HomologySummary::betti() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees) out.push_back(d.betti);
  return out;
}

IntMatrix boundary_matrix(const ChainComplex& c, int degree) {
  IntMatrix m(c.rank(degree - 1), c.rank(degree));
  for (std::size_t g = 0; g < c.rank(degree); ++g) {
    for (const auto& [r, k] : c.boundary(degree, g).terms()) m(r, g) = k;
  }
  return m;
}

HomologySummary homology(const ChainComplex& c) {
  HomologySummary out;
  const int top = c.top_degree();
  std::vector<SmithForm> forms(static_cast<std::size_t>(std::max(top + 2, 1)));
  for (int d = 1; d <= top; ++d) forms[static_cast<std::size_t>(d)] = smith_normal_form(boundary_matrix(c, d));
  for (int d = 0; d <= top; ++d) {
    const std::size_t rank_out = d >= 1 ? forms[static_cast<std::size_t>(d)].rank() : 0;
    const std::size_t rank_in = d + 1 <= top ? forms[static_cast<std::size_t>(d) + 1].rank() : 0;
    DegreeHomology h;
    h.betti = c.rank(d) - rank_out - rank_in;
    if (d + 1 <= top) h.torsion = forms[static_cast<std::size_t>(d) + 1].torsion();
    out.degrees.push_back(std::move(h));
  }
  return out;
}

namespace {

std::string signed_term(Coeff k, const std::string& body, bool first) {
  std::string out = k < 0 ? "-" : (first ? "+" : "+");
  const Coeff mag = k < 0 ? -k : k;
  if (mag != 1) out += std::to_string(mag) + "*";
  return out + body;
}

}  // namespace

std::string render(const ChainComplex& c, const Chain& x) {
  if (x.is_zero()) return "0";
  std::vector<std::pair<std::string, Coeff>> terms;
  for (const auto& [g, k] : x.terms()) terms.emplace_back(c.id(x.degree(), g), k);
  std::sort(terms.begin(), terms.end());
  std::string out;
  for (const auto& [label, k] : terms) out += (out.empty() ? "" : " ") + signed_term(k, label, out.empty());
  return out;
}

std::string render(const ChainComplex& c, const TensorChain& t) {
  if (t.is_zero()) return "0";
  std::vector<std::pair<std::pair<std::string, std::string>, Coeff>> terms;
  for (const auto& [b, k] : t.terms()) {
    terms.push_back({{c.id(b.left_degree, b.left), c.id(b.right_degree, b.right)}, k});
  }
  std::sort(terms.begin(), terms.end());
  std::string out;
  for (const auto& [labels, k] : terms) {
    out += (out.empty() ? "" : " ") + signed_term(k, labels.first + "⊗" + labels.second, out.empty());
  }
  return out;
}

}  // namespace steenrod
