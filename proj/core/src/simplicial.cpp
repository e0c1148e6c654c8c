#include "steenrod/simplicial.hpp"

#include <algorithm>
#include <stdexcept>

namespace steenrod {

Surjection Surjection::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n) + 1);
  for (int t = 0; t <= n; ++t) v[static_cast<std::size_t>(t)] = t;
  return Surjection(std::move(v));
}

Surjection Surjection::from_degeneracies(int m, const std::vector<int>& positions) {
  std::vector<int> v(static_cast<std::size_t>(m) + 1, 0);
  for (int t = 0; t < m; ++t) {
    const bool repeat = std::find(positions.begin(), positions.end(), t) != positions.end();
    v[static_cast<std::size_t>(t) + 1] = v[static_cast<std::size_t>(t)] + (repeat ? 0 : 1);
  }
  return Surjection(std::move(v));
}

std::vector<Surjection> Surjection::all(int m, int n) {
  std::vector<Surjection> out;
  if (n < 0 || n > m) return out;
  // A surjection is determined by which of the m steps t -> t+1 increase the
  // value; choose n of them.
  std::vector<int> steps(static_cast<std::size_t>(m), 0);
  std::fill(steps.begin(), steps.begin() + n, 1);
  do {
    std::vector<int> v(static_cast<std::size_t>(m) + 1, 0);
    for (int t = 0; t < m; ++t) v[static_cast<std::size_t>(t) + 1] = v[static_cast<std::size_t>(t)] + steps[static_cast<std::size_t>(t)];
    out.push_back(Surjection(std::move(v)));
  } while (std::prev_permutation(steps.begin(), steps.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Surjection::count(int m, int n) {
  if (n < 0 || n > m) return 0;
  std::size_t r = 1;
  for (int k = 1; k <= n; ++k) r = r * static_cast<std::size_t>(m - n + k) / static_cast<std::size_t>(k);
  return r;
}

std::vector<int> Surjection::degeneracy_positions() const {
  std::vector<int> out;
  for (int t = 0; t + 1 < static_cast<int>(values_.size()); ++t) {
    if (values_[static_cast<std::size_t>(t)] == values_[static_cast<std::size_t>(t) + 1]) out.push_back(t);
  }
  return out;
}

std::string Surjection::word() const {
  auto pos = degeneracy_positions();
  std::string out;
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) out += "s" + std::to_string(*it);
  return out;
}

Surjection Surjection::after(const Surjection& inner) const {
  if (inner.target_dim() != source_dim()) throw std::invalid_argument("Surjection::after: dimensions do not match");
  std::vector<int> v;
  v.reserve(inner.values_.size());
  for (int x : inner.values_) v.push_back(values_[static_cast<std::size_t>(x)]);
  return Surjection(std::move(v));
}

SimplicialSet::SimplicialSet(ComplexPtr core, int max_dim) : core_(std::move(core)), max_dim_(max_dim) {
  if (!core_) throw std::invalid_argument("SimplicialSet needs a core");
  require_valid(*core_);
}

std::size_t SimplicialSet::count(int m) const {
  std::size_t n = 0;
  for (int k = 0; k <= std::min(m, core_->dimension()); ++k) n += Surjection::count(m, k) * core_->count(k);
  return n;
}

std::vector<DegenerateSimplex> SimplicialSet::simplices(int m) const {
  std::vector<DegenerateSimplex> out;
  for (int n = std::min(m, core_->dimension()); n >= 0; --n) {
    for (const auto& eta : Surjection::all(m, n)) {
      for (const Cell c : core_->cells(n)) out.push_back({eta, c});
    }
  }
  return out;
}

std::size_t SimplicialSet::index_of(const DegenerateSimplex& x) const {
  const int m = x.dim();
  const int n = x.eta.target_dim();
  std::size_t offset = 0;
  for (int k = std::min(m, core_->dimension()); k > n; --k) offset += Surjection::count(m, k) * core_->count(k);
  const auto all = Surjection::all(m, n);
  const auto it = std::lower_bound(all.begin(), all.end(), x.eta);
  if (it == all.end() || *it != x.eta) throw std::logic_error("index_of: malformed surjection");
  return offset + static_cast<std::size_t>(it - all.begin()) * core_->count(n) + x.base.index;
}

DegenerateSimplex SimplicialSet::face(const DegenerateSimplex& x, int i) const {
  const int m = x.dim();
  if (m == 0 || i < 0 || i > m) throw std::out_of_range("SimplicialSet::face: index out of range");
  // eta ∘ delta_i = mu ∘ eta' with mu injective; d_i(eta . sigma) = eta' . mu*(sigma).
  std::vector<int> v = x.eta.values();
  const int dropped = v[static_cast<std::size_t>(i)];
  v.erase(v.begin() + i);
  const bool still_hit = std::find(v.begin(), v.end(), dropped) != v.end();
  if (still_hit) {
    std::vector<int> positions;
    for (int t = 0; t + 1 < static_cast<int>(v.size()); ++t) {
      if (v[static_cast<std::size_t>(t)] == v[static_cast<std::size_t>(t) + 1]) positions.push_back(t);
    }
    return {Surjection::from_degeneracies(m - 1, positions), x.base};
  }
  for (int& val : v) val -= (val > dropped) ? 1 : 0;
  std::vector<int> positions;
  for (int t = 0; t + 1 < static_cast<int>(v.size()); ++t) {
    if (v[static_cast<std::size_t>(t)] == v[static_cast<std::size_t>(t) + 1]) positions.push_back(t);
  }
  return {Surjection::from_degeneracies(m - 1, positions), core_->face(x.base, dropped)};
}

DegenerateSimplex SimplicialSet::degeneracy(const DegenerateSimplex& x, int j) const {
  const int m = x.dim();
  if (j < 0 || j > m) throw std::out_of_range("SimplicialSet::degeneracy: index out of range");
  auto positions = x.eta.degeneracy_positions();
  // s_j: repeat position j; positions at or beyond j shift up by one.
  for (int& p : positions) p += (p >= j) ? 1 : 0;
  positions.push_back(j);
  std::sort(positions.begin(), positions.end());
  return {Surjection::from_degeneracies(m + 1, positions), x.base};
}

std::string SimplicialSet::label(const DegenerateSimplex& x) const {
  const std::string& base = core_->id(x.base);
  if (x.eta.is_identity()) return base;
  return x.eta.word() + "(" + base + ")";
}

DeltaComplex forget(const SimplicialSet& s, int max_dim) {
  if (max_dim < s.core().dimension()) {
    throw std::invalid_argument("forget: max_dim " + std::to_string(max_dim) + " is below the core dimension " +
                                std::to_string(s.core().dimension()));
  }
  DeltaComplex out(s.core().name());
  for (int m = 0; m <= max_dim; ++m) {
    for (const auto& x : s.simplices(m)) {
      std::vector<std::string> faces;
      if (m > 0) {
        for (int i = 0; i <= m; ++i) faces.push_back(s.label(s.face(x, i)));
      }
      out.add(s.label(x), m, std::move(faces));
    }
  }
  return out;
}

SimplicialSet freely_degenerate(const ComplexPtr& x, int max_dim) { return SimplicialSet(x, max_dim); }

DeltaMap degeneracy_inclusion(const ComplexPtr& x, const ComplexPtr& forgotten) {
  DeltaMap iota(x, forgotten);
  for (int d = 0; d <= x->dimension(); ++d) {
    for (const Cell c : x->cells(d)) {
      // Nondegenerate simplices come first in each dimension and keep their labels.
      auto target = forgotten->find(x->id(c));
      if (!target || target->dim != d) throw std::invalid_argument("degeneracy_inclusion: '" + x->id(c) + "' missing");
      iota.assign(c, *target);
    }
  }
  return iota;
}

SimplicialMap::SimplicialMap(std::shared_ptr<const SimplicialSet> source, std::shared_ptr<const SimplicialSet> target)
    : source_(std::move(source)), target_(std::move(target)) {
  const auto& core = source_->core();
  images_.resize(static_cast<std::size_t>(std::max(core.dimension() + 1, 0)));
  for (int d = 0; d <= core.dimension(); ++d) images_[static_cast<std::size_t>(d)].resize(core.count(d));
}

void SimplicialMap::assign(Cell core_simplex, DegenerateSimplex image) {
  images_.at(static_cast<std::size_t>(core_simplex.dim)).at(core_simplex.index) = std::move(image);
}

std::optional<DegenerateSimplex> SimplicialMap::image(const DegenerateSimplex& x) const {
  const auto& slot = images_.at(static_cast<std::size_t>(x.base.dim)).at(x.base.index);
  if (!slot) return std::nullopt;
  return DegenerateSimplex{slot->eta.after(x.eta), slot->base};
}

ValidationReport validate_map(const SimplicialMap& g, int max_dim) {
  ValidationReport report;
  const auto& src = g.source();
  const auto& tgt = g.target();
  for (int d = 0; d <= src.core().dimension(); ++d) {
    for (const Cell c : src.core().cells(d)) {
      if (!g.image({Surjection::identity(d), c})) report.add("unassigned", src.core().id(c), "no image assigned");
    }
  }
  if (!report.ok()) return report;

  for (int m = 0; m <= max_dim; ++m) {
    for (const auto& x : src.simplices(m)) {
      const auto gx = *g.image(x);
      if (gx.dim() != m) {
        report.add("dimension", src.label(x), "image has dimension " + std::to_string(gx.dim()));
        continue;
      }
      for (int i = 0; i <= m && m > 0; ++i) {
        const auto lhs = *g.image(src.face(x, i));
        const auto rhs = tgt.face(gx, i);
        if (lhs != rhs) {
          report.add("face", src.label(x),
                     "g(d" + std::to_string(i) + ") = " + tgt.label(lhs) + " but d" + std::to_string(i) + "(g) = " + tgt.label(rhs));
        }
      }
      if (m < max_dim) {
        for (int j = 0; j <= m; ++j) {
          const auto lhs = *g.image(src.degeneracy(x, j));
          const auto rhs = tgt.degeneracy(gx, j);
          if (lhs != rhs) {
            report.add("degeneracy", src.label(x),
                       "g(s" + std::to_string(j) + ") = " + tgt.label(lhs) + " but s" + std::to_string(j) + "(g) = " + tgt.label(rhs));
          }
        }
      }
    }
  }
  return report;
}

SimplicialMap adjunction_unit(const SimplicialSet& s, int max_dim) {
  auto forgotten = std::make_shared<const DeltaComplex>(forget(s, max_dim));
  auto source = std::make_shared<const SimplicialSet>(forgotten, max_dim);
  auto target = std::make_shared<const SimplicialSet>(s);
  SimplicialMap g(source, target);
  for (int m = 0; m <= max_dim; ++m) {
    const auto originals = s.simplices(m);
    for (std::size_t k = 0; k < originals.size(); ++k) g.assign(Cell{m, k}, originals[k]);
  }
  return g;
}

}  // namespace steenrod
