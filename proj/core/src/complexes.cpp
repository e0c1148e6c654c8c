#include "steenrod/complexes.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace steenrod {

Cell DeltaComplex::add(std::string id, int dim, std::vector<std::string> faces) {
  if (dim < 0) throw std::invalid_argument("simplex '" + id + "' has negative dimension");
  const std::size_t expected = dim == 0 ? 0 : static_cast<std::size_t>(dim) + 1;
  if (faces.size() != expected) {
    throw std::invalid_argument("simplex '" + id + "' of dimension " + std::to_string(dim) + " needs " +
                                std::to_string(expected) + " faces, got " + std::to_string(faces.size()));
  }
  if (index_.contains(id)) throw std::invalid_argument("duplicate simplex id '" + id + "'");

  if (by_dim_.size() <= static_cast<std::size_t>(dim)) by_dim_.resize(static_cast<std::size_t>(dim) + 1);
  auto& level = by_dim_[static_cast<std::size_t>(dim)];
  const Cell cell{dim, level.size()};

  Entry e{id, std::move(faces), {}};
  e.faces.assign(e.face_ids.size(), kUnresolved);
  for (std::size_t i = 0; i < e.face_ids.size(); ++i) {
    auto it = index_.find(e.face_ids[i]);
    if (it != index_.end()) {
      if (it->second.dim == dim - 1) e.faces[i] = it->second.index;
    } else {
      pending_.emplace(e.face_ids[i], std::pair{cell, static_cast<int>(i)});
    }
  }
  level.push_back(std::move(e));
  index_.emplace(id, cell);

  // Resolve forward references made by earlier simplices.
  auto [lo, hi] = pending_.equal_range(id);
  for (auto it = lo; it != hi; ++it) {
    const auto [owner, slot] = it->second;
    if (owner.dim == dim + 1) by_dim_[static_cast<std::size_t>(owner.dim)][owner.index].faces[static_cast<std::size_t>(slot)] = cell.index;
  }
  pending_.erase(lo, hi);
  return cell;
}

int DeltaComplex::dimension() const {
  for (int d = static_cast<int>(by_dim_.size()) - 1; d >= 0; --d) {
    if (!by_dim_[static_cast<std::size_t>(d)].empty()) return d;
  }
  return -1;
}

std::size_t DeltaComplex::count(int dim) const {
  if (dim < 0 || static_cast<std::size_t>(dim) >= by_dim_.size()) return 0;
  return by_dim_[static_cast<std::size_t>(dim)].size();
}

std::vector<std::size_t> DeltaComplex::counts() const {
  std::vector<std::size_t> out;
  for (int d = 0; d <= dimension(); ++d) out.push_back(count(d));
  return out;
}

std::size_t DeltaComplex::total() const {
  std::size_t n = 0;
  for (const auto& level : by_dim_) n += level.size();
  return n;
}

std::vector<Cell> DeltaComplex::cells(int dim) const {
  std::vector<Cell> out;
  for (std::size_t k = 0; k < count(dim); ++k) out.push_back({dim, k});
  return out;
}

std::optional<Cell> DeltaComplex::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<Cell> DeltaComplex::try_face(Cell c, int i) const {
  const auto& e = entry(c);
  if (i < 0 || static_cast<std::size_t>(i) >= e.faces.size()) return std::nullopt;
  const std::size_t k = e.faces[static_cast<std::size_t>(i)];
  if (k == kUnresolved) return std::nullopt;
  return Cell{c.dim - 1, k};
}

Cell DeltaComplex::face(Cell c, int i) const {
  auto f = try_face(c, i);
  if (!f) throw std::logic_error("face " + std::to_string(i) + " of '" + id(c) + "' does not resolve");
  return *f;
}

Cell DeltaComplex::face_by_vertices(Cell c, std::uint32_t mask) const {
  Cell cur = c;
  for (int v = c.dim; v >= 0; --v) {
    if (((mask >> v) & 1U) == 0) cur = face(cur, v);
  }
  return cur;
}

Cell DeltaComplex::vertex(Cell c, int k) const { return face_by_vertices(c, 1U << k); }

bool operator==(const DeltaComplex& a, const DeltaComplex& b) {
  if (a.by_dim_.size() != b.by_dim_.size()) return false;
  for (std::size_t d = 0; d < a.by_dim_.size(); ++d) {
    const auto& la = a.by_dim_[d];
    const auto& lb = b.by_dim_[d];
    if (la.size() != lb.size()) return false;
    for (std::size_t k = 0; k < la.size(); ++k) {
      if (la[k].id != lb[k].id || la[k].face_ids != lb[k].face_ids) return false;
    }
  }
  return true;
}

ValidationReport validate_delta(const DeltaComplex& x) {
  ValidationReport report;
  for (int d = 1; d <= x.dimension(); ++d) {
    for (const Cell c : x.cells(d)) {
      for (int i = 0; i <= d; ++i) {
        if (x.try_face(c, i)) continue;
        const std::string& ref = x.face_ids(c)[static_cast<std::size_t>(i)];
        auto target = x.find(ref);
        if (!target) {
          report.add("dangling-face", x.id(c), "F" + std::to_string(i) + " names missing simplex '" + ref + "'");
        } else {
          report.add("face-dimension", x.id(c),
                     "F" + std::to_string(i) + " names '" + ref + "' of dimension " + std::to_string(target->dim) +
                         ", expected " + std::to_string(d - 1));
        }
      }
    }
  }
  if (!report.ok()) return report;

  for (int d = 2; d <= x.dimension(); ++d) {
    for (const Cell c : x.cells(d)) {
      for (int j = 1; j <= d; ++j) {
        for (int i = 0; i < j; ++i) {
          const Cell lhs = x.face(x.face(c, j), i);
          const Cell rhs = x.face(x.face(c, i), j - 1);
          if (lhs != rhs) {
            report.add("face-identity", x.id(c),
                       "(i=" + std::to_string(i) + ", j=" + std::to_string(j) + "): F" + std::to_string(i) + "F" +
                           std::to_string(j) + " = '" + x.id(lhs) + "' but F" + std::to_string(j - 1) + "F" +
                           std::to_string(i) + " = '" + x.id(rhs) + "'");
          }
        }
      }
    }
  }
  return report;
}

void require_valid(const DeltaComplex& x) {
  const auto report = validate_delta(x);
  if (!report.ok()) throw std::invalid_argument("invalid delta-complex '" + x.name() + "':\n" + report.to_string());
}

std::string standard_simplex_label(int n, std::uint32_t mask) {
  std::string out;
  for (int v = 0; v <= n; ++v) {
    if (((mask >> v) & 1U) == 0) continue;
    if (n > 9 && !out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

DeltaComplex standard_simplex(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("standard_simplex: n must lie in [0, 20]");
  DeltaComplex x("delta" + std::to_string(n));
  // Vertex tuples of each size in lexicographic order: enumerate masks with
  // the right popcount and sort by tuple.
  const std::uint32_t full = (1U << (n + 1)) - 1;
  for (int d = 0; d <= n; ++d) {
    std::vector<std::vector<int>> tuples;
    for (std::uint32_t m = 1; m <= full; ++m) {
      if (std::popcount(m) != d + 1) continue;
      std::vector<int> t;
      for (int v = 0; v <= n; ++v) {
        if ((m >> v) & 1U) t.push_back(v);
      }
      tuples.push_back(std::move(t));
    }
    std::sort(tuples.begin(), tuples.end());
    for (const auto& t : tuples) {
      std::uint32_t m = 0;
      for (int v : t) m |= 1U << v;
      std::vector<std::string> faces;
      if (d > 0) {
        for (int i = 0; i <= d; ++i) faces.push_back(standard_simplex_label(n, m & ~(1U << t[static_cast<std::size_t>(i)])));
      }
      x.add(standard_simplex_label(n, m), d, std::move(faces));
    }
  }
  return x;
}

DeltaComplex skeleton(const DeltaComplex& x, int k) {
  DeltaComplex out(x.name());
  for (int d = 0; d <= std::min(k, x.dimension()); ++d) {
    for (const Cell c : x.cells(d)) out.add(x.id(c), d, x.face_ids(c));
  }
  return out;
}

DeltaMap::DeltaMap(ComplexPtr source, ComplexPtr target) : source_(std::move(source)), target_(std::move(target)) {
  if (!source_ || !target_) throw std::invalid_argument("DeltaMap needs both complexes");
  images_.resize(static_cast<std::size_t>(std::max(source_->dimension() + 1, 0)));
  for (int d = 0; d <= source_->dimension(); ++d) images_[static_cast<std::size_t>(d)].resize(source_->count(d));
}

void DeltaMap::assign(Cell from, Cell to) {
  if (from.dim < 0 || from.dim > source_->dimension() || from.index >= source_->count(from.dim)) {
    throw std::out_of_range("DeltaMap::assign: source cell out of range");
  }
  if (to.dim < 0 || to.index >= target_->count(to.dim)) throw std::out_of_range("DeltaMap::assign: target cell out of range");
  images_[static_cast<std::size_t>(from.dim)][from.index] = to;
}

std::optional<Cell> DeltaMap::image(Cell c) const {
  if (c.dim < 0 || static_cast<std::size_t>(c.dim) >= images_.size()) return std::nullopt;
  const auto& level = images_[static_cast<std::size_t>(c.dim)];
  if (c.index >= level.size()) return std::nullopt;
  return level[c.index];
}

Cell DeltaMap::at(Cell c) const {
  auto img = image(c);
  if (!img) throw std::logic_error("DeltaMap: '" + source_->id(c) + "' is unassigned");
  return *img;
}

bool operator==(const DeltaMap& a, const DeltaMap& b) {
  return *a.source_ == *b.source_ && *a.target_ == *b.target_ && a.images_ == b.images_;
}

ValidationReport validate_map(const DeltaMap& f) {
  ValidationReport report;
  const auto& x = f.source();
  const auto& y = f.target();
  for (int d = 0; d <= x.dimension(); ++d) {
    for (const Cell c : x.cells(d)) {
      auto img = f.image(c);
      if (!img) {
        report.add("unassigned", x.id(c), "no image assigned");
        continue;
      }
      if (img->dim != d) {
        report.add("dimension", x.id(c), "sent to '" + y.id(*img) + "' of dimension " + std::to_string(img->dim));
        continue;
      }
      for (int i = 0; i <= d && d > 0; ++i) {
        auto face_img = f.image(x.face(c, i));
        if (!face_img) continue;  // reported on the face itself
        const Cell rhs = y.face(*img, i);
        if (*face_img != rhs) {
          report.add("face", x.id(c),
                     "f(F" + std::to_string(i) + ") = '" + y.id(*face_img) + "' but F" + std::to_string(i) + "(f) = '" +
                         y.id(rhs) + "'");
        }
      }
    }
  }
  return report;
}

DeltaMap identity_map(const ComplexPtr& x) {
  DeltaMap f(x, x);
  for (int d = 0; d <= x->dimension(); ++d) {
    for (const Cell c : x->cells(d)) f.assign(c, c);
  }
  return f;
}

DeltaMap compose(const DeltaMap& g, const DeltaMap& f) {
  if (!(f.target() == g.source())) throw std::invalid_argument("compose: target of f is not the source of g");
  DeltaMap out(f.source_ptr(), g.target_ptr());
  for (int d = 0; d <= f.source().dimension(); ++d) {
    for (const Cell c : f.source().cells(d)) {
      auto mid = f.image(c);
      if (!mid) continue;
      if (auto end = g.image(*mid)) out.assign(c, *end);
    }
  }
  return out;
}

DeltaMap coface_map(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw std::invalid_argument("coface_map: need 0 <= i <= n, n >= 1");
  auto src = std::make_shared<const DeltaComplex>(standard_simplex(n - 1));
  auto tgt = std::make_shared<const DeltaComplex>(standard_simplex(n));
  DeltaMap f(src, tgt);
  const Cell src_top{n - 1, 0};
  const Cell tgt_top{n, 0};
  const std::uint32_t full = (1U << n) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    // Shift vertex bits at positions >= i up by one to skip vertex i.
    const std::uint32_t low = mask & ((1U << i) - 1);
    const std::uint32_t shifted = low | ((mask & ~((1U << i) - 1)) << 1);
    f.assign(src->face_by_vertices(src_top, mask), tgt->face_by_vertices(tgt_top, shifted));
  }
  return f;
}

DeltaMap characteristic_map(const ComplexPtr& x, Cell simplex) {
  const int n = simplex.dim;
  auto model = std::make_shared<const DeltaComplex>(standard_simplex(n));
  DeltaMap f(model, x);
  const Cell top{n, 0};
  const std::uint32_t full = (1U << (n + 1)) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const Cell model_cell = model->face_by_vertices(top, mask);
    f.assign(model_cell, x->face_by_vertices(simplex, mask));
  }
  return f;
}

}  // namespace steenrod
