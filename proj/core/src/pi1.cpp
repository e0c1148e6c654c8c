#include "steenrod/pi1.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

namespace steenrod {

namespace {

Cell base_vertex(const DeltaComplex& x, const std::string& base) {
  const auto c = x.find(base);
  if (!c || c->dim != 0) throw MissingBasepoint("no vertex named '" + base + "'");
  return *c;
}

// One step of a tree path: the edge and whether it is walked F1 -> F0.
struct Step {
  Cell edge;
  bool forward = true;
};

struct Tree {
  std::vector<Cell> edges;
  std::vector<bool> reached;                  // by vertex index
  std::vector<std::vector<Step>> path_to;     // base -> vertex
};

Tree bfs_tree(const DeltaComplex& x, Cell base) {
  const std::size_t nv = x.count(0);
  std::vector<std::vector<Cell>> incident(nv);
  for (const Cell e : x.cells(1)) {
    const Cell tail = x.face(e, 1);
    const Cell head = x.face(e, 0);
    if (tail == head) continue;
    incident[tail.index].push_back(e);
    incident[head.index].push_back(e);
  }
  for (auto& list : incident) {
    std::sort(list.begin(), list.end(), [&x](Cell a, Cell b) { return x.id(a) < x.id(b); });
  }
  Tree t;
  t.reached.assign(nv, false);
  t.path_to.assign(nv, {});
  t.reached[base.index] = true;
  std::deque<std::size_t> queue{base.index};
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (const Cell e : incident[v]) {
      const Cell tail = x.face(e, 1);
      const Cell head = x.face(e, 0);
      const bool forward = tail.index == v;
      const std::size_t w = forward ? head.index : tail.index;
      if (t.reached[w]) continue;
      t.reached[w] = true;
      t.edges.push_back(e);
      t.path_to[w] = t.path_to[v];
      t.path_to[w].push_back({e, forward});
      queue.push_back(w);
    }
  }
  return t;
}

Word inverse(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->generator, -it->exponent});
  return out;
}

void append(Word& w, const Word& tail) { w.insert(w.end(), tail.begin(), tail.end()); }

}  // namespace

std::vector<Cell> spanning_tree(const DeltaComplex& x, const std::string& base) {
  return bfs_tree(x, base_vertex(x, base)).edges;
}

Word freely_reduce(Word w) {
  Word out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -l.exponent) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

std::optional<std::size_t> GroupPresentation::generator_of(Cell edge) const {
  auto it = std::find(edges.begin(), edges.end(), edge);
  if (it == edges.end()) return std::nullopt;
  return static_cast<std::size_t>(it - edges.begin());
}

std::string GroupPresentation::render(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += " ";
    out += generators.at(l.generator);
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

std::string GroupPresentation::render() const {
  std::string out = "⟨ ";
  for (std::size_t g = 0; g < generators.size(); ++g) out += (g ? ", " : "") + generators[g];
  out += generators.empty() ? "| " : " | ";
  for (std::size_t r = 0; r < relators.size(); ++r) out += (r ? ", " : "") + render(relators[r]);
  out += relators.empty() ? "⟩" : " ⟩";
  return out;
}

GroupPresentation presentation(const DeltaComplex& x, const std::string& base) {
  const Cell b = base_vertex(x, base);
  const Tree tree = bfs_tree(x, b);
  GroupPresentation p;
  p.base = base;
  for (const Cell e : x.cells(1)) {
    if (!tree.reached[x.face(e, 1).index]) continue;
    p.generators.push_back(x.id(e));
    p.edges.push_back(e);
  }
  for (const Cell e : tree.edges) {
    const std::size_t g = *p.generator_of(e);
    p.tree.push_back(g);
    p.relators.push_back({{g, 1}});
  }
  for (const Cell s : x.cells(2)) {
    if (!tree.reached[x.vertex(s, 0).index]) continue;
    p.relators.push_back({{*p.generator_of(x.face(s, 2)), 1},
                          {*p.generator_of(x.face(s, 0)), 1},
                          {*p.generator_of(x.face(s, 1)), -1}});
  }
  return p;
}

GroupPresentation presentation(const DeltaComplex& x) {
  if (x.count(0) == 0) throw MissingBasepoint("the complex has no vertices");
  return presentation(x, x.id({0, 0}));
}

std::string AbelianInvariants::render() const {
  std::vector<std::string> parts;
  if (rank == 1) parts.emplace_back("Z");
  if (rank > 1) parts.push_back("Z^" + std::to_string(rank));
  for (Coeff t : torsion) parts.push_back("Z/" + std::to_string(t));
  if (parts.empty()) return "0";
  std::string out;
  for (const auto& s : parts) out += (out.empty() ? "" : " ⊕ ") + s;
  return out;
}

std::string AbelianInvariants::summary() const {
  std::string out = "rank " + std::to_string(rank) + ", torsion [";
  for (std::size_t k = 0; k < torsion.size(); ++k) out += (k ? ", " : "") + std::to_string(torsion[k]);
  return out + "]";
}

IntMatrix exponent_matrix(const GroupPresentation& p) {
  IntMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    for (const Letter& l : p.relators[r]) m(r, l.generator) = checked_add(m(r, l.generator), l.exponent);
  }
  return m;
}

AbelianInvariants abelianization(const GroupPresentation& p) {
  const auto snf = smith_normal_form(exponent_matrix(p));
  return {p.generators.size() - snf.rank(), snf.torsion()};
}

AbelianCoordinates abelian_coordinates(const GroupPresentation& p) {
  // U R V = D. In coordinates y = V^T x the relator lattice is spanned by
  // d_k e_k, and x = V^-T y.
  const auto snf = smith_normal_form(exponent_matrix(p), true);
  const std::size_t g = p.generators.size();
  std::vector<std::size_t> keep;
  AbelianCoordinates out;
  for (std::size_t k = 0; k < snf.rank(); ++k) {
    if (snf.invariant_factors[k] > 1) {
      keep.push_back(k);
      out.orders.push_back(snf.invariant_factors[k]);
    }
  }
  for (std::size_t k = snf.rank(); k < g; ++k) {
    keep.push_back(k);
    out.orders.push_back(0);
  }
  out.invariants = {g - snf.rank(), snf.torsion()};
  out.to_factors = IntMatrix(keep.size(), g);
  out.from_factors = IntMatrix(g, keep.size());
  for (std::size_t f = 0; f < keep.size(); ++f) {
    for (std::size_t j = 0; j < g; ++j) {
      out.to_factors(f, j) = snf.right(j, keep[f]);
      out.from_factors(j, f) = snf.right_inverse(keep[f], j);
    }
  }
  return out;
}

InducedHomomorphism induced_homomorphism(const DeltaMap& g, const GroupPresentation& src, const GroupPresentation& tgt) {
  const DeltaComplex& x = g.source();
  const DeltaComplex& y = g.target();
  const Cell src_base = base_vertex(x, src.base);
  const Cell tgt_base = base_vertex(y, tgt.base);
  const Tree src_tree = bfs_tree(x, src_base);
  const Tree tgt_tree = bfs_tree(y, tgt_base);
  const Cell moved_base = g.at(src_base);
  if (!tgt_tree.reached[moved_base.index]) {
    throw std::invalid_argument("induced_homomorphism: the image of the basepoint lies in another component");
  }

  auto target_letter = [&](Cell source_edge, bool forward) {
    const Cell e = g.at(source_edge);
    const auto k = tgt.generator_of(e);
    if (!k) throw std::invalid_argument("induced_homomorphism: edge '" + y.id(e) + "' is not a target generator");
    return Letter{*k, forward ? 1 : -1};
  };
  auto mapped_path = [&](std::size_t vertex) {
    Word w;
    for (const Step& s : src_tree.path_to[vertex]) w.push_back(target_letter(s.edge, s.forward));
    return w;
  };
  Word delta;
  for (const Step& s : tgt_tree.path_to[moved_base.index]) delta.push_back({*tgt.generator_of(s.edge), s.forward ? 1 : -1});

  InducedHomomorphism out;
  IntMatrix gen_matrix(tgt.generators.size(), src.generators.size());
  for (std::size_t j = 0; j < src.edges.size(); ++j) {
    const Cell e = src.edges[j];
    Word w = delta;
    append(w, mapped_path(x.face(e, 1).index));
    w.push_back(target_letter(e, true));
    append(w, inverse(mapped_path(x.face(e, 0).index)));
    append(w, inverse(delta));
    w = freely_reduce(std::move(w));
    for (const Letter& l : w) gen_matrix(l.generator, j) = checked_add(gen_matrix(l.generator, j), l.exponent);
    out.images.push_back(std::move(w));
  }

  const auto sc = abelian_coordinates(src);
  const auto tc = abelian_coordinates(tgt);
  out.source = sc.invariants;
  out.target = tc.invariants;
  out.abelian = tc.to_factors * gen_matrix * sc.from_factors;
  for (std::size_t r = 0; r < out.abelian.rows(); ++r) {
    const Coeff order = tc.orders[r];
    if (order == 0) continue;
    for (std::size_t c = 0; c < out.abelian.cols(); ++c) out.abelian(r, c) = ((out.abelian(r, c) % order) + order) % order;
  }
  const std::size_t src_free = sc.invariants.rank;
  const std::size_t tgt_free = tc.invariants.rank;
  const std::size_t src_tors = sc.orders.size() - src_free;
  const std::size_t tgt_tors = tc.orders.size() - tgt_free;
  out.free_block = IntMatrix(tgt_free, src_free);
  for (std::size_t r = 0; r < tgt_free; ++r) {
    for (std::size_t c = 0; c < src_free; ++c) out.free_block(r, c) = out.abelian(tgt_tors + r, src_tors + c);
  }
  return out;
}

Coeff determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Coeff sign = 1;
  Coeff prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(r, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = checked_sub(checked_mul(a(i, j), a(k, k)), checked_mul(a(i, k), a(k, j))) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace steenrod
