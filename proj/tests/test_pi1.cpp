#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "random_complex.hpp"
#include "steenrod/io.hpp"
#include "steenrod/pi1.hpp"

using namespace steenrod;
using namespace steenrod::testing;

namespace {

// One vertex id per connected component, by union-find over the edges.
std::vector<std::string> component_bases(const DeltaComplex& x) {
  std::vector<std::size_t> parent(x.count(0));
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Cell e : x.cells(1)) parent[root(x.face(e, 0).index)] = root(x.face(e, 1).index);
  std::vector<std::string> out;
  for (std::size_t v = 0; v < parent.size(); ++v) {
    if (root(v) == v) out.push_back(x.id({0, v}));
  }
  return out;
}

Coeff torsion_order(const std::vector<Coeff>& torsion) {
  Coeff p = 1;
  for (const Coeff t : torsion) p *= t;
  return p;
}

std::string render_word(const GroupPresentation& p, Word w) { return p.render(freely_reduce(std::move(w))); }

}  // namespace

TEST_CASE("free reduction") {
  CHECK(freely_reduce({{0, 1}, {0, -1}}).empty());
  CHECK(freely_reduce({{0, 1}, {1, 1}, {1, -1}, {0, -1}, {2, 1}}) == Word{{2, 1}});
  CHECK(freely_reduce({{0, 1}, {0, 1}}) == Word{{0, 1}, {0, 1}});
}

TEST_CASE("spanning trees") {
  const auto circle2 = load_fixture("circle2");
  const auto tree = spanning_tree(*circle2, "v0");
  REQUIRE(tree.size() == 1);
  CHECK(circle2->id(tree[0]) == "a");
  CHECK(spanning_tree(*load_fixture("torus"), "v").empty());
  CHECK(spanning_tree(*load_fixture("delta3"), "0").size() == 3);
  CHECK(spanning_tree(*load_fixture("two_disjoint_edges"), "u0").size() == 1);
  CHECK_THROWS_AS(spanning_tree(*circle2, "nowhere"), MissingBasepoint);
  CHECK_THROWS_AS(presentation(*circle2, "a"), MissingBasepoint);
}

TEST_CASE("presentations") {
  const auto torus = presentation(*load_fixture("torus"));
  CHECK(torus.base == "v");
  CHECK(torus.render() == "⟨ a, b, c | a b c^-1, b a c^-1 ⟩");
  CHECK(torus.render(Word{}) == "1");

  const auto circle2 = presentation(*load_fixture("circle2"), "v0");
  CHECK(circle2.render() == "⟨ a, b | a ⟩");
  CHECK(circle2.generator_of(*load_fixture("circle2")->find("b")) == std::size_t{1});

  CHECK(presentation(*load_fixture("point")).render() == "⟨ | ⟩");
  CHECK(presentation(*load_fixture("circle")).render() == "⟨ e | ⟩");

  // Only the basepoint's component is presented.
  const auto two = load_fixture("two_circles");
  CHECK(presentation(*two, "v").generators == std::vector<std::string>{"e"});
  CHECK(presentation(*two, "w").generators == std::vector<std::string>{"f"});
}

TEST_CASE("abelianization of the fixtures") {
  const std::map<std::string, AbelianInvariants> expected{
      {"torus", {2, {}}}, {"klein", {1, {2}}}, {"rp2", {0, {2}}}, {"circle", {1, {}}},
      {"delta2", {0, {}}}, {"circle2", {1, {}}}, {"boundary_delta3", {0, {}}}, {"point", {0, {}}},
  };
  for (const auto& [name, invariants] : expected) {
    CAPTURE(name);
    const auto x = load_fixture(name);
    const auto a = abelianization(presentation(*x));
    CHECK(a == invariants);
    // Second path: H1 of the chains.
    const auto h = homology(normalized_chains(*x));
    REQUIRE(h.degrees.size() >= 1);
    const auto h1 = h.degrees.size() > 1 ? h.degrees[1] : DegreeHomology{};
    CHECK(h1.betti == invariants.rank);
    CHECK(h1.torsion == invariants.torsion);
    // Third: determinantal divisors of the relator matrix.
    const auto m = exponent_matrix(presentation(*x));
    const auto factors = invariant_factors_by_minors(m);
    std::vector<Coeff> torsion;
    for (const Coeff d : factors) {
      if (d > 1) torsion.push_back(d);
    }
    CHECK(m.cols() - factors.size() == invariants.rank);
    CHECK(torsion == invariants.torsion);
  }
  CHECK(abelianization(presentation(*load_fixture("klein"))).render() == "Z ⊕ Z/2");
  CHECK(abelianization(presentation(*load_fixture("klein"))).summary() == "rank 1, torsion [2]");
  CHECK(abelianization(presentation(*load_fixture("torus"))).render() == "Z^2");
  CHECK(abelianization(presentation(*load_fixture("delta2"))).render() == "0");
}

TEST_CASE("abelianization matches H1 on every component of random complexes") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = random_delta_complex(rng, {3, 25, 0.6});
    const auto h = homology(normalized_chains(x));
    const auto h1 = h.degrees.size() > 1 ? h.degrees[1] : DegreeHomology{};
    std::size_t rank = 0;
    Coeff order = 1;
    for (const auto& base : component_bases(x)) {
      const auto a = abelianization(presentation(x, base));
      rank += a.rank;
      order *= torsion_order(a.torsion);
    }
    CHECK(rank == h1.betti);
    CHECK(order == torsion_order(h1.torsion));
    if (component_bases(x).size() == 1) CHECK(abelianization(presentation(x)).torsion == h1.torsion);
  }
}

TEST_CASE("the abelianization does not depend on the basepoint") {
  std::mt19937 rng(37);
  std::vector<ComplexPtr> inputs{load_fixture("rp2"), load_fixture("delta3"), load_fixture("circle2")};
  for (int trial = 0; trial < 30; ++trial) inputs.push_back(std::make_shared<const DeltaComplex>(random_delta_complex(rng, {2, 20, 0.6})));
  for (const auto& x : inputs) {
    // Vertices of one component present the same generators.
    std::map<std::vector<std::string>, AbelianInvariants> seen;
    for (const Cell v : x->cells(0)) {
      const auto p = presentation(*x, x->id(v));
      const auto a = abelianization(p);
      const auto [it, fresh] = seen.emplace(p.generators, a);
      if (!fresh) CHECK(it->second == a);
    }
  }
}

TEST_CASE("abelian coordinates") {
  const auto p = presentation(*load_fixture("klein"));
  const auto c = abelian_coordinates(p);
  CHECK(c.orders == std::vector<Coeff>{2, 0});
  CHECK(c.to_factors.rows() == 2);
  CHECK(c.to_factors.cols() == 3);
  // Relators vanish in the coordinates.
  const auto m = exponent_matrix(p);
  const auto image = c.to_factors * m.transposed();
  for (std::size_t r = 0; r < image.rows(); ++r) {
    for (std::size_t k = 0; k < image.cols(); ++k) {
      const Coeff order = c.orders[r];
      CHECK((order == 0 ? image(r, k) : image(r, k) % order) == 0);
    }
  }
  // from_factors is a section of to_factors.
  const auto round_trip = c.to_factors * c.from_factors;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t k = 0; k < 2; ++k) {
      const Coeff want = r == k ? 1 : 0;
      const Coeff order = c.orders[r];
      CHECK((order == 0 ? round_trip(r, k) - want : (round_trip(r, k) - want) % order) == 0);
    }
  }
}

TEST_CASE("induced homomorphisms") {
  SUBCASE("the double cover of the circle") {
    const auto src = load_fixture("circle2_cyclic");
    const auto tgt = load_fixture("circle");
    const auto g = parse_delta_map(fixture_text("degree2_map.json"), src, tgt);
    REQUIRE(validate_map(g).ok());
    const auto ps = presentation(*src);
    const auto pt = presentation(*tgt);
    const auto h = induced_homomorphism(g, ps, pt);
    REQUIRE(h.free_block.rows() == 1);
    CHECK(std::abs(h.free_block(0, 0)) == 2);
    // The non-tree generator goes to e e.
    const std::size_t b = *ps.generator_of(*src->find("b"));
    CHECK(render_word(pt, h.images[b]) == "e e");
    // Tree generators go to the identity.
    CHECK(render_word(pt, h.images[ps.tree[0]]) == "1");
  }
  SUBCASE("the relabelled torus") {
    const auto src = load_fixture("torus");
    const auto tgt = load_fixture("torus_relabeled");
    const auto f = parse_delta_map(fixture_text("relabel.json"), src, tgt);
    const auto f_inv = parse_delta_map(fixture_text("relabel_inverse.json"), tgt, src);
    const auto ps = presentation(*src);
    const auto pt = presentation(*tgt);
    const auto h = induced_homomorphism(f, ps, pt);
    CHECK(h.source == AbelianInvariants{2, {}});
    CHECK(h.target == AbelianInvariants{2, {}});
    CHECK(std::abs(determinant(h.free_block)) == 1);
    const auto back = induced_homomorphism(f_inv, pt, ps);
    CHECK(back.abelian * h.abelian == IntMatrix::identity(2));
  }
  SUBCASE("the identity") {
    const auto x = load_fixture("rp2");
    const auto p = presentation(*x);
    const auto h = induced_homomorphism(identity_map(x), p, p);
    for (std::size_t k = 0; k < p.generators.size(); ++k) {
      const bool in_tree = std::find(p.tree.begin(), p.tree.end(), k) != p.tree.end();
      CHECK(render_word(p, h.images[k]) == (in_tree ? "1" : p.generators[k]));
    }
    CHECK(h.abelian.rows() == 1);
    CHECK(h.abelian(0, 0) == 1);
  }
  SUBCASE("basepoint outside the target component") {
    const auto two = load_fixture("two_circles");
    const auto circle = load_fixture("circle");
    DeltaMap g(circle, two);
    g.assign({0, 0}, *two->find("w"));
    g.assign({1, 0}, *two->find("f"));
    CHECK_THROWS_AS(induced_homomorphism(g, presentation(*circle), presentation(*two, "v")), std::invalid_argument);
    const auto h = induced_homomorphism(g, presentation(*circle), presentation(*two, "w"));
    CHECK(h.free_block(0, 0) == 1);
  }
}
