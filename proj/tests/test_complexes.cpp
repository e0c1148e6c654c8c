#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "random_complex.hpp"
#include "steenrod/complexes.hpp"
#include "steenrod/simplicial.hpp"

using namespace steenrod;
using namespace steenrod::testing;

namespace {

std::string face_id(const DeltaComplex& x, const std::string& id, int i) { return x.id(x.face(*x.find(id), i)); }

}  // namespace

TEST_CASE("standard simplices") {
  const auto d0 = standard_simplex(0);
  CHECK(d0.counts() == std::vector<std::size_t>{1});

  const auto d2 = standard_simplex(2);
  CHECK(d2.counts() == std::vector<std::size_t>{3, 3, 1});
  CHECK(face_id(d2, "012", 0) == "12");
  CHECK(face_id(d2, "012", 1) == "02");
  CHECK(face_id(d2, "012", 2) == "01");
  CHECK(validate_delta(d2).ok());

  CHECK(standard_simplex(3).counts() == std::vector<std::size_t>{4, 6, 4, 1});
  CHECK(standard_simplex(11).count(0) == 12);
  CHECK(standard_simplex_label(11, 0b110000000001) == "0,10,11");
}

TEST_CASE("validate_delta reports violations") {
  SUBCASE("swapped edge endpoints break the identities through that edge") {
    // F2 of the triangle is the edge 01 with its faces listed backwards, so
    // F0F2 = 0 but F1F0 = 1, and F1F2 = 1 but F1F1 = 0.
    const auto x = load_fixture_unchecked("bad_face_identity");
    const auto report = validate_delta(x);
    CHECK(report.count("face-identity") == 2);
    bool names_pair = false;
    for (const auto& v : report.items()) names_pair = names_pair || v.detail.find("(i=0, j=2)") != std::string::npos;
    CHECK(names_pair);
  }
  SUBCASE("a single misread vertex gives exactly one violation") {
    DeltaComplex x("one");
    for (const char* v : {"0", "1", "2"}) x.add(v, 0);
    x.add("01", 1, {"1", "2"});  // F1 should be 0
    x.add("02", 1, {"2", "0"});
    x.add("12", 1, {"2", "1"});
    x.add("012", 2, {"12", "02", "01"});
    const auto report = validate_delta(x);
    REQUIRE(report.size() == 1);
    CHECK(report.items()[0].where == "012");
  }
  SUBCASE("dangling reference") {
    const auto report = validate_delta(load_fixture_unchecked("dangling"));
    REQUIRE(report.size() == 1);
    CHECK(report.items()[0].kind == "dangling-face");
    CHECK_THROWS_AS(require_valid(load_fixture_unchecked("dangling")), std::invalid_argument);
  }
  SUBCASE("face of the wrong dimension") {
    DeltaComplex x("wrong");
    x.add("v", 0);
    x.add("e", 1, {"v", "v"});
    x.add("t", 2, {"e", "e", "v"});
    CHECK(validate_delta(x).count("face-dimension") == 1);
  }
  SUBCASE("construction errors") {
    DeltaComplex x;
    x.add("v", 0);
    CHECK_THROWS_AS(x.add("v", 0), std::invalid_argument);
    CHECK_THROWS_AS(x.add("e", 1, {"v"}), std::invalid_argument);
    CHECK_THROWS_AS(x.add("n", -1), std::invalid_argument);
  }
}

TEST_CASE("skeleta") {
  CHECK(skeleton(standard_simplex(3), 2).counts() == std::vector<std::size_t>{4, 6, 4});
  const auto torus = load_fixture("torus");
  CHECK(skeleton(*torus, torus->dimension()) == *torus);
  CHECK(skeleton(*torus, 1).counts() == std::vector<std::size_t>{1, 3});
}

TEST_CASE("delta maps") {
  const auto circle2 = load_fixture("circle2");
  CHECK(validate_map(identity_map(circle2)).ok());

  SUBCASE("edge swap of the two-edge circle") {
    DeltaMap f(circle2, circle2);
    f.assign(*circle2->find("v0"), *circle2->find("v0"));
    f.assign(*circle2->find("v1"), *circle2->find("v1"));
    f.assign(*circle2->find("a"), *circle2->find("b"));
    f.assign(*circle2->find("b"), *circle2->find("a"));
    CHECK(validate_map(f).ok());
  }
  SUBCASE("constant on vertices only") {
    auto d1 = std::make_shared<const DeltaComplex>(standard_simplex(1));
    const auto point = load_fixture("point");
    DeltaMap f(d1, point);
    f.assign(*d1->find("0"), {0, 0});
    f.assign(*d1->find("1"), {0, 0});
    const auto report = validate_map(f);
    REQUIRE(report.size() == 1);
    CHECK(report.items()[0].kind == "unassigned");
    CHECK(report.items()[0].where == "01");
  }
  SUBCASE("a face mismatch is named") {
    const auto circle2c = load_fixture("circle2_cyclic");
    DeltaMap f(circle2, circle2c);
    f.assign(*circle2->find("v0"), *circle2c->find("v0"));
    f.assign(*circle2->find("v1"), *circle2c->find("v1"));
    f.assign(*circle2->find("a"), *circle2c->find("a"));
    f.assign(*circle2->find("b"), *circle2c->find("b"));
    const auto report = validate_map(f);
    CHECK(report.count("face") == 2);
  }
  SUBCASE("cofaces and characteristic maps") {
    for (int n = 1; n <= 4; ++n) {
      for (int i = 0; i <= n; ++i) CHECK(validate_map(coface_map(n, i)).ok());
    }
    const auto torus = load_fixture("torus");
    const auto chi = characteristic_map(torus, *torus->find("U"));
    CHECK(validate_map(chi).ok());
    CHECK(torus->id(chi.at(*chi.source().find("01"))) == "a");
    CHECK(torus->id(chi.at(*chi.source().find("02"))) == "c");
    CHECK(torus->id(chi.at(*chi.source().find("12"))) == "b");
  }
  SUBCASE("composition") {
    // d_2 ∘ d_0 = d_0 ∘ d_1 as maps Δ^1 -> Δ^3.
    const auto lhs = compose(coface_map(3, 2), coface_map(2, 0));
    const auto rhs = compose(coface_map(3, 0), coface_map(2, 1));
    CHECK(lhs == rhs);
    CHECK_THROWS_AS(compose(coface_map(2, 0), coface_map(3, 0)), std::invalid_argument);
  }
}

TEST_CASE("surjections") {
  for (int m = 0; m <= 6; ++m) {
    for (int n = 0; n <= m + 1; ++n) {
      CHECK(Surjection::count(m, n) == count_surjections_brute(m, n));
      CHECK(Surjection::all(m, n).size() == Surjection::count(m, n));
    }
  }
  const auto eta = Surjection::from_degeneracies(3, {0, 2});
  CHECK(eta.values() == std::vector<int>{0, 0, 1, 1});
  CHECK(eta.word() == "s2s0");
  CHECK(eta.degeneracy_positions() == std::vector<int>{0, 2});
  CHECK(Surjection::identity(2).is_identity());
  const auto inner = Surjection::from_degeneracies(4, {3});
  CHECK(eta.after(inner).values() == std::vector<int>{0, 0, 1, 1, 1});
}

TEST_CASE("forget and freely_degenerate") {
  const auto point = load_fixture("point");
  const auto d1 = std::make_shared<const DeltaComplex>(standard_simplex(1));

  SUBCASE("the point") {
    const auto f = forget(SimplicialSet(point, 2), 2);
    CHECK(f.counts() == std::vector<std::size_t>{1, 1, 1});
    CHECK(validate_delta(f).ok());
    CHECK(freely_degenerate(point, 3).count(3) == 1);
  }
  SUBCASE("the 1-simplex") {
    const auto f = forget(SimplicialSet(d1, 1), 1);
    CHECK(f.counts() == std::vector<std::size_t>{2, 3});
    CHECK(f.find("s0(0)").has_value());
    CHECK(f.find("s0(1)").has_value());
    const auto s = freely_degenerate(d1, 2);
    CHECK(s.count(2) == 4);
    for (const auto& x : s.simplices(2)) CHECK_FALSE(x.eta.is_identity());
  }
  SUBCASE("max_dim equal to the core dimension") {
    const auto torus = load_fixture("torus");
    const auto f = forget(SimplicialSet(torus, 2), 2);
    // 1 vertex; 3 edges + s0(v); 2 triangles + s0, s1 of each edge + s1s0(v).
    CHECK(f.counts() == std::vector<std::size_t>{1, 4, 9});
    CHECK_THROWS_AS(forget(SimplicialSet(torus, 2), 1), std::invalid_argument);
  }
  SUBCASE("labels") {
    const SimplicialSet s(point, 3);
    CHECK(s.label(s.simplices(2)[0]) == "s1s0(v)");
  }
}

TEST_CASE("simplicial identities on degenerate simplices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto core = std::make_shared<const DeltaComplex>(random_delta_complex(rng, {3, 14, 0.5}));
    const SimplicialSet s(core, 4);
    for (int m = 1; m <= 3; ++m) {
      for (const auto& x : s.simplices(m)) {
        for (int i = 0; i <= m; ++i) {
          for (int j = i + 1; j <= m && m >= 2; ++j) CHECK(s.face(s.face(x, j), i) == s.face(s.face(x, i), j - 1));
        }
        for (int j = 0; j <= m; ++j) {
          const auto sj = s.degeneracy(x, j);
          CHECK(s.face(sj, j) == x);
          CHECK(s.face(sj, j + 1) == x);
          for (int i = 0; i <= m + 1; ++i) {
            if (i < j) CHECK(s.face(sj, i) == s.degeneracy(s.face(x, i), j - 1));
            if (i > j + 1) CHECK(s.face(sj, i) == s.degeneracy(s.face(x, i - 1), j));
          }
          for (int i = 0; i <= j; ++i) {
            CHECK(s.degeneracy(s.degeneracy(x, j), i) == s.degeneracy(s.degeneracy(x, i), j + 1));
          }
        }
        CHECK(s.simplices(m)[s.index_of(x)] == x);
      }
    }
  }
}

TEST_CASE("random complexes satisfy the face identities") {
  std::mt19937 rng(1);
  std::size_t with_loops = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = random_delta_complex(rng);
    CHECK(x.total() <= 30);
    REQUIRE(validate_delta(x).ok());
    for (const Cell e : x.cells(1)) with_loops += x.face(e, 0) == x.face(e, 1) ? 1 : 0;
  }
  // The generator must produce identifications, not only simplicial complexes.
  CHECK(with_loops > 0);
}

TEST_CASE("the inclusion into forget(freely_degenerate) and the adjunction unit") {
  std::mt19937 rng(3);
  std::vector<ComplexPtr> inputs;
  for (const auto& name : corpus()) inputs.push_back(load_fixture(name));
  for (int trial = 0; trial < 30; ++trial) inputs.push_back(std::make_shared<const DeltaComplex>(random_delta_complex(rng, {3, 16, 0.5})));

  for (const auto& x : inputs) {
    const int m = std::max(x->dimension(), 0) + 1;
    const auto s = freely_degenerate(x, m);
    auto f = std::make_shared<const DeltaComplex>(forget(s, m));
    const auto iota = degeneracy_inclusion(x, f);
    CHECK(validate_map(iota).ok());
    for (int d = 0; d <= m; ++d) {
      std::size_t expected = 0;
      for (int n = 0; n <= std::min(d, x->dimension()); ++n) expected += count_surjections_brute(d, n) * x->count(n);
      CHECK(s.count(d) == expected);
      CHECK(f->count(d) == expected);
      // The nondegenerate part is exactly X.
      for (const Cell c : f->cells(d)) {
        const bool nondegenerate = f->id(c).find('(') == std::string::npos;
        CHECK(nondegenerate == (d <= x->dimension() && c.index < x->count(d)));
      }
    }

    const auto unit = adjunction_unit(s, m);
    CHECK(validate_map(unit, m).ok());
    // On the image of ι the unit is the identity assignment.
    for (int d = 0; d <= x->dimension(); ++d) {
      for (const Cell c : x->cells(d)) {
        const auto image = unit.image({Surjection::identity(d), iota.at(c)});
        REQUIRE(image.has_value());
        CHECK(image->eta.is_identity());
        CHECK(image->base == c);
      }
    }
    // Surjective in every dimension.
    for (int d = 0; d <= m; ++d) {
      std::vector<bool> hit(s.count(d), false);
      for (const Cell c : f->cells(d)) hit[s.index_of(*unit.image({Surjection::identity(d), c}))] = true;
      CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
    }
  }
}

TEST_CASE("adjunction unit examples") {
  const auto point = load_fixture("point");
  const auto unit = adjunction_unit(SimplicialSet(point, 2), 2);
  CHECK(validate_map(unit, 2).ok());
  // Everything collapses onto the unique simplex in each dimension.
  for (int d = 0; d <= 2; ++d) {
    for (const auto& x : unit.source().simplices(d)) CHECK(unit.image(x)->base == Cell{0, 0});
  }

  auto d1 = std::make_shared<const DeltaComplex>(standard_simplex(1));
  const auto unit1 = adjunction_unit(SimplicialSet(d1, 1), 1);
  CHECK(validate_map(unit1, 1).ok());
  const auto& promoted = unit1.source().core();
  for (const std::string id : {"0", "1", "01"}) {
    const Cell c = *promoted.find(id);
    const auto image = unit1.image({Surjection::identity(c.dim), c});
    CHECK(image->eta.is_identity());
    CHECK(d1->id(image->base) == id);
  }
}

TEST_CASE("a broken simplicial map is reported") {
  auto d1 = std::make_shared<const DeltaComplex>(standard_simplex(1));
  auto s = std::make_shared<const SimplicialSet>(d1, 2);
  SimplicialMap g(s, s);
  g.assign({0, 0}, {Surjection::identity(0), {0, 0}});
  g.assign({0, 1}, {Surjection::identity(0), {0, 1}});
  CHECK(validate_map(g, 2).count("unassigned") == 1);
  // Send the edge to the degenerate edge on vertex 0: its F0 no longer matches.
  g.assign({1, 0}, {Surjection::from_degeneracies(1, {0}), {0, 0}});
  const auto report = validate_map(g, 2);
  CHECK(report.count("face") > 0);
}
