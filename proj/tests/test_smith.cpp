#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "steenrod/pi1.hpp"
#include "steenrod/smith.hpp"

using namespace steenrod;
using namespace steenrod::testing;

namespace {

IntMatrix from_rows(const std::vector<std::vector<Coeff>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, Coeff bound) {
  std::uniform_int_distribution<Coeff> entry(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  }
  return m;
}

void check_transforms(const IntMatrix& a) {
  const auto f = smith_normal_form(a, true);
  const IntMatrix d = f.left * a * f.right;
  for (std::size_t r = 0; r < d.rows(); ++r) {
    for (std::size_t c = 0; c < d.cols(); ++c) {
      const Coeff expected = (r == c && r < f.rank()) ? f.invariant_factors[r] : 0;
      CHECK(d(r, c) == expected);
    }
  }
  CHECK(f.right * f.right_inverse == IntMatrix::identity(a.cols()));
  CHECK(std::abs(determinant(f.left)) == 1);
  CHECK(std::abs(determinant(f.right)) == 1);
  for (std::size_t k = 1; k < f.rank(); ++k) CHECK(f.invariant_factors[k] % f.invariant_factors[k - 1] == 0);
}

}  // namespace

TEST_CASE("small examples") {
  CHECK(smith_normal_form(from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})).invariant_factors ==
        std::vector<Coeff>{2, 6, 12});
  CHECK(smith_normal_form(from_rows({{2, 0}, {0, 3}})).invariant_factors == std::vector<Coeff>{1, 6});
  CHECK(smith_normal_form(from_rows({{0, 0}, {0, 0}})).rank() == 0);
  CHECK(smith_normal_form(IntMatrix(0, 3)).rank() == 0);
  // The Klein bottle relator matrix.
  const auto klein = smith_normal_form(from_rows({{1, 1, -1}, {1, -1, 1}}));
  CHECK(klein.invariant_factors == std::vector<Coeff>{1, 2});
  CHECK(klein.torsion() == std::vector<Coeff>{2});
  check_transforms(from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  check_transforms(from_rows({{1, 1, -1}, {1, -1, 1}}));
  check_transforms(IntMatrix(3, 0));
}

TEST_CASE("agrees with determinantal divisors on random matrices") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    const std::size_t cols = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    const auto a = random_matrix(rng, rows, cols, trial % 3 == 0 ? 1 : 6);
    CAPTURE(to_string(a));
    CHECK(smith_normal_form(a).invariant_factors == invariant_factors_by_minors(a));
    check_transforms(a);
  }
}

TEST_CASE("invariant under row and column shuffles and transposition") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_matrix(rng, 4, 6, 5);
    const auto reference = smith_normal_form(a).invariant_factors;
    std::vector<std::size_t> rp(4);
    std::vector<std::size_t> cp(6);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    IntMatrix b(4, 6);
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 6; ++c) b(r, c) = a(rp[r], cp[c]);
    }
    CHECK(smith_normal_form(b).invariant_factors == reference);
    CHECK(smith_normal_form(a.transposed()).invariant_factors == reference);
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(from_rows({{2, 0}, {0, 3}})) == 6);
  CHECK(determinant(from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(determinant(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}})) == -3);
  CHECK(determinant(IntMatrix(0, 0)) == 1);
  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), std::invalid_argument);
  std::mt19937 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_matrix(rng, 4, 4, 4);
    const auto f = smith_normal_form(a);
    Coeff product = f.rank() == 4 ? 1 : 0;
    for (const Coeff d : f.invariant_factors) product *= f.rank() == 4 ? d : 1;
    CHECK(std::abs(determinant(a)) == product);
  }
}

TEST_CASE("overflow is reported") {
  const Coeff big = Coeff{1} << 62;
  CHECK_THROWS_AS(smith_normal_form(from_rows({{big, big - 1}, {big - 1, -big}})), std::overflow_error);
}
