#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "ncsn/linalg.hpp"

using Catch::Matchers::WithinAbs;

namespace {

double urand(std::mt19937& rng) {
  return static_cast<double>(rng()) / 4294967296.0;
}

}  // namespace

TEST_CASE("LU solves a small fixed system", "[linalg]") {
  // A = [[2,1],[1,3]], x = (1,2) -> b = (4,7).
  const ncsn::DenseLU lu(2, {2.0, 1.0, 1.0, 3.0});
  const auto x = lu.solve({4.0, 7.0});
  REQUIRE_THAT(x[0], WithinAbs(1.0, 1e-14));
  REQUIRE_THAT(x[1], WithinAbs(2.0, 1e-14));
}

TEST_CASE("LU recovers random solutions", "[linalg]") {
  std::mt19937 rng(4242);
  const std::size_t n = 25;
  std::vector<double> a(n * n);
  for (double& v : a) {
    v = 2.0 * urand(rng) - 1.0;
  }
  // Diagonal boost keeps the random matrix comfortably nonsingular.
  for (std::size_t i = 0; i < n; ++i) {
    a[i * n + i] += 4.0;
  }
  std::vector<double> x_true(n);
  for (double& v : x_true) {
    v = 2.0 * urand(rng) - 1.0;
  }
  std::vector<double> b(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      b[i] += a[i * n + j] * x_true[j];
    }
  }
  const ncsn::DenseLU lu(n, a);
  const auto x = lu.solve(b);
  for (std::size_t i = 0; i < n; ++i) {
    REQUIRE_THAT(x[i], WithinAbs(x_true[i], 1e-11));
  }
}

TEST_CASE("LU pivots rows when the leading entry vanishes", "[linalg]") {
  // A = [[0,1],[1,0]] swaps the unknowns.
  const ncsn::DenseLU lu(2, {0.0, 1.0, 1.0, 0.0});
  const auto x = lu.solve({3.0, 5.0});
  REQUIRE_THAT(x[0], WithinAbs(5.0, 1e-14));
  REQUIRE_THAT(x[1], WithinAbs(3.0, 1e-14));
}

TEST_CASE("LU rejects singular and malformed input", "[linalg]") {
  REQUIRE_THROWS_AS(ncsn::DenseLU(2, {1.0, 2.0, 2.0, 4.0}),
                    std::runtime_error);
  REQUIRE_THROWS_AS(ncsn::DenseLU(2, {1.0, 2.0, 3.0}), std::invalid_argument);
  const ncsn::DenseLU lu(2, {2.0, 0.0, 0.0, 2.0});
  REQUIRE_THROWS_AS(lu.solve({1.0}), std::invalid_argument);
}

TEST_CASE("tridiagonal solve matches the dense solver", "[linalg]") {
  std::mt19937 rng(99);
  const std::size_t n = 40;
  std::vector<double> lower(n, 0.0);
  std::vector<double> diag(n);
  std::vector<double> upper(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    diag[i] = 3.0 + urand(rng);
    if (i > 0) {
      lower[i] = urand(rng) - 0.5;
    }
    if (i + 1 < n) {
      upper[i] = urand(rng) - 0.5;
    }
  }
  std::vector<double> x_true(n);
  for (double& v : x_true) {
    v = 2.0 * urand(rng) - 1.0;
  }
  std::vector<double> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    rhs[i] = diag[i] * x_true[i];
    if (i > 0) {
      rhs[i] += lower[i] * x_true[i - 1];
    }
    if (i + 1 < n) {
      rhs[i] += upper[i] * x_true[i + 1];
    }
  }
  const auto x = ncsn::tridiagonal_solve(lower, diag, upper, rhs);
  for (std::size_t i = 0; i < n; ++i) {
    REQUIRE_THAT(x[i], WithinAbs(x_true[i], 1e-12));
  }
}

TEST_CASE("tridiagonal solve rejects malformed input", "[linalg]") {
  REQUIRE_THROWS_AS(
      ncsn::tridiagonal_solve({0.0}, {1.0, 1.0}, {0.0}, {1.0}),
      std::invalid_argument);
  REQUIRE_THROWS_AS(
      ncsn::tridiagonal_solve({0.0, 1.0}, {0.0, 1.0}, {1.0, 0.0}, {1.0, 1.0}),
      std::runtime_error);
}
