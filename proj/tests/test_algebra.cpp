#include "eisen/algebra.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace eisen;
using eisen::testing::random_poly;

namespace {

// Closed forms, independent of any resultant computation.
Integer quadratic_disc(const IntPoly& f) { return f[1] * f[1] - 4 * f[2] * f[0]; }

Integer cubic_disc(const IntPoly& f) {
  const Integer &a = f[3], &b = f[2], &c = f[1], &d = f[0];
  return b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d;
}

// Multiply two polynomials (test-only).
IntPoly mul(const IntPoly& f, const IntPoly& g) {
  std::vector<Integer> out(f.degree() + g.degree() + 1, Integer(0));
  for (std::size_t i = 0; i <= f.degree(); ++i)
    for (std::size_t j = 0; j <= g.degree(); ++j) out[i + j] += f[i] * g[j];
  return IntPoly(std::move(out));
}

}  // namespace

TEST_CASE("sylvester_matrix") {
  CHECK(sylvester_matrix(IntPoly{5, 4, 1}, IntPoly{4, 2}) == IntMatrix{{1, 4, 5}, {2, 4, 0}, {0, 2, 4}});
  CHECK(sylvester_matrix(IntPoly{1, 1}, IntPoly{-1, 1}) == IntMatrix{{1, 1}, {1, -1}});
  CHECK(resultant_sylvester(IntPoly{0, 1}, IntPoly{0, 1}) == 0);
  CHECK(resultant_subresultant(IntPoly{0, 1}, IntPoly{0, 1}) == 0);
  CHECK_THROWS_AS(sylvester_matrix(IntPoly{3}, IntPoly{4}), DomainError);
  CHECK_THROWS_AS(sylvester_matrix(IntPoly{}, IntPoly{0, 1}), DomainError);
}

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix{{1, 4, 5}, {2, 4, 0}, {0, 2, 4}}) == 4);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK(determinant(IntMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}) == -1);
}

TEST_CASE("discriminant examples") {
  CHECK(discriminant(IntPoly{5, 4, 1}).value == -4);
  CHECK(discriminant(IntPoly{2, 1, 0, 1}).value == -112);
  CHECK(discriminant(IntPoly{-1, 0, 1}).value == 4);
  CHECK(quadratic_disc(IntPoly{5, 4, 1}) == -4);
  CHECK(cubic_disc(IntPoly{2, 1, 0, 1}) == -112);
  CHECK_THROWS_AS(discriminant(IntPoly{1, 1}), DomainError);
  CHECK_THROWS_AS(discriminant(IntPoly{4}), DomainError);
}

TEST_CASE("discriminant matches closed forms") {
  Xoshiro256 rng(21);
  for (int i = 0; i < 500; ++i) {
    const IntPoly q = random_poly(rng, 2, 1000);
    CHECK(discriminant(q).value == quadratic_disc(q));
    const IntPoly c = random_poly(rng, 3, 1000);
    CHECK(discriminant(c).value == cubic_disc(c));
  }
}

TEST_CASE("subresultant and Sylvester determinant agree") {
  Xoshiro256 rng(22);
  for (int i = 0; i < 500; ++i) {
    const IntPoly f = random_poly(rng, static_cast<unsigned>(1 + rng.below(7)), 200);
    const IntPoly g = random_poly(rng, static_cast<unsigned>(1 + rng.below(7)), 200);
    CHECK(resultant_subresultant(f, g) == resultant_sylvester(f, g));
    if (f.degree() >= 2) CHECK(discriminant(f) == discriminant_via_sylvester(f));
  }
  // Constant arguments.
  CHECK(resultant_subresultant(IntPoly{3}, IntPoly{1, 2, 1}) == 9);
  CHECK(resultant_sylvester(IntPoly{3}, IntPoly{1, 2, 1}) == 9);
}

TEST_CASE("mahler_bound and max_shift_bound") {
  CHECK(mahler_bound(IntPoly{5, 4, 1}) == 400);
  CHECK(mahler_bound(IntPoly{0, 0, 1}) == 4);
  CHECK(mahler_bound(IntPoly{2, 1, 0, 1}) == 6912);
  CHECK(max_shift_bound(IntPoly{5, 4, 1}) == 400);
  CHECK(max_shift_bound(IntPoly{2, 1, 0, 1}) == 96);
  CHECK(max_shift_bound(IntPoly{0, 0, 1}) == 4);
  CHECK_THROWS_AS(mahler_bound(IntPoly{1, 1}), DomainError);
  CHECK_THROWS_AS(max_shift_bound(IntPoly{1, 1}), DomainError);
}

TEST_CASE("max_shift_bound factor is the ceiling of n^(n/(n-1))") {
  // ceil of 2^2, 3^1.5, 4^(4/3), 5^1.25, 6^1.2, computed by hand / double.
  const long expected[] = {4, 6, 7, 8, 9};
  for (unsigned n = 2; n <= 6; ++n) {
    std::vector<long> c(n + 1, 0);
    c[n] = 1;
    CHECK(max_shift_bound(IntPoly::from_i64(c)) == expected[n - 2]);
    CHECK(std::ceil(std::pow(double(n), double(n) / (n - 1))) == expected[n - 2]);
  }
}

TEST_CASE("discriminant properties") {
  Xoshiro256 rng(23);
  for (int i = 0; i < 1000; ++i) {
    const unsigned n = static_cast<unsigned>(2 + rng.below(5));
    const IntPoly f = random_poly(rng, n, 1000);
    const Discriminant d = discriminant(f);
    CHECK(discriminant(taylor_shift(f, rng.symmetric(100'000))) == d);
    CHECK(abs(d.value) <= mahler_bound(f));
  }
}

TEST_CASE("repeated roots give a zero discriminant") {
  Xoshiro256 rng(24);
  for (int i = 0; i < 300; ++i) {
    const long a = rng.symmetric(50);
    const IntPoly square = mul(IntPoly{-a, 1}, IntPoly{-a, 1});
    const IntPoly g = random_poly(rng, static_cast<unsigned>(rng.below(4)), 30);
    const IntPoly f = mul(square, g);
    CHECK(discriminant(f).value == 0);
    CHECK(resultant(f, derivative(f)) == 0);
    // Squares of arbitrary nonconstant factors too.
    const IntPoly h = random_poly(rng, static_cast<unsigned>(1 + rng.below(3)), 20);
    CHECK(discriminant(mul(h, h)).value == 0);
  }
}
