#include "eisen/primes.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace eisen;
using eisen::testing::is_prime_naive;
using eisen::testing::random_poly;

TEST_CASE("sieve_primes") {
  CHECK(sieve_primes(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(sieve_primes(2) == std::vector<std::uint64_t>{2});
  CHECK(sieve_primes(1).empty());
  CHECK(sieve_primes(0).empty());
  CHECK(sieve_primes(104729).size() == 10000);
  CHECK(first_primes(10000).back() == 104729);
  for (std::uint64_t p : sieve_primes(5000)) CHECK(is_prime_naive(p));
  std::size_t naive = 0;
  for (std::uint64_t k = 0; k <= 5000; ++k) naive += is_prime_naive(k);
  CHECK(sieve_primes(5000).size() == naive);
}

TEST_CASE("is_prime") {
  for (std::uint64_t k = 0; k < 20000; ++k) CHECK(is_prime_u64(k) == is_prime_naive(k));
  CHECK(is_prime_u64(18446744073709551557ULL));
  CHECK_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to 2, 3, 5, 7
  CHECK(is_prime(Integer("170141183460469231731687303715884105727")));
  CHECK_FALSE(is_prime(Integer("170141183460469231731687303715884105729")));
  CHECK_FALSE(is_prime(Integer(-7)));
}

TEST_CASE("factorize examples") {
  const Factorization a = factorize(Integer(-112));
  CHECK(a.certified);
  CHECK(a.factors == std::vector<PrimePower>{{Integer(2), 4}, {Integer(7), 1}});

  const Factorization b = factorize(Integer(-4));
  CHECK(b.certified);
  CHECK(b.factors == std::vector<PrimePower>{{Integer(2), 2}});

  FactorBudget tiny;
  tiny.trial_bound = 100;
  tiny.rho_iterations = 1;
  const Factorization c = factorize(Integer(104729) * 104729, tiny);
  CHECK(c.certified);
  CHECK(c.factors == std::vector<PrimePower>{{Integer(104729), 2}});

  CHECK(factorize(Integer(1)).factors.empty());
  CHECK_THROWS_AS(factorize(Integer(0)), DomainError);
}

TEST_CASE("factorize reconstructs its input") {
  Xoshiro256 rng(31);
  for (int i = 0; i < 300; ++i) {
    Integer n = 1;
    const int parts = 1 + static_cast<int>(rng.below(4));
    for (int j = 0; j < parts; ++j) n *= Integer(static_cast<unsigned long>(rng.below(1ULL << 30) + 2));
    const Factorization f = factorize(n);
    CHECK(f.product() == n);
    CHECK(f.certified);
    for (std::size_t j = 0; j < f.factors.size(); ++j) {
      CHECK(is_prime(f.factors[j].prime));
      if (j > 0) CHECK(f.factors[j - 1].prime < f.factors[j].prime);
    }
  }
  // A budget too small to split a semiprime leaves an honest cofactor.
  FactorBudget tiny;
  tiny.trial_bound = 10;
  tiny.rho_iterations = 1;
  const Integer semi = Integer("1000000007") * Integer("998244353");
  const Factorization g = factorize(semi * 8, tiny);
  CHECK(g.product() == semi * 8);
  if (!g.certified) CHECK(g.cofactor == semi);
}

TEST_CASE("nearly_full_prime_divisors examples") {
  const auto a = nearly_full_prime_divisors(Integer(-4), 2);
  CHECK(a.certified);
  CHECK(a.primes == std::vector<Integer>{Integer(2)});
  const auto b = nearly_full_prime_divisors(Integer(-112), 3);
  CHECK(b.certified);
  CHECK(b.primes == std::vector<Integer>{Integer(2)});
  const auto c = nearly_full_prime_divisors(Integer(-7), 2);
  CHECK(c.primes == std::vector<Integer>{Integer(7)});
  CHECK_THROWS_AS(nearly_full_prime_divisors(Integer(0), 3), DomainError);
}

TEST_CASE("nearly_full_prime_divisors against brute force") {
  Xoshiro256 rng(32);
  for (int i = 0; i < 300; ++i) {
    const unsigned n = static_cast<unsigned>(2 + rng.below(4));
    std::int64_t d = rng.symmetric(1'000'000'000);
    if (d == 0) d = 1;
    // Plant a high power now and then so the answer is not always empty.
    if (i % 3 == 0) {
      std::int64_t q = static_cast<std::int64_t>(first_primes(20)[rng.below(20)]);
      std::int64_t pw = 1;
      for (unsigned k = 0; k + 1 < n; ++k) pw *= q;
      d = (d % 1000 + 1) * pw;
    }
    // Full trial factorization of |d|, then keep primes with exponent >= n - 1.
    std::vector<Integer> expected;
    std::uint64_t rest = static_cast<std::uint64_t>(d < 0 ? -d : d);
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
      unsigned e = 0;
      while (rest % p == 0) rest /= p, ++e;
      if (e > 0 && e >= n - 1) expected.emplace_back(static_cast<unsigned long>(p));
    }
    if (rest > 1 && n == 2) expected.emplace_back(static_cast<unsigned long>(rest));
    const auto got = nearly_full_prime_divisors(Integer(static_cast<long>(d)), n);
    CHECK(got.certified);
    CHECK(got.primes == expected);
  }
}

TEST_CASE("roots_mod_p examples") {
  CHECK(roots_mod_p(IntPoly{5, 4, 1}, Integer(2)) == std::vector<Integer>{Integer(1)});
  CHECK(roots_mod_p(IntPoly{2, 1, 1}, Integer(7)) == std::vector<Integer>{Integer(3)});
  CHECK(roots_mod_p(IntPoly{1, 0, 1}, Integer(3)).empty());
  CHECK_THROWS_AS(roots_mod_p(IntPoly{4, 2}, Integer(2)), DomainError);
  CHECK_THROWS_AS(roots_mod_p(IntPoly{1, 1}, Integer(4)), DomainError);
}

TEST_CASE("roots_mod_p agrees with a residue scan") {
  Xoshiro256 rng(33);
  const auto primes = sieve_primes(1000);
  RootOptions split;
  split.scan_threshold = 0;  // force the gcd / equal-degree splitting path
  for (int i = 0; i < 400; ++i) {
    const std::uint64_t p = primes[rng.below(primes.size())];
    const IntPoly f = random_poly(rng, static_cast<unsigned>(1 + rng.below(6)), 100'000);
    bool zero = true;
    for (const auto& c : f.coeffs()) zero = zero && c % static_cast<unsigned long>(p) == 0;
    if (zero) continue;
    std::vector<Integer> expected;
    for (std::uint64_t s = 0; s < p; ++s) {
      Integer v = evaluate(f, Integer(static_cast<unsigned long>(s)));
      if (v % static_cast<unsigned long>(p) == 0) expected.emplace_back(static_cast<unsigned long>(s));
    }
    const Integer pp(static_cast<unsigned long>(p));
    CHECK(roots_mod_p(f, pp) == expected);
    CHECK(roots_mod_p(f, pp, split) == expected);
  }
}

TEST_CASE("roots_mod_p at a large prime") {
  // (x - 5)(x - 12345678) times an irreducible quadratic x^2 + 1 (p = 3 mod 4).
  const Integer p("1000000000039");
  REQUIRE(is_prime(p));
  REQUIRE(p % 4 == 3);
  const Integer r = 12345678;
  const IntPoly f({Integer(5) * r, -(Integer(5) + r), Integer(1)});
  const IntPoly g({f[0], f[1], f[2] + f[0], f[1], Integer(1)});  // f * (x^2 + 1)
  CHECK(roots_mod_p(g, p) == std::vector<Integer>{Integer(5), r});
}

TEST_CASE("arithmetic functions") {
  CHECK(euler_phi(12) == 4);
  CHECK(omega(12) == 2);
  CHECK(mobius(12) == 0);
  CHECK(euler_phi(30) == 8);
  CHECK(omega(30) == 3);
  CHECK(mobius(30) == -1);
  CHECK(euler_phi(1) == 1);
  CHECK(omega(1) == 0);
  CHECK(mobius(1) == 1);
  CHECK_THROWS_AS(euler_phi(0), DomainError);
  CHECK_THROWS_AS(omega(0), DomainError);
  CHECK_THROWS_AS(mobius(0), DomainError);

  for (std::uint64_t d = 1; d <= 3000; ++d) {
    std::uint64_t phi = 0;
    for (std::uint64_t k = 1; k <= d; ++k) phi += std::gcd(k, d) == 1;
    unsigned w = 0;
    bool squarefree = true;
    for (std::uint64_t p = 2; p <= d; ++p) {
      if (d % p == 0 && is_prime_naive(p)) {
        ++w;
        if (d % (p * p) == 0) squarefree = false;
      }
    }
    CHECK(euler_phi(d) == phi);
    CHECK(omega(d) == w);
    CHECK(mobius(d) == (squarefree ? (w % 2 ? -1 : 1) : 0));
  }
}
