#include "eisen/eisenstein.hpp"

#include "eisen/algebra.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace eisen;
using eisen::testing::eisenstein_at_naive;
using eisen::testing::random_poly;

namespace {

// A polynomial that is Eisenstein at p by construction.
IntPoly random_eisenstein(Xoshiro256& rng, unsigned n, long p, long h) {
  std::vector<long> c(n + 1);
  for (unsigned i = 1; i < n; ++i) c[i] = p * rng.symmetric(h);
  do {
    c[0] = p * rng.symmetric(h);
  } while (c[0] == 0 || c[0] % (p * p) == 0);
  do {
    c[n] = rng.symmetric(h);
  } while (c[n] % p == 0);
  return IntPoly::from_i64(c);
}

const long kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};

}  // namespace

TEST_CASE("eisenstein_primes examples") {
  CHECK(eisenstein_primes(IntPoly{2, 2, 1}) == std::vector<Integer>{Integer(2)});
  CHECK(eisenstein_primes(IntPoly{5, 4, 1}).empty());
  CHECK(eisenstein_primes(IntPoly{2, 1, 0, 1}).empty());
  CHECK(eisenstein_primes(IntPoly{30, 0, 1}) == std::vector<Integer>{Integer(2), Integer(3), Integer(5)});
  CHECK(eisenstein_primes(IntPoly{0, 2, 1}).empty());
  CHECK_THROWS_AS(eisenstein_primes(IntPoly{6}), DomainError);

  CHECK(is_eisenstein(IntPoly{2, 2, 1}));
  CHECK_FALSE(is_eisenstein(IntPoly{5, 4, 1}));
  CHECK_FALSE(is_eisenstein(IntPoly{2, 2, 4}));
}

TEST_CASE("eisenstein_primes agrees with the literal conditions") {
  Xoshiro256 rng(41);
  for (int i = 0; i < 2000; ++i) {
    const IntPoly f = random_poly(rng, static_cast<unsigned>(1 + rng.below(5)), 60);
    std::vector<Integer> expected;
    for (long p = 2; p <= 60; ++p) {
      if (eisen::testing::is_prime_naive(static_cast<std::uint64_t>(p)) && eisenstein_at_naive(f, p))
        expected.emplace_back(p);
    }
    CHECK(eisenstein_primes(f) == expected);
  }
}

TEST_CASE("shifted_eisenstein examples") {
  const auto a = shifted_eisenstein(IntPoly{5, 4, 1});
  REQUIRE(a.yes());
  CHECK(*a.certificate == ShiftCertificate{Integer(1), Integer(2)});

  const auto b = shifted_eisenstein(IntPoly{2, 1, 0, 1});
  CHECK(b.verdict == Verdict::NoCertified);
  CHECK(b.reason == NoReason::NoRootShiftWorks);
  CHECK(b.candidate_primes == std::vector<Integer>{Integer(2)});

  const auto c = shifted_eisenstein(IntPoly{2, 2, 1});
  REQUIRE(c.yes());
  CHECK(*c.certificate == ShiftCertificate{Integer(0), Integer(2)});

  const auto d = shifted_eisenstein(IntPoly{2, 1, 1});
  REQUIRE(d.yes());
  CHECK(*d.certificate == ShiftCertificate{Integer(3), Integer(7)});

  const auto e = shifted_eisenstein(IntPoly{1, 2, 1});
  CHECK(e.verdict == Verdict::NoCertified);
  CHECK(e.reason == NoReason::DiscriminantZero);

  CHECK_THROWS_AS(shifted_eisenstein(IntPoly{5, 4}), DomainError);
}

TEST_CASE("verify_certificate") {
  CHECK(verify_certificate(IntPoly{5, 4, 1}, {Integer(1), Integer(2)}));
  CHECK_FALSE(verify_certificate(IntPoly{5, 4, 1}, {Integer(0), Integer(2)}));
  CHECK(verify_certificate(IntPoly{2, 1, 1}, {Integer(3), Integer(7)}));
  CHECK_FALSE(verify_certificate(IntPoly{5, 4, 1}, {Integer(3), Integer(2)}));  // not canonical
  CHECK_FALSE(verify_certificate(IntPoly{5, 4, 1}, {Integer(1), Integer(4)}));  // not prime
}

TEST_CASE("naive_shift_scan") {
  const auto a = naive_shift_scan(IntPoly{5, 4, 1});
  REQUIRE(a.yes());
  CHECK(a.certificate->shift == 1);
  CHECK(naive_shift_scan(IntPoly{2, 1, 0, 1}).verdict == Verdict::NoCertified);
  const auto c = naive_shift_scan(IntPoly{2, 2, 1});
  REQUIRE(c.yes());
  CHECK(c.certificate->shift == 0);
  CHECK_THROWS_AS(naive_shift_scan(IntPoly{1000, 1000, 1000}, Integer(1000)), BudgetError);
  CHECK_THROWS_AS(naive_shift_scan(IntPoly{1, 1}), DomainError);
}

TEST_CASE("periodicity_check examples") {
  CHECK(periodicity_check(IntPoly{5, 4, 1}, Integer(1), Integer(2), Integer(1)));
  CHECK(periodicity_check(IntPoly{5, 4, 1}, Integer(1), Integer(2), Integer(-1)));
  CHECK(periodicity_check(IntPoly{2, 1, 1}, Integer(3), Integer(7), Integer(2)));
}

TEST_CASE("negative family x^n + x + 2") {
  for (unsigned n = 3; n <= 8; ++n) {
    std::vector<long> c(n + 1, 0);
    c[0] = 2;
    c[1] = 1;
    c[n] = 1;
    const auto d = shifted_eisenstein(IntPoly::from_i64(c));
    CHECK(d.verdict == Verdict::NoCertified);
  }
}

TEST_CASE("certificates are sound and canonical") {
  Xoshiro256 rng(42);
  int yes = 0;
  for (int i = 0; i < 2000; ++i) {
    const IntPoly f = random_poly(rng, static_cast<unsigned>(2 + rng.below(4)), 1000);
    const auto d = shifted_eisenstein(f);
    CHECK(d.verdict != Verdict::NoHeuristic);
    if (!d.yes()) continue;
    ++yes;
    CHECK(verify_certificate(f, *d.certificate));
    const ShiftCertificate& c = *d.certificate;
    const IntPoly g = taylor_shift(f, c.shift);
    CHECK(eisenstein_at_naive(g, c.prime.get_si()));
  }
  CHECK(yes > 0);
}

TEST_CASE("Eisenstein at p rules out the shift by one at p") {
  Xoshiro256 rng(43);
  for (int i = 0; i < 1000; ++i) {
    const long p = kSmallPrimes[rng.below(std::size(kSmallPrimes))];
    const IntPoly f = random_eisenstein(rng, static_cast<unsigned>(2 + rng.below(6)), p, 1000);
    REQUIRE(is_eisenstein_at(f, Integer(p)));
    CHECK_FALSE(is_eisenstein_at(taylor_shift(f, 1), Integer(p)));
  }
}

TEST_CASE("certificate periodicity and root necessity") {
  Xoshiro256 rng(44);
  for (int i = 0; i < 1000; ++i) {
    const long p = kSmallPrimes[rng.below(std::size(kSmallPrimes))];
    const IntPoly e = random_eisenstein(rng, static_cast<unsigned>(2 + rng.below(5)), p, 1000);
    const Integer s0 = rng.symmetric(1000);
    const IntPoly f = taylor_shift(e, -s0);  // f(x + s0) = e
    const auto d = shifted_eisenstein(f);
    REQUIRE(d.yes());
    const ShiftCertificate& c = *d.certificate;
    if (!is_eisenstein(f)) CHECK(c.prime <= p);
    for (long k = -10; k <= 10; ++k) CHECK(periodicity_check(f, c.shift, c.prime, Integer(k)));
    CHECK(evaluate(f, c.shift) % c.prime == 0);
    CHECK(periodicity_check(f, s0, Integer(p), Integer(static_cast<long>(rng.symmetric(10)))));
    // Every prime with an Eisenstein shift divides D to the (n-1)th power.
    Integer pw;
    mpz_pow_ui(pw.get_mpz_t(), c.prime.get_mpz_t(), f.degree() - 1);
    CHECK(discriminant(f).value % pw == 0);
  }
}

TEST_CASE("strategies give identical verdicts") {
  Xoshiro256 rng(45);
  for (int i = 0; i < 500; ++i) {
    const IntPoly f = random_poly(rng, static_cast<unsigned>(2 + rng.below(3)), 100'000);
    const auto a = shifted_eisenstein(f, {}, ShiftStrategy::CongruenceFiltered);
    const auto b = shifted_eisenstein(f, {}, ShiftStrategy::DiscriminantOnly);
    if (a.verdict == Verdict::NoHeuristic || b.verdict == Verdict::NoHeuristic) continue;
    CHECK(a.verdict == b.verdict);
    CHECK(a.certificate == b.certificate);
  }
}

TEST_CASE("decision matches the naive scan on small boxes") {
  Xoshiro256 rng(46);
  for (int i = 0; i < 1500; ++i) {
    const IntPoly f = random_poly(rng, static_cast<unsigned>(2 + rng.below(3)), 6);
    const auto fast = shifted_eisenstein(f);
    const auto slow = naive_shift_scan(f, Integer(10'000'000));
    CHECK(fast.yes() == slow.yes());
    if (slow.yes()) CHECK(verify_certificate(f, {slow.certificate->shift % slow.certificate->prime, slow.certificate->prime}));
  }
}
