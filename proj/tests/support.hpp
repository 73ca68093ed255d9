#pragma once

// Shared helpers for the test suites: seeded random polynomials and a few
// brute-force oracles that deliberately avoid the library's algorithms.

#include "eisen/poly.hpp"
#include "eisen/rng.hpp"

#include <cstdint>
#include <vector>

namespace eisen::testing {

/// Degree exactly `degree`, coefficients uniform on [-h, h].
inline IntPoly random_poly(Xoshiro256& rng, unsigned degree, std::int64_t h) {
  std::vector<long> c(degree + 1);
  for (unsigned i = 0; i < degree; ++i) c[i] = rng.symmetric(h);
  do {
    c[degree] = rng.symmetric(h);
  } while (c[degree] == 0);
  return IntPoly::from_i64(c);
}

inline bool is_prime_naive(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Expands f(x + s) with binomial coefficients, independent of the
/// synthetic-division implementation.
inline IntPoly shift_by_binomials(const IntPoly& f, const Integer& s) {
  const std::size_t n = f.degree();
  std::vector<Integer> out(n + 1, Integer(0));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t k = 0; k <= i; ++k) {
      Integer binom, sp;
      mpz_bin_uiui(binom.get_mpz_t(), i, k);
      mpz_pow_ui(sp.get_mpz_t(), s.get_mpz_t(), i - k);
      out[k] += f[i] * binom * sp;
    }
  }
  return IntPoly(std::move(out));
}

/// The literal three conditions, p given as a machine integer.
inline bool eisenstein_at_naive(const IntPoly& f, long p) {
  const std::size_t n = f.degree();
  if (n < 1) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (f[i] % p != 0) return false;
  }
  if (f[0] % (p * p) == 0) return false;
  return f[n] % p != 0;
}

}  // namespace eisen::testing
