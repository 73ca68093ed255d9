#pragma once

// Density constants for Eisenstein polynomials, evaluated as truncated
// Euler products / prime sums over a caller-supplied list of primes.
//
//   P_n     = sum_p (p-1)^2 / p^(n+2)
//   rho_n   = 1 - prod_p (1 - (p-1)^2 / p^(n+2))
//   tau_n   = P_n^2 - sum_p (p-1)^4 / p^(2n+4)
//   gamma_n = (1 - tau_n / rho_n) / 2^(n^2+n)
//
// The prime list is expected to be every prime up to its last element; tail
// bounds are stated under that assumption.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace eisen {

/// 50 decimal digits (166-bit significand).
using Real = boost::multiprecision::cpp_bin_float_50;

using PrimeList = std::span<const std::uint64_t>;

struct PrimeSum {
  Real value;
  Real tail_bound;  // upper bound on the omitted terms
};

/// Partial sums are accumulated over fixed-size chunks of the prime list and
/// combined in chunk order, so the result does not depend on thread count.
inline constexpr std::size_t kDensityChunk = 512;

PrimeSum compute_p_n(unsigned n, PrimeList primes);
Real compute_rho(unsigned n, PrimeList primes);
Real compute_tau(unsigned n, PrimeList primes);
Real compute_gamma(unsigned n, PrimeList primes);

/// rho_n 2^(n+1) H^(n+1): main term for the number of Eisenstein polynomials
/// of degree n and height at most H.
Real predicted_eisenstein_count(unsigned n, std::uint64_t height, PrimeList primes);

struct SinhBound {
  Real sum_inv_p2;  // partial sum of 1/p^2
  Real tail_bound;  // omitted terms are below 1/B
  Real bound_value; // 2 sinh(sum + tail)
};

SinhBound sinh_bound_check(PrimeList primes);

struct DensityReport {
  unsigned n = 0;
  std::size_t prime_count = 0;
  std::uint64_t largest_prime = 0;
  Real rho;
  Real tau;
  Real gamma;
  Real p_n;
  Real tail_bound;
};

DensityReport density_report(unsigned n, PrimeList primes);

/// Scientific notation with `digits` significant digits, e.g. "1.33e-02".
std::string format_sci(const Real& x, int digits);

namespace serial {

// Single-threaded left-to-right evaluation, kept as a reference for the
// chunked parallel kernels.
PrimeSum compute_p_n(unsigned n, PrimeList primes);
Real compute_rho(unsigned n, PrimeList primes);
Real compute_tau(unsigned n, PrimeList primes);

}  // namespace serial

}  // namespace eisen
