#pragma once

// Prime generation, budgeted integer factorization, arithmetic functions and
// root finding modulo a prime.

#include "eisen/poly.hpp"

#include <cstdint>
#include <vector>

namespace eisen {

/// Seed used by every randomized step when the caller does not supply one.
inline constexpr std::uint64_t kDefaultSeed = 0x5EED'E15E'A57E'1A11ULL;

/// Ascending primes <= limit (empty when limit < 2).
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit);

/// The first `count` primes.
std::vector<std::uint64_t> first_primes(std::size_t count);

/// Deterministic Miller-Rabin below 2^64, Baillie-PSW above.
bool is_prime(const Integer& n);
bool is_prime_u64(std::uint64_t n);

struct FactorBudget {
  std::uint64_t trial_bound = 100'000;
  std::uint64_t rho_iterations = 1'000'000;
  bool perfect_powers = true;
  std::uint64_t seed = kDefaultSeed;
};

struct PrimePower {
  Integer prime;
  unsigned long exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  std::vector<PrimePower> factors;  // sorted by prime
  Integer cofactor = 1;             // unfactored part of |N|; 1 when certified
  bool certified = true;

  /// product of prime^exponent times cofactor.
  [[nodiscard]] Integer product() const;
};

/// Factors |N|: trial division to budget.trial_bound, perfect-power
/// extraction, then Brent-Pollard rho capped at budget.rho_iterations per
/// composite. Throws DomainError when N = 0.
Factorization factorize(const Integer& n, const FactorBudget& budget = {});

struct NearlyFullDivisors {
  std::vector<Integer> primes;  // ascending, every p with p^(n-1) | D found so far
  bool certified = true;        // true when no other such prime can exist
  Integer unresolved = 1;       // composite part of |D| that could still hide one
};

/// Primes p with p^(n-1) | D. For n >= 3 only p <= |D|^(1/(n-1)) can
/// qualify, which often certifies the answer without finishing the
/// factorization. Throws DomainError when D = 0 or n < 2.
NearlyFullDivisors nearly_full_prime_divisors(const Integer& d, unsigned n, const FactorBudget& budget = {});

/// As above, but above the trial bound only primes dividing `relevance` are
/// looked for: the part of |D| left after trial division is replaced by its
/// gcd with `relevance` before any splitting. relevance = 0 disables this.
NearlyFullDivisors nearly_full_prime_divisors(const Integer& d, unsigned n, const FactorBudget& budget,
                                              const Integer& relevance);

struct RootOptions {
  std::uint64_t scan_threshold = 1'000'000;
  std::uint64_t seed = kDefaultSeed;
};

/// Distinct residues s in [0, p) with f(s) = 0 mod p, ascending. Throws
/// DomainError when p is not prime or f vanishes identically mod p.
std::vector<Integer> roots_mod_p(const IntPoly& f, const Integer& p, const RootOptions& options = {});

std::uint64_t euler_phi(std::uint64_t d);
unsigned omega(std::uint64_t d);
int mobius(std::uint64_t d);

}  // namespace eisen
