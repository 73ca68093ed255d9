#pragma once

// Eisenstein and shifted-Eisenstein decisions with verifiable certificates.

#include "eisen/primes.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace eisen {

/// Conditions p | a_i (i < n), p^2 does not divide a_0, p does not divide
/// a_n. False for constants and non-primes are not checked here.
bool is_eisenstein_at(const IntPoly& f, const Integer& p);

/// Every prime p for which f is Eisenstein, ascending. Throws DomainError on
/// constants.
std::vector<Integer> eisenstein_primes(const IntPoly& f);

bool is_eisenstein(const IntPoly& f);

/// (s, p) such that f(x + s) is Eisenstein with respect to p.
struct ShiftCertificate {
  Integer shift;
  Integer prime;
  friend bool operator==(const ShiftCertificate&, const ShiftCertificate&) = default;
};

enum class Verdict { Yes, NoCertified, NoHeuristic };

enum class NoReason { None, DiscriminantZero, NoQualifyingPrime, NoRootShiftWorks };

struct ShiftedDecision {
  Verdict verdict = Verdict::NoCertified;
  std::optional<ShiftCertificate> certificate;  // set iff verdict == Yes
  NoReason reason = NoReason::None;             // set for NoCertified
  // Diagnostics: primes p with p^(n-1) | D that were searched, and the
  // unfactored part of D when the search could not be certified complete.
  std::vector<Integer> candidate_primes;
  Integer unresolved_cofactor = 1;

  [[nodiscard]] bool yes() const { return verdict == Verdict::Yes; }
};

std::string_view to_string(Verdict v);
std::string_view to_string(NoReason r);

/// How candidate primes above the trial bound are isolated.
///
/// DiscriminantOnly factors D(f) as far as the budget allows.
/// CongruenceFiltered first replaces the unfactored part of D(f) by its gcd
/// with shift_congruence_modulus(f): a prime p not dividing a_n that admits an
/// Eisenstein shift forces f = a_n (x - s)^n mod p, hence divides that
/// modulus. Both strategies return the same certified verdicts.
enum class ShiftStrategy { DiscriminantOnly, CongruenceFiltered };

/// The first nonzero E_k = n^k a_n^(k-1) a_(n-k) - C(n,k) a_(n-1)^k, k = 2..n;
/// zero only when f = a_n (x - r)^n over Q.
Integer shift_congruence_modulus(const IntPoly& f);

/// Decides whether some integer shift of f is Eisenstein. Only primes with
/// p^(n-1) | D(f) can work, and only shifts s with f(s) = 0 mod p. The
/// returned certificate is canonical: (0, smallest witness) when f itself is
/// Eisenstein, otherwise 0 <= s < p with smallest p then smallest s.
/// Throws DomainError when deg f < 2.
ShiftedDecision shifted_eisenstein(const IntPoly& f, const FactorBudget& budget = {},
                                   ShiftStrategy strategy = ShiftStrategy::CongruenceFiltered);

/// Independent re-check: 0 <= shift < prime, prime is prime, and
/// f(x + shift) is Eisenstein at prime.
bool verify_certificate(const IntPoly& f, const ShiftCertificate& c);

/// Brute-force oracle: tries every s in [0, max_shift_bound(f)]. Throws
/// BudgetError when the bound exceeds `cap`, DomainError when deg f < 2.
ShiftedDecision naive_shift_scan(const IntPoly& f, const Integer& cap = Integer(1'000'000));

/// Whether f(x + s + k p) is Eisenstein at p. Always true when (s mod p, p)
/// is a valid certificate.
bool periodicity_check(const IntPoly& f, const Integer& s, const Integer& p, const Integer& k);

}  // namespace eisen
