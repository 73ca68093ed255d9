#include "eisen/eisenstein.hpp"

#include "eisen/algebra.hpp"

namespace eisen {

bool is_eisenstein_at(const IntPoly& f, const Integer& p) {
  if (f.degree() < 1 || p < 2) return false;
  const std::size_t n = f.degree();
  const mpz_srcptr pm = p.get_mpz_t();
  for (std::size_t i = 0; i < n; ++i) {
    if (!mpz_divisible_p(f[i].get_mpz_t(), pm)) return false;
  }
  if (mpz_divisible_p(f.leading().get_mpz_t(), pm)) return false;
  const Integer p2 = p * p;
  return !mpz_divisible_p(f.constant().get_mpz_t(), p2.get_mpz_t());
}

std::vector<Integer> eisenstein_primes(const IntPoly& f) {
  if (f.degree() < 1) throw DomainError("eisenstein_primes: constant polynomial");
  std::vector<Integer> out;
  if (f.constant() == 0) return out;
  Integer g = 0;
  for (std::size_t i = 0; i < f.degree(); ++i) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), f[i].get_mpz_t());
    if (g == 1) return out;
  }
  // g | a_0 != 0, so g is small enough to factor; escalate the rho cap
  // rather than report an incomplete prime set.
  FactorBudget budget;
  Factorization fac = factorize(g, budget);
  for (int attempt = 0; !fac.certified && attempt < 4; ++attempt) {
    budget.rho_iterations *= 16;
    fac = factorize(g, budget);
  }
  if (!fac.certified) throw BudgetError("eisenstein_primes: could not factor gcd of the coefficients");
  for (const auto& [p, e] : fac.factors) {
    if (is_eisenstein_at(f, p)) out.push_back(p);
  }
  return out;
}

bool is_eisenstein(const IntPoly& f) { return !eisenstein_primes(f).empty(); }

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::NoCertified: return "no-certified";
    case Verdict::NoHeuristic: return "no-heuristic";
  }
  return "?";
}

std::string_view to_string(NoReason r) {
  switch (r) {
    case NoReason::None: return "none";
    case NoReason::DiscriminantZero: return "discriminant-zero";
    case NoReason::NoQualifyingPrime: return "no-qualifying-prime";
    case NoReason::NoRootShiftWorks: return "no-root-shift-works";
  }
  return "?";
}

namespace {

ShiftedDecision yes(Integer s, Integer p) {
  ShiftedDecision d;
  d.verdict = Verdict::Yes;
  d.certificate = ShiftCertificate{std::move(s), std::move(p)};
  return d;
}

}  // namespace

Integer shift_congruence_modulus(const IntPoly& f) {
  const unsigned long n = f.degree();
  const Integer& lead = f.leading();
  const Integer& next = f[n - 1];
  for (unsigned long k = 2; k <= n; ++k) {
    Integer lhs, rhs, t;
    mpz_ui_pow_ui(lhs.get_mpz_t(), n, k);
    mpz_pow_ui(t.get_mpz_t(), lead.get_mpz_t(), k - 1);
    lhs *= t * f[n - k];
    mpz_bin_uiui(rhs.get_mpz_t(), n, k);
    mpz_pow_ui(t.get_mpz_t(), next.get_mpz_t(), k);
    rhs *= t;
    if (lhs != rhs) return lhs - rhs;
  }
  return 0;
}

ShiftedDecision shifted_eisenstein(const IntPoly& f, const FactorBudget& budget, ShiftStrategy strategy) {
  if (f.degree() < 2) throw DomainError("shifted_eisenstein: degree must be at least 2");
  const auto n = static_cast<unsigned>(f.degree());

  if (auto ps = eisenstein_primes(f); !ps.empty()) return yes(0, ps.front());

  const Discriminant disc = discriminant(f);
  ShiftedDecision out;
  if (disc.value == 0) {
    // Eisenstein implies irreducible implies squarefree, and D is shift-invariant.
    out.reason = NoReason::DiscriminantZero;
    return out;
  }

  const Integer relevance = strategy == ShiftStrategy::CongruenceFiltered ? shift_congruence_modulus(f) : Integer(0);
  const NearlyFullDivisors cand = nearly_full_prime_divisors(disc.value, n, budget, relevance);
  RootOptions roots;
  roots.seed = budget.seed;
  for (const Integer& p : cand.primes) {
    // The leading coefficient is shift-invariant.
    if (mpz_divisible_p(f.leading().get_mpz_t(), p.get_mpz_t())) continue;
    out.candidate_primes.push_back(p);
    // f(x + s) has constant term f(s).
    for (const Integer& s : roots_mod_p(f, p, roots)) {
      if (is_eisenstein_at(taylor_shift(f, s), p)) return yes(s, p);
    }
  }

  if (cand.certified) {
    out.reason = out.candidate_primes.empty() ? NoReason::NoQualifyingPrime : NoReason::NoRootShiftWorks;
  } else {
    out.verdict = Verdict::NoHeuristic;
    out.unresolved_cofactor = cand.unresolved;
  }
  return out;
}

bool verify_certificate(const IntPoly& f, const ShiftCertificate& c) {
  if (c.shift < 0 || c.shift >= c.prime) return false;
  if (!is_prime(c.prime)) return false;
  return is_eisenstein_at(taylor_shift(f, c.shift), c.prime);
}

ShiftedDecision naive_shift_scan(const IntPoly& f, const Integer& cap) {
  if (f.degree() < 2) throw DomainError("naive_shift_scan: degree must be at least 2");
  const Integer bound = max_shift_bound(f);
  if (bound > cap) {
    throw BudgetError("naive_shift_scan: scan bound " + bound.get_str() + " exceeds cap " + cap.get_str());
  }
  for (Integer s = 0; s <= bound; ++s) {
    if (auto ps = eisenstein_primes(taylor_shift(f, s)); !ps.empty()) return yes(s, ps.front());
  }
  ShiftedDecision out;
  out.reason = NoReason::NoRootShiftWorks;
  return out;
}

bool periodicity_check(const IntPoly& f, const Integer& s, const Integer& p, const Integer& k) {
  return is_eisenstein_at(taylor_shift(f, s + k * p), p);
}

}  // namespace eisen
