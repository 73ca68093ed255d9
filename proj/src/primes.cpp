#include "eisen/primes.hpp"

#include "eisen/rng.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace eisen {

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  primes.push_back(2);
  // composite[i] describes the odd number 2i + 1.
  const std::uint64_t half = (limit - 1) / 2;
  std::vector<bool> composite(half + 1, false);
  for (std::uint64_t i = 1; i <= half; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    primes.push_back(p);
    for (std::uint64_t j = (p * p - 1) / 2; j <= half; j += p) composite[j] = true;
  }
  return primes;
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
  if (count == 0) return {};
  // p_k < k (ln k + ln ln k) for k >= 6.
  const double k = static_cast<double>(std::max<std::size_t>(count, 6));
  auto primes = sieve_primes(static_cast<std::uint64_t>(k * (std::log(k) + std::log(std::log(k)))) + 1);
  primes.resize(count);
  return primes;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

bool fits_u64(const Integer& n) { return mpz_sgn(n.get_mpz_t()) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

u64 to_u64(const Integer& n) {
  u64 v = 0;
  mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, n.get_mpz_t());
  return v;
}

Integer from_u64(u64 v) {
  Integer r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return r;
}

// Primes up to some bound, with groups whose products fit in 64 bits so a
// big integer can be reduced once per group.
struct TrialTable {
  u64 limit = 0;
  std::vector<u64> primes;
  std::vector<u64> group_product;
  std::vector<std::size_t> group_end;  // exclusive end index into primes
};

std::shared_ptr<const TrialTable> trial_table(u64 limit) {
  static std::mutex mutex;
  static std::shared_ptr<const TrialTable> cached;
  std::lock_guard lock(mutex);
  if (cached && cached->limit >= limit) return cached;
  auto table = std::make_shared<TrialTable>();
  table->limit = std::max<u64>(limit, 100'000);
  table->primes = sieve_primes(table->limit);
  u128 prod = 1;
  for (std::size_t i = 0; i < table->primes.size(); ++i) {
    const u64 p = table->primes[i];
    if (prod * p > UINT64_MAX) {
      table->group_product.push_back(static_cast<u64>(prod));
      table->group_end.push_back(i);
      prod = 1;
    }
    prod *= p;
  }
  table->group_product.push_back(static_cast<u64>(prod));
  table->group_end.push_back(table->primes.size());
  cached = table;
  return cached;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a proven witness set below 3.3 * 10^24.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime_u64(to_u64(n));
  // GMP runs Baillie-PSW followed by Miller-Rabin rounds.
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

Integer Factorization::product() const {
  Integer r = cofactor;
  for (const auto& [p, e] : factors) {
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    r *= pe;
  }
  return r;
}

namespace {

// Brent's variant of Pollard rho with batched gcds. Returns a nontrivial
// divisor or 0 when the iteration cap runs out.
u64 rho_u64(u64 n, u64& iterations_left, SplitMix64& rng) {
  if (n % 2 == 0) return 2;
  constexpr u64 kBatch = 128;
  while (iterations_left > 0) {
    const u64 c = rng.next() % (n - 1) + 1;
    u64 y = rng.next() % n;
    auto step = [&](u64 v) {
      u64 r = mul_mod(v, v, n) + c;
      return r >= n || r < c ? r - n : r;
    };
    u64 x = y, ys = y, q = 1, g = 1;
    for (u64 r = 1; g == 1 && iterations_left > 0; r *= 2) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      for (u64 k = 0; k < r && g == 1 && iterations_left > 0; k += kBatch) {
        ys = y;
        const u64 m = std::min({kBatch, r - k, iterations_left});
        for (u64 i = 0; i < m; ++i) {
          y = step(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        iterations_left -= m;
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return 0;
}

Integer rho_mpz(const Integer& n, u64& iterations_left, SplitMix64& rng) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  constexpr u64 kBatch = 128;
  Integer c, y, x, ys, q, g, t;
  while (iterations_left > 0) {
    c = from_u64(rng.next()) % (n - 1) + 1;
    y = from_u64(rng.next()) % n;
    auto step = [&](Integer& v) {
      mpz_mul(t.get_mpz_t(), v.get_mpz_t(), v.get_mpz_t());
      mpz_add(t.get_mpz_t(), t.get_mpz_t(), c.get_mpz_t());
      mpz_mod(v.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
    };
    q = 1;
    g = 1;
    for (u64 r = 1; g == 1 && iterations_left > 0; r *= 2) {
      x = y;
      for (u64 i = 0; i < r; ++i) step(y);
      for (u64 k = 0; k < r && g == 1 && iterations_left > 0; k += kBatch) {
        ys = y;
        const u64 m = std::min({kBatch, r - k, iterations_left});
        for (u64 i = 0; i < m; ++i) {
          step(y);
          mpz_sub(t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
          mpz_mul(q.get_mpz_t(), q.get_mpz_t(), t.get_mpz_t());
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        iterations_left -= m;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (g == n) {
      do {
        step(ys);
        mpz_sub(t.get_mpz_t(), x.get_mpz_t(), ys.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return 0;
}

// Shared engine behind factorize() and nearly_full_prime_divisors(). The
// `irrelevant` predicate lets a caller discard a composite piece (all of
// whose prime factors exceed the trial bound) without splitting it.
class Factorer {
 public:
  explicit Factorer(const FactorBudget& budget) : budget_(budget), rng_(budget.seed) {}

  template <class Irrelevant>
  void run(Integer n, Irrelevant&& irrelevant, const Integer& relevance = Integer(0)) {
    n = abs(n);
    if (!trial_divide(n)) return;
    if (relevance != 0) {
      // Only primes dividing `relevance` are wanted above the trial bound;
      // their exponents are recounted against the full cofactor at the end.
      large_part_ = n;
      mpz_gcd(n.get_mpz_t(), n.get_mpz_t(), relevance.get_mpz_t());
      restricted_ = true;
    }
    std::vector<std::pair<Integer, unsigned long>> work{{n, 1}};
    while (!work.empty()) {
      auto [m, mult] = std::move(work.back());
      work.pop_back();
      if (m == 1) continue;
      if (is_prime(m)) {
        found_[m] += mult;
        continue;
      }
      if (!restricted_ && irrelevant(m)) continue;
      if (budget_.perfect_powers && mpz_perfect_power_p(m.get_mpz_t())) {
        const auto bits = mpz_sizeinbase(m.get_mpz_t(), 2);
        Integer root;
        for (unsigned long k = bits; k >= 2; --k) {
          if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), k)) {
            work.emplace_back(root, mult * k);
            break;
          }
        }
        continue;
      }
      u64 iterations = budget_.rho_iterations;
      Integer d = fits_u64(m) ? from_u64(rho_u64(to_u64(m), iterations, rng_)) : rho_mpz(m, iterations, rng_);
      if (d == 0) {
        unresolved_.emplace_back(m, mult);
        continue;
      }
      Integer rest;
      mpz_divexact(rest.get_mpz_t(), m.get_mpz_t(), d.get_mpz_t());
      work.emplace_back(std::move(rest), mult);
      work.emplace_back(std::move(d), mult);
    }
    refine_unresolved(irrelevant);
    if (restricted_) {
      for (auto& [p, e] : found_) {
        if (p > budget_.trial_bound) e = mpz_remove(large_part_.get_mpz_t(), large_part_.get_mpz_t(), p.get_mpz_t());
      }
    }
  }

  [[nodiscard]] Factorization result() const {
    Factorization f;
    for (const auto& [p, e] : found_) f.factors.push_back({p, e});
    for (const auto& [m, mult] : unresolved_) {
      Integer pe;
      mpz_pow_ui(pe.get_mpz_t(), m.get_mpz_t(), mult);
      f.cofactor *= pe;
    }
    f.certified = unresolved_.empty();
    return f;
  }

 private:
  // Returns false when the remaining cofactor is already 1 or prime.
  bool trial_divide(Integer& n) {
    const auto table = trial_table(budget_.trial_bound);
    const auto& primes = table->primes;
    std::size_t begin = 0;
    for (std::size_t g = 0; g < table->group_end.size(); ++g) {
      const std::size_t end = table->group_end[g];
      const u64 r = mpz_fdiv_ui(n.get_mpz_t(), table->group_product[g]);
      std::size_t i = begin;
      for (; i < end && primes[i] <= budget_.trial_bound; ++i) {
        const u64 p = primes[i];
        if (r % p != 0) continue;
        unsigned long e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
          mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
          ++e;
        }
        found_[Integer(static_cast<unsigned long>(p))] += e;
      }
      if (n == 1) return false;
      // Every prime below primes[i] is gone; a cofactor below its square is prime.
      const Integer next = i < primes.size() ? Integer(static_cast<unsigned long>(primes[i]))
                                             : Integer(static_cast<unsigned long>(budget_.trial_bound + 1));
      if (n < next * next) {
        found_[n] += 1;
        return false;
      }
      if (i < end) break;
      begin = end;
    }
    return true;
  }

  template <class Irrelevant>
  void refine_unresolved(Irrelevant&& irrelevant) {
    // A prime split off one piece may still divide an unresolved composite.
    std::vector<std::pair<Integer, unsigned long>> kept;
    for (auto [m, mult] : unresolved_) {
      for (auto& [p, e] : found_) {
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
          mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
          e += mult;
        }
      }
      if (m == 1) continue;
      if (is_prime(m)) {
        found_[m] += mult;
        continue;
      }
      if (!restricted_ && irrelevant(m)) continue;
      kept.emplace_back(std::move(m), mult);
    }
    unresolved_ = std::move(kept);
  }

  FactorBudget budget_;
  SplitMix64 rng_;
  std::map<Integer, unsigned long> found_;
  Integer large_part_;
  bool restricted_ = false;
  std::vector<std::pair<Integer, unsigned long>> unresolved_;
};

}  // namespace

Factorization factorize(const Integer& n, const FactorBudget& budget) {
  if (n == 0) throw DomainError("factorize: N = 0");
  Factorer f(budget);
  f.run(n, [](const Integer&) { return false; });
  return f.result();
}

NearlyFullDivisors nearly_full_prime_divisors(const Integer& d, unsigned n, const FactorBudget& budget) {
  return nearly_full_prime_divisors(d, n, budget, Integer(0));
}

NearlyFullDivisors nearly_full_prime_divisors(const Integer& d, unsigned n, const FactorBudget& budget,
                                              const Integer& relevance) {
  if (d == 0) throw DomainError("nearly_full_prime_divisors: D = 0");
  if (n < 2) throw DomainError("nearly_full_prime_divisors: n must be at least 2");
  // Pieces left after trial division only have prime factors above the
  // bound, so a piece below (bound + 1)^(n - 1) cannot hold p^(n - 1).
  Integer floor_power;
  mpz_ui_pow_ui(floor_power.get_mpz_t(), budget.trial_bound + 1, n - 1);
  Factorer f(budget);
  f.run(d, [&](const Integer& m) { return n >= 3 && m < floor_power; }, relevance);
  const Factorization fac = f.result();
  NearlyFullDivisors out;
  for (const auto& [p, e] : fac.factors) {
    if (e >= n - 1) out.primes.push_back(p);
  }
  out.certified = fac.certified;
  out.unresolved = fac.cofactor;
  return out;
}

namespace {

// Dense polynomials over F_p, ascending coefficients, no trailing zeros
// (the zero polynomial is empty).
class FpPoly {
 public:
  using Coeffs = std::vector<Integer>;

  explicit FpPoly(const Integer& p) : p_(p) {}

  [[nodiscard]] static bool zero(const Coeffs& a) { return a.empty(); }
  [[nodiscard]] static long deg(const Coeffs& a) { return static_cast<long>(a.size()) - 1; }

  void trim(Coeffs& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  Coeffs reduce(const std::vector<Integer>& in) const {
    Coeffs a(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) mpz_fdiv_r(a[i].get_mpz_t(), in[i].get_mpz_t(), p_.get_mpz_t());
    trim(a);
    return a;
  }

  Integer inverse(const Integer& v) const {
    Integer r;
    mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p_.get_mpz_t());
    return r;
  }

  void make_monic(Coeffs& a) const {
    if (a.empty()) return;
    const Integer inv = inverse(a.back());
    for (auto& c : a) c = mod(c * inv);
  }

  Integer mod(const Integer& v) const {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), p_.get_mpz_t());
    return r;
  }

  // a mod b, b nonzero.
  Coeffs rem(Coeffs a, const Coeffs& b) const {
    const Integer inv = inverse(b.back());
    while (!a.empty() && deg(a) >= deg(b)) {
      const Integer q = mod(a.back() * inv);
      const long shift = deg(a) - deg(b);
      for (long i = 0; i <= deg(b); ++i) a[shift + i] = mod(a[shift + i] - q * b[i]);
      trim(a);
    }
    return a;
  }

  // Exact quotient a / b.
  Coeffs quot(Coeffs a, const Coeffs& b) const {
    const Integer inv = inverse(b.back());
    Coeffs q(std::max<long>(deg(a) - deg(b) + 1, 0));
    while (!a.empty() && deg(a) >= deg(b)) {
      const Integer c = mod(a.back() * inv);
      const long shift = deg(a) - deg(b);
      q[shift] = c;
      for (long i = 0; i <= deg(b); ++i) a[shift + i] = mod(a[shift + i] - c * b[i]);
      trim(a);
    }
    return q;
  }

  Coeffs mul_mod(const Coeffs& a, const Coeffs& b, const Coeffs& m) const {
    if (a.empty() || b.empty()) return {};
    Coeffs r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    for (auto& c : r) c = mod(c);
    trim(r);
    return rem(std::move(r), m);
  }

  Coeffs pow_mod(Coeffs base, Integer e, const Coeffs& m) const {
    Coeffs r{Integer(1)};
    r = rem(std::move(r), m);
    base = rem(std::move(base), m);
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = mul_mod(r, base, m);
      base = mul_mod(base, base, m);
      e >>= 1;
    }
    return r;
  }

  Coeffs gcd(Coeffs a, Coeffs b) const {
    while (!b.empty()) {
      Coeffs r = rem(std::move(a), b);
      a = std::move(b);
      b = std::move(r);
    }
    make_monic(a);
    return a;
  }

  Coeffs sub(Coeffs a, const Coeffs& b) const {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] - b[i]);
    trim(a);
    return a;
  }

  [[nodiscard]] const Integer& p() const { return p_; }

 private:
  Integer p_;
};

void split_linear(const FpPoly& fp, const FpPoly::Coeffs& g, SplitMix64& rng, std::vector<Integer>& roots) {
  if (FpPoly::deg(g) <= 0) return;
  if (FpPoly::deg(g) == 1) {
    roots.push_back(fp.mod(-g[0] * fp.inverse(g[1])));
    return;
  }
  const Integer half = (fp.p() - 1) / 2;
  while (true) {
    const Integer a = fp.mod(from_u64(rng.next()));
    FpPoly::Coeffs h = fp.pow_mod({a, Integer(1)}, half, g);
    h = fp.sub(std::move(h), {Integer(1)});
    FpPoly::Coeffs d = fp.gcd(g, h);
    if (FpPoly::deg(d) > 0 && FpPoly::deg(d) < FpPoly::deg(g)) {
      split_linear(fp, d, rng, roots);
      split_linear(fp, fp.quot(g, d), rng, roots);
      return;
    }
  }
}

}  // namespace

std::vector<Integer> roots_mod_p(const IntPoly& f, const Integer& p, const RootOptions& options) {
  if (!is_prime(p)) throw DomainError("roots_mod_p: modulus is not prime");
  const FpPoly fp(p);
  FpPoly::Coeffs g = fp.reduce(f.coeffs());
  if (g.empty()) throw DomainError("roots_mod_p: polynomial vanishes identically mod p; every residue is a root");
  std::vector<Integer> roots;
  if (FpPoly::deg(g) == 0) return roots;

  if (p < options.scan_threshold) {
    const u64 q = to_u64(p);
    std::vector<u64> c(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) c[i] = to_u64(g[i]);
    for (u64 s = 0; s < q; ++s) {
      u64 acc = c.back();
      for (std::size_t i = c.size() - 1; i-- > 0;) {
        acc = mul_mod(acc, s, q) + c[i];
        if (acc >= q) acc -= q;
      }
      if (acc == 0) roots.push_back(from_u64(s));
    }
    return roots;
  }

  // Product of the distinct linear factors: gcd(x^p - x, g).
  fp.make_monic(g);
  FpPoly::Coeffs xp = fp.pow_mod({Integer(0), Integer(1)}, p, g);
  FpPoly::Coeffs lin = fp.gcd(g, fp.sub(std::move(xp), {Integer(0), Integer(1)}));
  if (!lin.empty() && lin[0] == 0) {
    roots.emplace_back(0);
    lin = fp.quot(lin, {Integer(0), Integer(1)});
  }
  SplitMix64 rng(options.seed);
  split_linear(fp, lin, rng, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

std::vector<std::pair<u64, unsigned>> small_factor(u64 d) {
  if (d < 1) throw DomainError("arithmetic function of d < 1");
  std::vector<std::pair<u64, unsigned>> out;
  const auto fac = factorize(from_u64(d));
  for (const auto& [p, e] : fac.factors) out.emplace_back(to_u64(p), static_cast<unsigned>(e));
  return out;
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t d) {
  u64 phi = d;
  for (const auto& [p, e] : small_factor(d)) phi = phi / p * (p - 1);
  return phi;
}

unsigned omega(std::uint64_t d) { return static_cast<unsigned>(small_factor(d).size()); }

int mobius(std::uint64_t d) {
  const auto fac = small_factor(d);
  for (const auto& [p, e] : fac) {
    if (e > 1) return 0;
  }
  return fac.size() % 2 == 0 ? 1 : -1;
}

}  // namespace eisen
