#include "eisen/density.hpp"

#include "eisen/poly.hpp"

namespace eisen {

namespace {

void require(unsigned n, PrimeList primes) {
  if (n < 2) throw DomainError("density: degree must be at least 2");
  if (primes.empty()) throw DomainError("density: empty prime list");
}

// (p-1)^2 / p^(n+2)
Real local_density(std::uint64_t p, unsigned n) {
  const Real pr(p);
  const Real ratio = (pr - 1) / pr;
  return ratio * ratio / pow(pr, static_cast<int>(n));
}

std::size_t chunk_count(PrimeList primes) { return (primes.size() + kDensityChunk - 1) / kDensityChunk; }

// Per-chunk (sum t_p, sum t_p^2, prod (1 - t_p)), computed in parallel and
// folded in chunk order.
struct ChunkTotals {
  Real sum = 0;
  Real sum_sq = 0;
  Real prod = 1;
};

ChunkTotals chunked_totals(unsigned n, PrimeList primes) {
  const auto chunks = static_cast<std::int64_t>(chunk_count(primes));
  std::vector<ChunkTotals> partial(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::size_t begin = static_cast<std::size_t>(c) * kDensityChunk;
    const std::size_t end = std::min(primes.size(), begin + kDensityChunk);
    ChunkTotals t;
    for (std::size_t i = begin; i < end; ++i) {
      const Real d = local_density(primes[i], n);
      t.sum += d;
      t.sum_sq += d * d;
      t.prod *= 1 - d;
    }
    partial[static_cast<std::size_t>(c)] = std::move(t);
  }
  ChunkTotals total;
  for (const auto& t : partial) {
    total.sum += t.sum;
    total.sum_sq += t.sum_sq;
    total.prod *= t.prod;
  }
  return total;
}

Real tail_of_power_sum(std::uint64_t largest, unsigned n) {
  // sum_{m > B} m^(-n) <= B^(1-n) / (n-1)
  return pow(Real(largest), 1 - static_cast<int>(n)) / (n - 1);
}

}  // namespace

PrimeSum compute_p_n(unsigned n, PrimeList primes) {
  require(n, primes);
  return {chunked_totals(n, primes).sum, tail_of_power_sum(primes.back(), n)};
}

Real compute_rho(unsigned n, PrimeList primes) {
  require(n, primes);
  return 1 - chunked_totals(n, primes).prod;
}

Real compute_tau(unsigned n, PrimeList primes) {
  require(n, primes);
  const auto t = chunked_totals(n, primes);
  return t.sum * t.sum - t.sum_sq;
}

Real compute_gamma(unsigned n, PrimeList primes) {
  require(n, primes);
  const auto t = chunked_totals(n, primes);
  const Real rho = 1 - t.prod;
  const Real tau = t.sum * t.sum - t.sum_sq;
  return (1 - tau / rho) / pow(Real(2), static_cast<int>(n * n + n));
}

Real predicted_eisenstein_count(unsigned n, std::uint64_t height, PrimeList primes) {
  if (height < 1) throw DomainError("predicted_eisenstein_count: height must be at least 1");
  const int e = static_cast<int>(n + 1);
  return compute_rho(n, primes) * pow(Real(2), e) * pow(Real(height), e);
}

SinhBound sinh_bound_check(PrimeList primes) {
  if (primes.empty()) throw DomainError("sinh_bound_check: empty prime list");
  SinhBound out;
  out.sum_inv_p2 = 0;
  for (std::uint64_t p : primes) {
    const Real pr(p);
    out.sum_inv_p2 += 1 / (pr * pr);
  }
  out.tail_bound = tail_of_power_sum(primes.back(), 2);
  out.bound_value = 2 * sinh(out.sum_inv_p2 + out.tail_bound);
  return out;
}

DensityReport density_report(unsigned n, PrimeList primes) {
  require(n, primes);
  const auto t = chunked_totals(n, primes);
  DensityReport r;
  r.n = n;
  r.prime_count = primes.size();
  r.largest_prime = primes.back();
  r.p_n = t.sum;
  r.tail_bound = tail_of_power_sum(primes.back(), n);
  r.rho = 1 - t.prod;
  r.tau = t.sum * t.sum - t.sum_sq;
  r.gamma = (1 - r.tau / r.rho) / pow(Real(2), static_cast<int>(n * n + n));
  return r;
}

std::string format_sci(const Real& x, int digits) {
  return x.str(digits - 1, std::ios_base::scientific);
}

namespace serial {

PrimeSum compute_p_n(unsigned n, PrimeList primes) {
  require(n, primes);
  Real sum = 0;
  for (std::uint64_t p : primes) sum += local_density(p, n);
  return {sum, tail_of_power_sum(primes.back(), n)};
}

Real compute_rho(unsigned n, PrimeList primes) {
  require(n, primes);
  Real prod = 1;
  for (std::uint64_t p : primes) prod *= 1 - local_density(p, n);
  return 1 - prod;
}

Real compute_tau(unsigned n, PrimeList primes) {
  require(n, primes);
  Real sum = 0;
  Real sum_sq = 0;
  for (std::uint64_t p : primes) {
    const Real d = local_density(p, n);
    sum += d;
    sum_sq += d * d;
  }
  return sum * sum - sum_sq;
}

}  // namespace serial

}  // namespace eisen
