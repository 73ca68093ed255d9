#include "eisen/census.hpp"

#include "eisen/rng.hpp"

#include <cmath>
#include <numeric>
#include <omp.h>
#include <vector>

namespace eisen {

std::string_view to_string(ExperimentKind k) {
  return k == ExperimentKind::ExactCensus ? "exact-census" : "monte-carlo";
}

Classification classify(const IntPoly& f, const FactorBudget& budget, bool require_certified,
                        ShiftStrategy strategy) {
  Classification c;
  c.eisenstein = is_eisenstein(f);
  if (c.eisenstein) {
    c.shifted = true;
    c.in_f = is_eisenstein(taylor_shift(f, 1));
    return c;
  }
  FactorBudget b = budget;
  ShiftedDecision d = shifted_eisenstein(f, b, strategy);
  if (require_certified) {
    for (int attempt = 0; d.verdict == Verdict::NoHeuristic; ++attempt) {
      if (attempt == 6) throw BudgetError("exact_census: could not certify " + format_poly(f));
      b.rho_iterations *= 16;
      d = shifted_eisenstein(f, b, strategy);
    }
  }
  c.shifted = d.yes();
  c.unresolved = d.verdict == Verdict::NoHeuristic;
  return c;
}

std::pair<double, double> wilson_interval(std::uint64_t k, std::uint64_t m) {
  if (m == 0) return {0.0, 1.0};
  constexpr double z = 1.959963984540054;
  const double nn = static_cast<double>(m);
  const double phat = static_cast<double>(k) / nn;
  const double denom = 1 + z * z / nn;
  const double center = (phat + z * z / (2 * nn)) / denom;
  const double half = z * std::sqrt(phat * (1 - phat) / nn + z * z / (4 * nn * nn)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

namespace {

struct Tally {
  std::uint64_t total = 0;
  std::uint64_t eisenstein = 0;
  std::uint64_t shifted = 0;
  std::uint64_t f_count = 0;
  std::uint64_t unresolved = 0;

  void add(const Classification& c) {
    ++total;
    eisenstein += c.eisenstein;
    shifted += c.shifted;
    f_count += c.in_f;
    unresolved += c.unresolved;
  }

  Tally& operator+=(const Tally& o) {
    total += o.total;
    eisenstein += o.eisenstein;
    shifted += o.shifted;
    f_count += o.f_count;
    unresolved += o.unresolved;
    return *this;
  }
};

ExperimentReport make_report(ExperimentKind kind, unsigned n, std::uint64_t height, const Tally& t) {
  ExperimentReport r;
  r.kind = kind;
  r.n = n;
  r.height = height;
  r.total = t.total;
  r.eisenstein = t.eisenstein;
  r.shifted = t.shifted;
  r.f_count = t.f_count;
  r.unresolved = t.unresolved;
  if (t.eisenstein > 0) r.ratio = static_cast<double>(t.shifted) / static_cast<double>(t.eisenstein);
  return r;
}

void add_ratio_interval(ExperimentReport& r) {
  if (r.eisenstein == 0) return;
  // Conservative: the ratio of the two proportions over the product of their intervals.
  const auto [e_lo, e_hi] = wilson_interval(r.eisenstein, r.total);
  const auto [s_lo, s_hi] = wilson_interval(r.shifted, r.total);
  r.ci_low = s_lo / e_hi;
  if (e_lo > 0) r.ci_high = s_hi / e_lo;
}

// (2H+1)^(n+1), or 0 when it exceeds the cap.
std::uint64_t box_size(unsigned n, std::uint64_t height, std::uint64_t cap) {
  const unsigned __int128 side = 2 * static_cast<unsigned __int128>(height) + 1;
  unsigned __int128 total = 1;
  for (unsigned i = 0; i <= n; ++i) {
    total *= side;
    if (total > cap) return 0;
  }
  return static_cast<std::uint64_t>(total);
}

void require_census_args(unsigned n, std::uint64_t height) {
  if (n < 2) throw DomainError("census: degree must be at least 2");
  if (height < 1) throw DomainError("census: height must be at least 1");
}

std::uint64_t checked_box(unsigned n, std::uint64_t height, std::uint64_t cap) {
  const std::uint64_t size = box_size(n, height, cap);
  if (size == 0) {
    throw BudgetError("census: (2H+1)^(n+1) exceeds the enumeration cap of " + std::to_string(cap));
  }
  return size;
}

// Coefficients for lattice index `index`, least significant digit a_0.
void decode(std::uint64_t index, std::uint64_t height, std::vector<long>& coeffs) {
  const std::uint64_t side = 2 * height + 1;
  for (auto& c : coeffs) {
    c = static_cast<long>(index % side) - static_cast<long>(height);
    index /= side;
  }
}

IntPoly draw(Xoshiro256& rng, unsigned n, std::uint64_t height, std::vector<long>& coeffs) {
  const auto h = static_cast<std::int64_t>(height);
  for (unsigned i = 0; i < n; ++i) coeffs[i] = rng.symmetric(h);
  do {
    coeffs[n] = rng.symmetric(h);
  } while (coeffs[n] == 0);
  return IntPoly::from_i64(coeffs);
}

constexpr std::uint64_t kCensusChunk = 1024;

template <class Body>
std::vector<Tally> run_chunks(std::uint64_t chunks, int threads, Body&& body) {
  std::vector<Tally> partial(chunks);
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
  const auto count = static_cast<std::int64_t>(chunks);
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
  for (std::int64_t c = 0; c < count; ++c) {
    partial[static_cast<std::size_t>(c)] = body(static_cast<std::uint64_t>(c));
  }
  return partial;
}

}  // namespace

ExperimentReport exact_census(unsigned n, std::uint64_t height, const CensusOptions& options) {
  require_census_args(n, height);
  const std::uint64_t size = checked_box(n, height, options.enumeration_cap);
  const std::uint64_t chunks = (size + kCensusChunk - 1) / kCensusChunk;
  // Exceptions must not escape an OpenMP region; capture and rethrow.
  std::exception_ptr error;
  auto partial = run_chunks(chunks, options.threads, [&](std::uint64_t c) {
    Tally t;
    std::vector<long> coeffs(n + 1);
    try {
      for (std::uint64_t i = c * kCensusChunk; i < std::min(size, (c + 1) * kCensusChunk); ++i) {
        decode(i, height, coeffs);
        if (coeffs[n] == 0) continue;
        t.add(classify(IntPoly::from_i64(coeffs), options.budget, true, options.strategy));
      }
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
    return t;
  });
  if (error) std::rethrow_exception(error);
  Tally total;
  for (const auto& t : partial) total += t;
  return make_report(ExperimentKind::ExactCensus, n, height, total);
}

std::uint64_t census_h_subset(unsigned n, std::uint64_t d, std::uint64_t height, std::uint64_t enumeration_cap) {
  if (d < 2 || mobius(d) == 0) throw DomainError("census_h_subset: d must be squarefree and at least 2");
  require_census_args(n, height);
  const std::uint64_t size = checked_box(n, height, enumeration_cap);
  const auto sd = static_cast<long>(d);
  std::uint64_t count = 0;
  std::vector<long> coeffs(n + 1);
  for (std::uint64_t i = 0; i < size; ++i) {
    decode(i, height, coeffs);
    bool ok = std::gcd(coeffs[n], sd) == 1;
    for (unsigned j = 0; ok && j < n; ++j) ok = coeffs[j] % sd == 0;
    ok = ok && std::gcd(coeffs[0] / sd, sd) == 1;
    count += ok;
  }
  return count;
}

ExperimentReport monte_carlo(unsigned n, std::uint64_t height, const MonteCarloOptions& options) {
  require_census_args(n, height);
  if (options.samples < 1) throw DomainError("monte_carlo: samples must be at least 1");
  if (options.chunk < 1) throw DomainError("monte_carlo: chunk must be at least 1");
  const std::uint64_t chunks = (options.samples + options.chunk - 1) / options.chunk;
  std::exception_ptr error;
  auto partial = run_chunks(chunks, options.threads, [&](std::uint64_t c) {
    Tally t;
    std::vector<long> coeffs(n + 1);
    try {
      Xoshiro256 rng = Xoshiro256::substream(options.seed, c);
      const std::uint64_t end = std::min(options.samples, (c + 1) * options.chunk);
      for (std::uint64_t i = c * options.chunk; i < end; ++i) {
        t.add(classify(draw(rng, n, height, coeffs), options.budget, false, options.strategy));
      }
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
    return t;
  });
  if (error) std::rethrow_exception(error);
  Tally total;
  for (const auto& t : partial) total += t;
  ExperimentReport r = make_report(ExperimentKind::MonteCarlo, n, height, total);
  r.seed = options.seed;
  add_ratio_interval(r);
  return r;
}

namespace serial {

ExperimentReport exact_census(unsigned n, std::uint64_t height, const CensusOptions& options) {
  require_census_args(n, height);
  const std::uint64_t size = checked_box(n, height, options.enumeration_cap);
  Tally t;
  std::vector<long> coeffs(n + 1);
  for (std::uint64_t i = 0; i < size; ++i) {
    decode(i, height, coeffs);
    if (coeffs[n] == 0) continue;
    t.add(classify(IntPoly::from_i64(coeffs), options.budget, true, options.strategy));
  }
  return make_report(ExperimentKind::ExactCensus, n, height, t);
}

ExperimentReport monte_carlo(unsigned n, std::uint64_t height, const MonteCarloOptions& options) {
  require_census_args(n, height);
  if (options.samples < 1) throw DomainError("monte_carlo: samples must be at least 1");
  if (options.chunk < 1) throw DomainError("monte_carlo: chunk must be at least 1");
  Tally t;
  std::vector<long> coeffs(n + 1);
  Xoshiro256 rng(0);
  for (std::uint64_t i = 0; i < options.samples; ++i) {
    if (i % options.chunk == 0) rng = Xoshiro256::substream(options.seed, i / options.chunk);
    t.add(classify(draw(rng, n, height, coeffs), options.budget, false, options.strategy));
  }
  ExperimentReport r = make_report(ExperimentKind::MonteCarlo, n, height, t);
  r.seed = options.seed;
  add_ratio_interval(r);
  return r;
}

}  // namespace serial

}  // namespace eisen
