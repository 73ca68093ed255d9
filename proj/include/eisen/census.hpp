#pragma once

// Exhaustive enumeration and seeded Monte Carlo estimation over the box of
// degree-n integer polynomials with height at most H.
//
// Both drivers are data-parallel (OpenMP) over fixed chunks whose results are
// merged in chunk order, so reports never depend on the thread count. The
// `serial` namespace holds straight-line reference versions used by the
// tests and the benchmark.

#include "eisen/eisenstein.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace eisen {

enum class ExperimentKind { ExactCensus, MonteCarlo };

std::string_view to_string(ExperimentKind k);

struct ExperimentReport {
  ExperimentKind kind = ExperimentKind::ExactCensus;
  unsigned n = 0;
  std::uint64_t height = 0;
  std::uint64_t total = 0;  // polynomials enumerated or sampled
  std::uint64_t eisenstein = 0;
  std::uint64_t shifted = 0;
  std::uint64_t f_count = 0;  // f and f(x+1) both Eisenstein
  std::optional<double> ratio;  // shifted / eisenstein, absent when eisenstein == 0
  std::optional<double> ci_low;
  std::optional<double> ci_high;
  std::optional<std::uint64_t> seed;
  std::uint64_t unresolved = 0;  // heuristic negatives

  friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

struct CensusOptions {
  std::uint64_t enumeration_cap = 100'000'000;
  FactorBudget budget;
  ShiftStrategy strategy = ShiftStrategy::CongruenceFiltered;
  int threads = 0;  // 0: OpenMP default
};

/// Classifies every (a_0, ..., a_n) with |a_i| <= H and a_n != 0. Negative
/// shifted decisions are always certified (the rho budget is escalated).
/// Throws BudgetError when (2H+1)^(n+1) exceeds the enumeration cap.
ExperimentReport exact_census(unsigned n, std::uint64_t height, const CensusOptions& options = {});

/// Number of height-<=H polynomials with d | a_i (i < n), gcd(a_0/d, d) = 1
/// and gcd(a_n, d) = 1. Throws DomainError unless d >= 2 is squarefree.
std::uint64_t census_h_subset(unsigned n, std::uint64_t d, std::uint64_t height,
                              std::uint64_t enumeration_cap = 100'000'000);

struct MonteCarloOptions {
  std::uint64_t samples = 20'000;
  std::uint64_t seed = kDefaultSeed;
  FactorBudget budget;
  ShiftStrategy strategy = ShiftStrategy::CongruenceFiltered;
  int threads = 0;
  std::uint64_t chunk = 256;  // samples per RNG substream
};

/// Samples a_i uniformly on [-H, H] (a_n resampled until nonzero), one
/// xoshiro256** substream per chunk of `chunk` samples.
ExperimentReport monte_carlo(unsigned n, std::uint64_t height, const MonteCarloOptions& options = {});

/// 95% Wilson score interval for k successes out of m trials.
std::pair<double, double> wilson_interval(std::uint64_t k, std::uint64_t m);

/// Per-polynomial classification shared by the drivers.
struct Classification {
  bool eisenstein = false;
  bool shifted = false;
  bool in_f = false;
  bool unresolved = false;
};

Classification classify(const IntPoly& f, const FactorBudget& budget, bool require_certified,
                        ShiftStrategy strategy = ShiftStrategy::CongruenceFiltered);

namespace serial {

ExperimentReport exact_census(unsigned n, std::uint64_t height, const CensusOptions& options = {});
ExperimentReport monte_carlo(unsigned n, std::uint64_t height, const MonteCarloOptions& options = {});

}  // namespace serial

}  // namespace eisen
