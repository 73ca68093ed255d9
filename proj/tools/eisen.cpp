// eisen: command-line front end.
//
//   eisen check "2,2,1"
//   eisen shift "5,4,1" [--oracle] [--format json]
//   eisen density --degree 2 3 4 --primes 10000
//   eisen census --degree 2 --height 2
//   eisen montecarlo --degree 3 --height 1000000 --samples 20000 --seed 42 --csv out.csv
//
// Exit codes: 0 success / yes, 1 negative (not Eisenstein, certified no),
// 2 input or budget error, 3 heuristic negative.

#include "eisen/algebra.hpp"
#include "eisen/census.hpp"
#include "eisen/density.hpp"
#include "eisen/eisenstein.hpp"
#include "eisen/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace eisen;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInput = 2;
constexpr int kExitHeuristic = 3;

struct Common {
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t trial_bound = 100'000;
  std::uint64_t rho_iterations = 1'000'000;
  bool no_perfect_powers = false;
  std::string strategy = "congruence";

  [[nodiscard]] bool json() const { return format == "json"; }

  [[nodiscard]] FactorBudget budget() const {
    FactorBudget b;
    b.trial_bound = trial_bound;
    b.rho_iterations = rho_iterations;
    b.perfect_powers = !no_perfect_powers;
    b.seed = seed;
    return b;
  }

  [[nodiscard]] ShiftStrategy shift_strategy() const {
    return strategy == "discriminant" ? ShiftStrategy::DiscriminantOnly : ShiftStrategy::CongruenceFiltered;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--seed", c.seed, "Seed for every randomized step (default from EISEN_SEED)");
  cmd->add_option("--trial-bound", c.trial_bound, "Trial division bound")->check(CLI::Range(2ULL, 100'000'000ULL));
  cmd->add_option("--rho-iterations", c.rho_iterations, "Pollard rho iteration cap per composite");
  cmd->add_flag("--no-perfect-powers", c.no_perfect_powers, "Skip perfect-power extraction");
  cmd->add_option("--strategy", c.strategy, "Candidate prime isolation for shift search")
      ->check(CLI::IsMember({"congruence", "discriminant"}));
}

void print_json(const nlohmann::ordered_json& j) { std::cout << j.dump() << '\n'; }

std::string join(const std::vector<Integer>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].get_str();
  return out;
}

int run_check(const std::string& text, const Common& c) {
  const IntPoly f = parse_poly(text);
  if (f.degree() < 1) throw DomainError("the Eisenstein criterion needs a nonconstant polynomial");
  const auto witnesses = eisenstein_primes(f);
  if (c.json()) {
    nlohmann::ordered_json j;
    j["record"] = "eisenstein-check";
    j["poly"] = format_poly(f);
    j["eisenstein"] = !witnesses.empty();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& p : witnesses) arr.push_back(p.get_str());
    j["witnesses"] = arr;
    print_json(j);
  } else {
    std::cout << "poly: " << pretty_poly(f) << '\n';
    if (witnesses.empty()) {
      std::cout << "not Eisenstein\n";
    } else {
      std::cout << "Eisenstein, witness primes: " << join(witnesses) << '\n';
    }
  }
  return witnesses.empty() ? kExitNo : kExitYes;
}

int run_shift(const std::string& text, bool oracle, const std::string& scan_cap, const Common& c) {
  const IntPoly f = parse_poly(text);
  if (f.degree() < 2) throw DomainError("shift search needs degree at least 2");
  const ShiftedDecision d =
      oracle ? naive_shift_scan(f, Integer(scan_cap)) : shifted_eisenstein(f, c.budget(), c.shift_strategy());
  const bool verified = d.certificate && verify_certificate(f, *d.certificate);
  if (c.json()) {
    auto j = to_json(f, d);
    j["method"] = oracle ? "scan" : "discriminant";
    j["verified"] = verified;
    print_json(j);
  } else {
    std::cout << "poly: " << pretty_poly(f) << '\n';
    std::cout << "verdict: " << to_string(d.verdict) << '\n';
    if (d.certificate) {
      std::cout << "certificate: shift=" << d.certificate->shift << " prime=" << d.certificate->prime << '\n';
      std::cout << "shifted: " << pretty_poly(taylor_shift(f, d.certificate->shift)) << '\n';
      std::cout << "verified: " << (verified ? "yes" : "NO") << '\n';
    } else if (d.verdict == Verdict::NoCertified) {
      std::cout << "reason: " << to_string(d.reason) << '\n';
      if (!d.candidate_primes.empty()) std::cout << "candidate primes: " << join(d.candidate_primes) << '\n';
    } else {
      std::cout << "unfactored part of the discriminant: " << d.unresolved_cofactor << '\n';
      std::cout << "raise --rho-iterations to try to certify\n";
    }
  }
  switch (d.verdict) {
    case Verdict::Yes: return kExitYes;
    case Verdict::NoCertified: return kExitNo;
    case Verdict::NoHeuristic: return kExitHeuristic;
  }
  return kExitInput;
}

int run_density(const std::vector<unsigned>& degrees, std::size_t prime_count, const Common& c) {
  for (unsigned n : degrees) {
    if (n < 2) throw DomainError("density: degree must be at least 2");
  }
  if (prime_count < 1) throw DomainError("density: need at least one prime");
  const auto primes = first_primes(prime_count);
  if (c.json()) {
    nlohmann::ordered_json j;
    j["record"] = "density-run";
    j["prime_count"] = prime_count;
    auto rows = nlohmann::ordered_json::array();
    for (unsigned n : degrees) rows.push_back(to_json(density_report(n, primes)));
    j["rows"] = rows;
    print_json(j);
    return kExitYes;
  }
  std::cout << "primes: first " << prime_count << " (largest " << primes.back() << ")\n";
  std::cout << std::left << std::setw(4) << "n" << std::setw(16) << "rho_n" << std::setw(16) << "tau_n"
            << std::setw(16) << "gamma_n" << std::setw(16) << "P_n" << "P_n tail bound\n";
  for (unsigned n : degrees) {
    const auto r = density_report(n, primes);
    std::cout << std::left << std::setw(4) << n << std::setw(16) << format_sci(r.rho, 6) << std::setw(16)
              << format_sci(r.tau, 6) << std::setw(16) << format_sci(r.gamma, 6) << std::setw(16)
              << format_sci(r.p_n, 6) << format_sci(r.tail_bound, 3) << '\n';
  }
  return kExitYes;
}

void emit_experiment(const ExperimentReport& r, const std::string& csv_path, const Common& c) {
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw std::runtime_error("cannot open " + csv_path + " for writing");
    out << csv_header() << '\n' << to_csv_row(r) << '\n';
  }
  if (c.json()) {
    print_json(to_json(r));
    return;
  }
  std::cout << "kind: " << to_string(r.kind) << '\n'
            << "degree: " << r.n << '\n'
            << "maximum height: " << r.height << '\n'
            << (r.kind == ExperimentKind::MonteCarlo ? "samples: " : "polynomials: ") << r.total << '\n'
            << "Eisenstein: " << r.eisenstein << '\n'
            << "shifted Eisenstein: " << r.shifted << '\n'
            << "f and f(x+1) both Eisenstein: " << r.f_count << '\n';
  if (r.ratio) {
    std::cout << "ratio shifted/Eisenstein: " << std::fixed << std::setprecision(3) << *r.ratio << '\n';
  } else {
    std::cout << "ratio shifted/Eisenstein: n/a (no Eisenstein polynomials)\n";
  }
  if (r.ci_low) {
    std::cout << "95% interval: [" << *r.ci_low << ", " << (r.ci_high ? format_double(*r.ci_high) : "inf") << "]\n";
  }
  std::cout.unsetf(std::ios_base::floatfield);
  if (r.seed) std::cout << "seed: " << *r.seed << '\n';
  if (r.kind == ExperimentKind::MonteCarlo) std::cout << "unresolved (heuristic negatives): " << r.unresolved << '\n';
  std::cout << "note: ratio is shifted/Eisenstein; every Eisenstein polynomial is counted as shifted (s = 0)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eisenstein and shifted-Eisenstein irreducibility toolkit"};
  app.require_subcommand(1);

  Common common;
  if (const char* env = std::getenv("EISEN_SEED")) {
    try {
      common.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: EISEN_SEED is not an unsigned integer\n";
      return kExitInput;
    }
  }

  std::string poly_text;
  auto* check = app.add_subcommand("check", "Test the Eisenstein criterion");
  check->add_option("poly", poly_text, "Ascending coefficients, e.g. 5,4,1 for x^2+4x+5")->required();
  add_common(check, common);

  bool oracle = false;
  std::string scan_cap = "1000000";
  auto* shift = app.add_subcommand("shift", "Search for an Eisenstein shift with certificate");
  shift->add_option("poly", poly_text, "Ascending coefficients")->required();
  shift->add_flag("--oracle", oracle, "Scan every shift up to the explicit bound instead");
  shift->add_option("--scan-cap", scan_cap, "Largest shift bound the scan accepts");
  add_common(shift, common);

  std::vector<unsigned> degrees;
  std::size_t prime_count = 10'000;
  auto* density = app.add_subcommand("density", "Density constants rho_n, tau_n, gamma_n, P_n");
  density->add_option("--degree", degrees, "One or more degrees n >= 2")->required();
  density->add_option("--primes", prime_count, "Number of primes in the truncated products");
  add_common(density, common);

  unsigned degree = 0;
  std::uint64_t height = 0;
  std::uint64_t samples = 20'000;
  std::uint64_t enum_cap = 100'000'000;
  int threads = 0;
  std::string csv_path;
  auto* census = app.add_subcommand("census", "Exhaustive count over the height box");
  census->add_option("--degree", degree, "Degree n >= 2")->required();
  census->add_option("--height", height, "Maximum height H >= 1")->required();
  census->add_option("--enum-cap", enum_cap, "Largest (2H+1)^(n+1) accepted");
  census->add_option("--threads", threads, "Worker threads (0: OpenMP default)");
  census->add_option("--csv", csv_path, "Also write the report as CSV");
  add_common(census, common);

  auto* mc = app.add_subcommand("montecarlo", "Seeded Monte Carlo estimate over the height box");
  mc->add_option("--degree", degree, "Degree n >= 2")->required();
  mc->add_option("--height", height, "Maximum height H >= 1")->required();
  mc->add_option("--samples", samples, "Number of sampled polynomials");
  mc->add_option("--threads", threads, "Worker threads (0: OpenMP default)");
  mc->add_option("--csv", csv_path, "Also write the report as CSV");
  add_common(mc, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*check) return run_check(poly_text, common);
    if (*shift) return run_shift(poly_text, oracle, scan_cap, common);
    if (*density) return run_density(degrees, prime_count, common);
    if (*census) {
      CensusOptions o;
      o.enumeration_cap = enum_cap;
      o.budget = common.budget();
      o.threads = threads;
      o.strategy = common.shift_strategy();
      emit_experiment(exact_census(degree, height, o), csv_path, common);
      return kExitYes;
    }
    if (*mc) {
      MonteCarloOptions o;
      o.samples = samples;
      o.seed = common.seed;
      o.budget = common.budget();
      o.threads = threads;
      o.strategy = common.shift_strategy();
      emit_experiment(monte_carlo(degree, height, o), csv_path, common);
      return kExitYes;
    }
  } catch (const std::exception& e) {
    // Parse failures, domain errors and exceeded caps.
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
