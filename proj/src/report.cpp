#include "eisen/report.hpp"

#include <charconv>
#include <stdexcept>

namespace eisen {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string csv_header() { return "kind,n,H,samples,eisenstein,shifted,f_count,ratio,ci_low,ci_high,seed,unresolved"; }

namespace {

std::string opt(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

template <class T>
void put_opt(nlohmann::ordered_json& j, const char* key, const std::optional<T>& v) {
  if (v) {
    j[key] = *v;
  } else {
    j[key] = nullptr;
  }
}

template <class T>
std::optional<T> get_opt(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

std::string to_csv_row(const ExperimentReport& r) {
  std::string row;
  row += to_string(r.kind);
  row += ',' + std::to_string(r.n);
  row += ',' + std::to_string(r.height);
  row += ',' + std::to_string(r.total);
  row += ',' + std::to_string(r.eisenstein);
  row += ',' + std::to_string(r.shifted);
  row += ',' + std::to_string(r.f_count);
  row += ',' + opt(r.ratio);
  row += ',' + opt(r.ci_low);
  row += ',' + opt(r.ci_high);
  row += ',' + (r.seed ? std::to_string(*r.seed) : std::string());
  row += ',' + std::to_string(r.unresolved);
  return row;
}

nlohmann::ordered_json to_json(const ExperimentReport& r) {
  nlohmann::ordered_json j;
  j["record"] = "experiment";
  j["kind"] = to_string(r.kind);
  j["n"] = r.n;
  j["H"] = r.height;
  j["samples"] = r.total;
  j["eisenstein"] = r.eisenstein;
  j["shifted"] = r.shifted;
  j["f_count"] = r.f_count;
  put_opt(j, "ratio", r.ratio);
  put_opt(j, "ci_low", r.ci_low);
  put_opt(j, "ci_high", r.ci_high);
  put_opt(j, "seed", r.seed);
  j["unresolved"] = r.unresolved;
  return j;
}

ExperimentReport experiment_from_json(const nlohmann::json& j) {
  ExperimentReport r;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "exact-census") {
    r.kind = ExperimentKind::ExactCensus;
  } else if (kind == "monte-carlo") {
    r.kind = ExperimentKind::MonteCarlo;
  } else {
    throw std::invalid_argument("unknown experiment kind '" + kind + "'");
  }
  r.n = j.at("n").get<unsigned>();
  r.height = j.at("H").get<std::uint64_t>();
  r.total = j.at("samples").get<std::uint64_t>();
  r.eisenstein = j.at("eisenstein").get<std::uint64_t>();
  r.shifted = j.at("shifted").get<std::uint64_t>();
  r.f_count = j.at("f_count").get<std::uint64_t>();
  r.ratio = get_opt<double>(j, "ratio");
  r.ci_low = get_opt<double>(j, "ci_low");
  r.ci_high = get_opt<double>(j, "ci_high");
  r.seed = get_opt<std::uint64_t>(j, "seed");
  r.unresolved = j.at("unresolved").get<std::uint64_t>();
  return r;
}

nlohmann::ordered_json certificate_to_json(const IntPoly& f, const ShiftCertificate& c) {
  nlohmann::ordered_json j;
  j["poly"] = format_poly(f);
  j["shift"] = c.shift.get_str();
  j["prime"] = c.prime.get_str();
  return j;
}

std::pair<IntPoly, ShiftCertificate> certificate_from_json(const nlohmann::json& j) {
  IntPoly f = parse_poly(j.at("poly").get<std::string>());
  ShiftCertificate c;
  if (c.shift.set_str(j.at("shift").get<std::string>(), 10) != 0 ||
      c.prime.set_str(j.at("prime").get<std::string>(), 10) != 0) {
    throw std::invalid_argument("certificate: malformed integer");
  }
  return {std::move(f), std::move(c)};
}

nlohmann::ordered_json to_json(const IntPoly& f, const ShiftedDecision& d) {
  nlohmann::ordered_json j;
  j["record"] = "shifted-decision";
  j["poly"] = format_poly(f);
  j["verdict"] = to_string(d.verdict);
  if (d.certificate) {
    j["certificate"] = certificate_to_json(f, *d.certificate);
  } else {
    j["certificate"] = nullptr;
  }
  j["reason"] = d.verdict == Verdict::NoCertified ? nlohmann::ordered_json(to_string(d.reason)) : nullptr;
  auto primes = nlohmann::ordered_json::array();
  for (const auto& p : d.candidate_primes) primes.push_back(p.get_str());
  j["candidate_primes"] = primes;
  j["unresolved_cofactor"] = d.unresolved_cofactor.get_str();
  return j;
}

nlohmann::ordered_json to_json(const DensityReport& r) {
  nlohmann::ordered_json j;
  j["record"] = "density";
  j["n"] = r.n;
  j["prime_count"] = r.prime_count;
  j["largest_prime"] = r.largest_prime;
  // 40 significant digits, as strings to keep the working precision.
  j["rho"] = r.rho.str(40, std::ios_base::scientific);
  j["tau"] = r.tau.str(40, std::ios_base::scientific);
  j["gamma"] = r.gamma.str(40, std::ios_base::scientific);
  j["p_n"] = r.p_n.str(40, std::ios_base::scientific);
  j["tail_bound"] = r.tail_bound.str(40, std::ios_base::scientific);
  return j;
}

}  // namespace eisen
