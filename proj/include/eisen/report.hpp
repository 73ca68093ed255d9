#pragma once

// Serialization of decisions, certificates and reports: structured records
// (JSON) and the fixed-column CSV export for experiment reports.

#include "eisen/census.hpp"
#include "eisen/density.hpp"

#include <json.hpp>

#include <string>

namespace eisen {

/// kind,n,H,samples,eisenstein,shifted,f_count,ratio,ci_low,ci_high,seed,unresolved
std::string csv_header();
std::string to_csv_row(const ExperimentReport& r);

nlohmann::ordered_json to_json(const ExperimentReport& r);
ExperimentReport experiment_from_json(const nlohmann::json& j);

/// {"poly": "a0,...,an", "shift": "...", "prime": "..."}; integers are
/// decimal strings so arbitrarily large values survive.
nlohmann::ordered_json certificate_to_json(const IntPoly& f, const ShiftCertificate& c);
std::pair<IntPoly, ShiftCertificate> certificate_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const IntPoly& f, const ShiftedDecision& d);

nlohmann::ordered_json to_json(const DensityReport& r);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace eisen
