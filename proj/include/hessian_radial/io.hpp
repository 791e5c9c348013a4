#pragma once

#include <json.hpp>

#include <ostream>
#include <string>

#include "hessian_radial/cauchy_solver.hpp"
#include "hessian_radial/keller_osserman.hpp"
#include "hessian_radial/subsolution_verifier.hpp"

namespace hessian_radial {

/// Version tag carried by every JSON document.
inline constexpr const char* kSchema = "hessian-radial/1";

/// printf("%.17g"): round-trippable and byte-stable.
std::string format_double(double x);

/// CSV with header `r,phi,dphi,volterra,defect`, one row per node, every
/// value formatted by format_double, '\n' line endings. Row 0 has defect 0;
/// row i >= 1 carries the defect of cell [r_{i-1}, r_i].
void write_profile_csv(std::ostream& os, const RadialProfile& profile);

/// {"schema", "params": {n,k,mu}, "f", "a", "truncated",
///  "r", "phi", "dphi", "volterra", "defect"}: arrays parallel to the grid.
nlohmann::json profile_to_json(const RadialProfile& profile);

nlohmann::json params_to_json(const ProblemParams& p);
nlohmann::json ko_to_json(const KOVerdict& verdict);
nlohmann::json existence_to_json(const ExistenceReport& report);
nlohmann::json blowup_to_json(const BlowupReport& report, bool include_profile = false);

/// Per-radius {r, pass, margin, gamma_k_ok} plus a summary.
nlohmann::json verification_to_json(const VerificationReport& report);

std::string to_string(BlowupReport::Status status);

}  // namespace hessian_radial
