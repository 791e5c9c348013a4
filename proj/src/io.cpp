#include "hessian_radial/io.hpp"

#include <cstdio>

namespace hessian_radial {

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_profile_csv(std::ostream& os, const RadialProfile& profile) {
    const auto defects = profile.defect ? *profile.defect : cell_defects(profile);
    std::string line;
    os << "r,phi,dphi,volterra,defect\n";
    for (std::size_t i = 0; i < profile.size(); ++i) {
        line.clear();
        line += format_double(profile.grid[i]);
        line += ',';
        line += format_double(profile.phi[i]);
        line += ',';
        line += format_double(profile.dphi[i]);
        line += ',';
        line += format_double(profile.volterra[i]);
        line += ',';
        line += format_double(defects[i]);
        line += '\n';
        os << line;
    }
}

nlohmann::json params_to_json(const ProblemParams& p) {
    return {{"n", p.n}, {"k", p.k}, {"mu", p.mu}};
}

nlohmann::json profile_to_json(const RadialProfile& profile) {
    nlohmann::json j;
    j["schema"] = kSchema;
    j["params"] = params_to_json(profile.params);
    j["f"] = profile.f.spec();
    j["a"] = profile.a;
    j["truncated"] = profile.truncated;
    j["r"] = profile.grid;
    j["phi"] = profile.phi;
    j["dphi"] = profile.dphi;
    j["volterra"] = profile.volterra;
    j["defect"] = profile.defect ? *profile.defect : cell_defects(profile);
    return j;
}

nlohmann::json ko_to_json(const KOVerdict& verdict) {
    const auto& e = verdict.evidence;
    nlohmann::json evidence{{"method", to_string(e.method)},
                            {"exponential_decay", e.exponential_decay},
                            {"fit_residual", e.fit_residual},
                            {"partial_integral", e.partial_integral},
                            {"tau_range", {e.tau_lo, e.tau_hi}}};
    evidence["tail_exponent_estimate"] =
        e.tail_exponent ? nlohmann::json(*e.tail_exponent) : nlohmann::json(nullptr);
    return {{"classification", to_string(verdict.classification)}, {"evidence", evidence}};
}

nlohmann::json existence_to_json(const ExistenceReport& report) {
    return {{"verdict", to_string(report.verdict)},
            {"sharp", report.sharp},
            {"mu_zero", report.mu_zero},
            {"reason", report.reason}};
}

std::string to_string(BlowupReport::Status status) {
    switch (status) {
        case BlowupReport::Status::Global: return "Global";
        case BlowupReport::Status::FiniteBlowup: return "FiniteBlowup";
        case BlowupReport::Status::AdmissibilityFailure: return "AdmissibilityFailure";
    }
    return {};
}

nlohmann::json blowup_to_json(const BlowupReport& report, bool include_profile) {
    nlohmann::json j;
    j["schema"] = kSchema;
    j["params"] = params_to_json(report.profile.params);
    j["f"] = report.profile.f.spec();
    j["a"] = report.profile.a;
    j["status"] = to_string(report.status);
    switch (report.status) {
        case BlowupReport::Status::Global:
            j["r_reached"] = report.r_reached;
            break;
        case BlowupReport::Status::FiniteBlowup:
            j["R_estimate"] = report.R_estimate;
            j["bracket"] = {report.R_lo, report.R_hi};
            break;
        case BlowupReport::Status::AdmissibilityFailure:
            j["r_fail"] = report.r_fail;
            break;
    }
    if (include_profile) j["profile"] = profile_to_json(report.profile);
    return j;
}

nlohmann::json verification_to_json(const VerificationReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& c : report.checks) {
        nlohmann::json row{{"r", c.r}, {"pass", c.pass}, {"margin", c.margin}, {"gamma_k_ok", c.gamma_k_ok}};
        if (c.margin_is_log) row["margin_is_log"] = true;
        rows.push_back(std::move(row));
    }
    nlohmann::json j;
    j["schema"] = kSchema;
    j["params"] = params_to_json(report.params);
    j["A"] = report.A;
    j["alpha"] = report.alpha;
    j["all_pass"] = report.all_pass;
    j["first_failure"] = report.first_failure ? nlohmann::json(*report.first_failure) : nlohmann::json(nullptr);
    j["radii"] = std::move(rows);
    return j;
}

}  // namespace hessian_radial
