#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>

#include "hessian_radial/io.hpp"

using namespace hessian_radial;

namespace {

RadialProfile sample_profile() {
    return picard_solve(ProblemParams::make(3, 2, 0.1), Nonlinearity::exponential(1), 0.1, 1.0, 0.1);
}

}  // namespace

TEST_CASE("format_double round trips") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-2.5e-300) == "-2.5e-300");
    CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
    for (double x : {0.1, 1.0 / 3.0, 2.718281828459045, 1e-17, 6.02214076e23}) {
        CHECK(std::stod(format_double(x)) == x);
    }
}

TEST_CASE("profile CSV layout") {
    const auto prof = sample_profile();
    std::ostringstream os;
    write_profile_csv(os, prof);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "r,phi,dphi,volterra,defect");
    std::getline(is, line);
    CHECK(line.rfind("0,0.10000000000000001,0,0,", 0) == 0);
    CHECK(line.substr(line.size() - 2) == ",0");
    std::size_t rows = 1;
    while (std::getline(is, line)) {
        CHECK(std::count(line.begin(), line.end(), ',') == 4);
        ++rows;
    }
    CHECK(rows == prof.size());
    CHECK(os.str().find("\r") == std::string::npos);
}

TEST_CASE("profile CSV is byte stable") {
    std::ostringstream first, second;
    write_profile_csv(first, sample_profile());
    write_profile_csv(second, sample_profile());
    CHECK(first.str() == second.str());
}

TEST_CASE("profile JSON") {
    const auto prof = sample_profile();
    const auto j = profile_to_json(prof);
    CHECK(j["schema"] == kSchema);
    CHECK(j["params"]["n"] == 3);
    CHECK(j["params"]["k"] == 2);
    CHECK(j["f"] == "exp:1");
    CHECK(j["r"].size() == prof.size());
    CHECK(j["phi"].size() == prof.size());
    CHECK(j["defect"].size() == prof.size());
    CHECK(j["phi"][3].get<double>() == prof.phi[3]);
    CHECK(nlohmann::json::parse(j.dump()) == j);
}

TEST_CASE("blow-up JSON") {
    const auto p = ProblemParams::make(2, 1, 0.0);
    const auto global = blowup_to_json(detect_blowup(p, Nonlinearity::constant(1), 0.0, 5.0));
    CHECK(global["status"] == "Global");
    CHECK(global["r_reached"].get<double>() == doctest::Approx(5.0));
    CHECK_FALSE(global.contains("profile"));

    const auto blow = blowup_to_json(detect_blowup(p, Nonlinearity::exponential(1), 0.0, 10.0), true);
    CHECK(blow["status"] == "FiniteBlowup");
    CHECK(blow["bracket"].size() == 2);
    CHECK(blow["bracket"][0].get<double>() < blow["R_estimate"].get<double>());
    CHECK(blow.contains("profile"));

    const auto bad = blowup_to_json(detect_blowup(ProblemParams::make(3, 2, -0.5), Nonlinearity::constant(1), 0.0, 10.0));
    CHECK(bad["status"] == "AdmissibilityFailure");
    CHECK(bad["r_fail"].get<double>() == doctest::Approx(2.0));
}

TEST_CASE("KO and verification JSON") {
    const auto ko = ko_to_json(ko_classify_numeric(Nonlinearity::power_cutoff(0.5), 2));
    CHECK(ko["classification"] == "Diverges");
    CHECK(ko["evidence"]["method"] == "numeric");
    CHECK(ko["evidence"]["tau_range"].size() == 2);
    CHECK(ko["evidence"]["tail_exponent_estimate"].is_number());
    const auto expo = ko_to_json(ko_classify_analytic(Nonlinearity::exponential(1), 1));
    CHECK(expo["evidence"]["tail_exponent_estimate"].is_null());

    const auto p = ProblemParams::make(2, 1, 0.0);
    const std::vector<double> radii{0.0, 1.0};
    const auto v = verification_to_json(verify_subsolution(p, 0.2, 1.0, radii));
    CHECK(v["all_pass"] == false);
    CHECK(v["first_failure"].get<double>() == 0.0);
    REQUIRE(v["radii"].size() == 2);
    for (const char* key : {"r", "pass", "margin", "gamma_k_ok"}) CHECK(v["radii"][0].contains(key));
}
