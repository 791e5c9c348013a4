#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hessian_radial/cauchy_solver.hpp"
#include "hessian_radial/keller_osserman.hpp"

namespace hessian_radial::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kAdmissibility = 2,
    kBlowup = 3,
    kInconclusive = 4,
    kIoError = 10,
};

enum class Command { Solve, Blowup, Ko, Verify, Mu0, Sweep };
enum class Format { Csv, Json };

struct RunConfig {
    Command command = Command::Solve;
    ProblemParams params;
    std::string f_spec = "const:1";
    double a = 0.0;
    double r_end = 1.0;
    double r_max = 50.0;
    double h = 1e-3;
    double tol = 1e-10;
    double phi_cap = 1e8;
    double A = 0.0;
    double alpha = 1.0;
    std::string method = "picard";
    bool numeric = false;
    KONumericOptions ko_numeric;
    int radii_count = 512;
    std::string a_grid;
    std::string mu_grid;
    std::string fparam_grid;
    unsigned threads = 0;
    std::optional<std::string> output_path;
    Format format = Format::Csv;

    /// Throws DomainError naming the first offending field.
    void validate() const;
};

/// `lo:hi:count` (count evenly spaced values, both ends included) or a
/// single number.
std::vector<double> parse_range(std::string_view text);

struct SweepRow {
    ProblemParams params;
    std::string f_spec;
    double f_param = 0.0;
    double a = 0.0;
    BlowupReport::Status status = BlowupReport::Status::Global;
    double R_estimate = 0.0;
    double R_lo = 0.0;
    double R_hi = 0.0;
    KOClass ko = KOClass::Inconclusive;
    Existence existence = Existence::Inconclusive;
};

/// Runs every (f parameter, mu, a) tuple, concurrently when threads != 1.
/// Rows come back in ascending tuple order regardless of scheduling.
std::vector<SweepRow> run_sweep(const RunConfig& config);

/// Header `n,k,mu,f,a,status,R_estimate,R_lo,R_hi,ko,existence`; blow-up
/// columns are empty unless the status is FiniteBlowup.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

/// Full command line entry point (argv[0] is the program name).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hessian_radial::cli
