#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hessian_radial/nonlinearity.hpp"
#include "hessian_radial/radial_operator.hpp"

namespace hessian_radial {

/// Discrete solution of the radial Cauchy problem
///   phi'(r) = (r^{k-n} e^{-n mu r} I(r))^{1/k},  phi(0) = a,
///   I(r)    = int_0^r (k/C(n-1,k-1)) e^{n mu s} s^{n-1} (1+mu s)^{1-k} f^k(phi(s)) ds.
///
/// All node arrays have the same length. `defect`, when present, has one
/// entry per node: entry i >= 1 is the slope defect on cell [r_{i-1}, r_i],
/// entry 0 is 0.
struct RadialProfile {
    ProblemParams params;
    Nonlinearity f = Nonlinearity::constant(1.0);
    double a = 0.0;

    std::vector<double> grid;
    std::vector<double> phi;
    std::vector<double> dphi;
    std::vector<double> volterra;
    std::optional<std::vector<double>> defect;

    /// Set when integration stopped early because f^k or phi overflowed.
    bool truncated = false;

    std::size_t size() const noexcept { return grid.size(); }
    double r_end() const { return grid.empty() ? 0.0 : grid.back(); }
};

/// Euler break line: on each cell the slope is frozen at the left-endpoint
/// value F(r_{i-1}, psi). The Volterra accumulation follows the break line.
/// Grid is {0, h, 2h, ...} with the last node clamped to r_end.
/// Stops early (truncated = true) if f^k overflows.
RadialProfile euler_break_line(const ProblemParams& p, const Nonlinearity& f, double a,
                               double r_end, double h);

/// Picard iteration phi <- a + int_0^r F[phi] on a fixed uniform grid,
/// starting from phi == a, until the max node change drops below tol.
/// Throws ConvergenceError (carrying the last distance) otherwise.
RadialProfile picard_solve(const ProblemParams& p, const Nonlinearity& f, double a, double r_end,
                           double h, double tol = 1e-10, int max_iter = 500);

/// Per-cell |slope of psi - F(midpoint, psi)|, F rebuilt from the stored
/// accumulation plus a half-cell increment. Length = profile.size().
std::vector<double> cell_defects(const RadialProfile& profile);

/// Largest cell defect.
double epsilon_defect(const RadialProfile& profile);

struct BlowupReport {
    enum class Status { Global, FiniteBlowup, AdmissibilityFailure };

    Status status = Status::Global;
    double r_reached = 0.0;    // last node of the stored profile
    double R_estimate = 0.0;   // FiniteBlowup only
    double R_lo = 0.0;         // FiniteBlowup only, R_lo < R_estimate <= R_hi
    double R_hi = 0.0;
    double r_fail = 0.0;       // AdmissibilityFailure only: radius where 1 + mu r = 0
    RadialProfile profile;     // break line of the finest run
};

struct BlowupOptions {
    double phi_cap = 1e8;
    double h0 = 1e-3;
    /// Steps below h0 * 2^-min_step_exponent count as collapse.
    int min_step_exponent = 40;
};

/// Advances the break line with step halving until r_max, phi > phi_cap or
/// step collapse. A blow-up is re-run at h0/2 and the two crossing radii are
/// Richardson-combined.
BlowupReport detect_blowup(const ProblemParams& p, const Nonlinearity& f, double a, double r_max,
                           const BlowupOptions& options = {});

enum class SolverMethod { EulerBreakLine, Picard };

struct RefinementStudy {
    std::vector<double> steps;
    std::vector<double> errors;  // vs exact, or successive differences
    std::vector<double> orders;  // one per consecutive pair of errors
    double order = 0.0;          // mean of `orders`
};

/// Empirical convergence order over a decreasing step sequence (>= 3 steps).
/// With `exact`, errors are max node errors on the coarsest grid; otherwise
/// successive differences between neighbouring refinements are used.
/// Throws DiagnosticError for flat (roundoff-level) or non-decreasing errors.
RefinementStudy refinement_study(SolverMethod method, const ProblemParams& p,
                                 const Nonlinearity& f, double a, double r_end,
                                 std::span<const double> h_sequence,
                                 const std::function<double(double)>& exact = {});

double refinement_order(SolverMethod method, const ProblemParams& p, const Nonlinearity& f,
                        double a, double r_end, std::span<const double> h_sequence,
                        const std::function<double(double)>& exact = {});

/// Linear interpolation of profile.phi at radius r inside the grid.
double interpolate_phi(const RadialProfile& profile, double r);

}  // namespace hessian_radial
