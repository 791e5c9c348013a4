#include "hessian_radial/cauchy_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "hessian_radial/errors.hpp"

namespace hessian_radial {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Moments of the weight s^m over [r0, r0 + w]:
//   m0 = int_0^w (r0 + u)^m du,  m1 = int_0^w (r0 + u)^m u du.
// Expanded binomially so every term is non-negative.
struct WeightMoments {
    double m0 = 0.0;
    double m1 = 0.0;
};

WeightMoments weight_moments(int m, double r0, double w) {
    WeightMoments out;
    double coeff = 1.0;  // C(m, j)
    for (int j = 0; j <= m; ++j) {
        const double base = std::pow(r0, m - j) * std::pow(w, j + 1);
        out.m0 += coeff * base / (j + 1);
        out.m1 += coeff * base * w / (j + 2);
        coeff = coeff * (m - j) / (j + 1);
    }
    return out;
}

// Product-trapezoid weights for int_{r0}^{r0+h} s^m g(s) ds with g linear
// between its endpoint values: integral = w_left * g0 + w_right * g1.
struct CellWeights {
    double left = 0.0;
    double right = 0.0;
};

CellWeights cell_weights(int m, double r0, double h) {
    const auto mom = weight_moments(m, r0, h);
    return {mom.m0 - mom.m1 / h, mom.m1 / h};
}

double weighted_cell(const CellWeights& w, double g0, double g1) {
    // inf * 0 would poison the accumulation; a zero weight never contributes.
    const double left = w.left == 0.0 ? 0.0 : w.left * g0;
    const double right = w.right == 0.0 ? 0.0 : w.right * g1;
    return left + right;
}

void require_admissible(const ProblemParams& p, const char* who) {
    if (!p.admissible_regime()) {
        std::ostringstream os;
        os << who << ": k = " << p.k << " >= 2 with mu = " << p.mu
           << " < 0 admits no admissible radial solution";
        throw AdmissibilityError(os.str());
    }
}

void require_span(double r_end, double h, const char* who) {
    if (!(r_end > 0.0) || !std::isfinite(r_end)) {
        throw DomainError(std::string(who) + ": need r_end > 0");
    }
    if (!(h > 0.0) || h > r_end) throw DomainError(std::string(who) + ": need 0 < h <= r_end");
}

std::vector<double> uniform_grid(double r_end, double h) {
    const auto cells = static_cast<std::size_t>(std::ceil(r_end / h - 1e-9));
    std::vector<double> grid(cells + 1);
    for (std::size_t i = 0; i <= cells; ++i) grid[i] = static_cast<double>(i) * h;
    grid.back() = r_end;
    return grid;
}

RadialProfile empty_profile(const ProblemParams& p, const Nonlinearity& f, double a) {
    RadialProfile out;
    out.params = p;
    out.f = f;
    out.a = a;
    return out;
}

// Incremental break-line integrator shared by euler_break_line and
// detect_blowup; works on arbitrary (non-uniform) steps.
class BreakLine {
public:
    BreakLine(const ProblemParams& p, const Nonlinearity& f, double a)
        : p_(p), f_(f), c_(volterra_constant(p)), profile_(empty_profile(p, f, a)) {
        g_ = volterra_smooth_factor(p_, f_, 0.0, a);
        push(0.0, a, 0.0, 0.0);
    }

    double r() const { return profile_.grid.back(); }
    double psi() const { return profile_.phi.back(); }
    double slope() const { return profile_.dphi.back(); }

    // Appends the node r + h using the frozen left slope.
    void advance(double h) {
        const double r0 = r();
        const double r1 = r0 + h;
        const double psi1 = psi() + h * slope();
        double g1 = volterra_smooth_factor(p_, f_, r1, psi1);
        if (std::isnan(g1)) g1 = kInf;
        const auto w = cell_weights(p_.n - 1, r0, h);
        double integral = profile_.volterra.back() + c_ * weighted_cell(w, g_, g1);
        if (std::isnan(integral)) integral = kInf;
        const double d1 = dphi_from_integral(p_, r1, integral);
        g_ = g1;
        push(r1, psi1, d1, integral);
    }

    RadialProfile take() && { return std::move(profile_); }
    RadialProfile& profile() { return profile_; }

private:
    void push(double r, double psi, double dphi, double integral) {
        profile_.grid.push_back(r);
        profile_.phi.push_back(psi);
        profile_.dphi.push_back(dphi);
        profile_.volterra.push_back(integral);
    }

    const ProblemParams& p_;
    const Nonlinearity& f_;
    double c_;
    double g_;
    RadialProfile profile_;
};

}  // namespace

RadialProfile euler_break_line(const ProblemParams& p, const Nonlinearity& f, double a,
                               double r_end, double h) {
    require_admissible(p, "euler_break_line");
    require_span(r_end, h, "euler_break_line");

    const auto grid = uniform_grid(r_end, h);
    BreakLine line(p, f, a);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        line.advance(grid[i] - grid[i - 1]);
        if (!std::isfinite(line.slope()) || !std::isfinite(line.psi())) {
            line.profile().truncated = true;
            break;
        }
    }
    auto profile = std::move(line).take();
    profile.defect = cell_defects(profile);
    return profile;
}

RadialProfile picard_solve(const ProblemParams& p, const Nonlinearity& f, double a, double r_end,
                           double h, double tol, int max_iter) {
    require_admissible(p, "picard_solve");
    require_span(r_end, h, "picard_solve");
    if (!(tol > 0.0)) throw DomainError("picard_solve: need tol > 0");
    if (max_iter < 1) throw DomainError("picard_solve: need max_iter >= 1");

    RadialProfile out = empty_profile(p, f, a);
    out.grid = uniform_grid(r_end, h);
    const std::size_t nodes = out.grid.size();
    const double c = volterra_constant(p);

    std::vector<CellWeights> weights(nodes);
    for (std::size_t i = 1; i < nodes; ++i) {
        weights[i] = cell_weights(p.n - 1, out.grid[i - 1], out.grid[i] - out.grid[i - 1]);
    }

    std::vector<double> phi(nodes, a);
    std::vector<double> next(nodes);
    std::vector<double> g(nodes);
    out.dphi.assign(nodes, 0.0);
    out.volterra.assign(nodes, 0.0);

    double previous_distance = kInf;
    for (int iter = 1; iter <= max_iter; ++iter) {
        for (std::size_t i = 0; i < nodes; ++i) g[i] = volterra_smooth_factor(p, f, out.grid[i], phi[i]);
        next[0] = a;
        for (std::size_t i = 1; i < nodes; ++i) {
            out.volterra[i] = out.volterra[i - 1] + c * weighted_cell(weights[i], g[i - 1], g[i]);
            out.dphi[i] = dphi_from_integral(p, out.grid[i], out.volterra[i]);
            const double step = out.grid[i] - out.grid[i - 1];
            next[i] = next[i - 1] + 0.5 * step * (out.dphi[i - 1] + out.dphi[i]);
        }
        double distance = 0.0;
        for (std::size_t i = 0; i < nodes; ++i) distance = std::max(distance, std::abs(next[i] - phi[i]));
        if (!std::isfinite(distance)) {
            throw ConvergenceError("picard_solve: iterate overflowed (solution likely blows up before r_end)",
                                   previous_distance, iter);
        }
        phi.swap(next);
        if (distance < tol) {
            out.phi = std::move(phi);
            out.defect = cell_defects(out);
            return out;
        }
        previous_distance = distance;
    }
    std::ostringstream os;
    os << "picard_solve: no convergence after " << max_iter << " iterations, last distance "
       << previous_distance;
    throw ConvergenceError(os.str(), previous_distance, max_iter);
}

std::vector<double> cell_defects(const RadialProfile& profile) {
    const auto& p = profile.params;
    const std::size_t nodes = profile.size();
    std::vector<double> defects(nodes, 0.0);
    if (nodes < 2) return defects;
    const double c = volterra_constant(p);

    double g0 = volterra_smooth_factor(p, profile.f, profile.grid[0], profile.phi[0]);
    for (std::size_t i = 1; i < nodes; ++i) {
        const double r0 = profile.grid[i - 1];
        const double h = profile.grid[i] - r0;
        const double g1 = volterra_smooth_factor(p, profile.f, profile.grid[i], profile.phi[i]);
        // Half cell [r0, r0 + h/2] with g interpolated linearly across the cell.
        const auto mom = weight_moments(p.n - 1, r0, 0.5 * h);
        const double half = (mom.m0 == 0.0 ? 0.0 : g0 * mom.m0) +
                            (mom.m1 == 0.0 ? 0.0 : (g1 - g0) * mom.m1 / h);
        const double integral = std::max(0.0, profile.volterra[i - 1] + c * half);
        const double f_mid = dphi_from_integral(p, r0 + 0.5 * h, integral);
        const double slope = (profile.phi[i] - profile.phi[i - 1]) / h;
        defects[i] = std::abs(slope - f_mid);
        g0 = g1;
    }
    return defects;
}

double epsilon_defect(const RadialProfile& profile) {
    if (profile.size() < 2) throw DomainError("epsilon_defect: need at least 2 nodes");
    const auto defects = profile.defect ? *profile.defect : cell_defects(profile);
    return *std::max_element(defects.begin(), defects.end());
}

namespace {

struct CrossingRun {
    bool blew_up = false;
    double r_lo = 0.0;  // last radius with phi <= cap
    double r_hi = 0.0;  // first radius past the cap, or collapse point
    RadialProfile profile;
};

CrossingRun run_break_line(const ProblemParams& p, const Nonlinearity& f, double a, double r_max,
                           double h0, const BlowupOptions& options) {
    const double jump_limit = std::max(1.0, 0.01 * options.phi_cap);
    const double h_min = std::ldexp(h0, -options.min_step_exponent);

    BreakLine line(p, f, a);
    double h = h0;
    CrossingRun run;
    while (line.r() < r_max) {
        double step = std::min(h, r_max - line.r());
        bool collapsed = false;
        while (!(step * line.slope() <= jump_limit)) {
            step *= 0.5;
            h = step;
            if (step < h_min) {
                collapsed = true;
                break;
            }
        }
        if (collapsed) {
            run.blew_up = true;
            run.r_lo = line.r();
            run.r_hi = line.r() + 2.0 * step;
            break;
        }
        const double psi_next = line.psi() + step * line.slope();
        if (psi_next > options.phi_cap) {
            run.blew_up = true;
            run.r_lo = line.r();
            run.r_hi = line.r() + step;
            break;
        }
        // Land exactly on r_max rather than a rounding hair short of it.
        if (r_max - (line.r() + step) < 1e-12 * r_max) step = r_max - line.r();
        line.advance(step);
    }
    run.profile = std::move(line).take();
    run.profile.truncated = run.blew_up;
    return run;
}

}  // namespace

BlowupReport detect_blowup(const ProblemParams& p, const Nonlinearity& f, double a, double r_max,
                           const BlowupOptions& options) {
    if (!(r_max > 0.0) || !(options.h0 > 0.0)) throw DomainError("detect_blowup: need r_max, h0 > 0");
    if (!(options.phi_cap > a)) throw DomainError("detect_blowup: need phi_cap > a");

    BlowupReport report;
    if (!p.admissible_regime()) {
        report.status = BlowupReport::Status::AdmissibilityFailure;
        report.r_fail = -1.0 / p.mu;
        report.profile = empty_profile(p, f, a);
        return report;
    }

    const double h0 = std::min(options.h0, r_max);
    auto coarse = run_break_line(p, f, a, r_max, h0, options);
    if (!coarse.blew_up) {
        report.status = BlowupReport::Status::Global;
        report.profile = std::move(coarse.profile);
        report.profile.defect = cell_defects(report.profile);
        report.r_reached = report.profile.r_end();
        return report;
    }

    auto fine = run_break_line(p, f, a, r_max, 0.5 * h0, options);
    report.status = BlowupReport::Status::FiniteBlowup;
    if (!fine.blew_up) {
        // Refined run survived: keep the coarse bracket, extended to r_max.
        report.R_lo = coarse.r_lo;
        report.R_hi = r_max;
        report.R_estimate = r_max;
        report.profile = std::move(fine.profile);
    } else {
        // First-order break line: R(h) ~ R + C h. The bracket spans both
        // runs and the extrapolated radius, padded below by the run spread.
        const double spread = std::abs(coarse.r_hi - fine.r_hi);
        report.R_estimate = 2.0 * fine.r_hi - coarse.r_hi;
        report.R_hi = std::max({coarse.r_hi, fine.r_hi, report.R_estimate});
        report.R_lo = std::min({coarse.r_lo, fine.r_lo, report.R_estimate - spread});
        if (!(report.R_lo < report.R_estimate)) report.R_lo = std::nextafter(report.R_estimate, -kInf);
        report.profile = std::move(fine.profile);
    }
    report.profile.defect = cell_defects(report.profile);
    report.r_reached = report.profile.r_end();
    return report;
}

double interpolate_phi(const RadialProfile& profile, double r) {
    const auto& grid = profile.grid;
    if (grid.empty() || r < grid.front() || r > grid.back()) {
        throw DomainError("interpolate_phi: radius outside the profile grid");
    }
    auto it = std::lower_bound(grid.begin(), grid.end(), r);
    auto i = static_cast<std::size_t>(it - grid.begin());
    if (grid[i] == r) return profile.phi[i];
    const double t = (r - grid[i - 1]) / (grid[i] - grid[i - 1]);
    return (1.0 - t) * profile.phi[i - 1] + t * profile.phi[i];
}

RefinementStudy refinement_study(SolverMethod method, const ProblemParams& p,
                                 const Nonlinearity& f, double a, double r_end,
                                 std::span<const double> h_sequence,
                                 const std::function<double(double)>& exact) {
    if (h_sequence.size() < 3) throw DomainError("refinement_study: need at least 3 steps");
    for (std::size_t j = 1; j < h_sequence.size(); ++j) {
        if (!(h_sequence[j] < h_sequence[j - 1]) || !(h_sequence[j] > 0.0)) {
            throw DomainError("refinement_study: steps must be positive and decreasing");
        }
    }

    std::vector<RadialProfile> runs;
    for (double h : h_sequence) {
        runs.push_back(method == SolverMethod::EulerBreakLine ? euler_break_line(p, f, a, r_end, h)
                                                              : picard_solve(p, f, a, r_end, h));
        if (runs.back().truncated) throw DiagnosticError("refinement_study: profile truncated");
    }
    const auto& probe = runs.front().grid;

    RefinementStudy study;
    study.steps.assign(h_sequence.begin(), h_sequence.end());
    double scale = 1.0;
    for (const auto& run : runs) {
        for (double v : run.phi) scale = std::max(scale, std::abs(v));
    }
    if (exact) {
        for (const auto& run : runs) {
            double err = 0.0;
            for (double r : probe) err = std::max(err, std::abs(interpolate_phi(run, r) - exact(r)));
            study.errors.push_back(err);
        }
    } else {
        for (std::size_t j = 0; j + 1 < runs.size(); ++j) {
            double diff = 0.0;
            for (double r : probe) {
                diff = std::max(diff, std::abs(interpolate_phi(runs[j], r) - interpolate_phi(runs[j + 1], r)));
            }
            study.errors.push_back(diff);
        }
    }

    const double floor = 1e-13 * scale;
    for (std::size_t j = 0; j < study.errors.size(); ++j) {
        if (study.errors[j] <= floor) {
            throw DiagnosticError("refinement_study: errors at roundoff level, order undefined");
        }
        if (j > 0 && !(study.errors[j] < study.errors[j - 1])) {
            throw DiagnosticError("refinement_study: error sequence is not decreasing");
        }
    }
    double sum = 0.0;
    for (std::size_t j = 0; j + 1 < study.errors.size(); ++j) {
        const double ratio = h_sequence[j] / h_sequence[j + 1];
        const double order = std::log(study.errors[j] / study.errors[j + 1]) / std::log(ratio);
        study.orders.push_back(order);
        sum += order;
    }
    study.order = sum / static_cast<double>(study.orders.size());
    return study;
}

double refinement_order(SolverMethod method, const ProblemParams& p, const Nonlinearity& f,
                        double a, double r_end, std::span<const double> h_sequence,
                        const std::function<double(double)>& exact) {
    return refinement_study(method, p, f, a, r_end, h_sequence, exact).order;
}

}  // namespace hessian_radial
