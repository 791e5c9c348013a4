// Acceptance run: one PASS/FAIL line per criterion, with supporting detail.
//
//   acceptance [--expect-red N]...
//
// Exit status is 0 when the set of failing criteria equals the set given by
// --expect-red (empty by default), 1 otherwise.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hessian_radial/cauchy_solver.hpp"
#include "hessian_radial/errors.hpp"
#include "hessian_radial/io.hpp"
#include "hessian_radial/keller_osserman.hpp"
#include "hessian_radial/subsolution_verifier.hpp"
#include "oracles.hpp"

using namespace hessian_radial;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects sub-check outcomes for one criterion.
class Criterion {
public:
    explicit Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

    void check(bool ok, const std::string& what) {
        if (!ok) {
            passed_ = false;
            failures_.push_back(what);
        }
    }
    void note(const std::string& line) { notes_.push_back(line); }

    bool finish() const {
        std::printf("%s criterion %d: %s\n", passed_ ? "PASS" : "FAIL", id_, title_.c_str());
        for (const auto& n : notes_) std::printf("    %s\n", n.c_str());
        for (const auto& f : failures_) std::printf("    failed: %s\n", f.c_str());
        return passed_;
    }

private:
    int id_;
    std::string title_;
    bool passed_ = true;
    std::vector<std::string> notes_;
    std::vector<std::string> failures_;
};

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

const std::vector<std::pair<int, int>> kPairs{{2, 1}, {3, 2}, {4, 4}, {5, 3}};

bool criterion_1() {
    Criterion c(1, "closed-form Cauchy solution for constant f, mu = 0");
    const auto start = Clock::now();
    const auto f = Nonlinearity::constant(1.0);
    for (auto [n, k] : kPairs) {
        const auto p = ProblemParams::make(n, k, 0.0);
        for (double a : {0.0, 1.0}) {
            const auto prof = picard_solve(p, f, a, 10.0, 1e-3, 1e-10);
            double worst = 0.0;
            for (std::size_t i = 0; i < prof.size(); ++i) {
                const double exact = oracle::constant_f_phi(n, k, 1.0, a, prof.grid[i]);
                const double err = std::abs(prof.phi[i] - exact);
                worst = std::max(worst, exact == 0.0 ? err : err / std::abs(exact));
            }
            c.note(fmt("picard n=%d k=%d a=%g: max rel error %.3e", n, k, a, worst));
            c.check(worst <= 1e-6, fmt("picard n=%d k=%d a=%g rel error %.3e > 1e-6", n, k, a, worst));
        }
        const std::vector<double> steps{1e-2, 5e-3, 2.5e-3};
        const double order = refinement_order(SolverMethod::EulerBreakLine, p, f, 0.0, 10.0, steps,
                                              [&](double r) { return oracle::constant_f_phi(n, k, 1.0, 0.0, r); });
        c.note(fmt("euler n=%d k=%d: empirical order %.4f", n, k, order));
        c.check(std::abs(order - 1.0) <= 0.2, fmt("euler n=%d k=%d order %.4f outside 1 +- 0.2", n, k, order));
    }
    const double elapsed = seconds_since(start);
    c.note(fmt("runtime %.2f s", elapsed));
    c.check(elapsed < 10.0, fmt("runtime %.2f s >= 10 s", elapsed));
    return c.finish();
}

bool criterion_2() {
    Criterion c(2, "second derivative at the origin");
    const double h = 1e-4;
    for (auto [n, k] : kPairs) {
        const auto p = ProblemParams::make(n, k, 0.0);
        for (const char* spec : {"const:1", "exp:1"}) {
            const auto f = Nonlinearity::parse(spec);
            for (double a : {0.0, 1.0}) {
                const auto prof = picard_solve(p, f, a, 100 * h, h, 1e-10);
                // Even reflection phi(-h) = phi(h) of the radial profile.
                const double estimate = 2.0 * (prof.phi[1] - prof.phi[0]) / (h * h);
                const double target = f.eval(a) / std::pow(static_cast<double>(binom(n, k)), 1.0 / k);
                const double rel = std::abs(estimate - target) / target;
                c.note(fmt("n=%d k=%d f=%s a=%g: phi''(0) %.10f vs %.10f, rel %.2e", n, k, spec, a, estimate, target, rel));
                c.check(rel <= 1e-4, fmt("n=%d k=%d f=%s a=%g rel %.2e > 1e-4", n, k, spec, a, rel));
            }
        }
    }
    return c.finish();
}

bool criterion_3() {
    Criterion c(3, "Keller-Osserman dichotomy");
    int numeric_decided = 0, numeric_inconclusive = 0;
    double worst_exponent = 0.0;
    for (int k = 1; k <= 3; ++k) {
        for (double alpha : {0.0, 0.5, 1.0, 2.0}) {
            const auto f = Nonlinearity::exponential(alpha);
            const auto analytic = ko_classify_analytic(f, k).classification;
            const auto expected = alpha == 0.0 ? KOClass::Diverges : KOClass::Converges;
            c.check(analytic == expected, fmt("analytic exp:%g k=%d gave %s", alpha, k, to_string(analytic).c_str()));
            const auto numeric = ko_classify_numeric(f, k).classification;
            if (numeric == KOClass::Inconclusive) {
                ++numeric_inconclusive;
            } else {
                ++numeric_decided;
                c.check(numeric == analytic, fmt("numeric exp:%g k=%d disagrees", alpha, k));
            }
        }
        for (double q : {0.0, 0.5, 1.0, 1.5, 2.0}) {
            const auto f = Nonlinearity::power_cutoff(q);
            const auto analytic = ko_classify_analytic(f, k).classification;
            const auto expected = q <= 1.0 ? KOClass::Diverges : KOClass::Converges;
            c.check(analytic == expected, fmt("analytic pow:%g k=%d gave %s", q, k, to_string(analytic).c_str()));
            const auto numeric = ko_classify_numeric(f, k);
            if (numeric.classification == KOClass::Inconclusive) {
                ++numeric_inconclusive;
            } else {
                ++numeric_decided;
                c.check(numeric.classification == analytic, fmt("numeric pow:%g k=%d disagrees", q, k));
            }
            if (!numeric.evidence.tail_exponent) {
                c.check(false, fmt("numeric pow:%g k=%d has no tail exponent", q, k));
                continue;
            }
            const double err = std::abs(*numeric.evidence.tail_exponent - (k * q + 1.0) / (k + 1.0));
            worst_exponent = std::max(worst_exponent, err);
            c.check(err <= 0.02, fmt("pow:%g k=%d tail exponent off by %.4f", q, k, err));
        }
    }
    c.note(fmt("numeric verdicts: %d decided, %d inconclusive (boundary q = 1)", numeric_decided, numeric_inconclusive));
    c.note(fmt("worst tail exponent error %.2e", worst_exponent));
    return c.finish();
}

bool criterion_4() {
    Criterion c(4, "global versus blow-up at mu = 0");
    const auto start = Clock::now();
    const auto p = ProblemParams::make(2, 1, 0.0);
    BlowupOptions options;
    options.phi_cap = 1e30;
    for (double a : {0.0, 1.0}) {
        for (const char* spec : {"const:1", "pow:1"}) {
            const auto report = detect_blowup(p, Nonlinearity::parse(spec), a, 50.0, options);
            const bool ok = report.status == BlowupReport::Status::Global && report.r_reached >= 50.0 &&
                            std::isfinite(report.profile.phi.back());
            c.note(fmt("f=%s a=%g: %s, r_reached %.6g, phi %.6g", spec, a, to_string(report.status).c_str(),
                       report.r_reached, report.profile.phi.back()));
            c.check(ok, fmt("f=%s a=%g not global to r = 50", spec, a));
        }
        for (const char* spec : {"exp:1", "pow:2"}) {
            const auto report = detect_blowup(p, Nonlinearity::parse(spec), a, 50.0, options);
            if (report.status != BlowupReport::Status::FiniteBlowup) {
                c.note(fmt("f=%s a=%g: %s, r_reached %.6g, max phi %.6g", spec, a, to_string(report.status).c_str(),
                           report.r_reached, report.profile.phi.back()));
                c.check(false, fmt("f=%s a=%g: expected FiniteBlowup", spec, a));
                continue;
            }
            const double width = report.R_hi - report.R_lo;
            c.note(fmt("f=%s a=%g: R %.6f, bracket [%.6f, %.6f], width %.3f%%", spec, a, report.R_estimate,
                       report.R_lo, report.R_hi, 100.0 * width / report.R_estimate));
            c.check(width < 0.01 * report.R_estimate, fmt("f=%s a=%g bracket too wide", spec, a));
        }
    }
    // Positive start for the power case, reported alongside.
    const auto extra = detect_blowup(p, Nonlinearity::power_cutoff(2), 0.5, 50.0, options);
    c.note(fmt("supplementary f=pow:2 a=0.5: %s, R %.6f", to_string(extra.status).c_str(), extra.R_estimate));
    const double elapsed = seconds_since(start);
    c.note(fmt("runtime %.2f s", elapsed));
    c.check(elapsed < 60.0, fmt("runtime %.2f s >= 60 s", elapsed));
    return c.finish();
}

bool criterion_5() {
    Criterion c(5, "admissibility invariants");
    std::mt19937_64 rng(20260101);
    std::uniform_int_distribution<int> n_dist(2, 6);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int nodes_checked = 0, shortened = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = n_dist(rng);
        const int k = std::uniform_int_distribution<int>(1, n)(rng);
        const double mu = k >= 2 ? unit(rng) : 2.0 * unit(rng) - 1.0;
        const auto p = ProblemParams::make(n, k, mu);
        const int family = std::uniform_int_distribution<int>(0, 2)(rng);
        const double param = unit(rng);
        const auto f = family == 0   ? Nonlinearity::constant(0.5 + param)
                       : family == 1 ? Nonlinearity::exponential(param)
                                     : Nonlinearity::power_cutoff(2.0 * param);
        const double a = 0.1 + unit(rng);

        double r_end = 1.0;
        RadialProfile prof;
        for (;;) {
            try {
                prof = picard_solve(p, f, a, r_end, r_end / 100.0);
                break;
            } catch (const ConvergenceError&) {
                r_end *= 0.5;
                ++shortened;
            }
        }
        for (std::size_t i = 1; i + 1 < prof.size(); ++i) {
            const double r = prof.grid[i];
            const double dd = ddphi_from_ode(p, f, r, prof.phi[i], prof.dphi[i]);
            const auto spectrum = radial_spectrum(p, r, prof.dphi[i], dd);
            ++nodes_checked;
            if (!in_gamma_k(spectrum, k)) {
                c.check(false, fmt("n=%d k=%d mu=%.3f f=%s a=%.3f: node r=%.4f outside Gamma_k", n, k, mu,
                                   f.spec().c_str(), a, r));
                break;
            }
        }
    }
    c.note(fmt("200 tuples, %d interior nodes in Gamma_k checked, %d intervals shortened before blow-up",
               nodes_checked, shortened));

    int rejected = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const int n = n_dist(rng);
        const int k = std::uniform_int_distribution<int>(2, n)(rng);
        const double mu = -0.01 - unit(rng);
        const auto p = ProblemParams::make(n, k, mu);
        const auto report = detect_blowup(p, Nonlinearity::constant(1), 0.0, 10.0);
        bool threw = false;
        try {
            (void)picard_solve(p, Nonlinearity::constant(1), 0.0, 1.0, 0.1);
        } catch (const AdmissibilityError&) {
            threw = true;
        }
        const bool ok = report.status == BlowupReport::Status::AdmissibilityFailure && threw;
        rejected += ok ? 1 : 0;
        c.check(ok, fmt("n=%d k=%d mu=%.3f not rejected", n, k, mu));
    }
    c.note(fmt("%d/50 tuples with k >= 2, mu < 0 returned AdmissibilityFailure", rejected));
    return c.finish();
}

bool criterion_6() {
    Criterion c(6, "Gaussian subsolution verification");
    int cases = 0;
    for (int n = 2; n <= 5; ++n) {
        for (int k = 1; k <= n; ++k) {
            const double A = example_4_1_threshold(n, k);
            for (double mu : {0.0, 0.1, 0.3}) {
                const auto p = ProblemParams::make(n, k, mu);
                const auto radii = verification_radii(p, A, 10.0, 512);
                for (double alpha : {-1.0, 0.0, 1.0}) {
                    ++cases;
                    const auto report = verify_subsolution(p, A, alpha, radii);
                    c.check(report.all_pass, fmt("mu >= 0 threshold n=%d k=%d mu=%g alpha=%g fails at r=%g", n, k, mu,
                                                 alpha, report.first_failure.value_or(-1.0)));
                    const std::vector<double> origin{0.0};
                    const auto below = verify_subsolution(p, 0.99 * A, alpha, origin);
                    const auto full_below = verify_subsolution(p, 0.99 * A, alpha, radii);
                    c.check(!below.all_pass && full_below.first_failure && *full_below.first_failure == 0.0,
                            fmt("0.99 threshold n=%d k=%d mu=%g alpha=%g does not fail at r=0", n, k, mu, alpha));
                }
            }
        }
    }
    c.note(fmt("mu >= 0 threshold: %d cases pass, 0.99 threshold fails first at r=0 in each", cases));
    for (int n = 2; n <= 4; ++n) {
        for (double mu : {-1.0, -0.5}) {
            const auto p = ProblemParams::make(n, 1, mu);
            const double A = example_4_2_threshold(n, mu);
            const auto report = verify_subsolution(p, A, 1.0, verification_radii(p, A, 10.0, 512));
            c.check(report.all_pass, fmt("negative mu threshold n=%d mu=%g fails at r=%g", n, mu,
                                         report.first_failure.value_or(-1.0)));
        }
    }
    c.note("negative mu threshold: 6 cases with k = 1, mu < 0");
    return c.finish();
}

bool criterion_7() {
    Criterion c(7, "mu_0 values and the existence case table");
    double worst = 0.0;
    for (int n = 1; n <= 8; ++n) {
        for (int k = 1; k <= n; ++k) {
            const double err = std::abs(mu_zero(n, k) - oracle::kMuZero[n - 1][k - 1]);
            worst = std::max(worst, err);
            c.check(err <= 1e-12, fmt("mu_0(%d,%d) off by %.2e", n, k, err));
        }
    }
    c.note(fmt("mu_0 for 1 <= k <= n <= 8: worst deviation %.2e", worst));

    struct Case {
        int n, k;
        double mu;
        const char* f;
        Existence expected;
    };
    // mu_0(2,1) ~ 0.354, mu_0(3,2) ~ 0.358, mu_0(4,4) ~ 0.447.
    const std::vector<Case> fixture{
        {2, 1, 0.2, "exp:0", Existence::Exists},        {2, 1, 0.0, "pow:1", Existence::Exists},
        {3, 2, 0.1, "const:2", Existence::Exists},      {2, 1, 1.0, "pow:0.5", Existence::Exists},
        {2, 1, -1.0, "pow:0.5", Existence::Exists},     {2, 1, 0.2, "exp:1", Existence::NotExists},
        {3, 2, 0.3, "pow:2", Existence::NotExists},     {2, 1, -0.5, "exp:2", Existence::NotExists},
        {3, 2, -0.5, "pow:1", Existence::NotExists},    {4, 4, -0.1, "exp:0", Existence::NotExists},
        {2, 1, 1.0, "exp:1", Existence::OutsideTheory}, {4, 4, 0.5, "pow:3", Existence::OutsideTheory},
    };
    for (const auto& fc : fixture) {
        const auto p = ProblemParams::make(fc.n, fc.k, fc.mu);
        const auto report = existence_verdict(p, ko_classify_analytic(Nonlinearity::parse(fc.f), fc.k));
        c.check(report.verdict == fc.expected,
                fmt("n=%d k=%d mu=%g f=%s gave %s, expected %s", fc.n, fc.k, fc.mu, fc.f,
                    to_string(report.verdict).c_str(), to_string(fc.expected).c_str()));
    }
    c.note(fmt("%zu-case existence fixture", fixture.size()));
    return c.finish();
}

bool criterion_8() {
    Criterion c(8, "ordering in the initial value");
    const auto f = Nonlinearity::exponential(1);
    BlowupOptions options;
    options.phi_cap = 1e30;
    for (double mu : {-0.2, 0.0, 0.2}) {
        const auto p = ProblemParams::make(2, 1, mu);
        std::vector<double> radii;
        for (double a : {0.0, 0.5, 1.0, 1.5, 2.0}) {
            const auto report = detect_blowup(p, f, a, 50.0, options);
            c.check(report.status == BlowupReport::Status::FiniteBlowup, fmt("mu=%g a=%g did not blow up", mu, a));
            radii.push_back(report.R_estimate);
        }
        for (std::size_t i = 1; i < radii.size(); ++i) {
            c.check(radii[i] <= radii[i - 1], fmt("mu=%g: R increases between a-steps %zu and %zu", mu, i - 1, i));
        }
        c.note(fmt("mu=%g: R(a) = %.5f %.5f %.5f %.5f %.5f", mu, radii[0], radii[1], radii[2], radii[3], radii[4]));

        const double r_end = 0.9 * radii[2];
        const auto low = picard_solve(p, f, 0.0, r_end, 1e-3);
        const auto high = picard_solve(p, f, 1.0, r_end, 1e-3);
        std::size_t violations = 0;
        for (std::size_t i = 0; i < low.size(); ++i) violations += low.phi[i] <= high.phi[i] ? 0 : 1;
        c.note(fmt("mu=%g: phi_0 <= phi_1 on %zu nodes of [0, %.4f]", mu, low.size(), r_end));
        c.check(violations == 0, fmt("mu=%g: %zu ordering violations", mu, violations));
    }
    return c.finish();
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> expected_red;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--expect-red") == 0 && i + 1 < argc) {
            expected_red.insert(std::atoi(argv[++i]));
        } else {
            std::fprintf(stderr, "usage: acceptance [--expect-red N]...\n");
            return 2;
        }
    }

    const std::vector<std::function<bool()>> criteria{criterion_1, criterion_2, criterion_3, criterion_4,
                                                      criterion_5, criterion_6, criterion_7, criterion_8};
    std::set<int> red;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        bool ok = false;
        try {
            ok = criteria[i]();
        } catch (const std::exception& e) {
            std::printf("FAIL criterion %zu: threw %s\n", i + 1, e.what());
        }
        if (!ok) red.insert(static_cast<int>(i + 1));
    }

    std::printf("summary: %zu/%zu criteria pass\n", criteria.size() - red.size(), criteria.size());
    if (red != expected_red) {
        std::printf("failing set differs from the expected set\n");
        return 1;
    }
    return 0;
}
