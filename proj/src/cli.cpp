#include "hessian_radial/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "hessian_radial/errors.hpp"
#include "hessian_radial/io.hpp"
#include "hessian_radial/subsolution_verifier.hpp"

namespace hessian_radial::cli {

namespace {

double parse_double(std::string_view text, std::string_view whole) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw DomainError("bad range '" + std::string(whole) + "'");
    }
    return v;
}

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(name) + " must be positive");
}

// Writes through `emit` to the configured file or to `out`.
template <typename Emit>
int write_output(const RunConfig& config, std::ostream& out, std::ostream& err, Emit&& emit) {
    if (!config.output_path) {
        emit(out);
        out.flush();
        return out ? kOk : kIoError;
    }
    std::ofstream file(*config.output_path, std::ios::binary);
    if (!file) {
        err << "error: cannot open '" << *config.output_path << "' for writing\n";
        return kIoError;
    }
    emit(file);
    file.close();
    if (!file) {
        err << "error: write to '" << *config.output_path << "' failed\n";
        return kIoError;
    }
    return kOk;
}

void print_blowup_diagnostic(std::ostream& err, const BlowupReport& report) {
    err << "blow-up: phi leaves every bound near R ~ " << format_double(report.R_estimate)
        << ", bracket [" << format_double(report.R_lo) << ", " << format_double(report.R_hi) << "]\n";
}

int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto& p = config.params;
    const auto f = Nonlinearity::parse(config.f_spec);
    if (!p.admissible_regime()) {
        err << "error: k = " << p.k << " with mu = " << format_double(p.mu)
            << " < 0 admits no admissible radial solution\n";
        return kAdmissibility;
    }
    BlowupOptions options;
    options.phi_cap = config.phi_cap;
    options.h0 = config.h;
    const auto probe = detect_blowup(p, f, config.a, config.r_end, options);
    if (probe.status == BlowupReport::Status::FiniteBlowup) {
        print_blowup_diagnostic(err, probe);
        return kBlowup;
    }

    RadialProfile profile;
    if (config.method == "euler") {
        profile = euler_break_line(p, f, config.a, config.r_end, config.h);
    } else {
        try {
            profile = picard_solve(p, f, config.a, config.r_end, config.h, config.tol);
        } catch (const ConvergenceError& e) {
            err << "error: " << e.what() << "\n";
            return kBlowup;
        }
    }
    return write_output(config, out, err, [&](std::ostream& os) {
        if (config.format == Format::Json) {
            os << profile_to_json(profile).dump(2) << "\n";
        } else {
            write_profile_csv(os, profile);
        }
    });
}

int cmd_blowup(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto f = Nonlinearity::parse(config.f_spec);
    BlowupOptions options;
    options.phi_cap = config.phi_cap;
    options.h0 = config.h;
    const auto report = detect_blowup(config.params, f, config.a, config.r_max, options);
    const int io = write_output(config, out, err, [&](std::ostream& os) {
        if (config.format == Format::Csv) {
            write_profile_csv(os, report.profile);
        } else {
            os << blowup_to_json(report).dump(2) << "\n";
        }
    });
    if (io != kOk) return io;
    switch (report.status) {
        case BlowupReport::Status::Global: return kOk;
        case BlowupReport::Status::FiniteBlowup:
            print_blowup_diagnostic(err, report);
            return kBlowup;
        case BlowupReport::Status::AdmissibilityFailure:
            err << "error: admissibility fails beyond r = " << format_double(report.r_fail) << "\n";
            return kAdmissibility;
    }
    return kOk;
}

int cmd_ko(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto f = Nonlinearity::parse(config.f_spec);
    const int k = config.params.k;
    const auto verdict = config.numeric ? ko_classify_numeric(f, k, config.ko_numeric)
                                        : ko_classify_analytic(f, k);
    const auto existence = existence_verdict(config.params, verdict);
    nlohmann::json j;
    j["schema"] = kSchema;
    j["f"] = f.spec();
    j["params"] = params_to_json(config.params);
    j["ko"] = ko_to_json(verdict);
    j["existence"] = existence_to_json(existence);
    const int io = write_output(config, out, err, [&](std::ostream& os) { os << j.dump(2) << "\n"; });
    if (io != kOk) return io;
    return verdict.classification == KOClass::Inconclusive ? kInconclusive : kOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto radii = verification_radii(config.params, config.A, config.r_max, config.radii_count);
    const auto report = verify_subsolution(config.params, config.A, config.alpha, radii);
    if (!report.all_pass) {
        err << "verify: first failure at r = " << format_double(*report.first_failure) << "\n";
    }
    return write_output(config, out, err, [&](std::ostream& os) {
        os << verification_to_json(report).dump(2) << "\n";
    });
}

int cmd_mu0(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const double value = mu_zero(config.params.n, config.params.k);
    return write_output(config, out, err, [&](std::ostream& os) { os << format_double(value) << "\n"; });
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto rows = run_sweep(config);
    return write_output(config, out, err, [&](std::ostream& os) { write_sweep_csv(os, rows); });
}

std::string family_prefix(const std::string& spec) {
    const auto colon = spec.find(':');
    return colon == std::string::npos ? spec : spec.substr(0, colon);
}

}  // namespace

void RunConfig::validate() const {
    switch (command) {
        case Command::Solve:
            require_positive(r_end, "--r-end");
            require_positive(h, "--h");
            require_positive(tol, "--tol");
            if (h > r_end) throw DomainError("--h must not exceed --r-end");
            if (method != "picard" && method != "euler") throw DomainError("--method must be picard or euler");
            if (!(phi_cap > a)) throw DomainError("--phi-cap must exceed --a");
            break;
        case Command::Blowup:
        case Command::Sweep:
            require_positive(r_max, "--r-max");
            require_positive(h, "--h");
            require_positive(phi_cap, "--phi-cap");
            break;
        case Command::Verify:
            require_positive(A, "--A");
            require_positive(r_max, "--r-max");
            if (radii_count < 4) throw DomainError("--count must be at least 4");
            break;
        case Command::Ko:
        case Command::Mu0:
            break;
    }
}

std::vector<double> parse_range(std::string_view text) {
    const auto first = text.find(':');
    if (first == std::string_view::npos) return {parse_double(text, text)};
    const auto second = text.find(':', first + 1);
    if (second == std::string_view::npos) throw DomainError("range '" + std::string(text) + "': expected lo:hi:count");
    const double lo = parse_double(text.substr(0, first), text);
    const double hi = parse_double(text.substr(first + 1, second - first - 1), text);
    const double count_d = parse_double(text.substr(second + 1), text);
    const auto count = static_cast<int>(count_d);
    if (count < 1 || count != count_d) throw DomainError("range '" + std::string(text) + "': count must be a positive integer");
    if (count == 1) return {lo};
    std::vector<double> values(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) values[i] = lo + (hi - lo) * i / (count - 1);
    values.back() = hi;
    return values;
}

std::vector<SweepRow> run_sweep(const RunConfig& config) {
    const auto base = Nonlinearity::parse(config.f_spec);
    const std::vector<double> a_values = config.a_grid.empty() ? std::vector<double>{config.a} : parse_range(config.a_grid);
    const std::vector<double> mu_values =
        config.mu_grid.empty() ? std::vector<double>{config.params.mu} : parse_range(config.mu_grid);
    const std::vector<double> f_values =
        config.fparam_grid.empty() ? std::vector<double>{base.parameter()} : parse_range(config.fparam_grid);
    const std::string prefix = family_prefix(config.f_spec);

    std::vector<SweepRow> rows;
    for (double fv : f_values) {
        for (double mu : mu_values) {
            for (double a : a_values) {
                SweepRow row;
                row.params = ProblemParams::make(config.params.n, config.params.k, mu);
                row.f_spec = prefix + ":" + format_double(fv);
                row.f_param = fv;
                row.a = a;
                rows.push_back(std::move(row));
            }
        }
    }
    std::sort(rows.begin(), rows.end(), [](const SweepRow& x, const SweepRow& y) {
        return std::tie(x.f_param, x.params.mu, x.a) < std::tie(y.f_param, y.params.mu, y.a);
    });

    BlowupOptions options;
    options.phi_cap = config.phi_cap;
    options.h0 = config.h;

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) {
            auto& row = rows[i];
            try {
                const auto f = Nonlinearity::parse(row.f_spec);
                const auto ko = ko_classify_analytic(f, row.params.k);
                row.ko = ko.classification;
                row.existence = existence_verdict(row.params, ko).verdict;
                const auto report = detect_blowup(row.params, f, row.a, config.r_max, options);
                row.status = report.status;
                row.R_estimate = report.R_estimate;
                row.R_lo = report.R_lo;
                row.R_hi = report.R_hi;
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    unsigned threads = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(rows.size(), 1)));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << "n,k,mu,f,a,status,R_estimate,R_lo,R_hi,ko,existence\n";
    for (const auto& row : rows) {
        os << row.params.n << ',' << row.params.k << ',' << format_double(row.params.mu) << ',' << row.f_spec
           << ',' << format_double(row.a) << ',' << to_string(row.status) << ',';
        if (row.status == BlowupReport::Status::FiniteBlowup) {
            os << format_double(row.R_estimate) << ',' << format_double(row.R_lo) << ','
               << format_double(row.R_hi);
        } else {
            os << ",,";
        }
        os << ',' << to_string(row.ko) << ',' << to_string(row.existence) << '\n';
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Radial subsolutions of S_k^{1/k}(D^2u + mu|Du|I) = f(u)", "hessian-radial"};
    app.require_subcommand(1);
    // --h is the grid step, so help is long-form only.
    app.set_help_flag("--help", "print help and exit");

    RunConfig config;
    int n = 2;
    int k = 1;
    std::optional<int> n_opt;
    double mu = 0.0;
    std::string format = "csv";

    std::string blowup_format = "json";

    auto add_params = [&](CLI::App* sub, bool need_n, bool with_mu = true) {
        if (need_n) {
            sub->add_option("--n", n, "space dimension n >= 2")->required();
        } else {
            sub->add_option("--n", n_opt, "space dimension (default max(2, k))");
        }
        sub->add_option("--k", k, "Hessian order 1 <= k <= n")->required();
        if (with_mu) sub->add_option("--mu", mu, "gradient coefficient");
    };
    auto add_output = [&](CLI::App* sub, std::string* format_target) {
        sub->add_option("--out", config.output_path, "output file (default stdout)");
        if (format_target) {
            sub->add_option("--format", *format_target, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        }
    };

    auto* solve = app.add_subcommand("solve", "solve the radial Cauchy problem on [0, r_end]");
    solve->set_help_flag("--help", "print help and exit");
    add_params(solve, true);
    solve->add_option("--f", config.f_spec, "const:<c> | exp:<alpha> | pow:<q>")->required();
    solve->add_option("--a", config.a, "initial value phi(0)");
    solve->add_option("--r-end", config.r_end, "right end of the radial interval");
    solve->add_option("--h", config.h, "grid step");
    solve->add_option("--tol", config.tol, "Picard tolerance");
    solve->add_option("--phi-cap", config.phi_cap, "blow-up threshold for the pre-check");
    solve->add_option("--method", config.method, "picard or euler");
    add_output(solve, &format);

    auto* blowup = app.add_subcommand("blowup", "locate a finite blow-up radius or certify reaching r_max");
    blowup->set_help_flag("--help", "print help and exit");
    add_params(blowup, true);
    blowup->add_option("--f", config.f_spec, "nonlinearity")->required();
    blowup->add_option("--a", config.a, "initial value phi(0)");
    blowup->add_option("--r-max", config.r_max, "largest radius to integrate to");
    blowup->add_option("--h", config.h, "initial step h0");
    blowup->add_option("--phi-cap", config.phi_cap, "values above this count as blow-up");
    add_output(blowup, &blowup_format);

    auto* ko = app.add_subcommand("ko", "classify the Keller-Osserman integral");
    ko->set_help_flag("--help", "print help and exit");
    add_params(ko, false);
    ko->add_option("--f", config.f_spec, "nonlinearity")->required();
    ko->add_flag("--numeric", config.numeric, "use the numeric tail fit instead of closed forms");
    ko->add_option("--tau-lo", config.ko_numeric.tau_lo, "numeric: lower tau");
    ko->add_option("--tau-hi", config.ko_numeric.tau_hi, "numeric: upper tau");
    ko->add_option("--nodes", config.ko_numeric.nodes, "numeric: geometric grid size");
    add_output(ko, nullptr);

    auto* verify = app.add_subcommand("verify", "check the Gaussian exp(A|x|^2) as a subsolution of S_k^{1/k} = u^alpha");
    verify->set_help_flag("--help", "print help and exit");
    add_params(verify, true);
    verify->add_option("--A", config.A, "Gaussian exponent coefficient")->required();
    verify->add_option("--alpha", config.alpha, "power in f(u) = u^alpha");
    double verify_r_max = 10.0;
    verify->add_option("--r-max", verify_r_max, "largest sampled radius");
    verify->add_option("--count", config.radii_count, "number of sampled radii");
    add_output(verify, nullptr);

    auto* mu0 = app.add_subcommand("mu0", "print the gradient threshold mu_0(n, k)");
    mu0->set_help_flag("--help", "print help and exit");
    mu0->add_option("--n", n, "space dimension")->required();
    mu0->add_option("--k", k, "Hessian order")->required();
    add_output(mu0, nullptr);

    auto* sweep = app.add_subcommand("sweep", "blow-up radius and verdicts over a parameter grid");
    sweep->set_help_flag("--help", "print help and exit");
    add_params(sweep, true, false);
    sweep->add_option("--f", config.f_spec, "nonlinearity (parameter replaced by --fparam)")->required();
    sweep->add_option("--a", config.a_grid, "lo:hi:count grid of initial values");
    sweep->add_option("--mu", config.mu_grid, "lo:hi:count grid of mu");
    sweep->add_option("--fparam", config.fparam_grid, "lo:hi:count grid of the family parameter");
    sweep->add_option("--r-max", config.r_max, "largest radius per run");
    sweep->add_option("--h", config.h, "initial step h0");
    sweep->add_option("--phi-cap", config.phi_cap, "blow-up threshold");
    sweep->add_option("--threads", config.threads, "worker threads (0 = hardware)");
    add_output(sweep, nullptr);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        CLI::App* chosen = app.get_subcommands().front();
        const std::string name = chosen->get_name();
        if (name == "solve") config.command = Command::Solve;
        else if (name == "blowup") config.command = Command::Blowup;
        else if (name == "ko") config.command = Command::Ko;
        else if (name == "verify") config.command = Command::Verify;
        else if (name == "mu0") config.command = Command::Mu0;
        else config.command = Command::Sweep;

        if (config.command == Command::Verify) config.r_max = verify_r_max;
        if (config.command == Command::Ko) n = n_opt.value_or(std::max(2, k));
        if (config.command == Command::Mu0) {
            if (k < 1 || k > n) throw DomainError("need 1 <= k <= n");
            config.params = ProblemParams{n, k, 0.0};
        } else {
            config.params = ProblemParams::make(n, k, config.command == Command::Sweep ? 0.0 : mu);
        }
        const std::string& chosen_format = config.command == Command::Blowup ? blowup_format : format;
        config.format = chosen_format == "json" ? Format::Json : Format::Csv;
        config.validate();

        switch (config.command) {
            case Command::Solve: return cmd_solve(config, out, err);
            case Command::Blowup: return cmd_blowup(config, out, err);
            case Command::Ko: return cmd_ko(config, out, err);
            case Command::Verify: return cmd_verify(config, out, err);
            case Command::Mu0: return cmd_mu0(config, out, err);
            case Command::Sweep: return cmd_sweep(config, out, err);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kOk;
}

}  // namespace hessian_radial::cli
