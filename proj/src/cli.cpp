#include "fluxlim/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fluxlim/io.hpp"
#include "fluxlim/isentropic.hpp"
#include "fluxlim/limit_lab.hpp"
#include "fluxlim/perturbed_transport.hpp"
#include "fluxlim/profile.hpp"
#include "fluxlim/solve.hpp"
#include "fluxlim/test_function.hpp"
#include "fluxlim/weak_form.hpp"

namespace fluxlim {

namespace {

// Malformed argument values found after CLI11 parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConvergenceFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_number(const std::string& text, const std::string& flag) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError(flag + ": '" + text + "' is not a number");
    }
}

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_number(item, flag));
    if (out.empty()) throw UsageError(flag + ": empty list");
    return out;
}

State parse_state(const std::string& text, const std::string& flag) {
    const std::vector<double> v = parse_list(text, flag);
    if (v.size() != 2) throw UsageError(flag + ": expected RHO,U, got '" + text + "'");
    return {v[0], v[1]};
}

struct Options {
    std::string system = "ise";
    std::string left, right;
    double eps1 = 0.0;
    double eps2 = 0.0;
    double gamma = 2.0;
    std::string format = "json";
    double t = 1.0;
    std::optional<double> x_min, x_max;
    int n = 0;
    std::string xi;
    std::string schedule;
    std::string path = "eq";
    std::string tests;
    std::string seed_config;
};

void add_data_options(CLI::App* sub, Options& o, bool with_system) {
    if (with_system) {
        sub->add_option("--system", o.system, "zp, pt or ise")
            ->check(CLI::IsMember({"zp", "pt", "ise"}))
            ->capture_default_str();
    }
    sub->add_option("--left", o.left, "left state RHO,U")->required();
    sub->add_option("--right", o.right, "right state RHO,U")->required();
    sub->add_option("--gamma", o.gamma, "adiabatic exponent")->capture_default_str();
    sub->add_option("--seed-config", o.seed_config, "JSON file whose keys mirror the flags");
}

void add_param_options(CLI::App* sub, Options& o) {
    sub->add_option("--eps1", o.eps1, "transport flux perturbation")->capture_default_str();
    sub->add_option("--eps2", o.eps2, "pressure scaling")->capture_default_str();
}

RiemannSolution solve_from(const Options& o) {
    const State left = parse_state(o.left, "--left");
    const State right = parse_state(o.right, "--right");
    return solve_riemann(system_from_string(o.system), left, right, FluxParams{o.eps1, o.eps2, o.gamma});
}

void emit_warnings(const FluxParams& params, std::ostream& err) {
    for (const std::string& w : parameter_warnings(params)) err << "warning: " << w << '\n';
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
    const RiemannSolution sol = solve_from(o);
    emit_warnings(sol.params, err);
    if (o.format == "csv") {
        write_solution_csv(out, sol);
    } else {
        out << solution_to_json(sol, solution_diagnostics(sol)).dump(2) << '\n';
    }
    return exit_ok;
}

int cmd_sample(const Options& o, std::ostream& out, std::ostream& err) {
    const RiemannSolution sol = solve_from(o);
    emit_warnings(sol.params, err);
    if (!(o.t > 0.0) || !std::isfinite(o.t)) throw UsageError("--t must be positive");

    std::vector<double> xis;
    if (!o.xi.empty()) {
        xis = parse_list(o.xi, "--xi");
    } else {
        if (!o.x_min || !o.x_max || o.n < 1) throw UsageError("sample needs --xi or --x-min, --x-max and --n >= 1");
        if (o.n == 1) {
            xis.push_back(*o.x_min / o.t);
        } else {
            for (int i = 0; i < o.n; ++i) {
                const double x = *o.x_min + (*o.x_max - *o.x_min) * i / (o.n - 1);
                xis.push_back(x / o.t);
            }
        }
    }

    struct Delta {
        double sigma, w1, w2;
        bool emitted = false;
    };
    std::vector<Delta> deltas;
    for (const Wave& w : sol.waves) {
        if (const auto* d = std::get_if<DeltaShock>(&w)) {
            const double weight = d->geometric_weight_rate() * o.t;
            deltas.push_back({d->sigma, weight, d->sigma * weight});
        }
    }
    const double lo = *std::min_element(xis.begin(), xis.end());
    const double hi = *std::max_element(xis.begin(), xis.end());
    const bool ascending = std::is_sorted(xis.begin(), xis.end());

    auto delta_row = [&](Delta& d) {
        write_csv_row(out, {csv_number(d.sigma), csv_number(d.w1), csv_number(d.w2), "delta"});
        d.emitted = true;
    };
    write_csv_row(out, {"xi", "rho", "u", "flag"});
    for (double xi : xis) {
        // Delta lines inside the sampled range that no grid point hits.
        if (ascending) {
            for (Delta& d : deltas) {
                if (!d.emitted && d.sigma < xi && d.sigma >= lo) delta_row(d);
            }
        }
        const ProfileSample s = sample_profile(sol, xi);
        if (s.kind == SampleKind::Delta) {
            for (Delta& d : deltas) {
                if (d.sigma == xi) delta_row(d);
            }
            continue;
        }
        write_csv_row(out, {csv_number(xi), csv_number(s.state.rho), csv_number(s.state.u), to_string(s.kind)});
    }
    for (Delta& d : deltas) {
        if (!d.emitted && d.sigma >= lo && d.sigma <= hi) delta_row(d);
    }
    return exit_ok;
}

int sweep_isentropic(const Options& o, const State& left, const State& right, std::ostream& out,
                     std::ostream& err) {
    const std::vector<double> eps = parse_list(o.schedule, "--schedule");
    const std::vector<EpsPair> schedule = make_schedule(eps, path_from_string(o.path));
    emit_warnings(FluxParams{0.0, 0.0, o.gamma}, err);

    if (left.u > right.u) {
        if (!o.tests.empty()) {
            std::vector<TestFunction> suite;
            try {
                suite = test_suite(o.tests);
            } catch (const std::invalid_argument& e) {
                throw ValidationError(e.what());
            }
            const WeakLimitReport report = weak_limit_weights(left, right, o.gamma, schedule, suite);
            write_csv_row(out, {"eps1", "eps2", "test", "pairing_mass", "target_mass", "error_mass",
                                "pairing_momentum", "target_momentum", "error_momentum"});
            for (const WeakLimitEntry& e : report.entries) {
                write_csv_row(out, {csv_number(e.eps1), csv_number(e.eps2), e.test, csv_number(e.pairing_mass),
                                    csv_number(e.target_mass), csv_number(e.error_mass),
                                    csv_number(e.pairing_momentum), csv_number(e.target_momentum),
                                    csv_number(e.error_momentum)});
            }
            if (!report.decreasing) throw ConvergenceFailure("weak-limit discrepancies do not decrease");
            return exit_ok;
        }
        const std::vector<SweepRecord> records = sweep_two_shock(left, right, o.gamma, schedule);
        write_csv_row(out, {"eps1", "eps2", "rho_star", "u_star", "sigma1", "sigma2", "p_scaled", "mass_gap"});
        for (const SweepRecord& r : records) {
            write_csv_row(out, {csv_number(r.eps1), csv_number(r.eps2), csv_number(r.rho_star),
                                csv_number(r.u_star), csv_number(r.sigma1), csv_number(r.sigma2),
                                csv_number(r.p_scaled), csv_number(r.mass_gap)});
        }
        const TwoShockConvergence c = analyze_two_shock(records, two_shock_targets(left, right, o.gamma));
        if (!c.rho_star_increasing) throw ConvergenceFailure("rho_star is not strictly increasing");
        if (!c.errors_decreasing) throw ConvergenceFailure("two-shock errors do not decrease");
        return exit_ok;
    }
    if (left.u < right.u) {
        std::vector<double> xi;
        if (!o.xi.empty()) xi = parse_list(o.xi, "--xi");
        const RarefactionSweepReport report = sweep_two_rarefaction(left, right, o.gamma, schedule, xi);
        std::vector<std::string> header{"eps1", "eps2", "u1", "u2", "rho_mid", "u1_error", "u2_error"};
        for (double x : xi) {
            header.push_back("rho@" + csv_number(x));
            header.push_back("u@" + csv_number(x));
        }
        write_csv_row(out, header);
        for (const RarefactionSweepRow& r : report.rows) {
            std::vector<std::string> row{csv_number(r.eps1), csv_number(r.eps2),    csv_number(r.u1),
                                         csv_number(r.u2),   csv_number(r.rho_mid), csv_number(r.u1_error),
                                         csv_number(r.u2_error)};
            for (const auto& [x, s] : r.samples) {
                row.push_back(csv_number(s.rho));
                row.push_back(csv_number(s.u));
            }
            write_csv_row(out, row);
        }
        if (!report.edges_converging) throw ConvergenceFailure("fan edges do not converge monotonically");
        return exit_ok;
    }
    throw ContractError("sweep needs u_- != u_+");
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
    const State left = parse_state(o.left, "--left");
    const State right = parse_state(o.right, "--right");
    const SystemKind system = system_from_string(o.system);
    if (o.schedule.empty()) throw UsageError("sweep needs --schedule");
    if (system == SystemKind::Isentropic) return sweep_isentropic(o, left, right, out, err);
    if (system == SystemKind::PerturbedTransport) {
        const std::vector<double> schedule = parse_list(o.schedule, "--schedule");
        const std::vector<Eps1LimitRow> rows = eps1_limit_table(left, right, schedule);
        write_csv_row(out, {"eps1", "sigma", "w_rate", "sigma_error", "w_rate_error"});
        for (const Eps1LimitRow& r : rows) {
            write_csv_row(out, {csv_number(r.eps1), csv_number(r.sigma), csv_number(r.w_rate),
                                csv_number(r.sigma_error), csv_number(r.w_rate_error)});
        }
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const bool sigma_ok = rows[i].sigma_error < rows[i - 1].sigma_error || rows[i - 1].sigma_error == 0.0;
            const bool w_ok = rows[i].w_rate_error < rows[i - 1].w_rate_error || rows[i - 1].w_rate_error == 0.0;
            if (!sigma_ok || !w_ok) throw ConvergenceFailure("eps1 errors do not decrease");
        }
        return exit_ok;
    }
    throw ContractError("sweep is defined for --system pt and ise");
}

int cmd_threshold(const Options& o, std::ostream& out, std::ostream& err) {
    const State left = parse_state(o.left, "--left");
    const State right = parse_state(o.right, "--right");
    emit_warnings(FluxParams{0.0, 0.0, o.gamma}, err);
    const VacuumThreshold v = vacuum_threshold(left, right, o.gamma);
    write_csv_row(out, {"eps0", "upper_bound", "always_constant_density"});
    write_csv_row(out, {v.eps0 ? csv_number(*v.eps0) : std::string("nan"), csv_number(v.upper_bound),
                        v.eps0 ? "false" : "true"});
    return exit_ok;
}

int cmd_residual(const Options& o, std::ostream& out, std::ostream& err) {
    const RiemannSolution sol = solve_from(o);
    emit_warnings(sol.params, err);
    std::vector<TestFunction> suite;
    try {
        suite = test_suite(o.tests);
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }
    constexpr double tolerance = 1e-8;
    bool ok = true;
    write_csv_row(out, {"test", "residual_mass", "residual_momentum"});
    for (const TestFunction& psi : suite) {
        const auto r = weak_form_residual(sol, psi);
        write_csv_row(out, {psi.name, csv_number(r[0]), csv_number(r[1])});
        if (!(std::abs(r[0]) < tolerance) || !(std::abs(r[1]) < tolerance)) ok = false;
    }
    if (!ok) throw ConvergenceFailure("weak-form residual above 1e-8");
    return exit_ok;
}

bool is_flag(const std::string& s) { return s.size() > 2 && s.rfind("--", 0) == 0; }

std::string flag_name(const std::string& s) {
    const auto eq = s.find('=');
    return eq == std::string::npos ? s : s.substr(0, eq);
}

const std::vector<std::string> command_names{"solve", "sample", "sweep", "threshold", "residual"};

}  // namespace

std::vector<std::string> expand_seed_config(const std::vector<std::string>& args) {
    std::optional<std::string> file;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--seed-config" && i + 1 < args.size()) file = args[i + 1];
        if (args[i].rfind("--seed-config=", 0) == 0) file = args[i].substr(14);
    }
    if (!file) return args;

    std::ifstream in(*file);
    if (!in) throw UsageError("cannot open seed config '" + *file + "'");
    json config;
    try {
        in >> config;
    } catch (const json::exception& e) {
        throw UsageError("seed config '" + *file + "': " + e.what());
    }
    if (!config.is_object()) throw UsageError("seed config must be a JSON object");

    std::vector<std::string> present;
    for (const std::string& a : args) {
        if (is_flag(a)) present.push_back(flag_name(a));
    }
    std::vector<std::string> out = args;
    const bool has_command =
        !args.empty() && std::find(command_names.begin(), command_names.end(), args.front()) != command_names.end();
    if (!has_command && config.contains("command")) {
        if (!config["command"].is_string()) throw UsageError("seed config: command must be a string");
        out.insert(out.begin(), config["command"].get<std::string>());
    }
    auto scalar = [&](const json& v, const std::string& key) -> std::string {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_number()) return v.dump();
        throw UsageError("seed config: unsupported value for '" + key + "'");
    };
    for (const auto& [key, value] : config.items()) {
        if (key == "command" || key == "seed-config") continue;
        const std::string flag = "--" + key;
        if (std::find(present.begin(), present.end(), flag) != present.end()) continue;
        std::string text;
        if (value.is_array()) {
            for (std::size_t i = 0; i < value.size(); ++i) {
                if (i) text += ',';
                text += scalar(value[i], key);
            }
        } else {
            text = scalar(value, key);
        }
        out.push_back(flag + "=" + text);
    }
    return out;
}

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact Riemann solvers for transport and flux-approximated isentropic systems", "fluxlim"};
    app.require_subcommand(1);

    CLI::App* solve = app.add_subcommand("solve", "solve one Riemann problem");
    add_data_options(solve, o, true);
    add_param_options(solve, o);
    solve->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

    CLI::App* sample = app.add_subcommand("sample", "sample the self-similar profile at time t");
    add_data_options(sample, o, true);
    add_param_options(sample, o);
    sample->add_option("--t", o.t, "sampling time")->capture_default_str();
    sample->add_option("--x-min", o.x_min, "first grid point");
    sample->add_option("--x-max", o.x_max, "last grid point");
    sample->add_option("--n", o.n, "number of grid points");
    sample->add_option("--xi", o.xi, "explicit xi list, comma separated");

    CLI::App* sweep = app.add_subcommand("sweep", "drive the flux perturbation to zero");
    add_data_options(sweep, o, true);
    sweep->add_option("--schedule", o.schedule, "decreasing eps values, comma separated")->required();
    sweep->add_option("--path", o.path, "eq, e1sq or e2sq")
        ->check(CLI::IsMember({"eq", "e1sq", "e2sq"}))
        ->capture_default_str();
    sweep->add_option("--tests", o.tests, "test suite for distributional pairings");
    sweep->add_option("--xi", o.xi, "xi samples for the two-rarefaction sweep");

    CLI::App* threshold = app.add_subcommand("threshold", "vacuum threshold eps0 on eps1 = eps2");
    add_data_options(threshold, o, false);

    CLI::App* residual = app.add_subcommand("residual", "weak-form residuals against a test suite");
    add_data_options(residual, o, true);
    add_param_options(residual, o);
    residual->add_option("--tests", o.tests, "test suite name")->required();

    try {
        std::vector<std::string> args = expand_seed_config(raw_args);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return exit_usage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return exit_usage;
    }

    try {
        if (*solve) return cmd_solve(o, out, err);
        if (*sample) return cmd_sample(o, out, err);
        if (*sweep) return cmd_sweep(o, out, err);
        if (*threshold) return cmd_threshold(o, out, err);
        if (*residual) return cmd_residual(o, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return exit_usage;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << '\n';
        return exit_numerical;
    } catch (const ConvergenceFailure& e) {
        err << "convergence failure: " << e.what() << '\n';
        return exit_convergence;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_validation;
    }
    return exit_usage;
}

}  // namespace fluxlim
