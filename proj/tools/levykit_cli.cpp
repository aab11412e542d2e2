// Batch interface: model configs in, CSV/JSON reports out.
// Exit codes: 0 all verdicts pass, 1 a verdict failed, 2 usage/config error,
// 3 numeric error.

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "levykit/bounds.hpp"
#include "levykit/config.hpp"
#include "levykit/density.hpp"
#include "levykit/dirichlet.hpp"
#include "levykit/errors.hpp"
#include "levykit/rate.hpp"
#include "levykit/report_io.hpp"
#include "levykit/simulate.hpp"
#include "levykit/version.hpp"

namespace {

using namespace levykit;

std::vector<double> parse_values(const std::string& text) {
    // "a:b:s" sweeps, "v1,v2,..." lists, or a single value
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        double a = 0, b = 0, s = 0;
        char c1 = 0, c2 = 0;
        std::istringstream is(text);
        if (!(is >> a >> c1 >> b >> c2 >> s) || c1 != ':' || c2 != ':' || !(s > 0))
            throw invalid_input_error("range must be start:stop:step, got " + text);
        for (double v = a; v <= b + 1e-12 * std::max(1.0, std::fabs(b)); v += s)
            out.push_back(v);
        return out;
    }
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    if (out.empty()) throw invalid_input_error("no values in " + text);
    return out;
}

struct CommonArgs {
    std::string config_path;
    std::string out_path;
};

std::string command_line(int argc, char** argv) {
    std::ostringstream os;
    for (int i = 0; i < argc; ++i) os << (i ? " " : "") << argv[i];
    return os.str();
}

int run_validate(const ModelConfig& config) {
    LevyModel model = build_model(config);
    struct Check {
        std::string name;
        bool pass;
    };
    std::vector<Check> checks;
    checks.push_back({"psi_zero_at_origin", std::fabs(model.psi(0.0)) < 1e-14});
    bool even = true, nonneg = true, poly = true;
    double cpsi = 0.0;
    for (double xi = 0.125; xi <= 1.0; xi *= 2.0) cpsi = std::max(cpsi, model.psi(xi));
    for (double xi : {0.3, 1.0, 2.7, 8.0, 31.0}) {
        const double v = model.psi(xi);
        even = even && std::fabs(model.psi(-xi) - v) <= 1e-10 * (1.0 + v);
        nonneg = nonneg && v >= 0.0;
        poly = poly && v <= cpsi * (1.0 + xi * xi) * (1.0 + 1e-9);
    }
    checks.push_back({"psi_even", even});
    checks.push_back({"psi_nonnegative", nonneg});
    checks.push_back({"psi_polynomially_bounded", poly});
    checks.push_back({"config_roundtrip",
                      serialize_model_config(parse_model_config(
                          serialize_model_config(config))) ==
                          serialize_model_config(config)});

    bool all = true;
    std::ostringstream os;
    os << "{\"model\": \"" << model.describe() << "\", \"exp_moments\": "
       << (model.has_exp_moments() ? "true" : "false") << ", \"hartman_wintner\": "
       << (model.hartman_wintner_ok() ? "true" : "false") << ", \"checks\": [";
    for (std::size_t i = 0; i < checks.size(); ++i) {
        all = all && checks[i].pass;
        os << (i ? ", " : "") << "{\"name\": \"" << checks[i].name << "\", \"pass\": "
           << (checks[i].pass ? "true" : "false") << "}";
    }
    os << "], \"verdict\": \"" << (all ? "pass" : "fail") << "\"}\n";
    std::cout << os.str();
    return all ? 0 : 1;
}

int run_exponent(const ModelConfig& config, const CommonArgs& args,
                 const std::string& xi_text, const std::string& preamble) {
    LevyModel model = build_model(config);
    const auto xis = parse_values(xi_text);
    std::ostringstream os;
    os << preamble;
    const bool with_cumulant =
        model.has_exp_moments() || model.closed_form() == ClosedForm::gaussian;
    os << (with_cumulant ? "xi,psi,lambda\n" : "xi,psi\n");
    for (double xi : xis) {
        os << format_g17(xi) << "," << format_g17(model.psi(xi));
        if (with_cumulant) os << "," << format_g17(model.cumulant(xi));
        os << "\n";
    }
    atomic_write_text(args.out_path, os.str());
    return 0;
}

int run_density(const ModelConfig& config, const CommonArgs& args, double t,
                double align, const std::string& preamble) {
    LevyModel model = build_model(config);
    DensityGridParams params;
    params.align = align;
    auto grid = density_grid(model, t, params);
    atomic_write_text(args.out_path, density_csv(grid, preamble, model.describe()));
    std::cout << "p(0)=" << format_g17(grid.value_at(0.0)) << " mass="
              << format_g17(grid.mass) << "\n";
    return 0;
}

int run_rate(const ModelConfig& config, const CommonArgs& args,
             const std::string& x_text, double t, const std::string& preamble) {
    LevyModel model = build_model(config);
    const auto xs = parse_values(x_text);
    std::vector<RateResult> rows(xs.size(), RateResult{});
    parallel_for(xs.size(),
                 [&](std::size_t i) { rows[i] = rate_function(model, t, xs[i]); });
    if (!args.out_path.empty())
        atomic_write_text(args.out_path, rate_csv(rows, preamble));
    for (const auto& row : rows)
        std::cout << "x=" << format_g17(row.x[0]) << " D_sq=" << format_g17(row.d_sq)
                  << " xi0=" << format_g17(row.xi0[0]) << "\n";
    return 0;
}

int finish_bound(const BoundReport& report, const CommonArgs& args,
                 const std::string& preamble) {
    if (!args.out_path.empty()) {
        atomic_write_text(args.out_path, bound_csv(report, preamble));
        atomic_write_text(args.out_path + ".summary.json", bound_summary_json(report));
    }
    std::cout << bound_summary_json(report);
    return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"transition densities, rate functions and heat-kernel bounds for "
                 "symmetric Levy processes"};
    app.set_version_flag("--version", levykit::version);
    app.require_subcommand(1);

    CommonArgs args;
    double t = 1.0, delta = 0.0, eps = 0.2, align = 0.25, beta = 2.0;
    double ks_threshold = 0.01, epsilon = 0.0;
    std::string x_text = "0", xi_text = "0:8:0.5", t_text = "1", ells_text = "1,2,4,8,16";
    std::string fit_t_text = "0.05,0.1,0.2,0.4,0.7,1";
    std::string compensation = "gaussian";
    std::size_t count = 100000;
    std::uint64_t seed = 0;
    int nodes = 4096;
    double half_width = 16.0;
    bool with_ks = false;

    auto add_config = [&](CLI::App* cmd) {
        cmd->add_option("--config", args.config_path, "model config JSON")->required();
    };

    auto* validate = app.add_subcommand("validate", "check model invariants");
    add_config(validate);

    auto* exponent = app.add_subcommand("exponent", "psi / cumulant tables");
    add_config(exponent);
    exponent->add_option("--xi", xi_text, "frequencies start:stop:step");
    exponent->add_option("--out", args.out_path, "output CSV")->required();

    auto* density = app.add_subcommand("density", "density grid CSV");
    add_config(density);
    density->add_option("--t", t, "time")->required();
    density->add_option("--align", align, "node alignment step");
    density->add_option("--out", args.out_path, "output CSV")->required();

    auto* rate = app.add_subcommand("rate", "rate function table");
    add_config(rate);
    rate->add_option("--t", t, "time")->required();
    rate->add_option("--x", x_text, "points start:stop:step")->required();
    rate->add_option("--out", args.out_path, "output CSV");

    auto* bounds = app.add_subcommand("bounds", "heat-kernel bound reports");
    bounds->require_subcommand(1);
    auto* off = bounds->add_subcommand("off-diagonal", "p_t(x) <= e^{-D^2} p_t(0)");
    add_config(off);
    off->add_option("--t", t)->required();
    off->add_option("--x", x_text)->required();
    off->add_option("--out", args.out_path);
    auto* on = bounds->add_subcommand("on-diagonal", "sup p_t <= c [f^{-1}(1/gt)]^{n/2}");
    add_config(on);
    on->add_option("--t", t_text, "times list");
    on->add_option("--out", args.out_path);
    auto* combined = bounds->add_subcommand("combined", "off/on-diagonal product bound");
    add_config(combined);
    combined->add_option("--t", t)->required();
    combined->add_option("--x", x_text)->required();
    combined->add_option("--fit-t", fit_t_text, "times for the on-diagonal fit");
    combined->add_option("--out", args.out_path);
    auto* asym = bounds->add_subcommand("asymptotics", "tempered-tail minimizer growth");
    add_config(asym);
    asym->add_option("--beta", beta)->required();
    asym->add_option("--t", t)->required();
    asym->add_option("--x", x_text)->required();
    asym->add_option("--eps", eps);
    asym->add_option("--out", args.out_path);

    auto* nash = app.add_subcommand("nash", "empirical Nash inequality report");
    add_config(nash);
    nash->add_option("--delta", delta);
    nash->add_option("--nodes", nodes);
    nash->add_option("--half-width", half_width);
    nash->add_option("--out", args.out_path)->required();

    auto* ldp = app.add_subcommand("ldp", "large-deviation limit table");
    add_config(ldp);
    ldp->add_option("--t", t)->required();
    ldp->add_option("--x", x_text)->required();
    ldp->add_option("--ells", ells_text, "scaling factors");
    ldp->add_option("--out", args.out_path);

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo increments");
    add_config(simulate);
    simulate->add_option("--t", t)->required();
    simulate->add_option("--n", count);
    simulate->add_option("--seed", seed);
    simulate->add_option("--epsilon", epsilon, "small-jump truncation");
    simulate->add_option("--compensation", compensation, "none|gaussian");
    simulate->add_flag("--ks", with_ks, "compare with the Fourier density");
    simulate->add_option("--ks-threshold", ks_threshold);
    simulate->add_option("--out", args.out_path, "binary samples")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const ModelConfig config = load_model_config(args.config_path);
        const std::string preamble =
            levykit::report_preamble(command_line(argc, argv), config_hash(config));

        if (validate->parsed()) return run_validate(config);
        if (exponent->parsed()) return run_exponent(config, args, xi_text, preamble);
        if (density->parsed()) return run_density(config, args, t, align, preamble);
        if (rate->parsed()) return run_rate(config, args, x_text, t, preamble);

        if (off->parsed()) {
            auto report = off_diagonal_check(build_model(config), t, parse_values(x_text));
            return finish_bound(report, args, preamble);
        }
        if (on->parsed()) {
            auto model = build_model(config);
            auto report = on_diagonal_fit(model, build_bernstein(config),
                                          parse_values(t_text), model.dim());
            return finish_bound(report, args, preamble);
        }
        if (combined->parsed()) {
            auto model = build_model(config);
            auto report = combined_bound_check(model, build_bernstein(config), t,
                                               parse_values(x_text),
                                               parse_values(fit_t_text));
            return finish_bound(report, args, preamble);
        }
        if (asym->parsed()) {
            auto model = build_model(config);
            auto report =
                tempered_asymptotics_check(model, beta, t, parse_values(x_text), eps);
            std::ostringstream os;
            os << preamble << "x,xi0,predicted,ratio,regime\n";
            for (const auto& row : report.rows)
                os << format_g17(row.x) << "," << format_g17(row.xi0) << ","
                   << format_g17(row.predicted) << "," << format_g17(row.ratio) << ","
                   << (row.regime_ok ? "ok" : "below-threshold") << "\n";
            if (!args.out_path.empty()) atomic_write_text(args.out_path, os.str());
            std::cout << "{\"bound_id\": \"asymptotics\", \"ratio_trend\": "
                      << (report.ratio_trend_ok ? "true" : "false")
                      << ", \"eps_bound\": " << (report.eps_bound_ok ? "true" : "false")
                      << ", \"verdict\": \"" << (report.pass ? "pass" : "fail")
                      << "\"}\n";
            return report.pass ? 0 : 1;
        }
        if (nash->parsed()) {
            auto model = build_model(config);
            auto family = default_nash_family({nodes, half_width});
            auto report = nash_check(model, build_bernstein(config), delta, family);
            atomic_write_text(args.out_path, nash_csv(report, preamble));
            std::cout << "worst_C0=" << format_g17(report.worst_c0) << "\n";
            return report.finite ? 0 : 1;
        }
        if (ldp->parsed()) {
            auto table = ldp_check(build_model(config), t, parse_values(x_text)[0],
                                   parse_values(ells_text));
            if (!args.out_path.empty())
                atomic_write_text(args.out_path, ldp_csv(table, preamble));
            std::cout << "{\"D_sq\": " << format_g17(table.d_sq) << ", \"decreasing\": "
                      << (table.decreasing ? "true" : "false") << ", \"verdict\": \""
                      << (table.pass ? "pass" : "fail") << "\"}\n";
            return table.pass ? 0 : 1;
        }
        if (simulate->parsed()) {
            SamplePlan plan(build_model(config));
            plan.t = t;
            plan.count = count;
            plan.seed = seed;
            plan.epsilon = epsilon;
            if (compensation == "none")
                plan.compensation = Compensation::none;
            else if (compensation != "gaussian")
                throw invalid_input_error("compensation must be none or gaussian");
            auto samples = sample_increments(plan);
            write_samples(args.out_path, plan, samples);
            if (with_ks) {
                auto grid = density_grid(plan.model, plan.t);
                auto cmp = empirical_vs_fourier(plan, grid);
                std::cout << "ks=" << format_g17(cmp.ks_distance)
                          << " sup_gap=" << format_g17(cmp.sup_density_gap) << "\n";
                return cmp.ks_distance <= ks_threshold ? 0 : 1;
            }
            return 0;
        }
        return 2;
    } catch (const invalid_input_error& e) {
        std::cerr << "{\"error\": {\"type\": \"config\", \"message\": \"" << e.what()
                  << "\"}}\n";
        return 2;
    } catch (const out_of_range_error& e) {
        std::cerr << "{\"error\": {\"type\": \"config\", \"message\": \"" << e.what()
                  << "\"}}\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "{\"error\": {\"type\": \"config\", \"message\": \"" << e.what()
                  << "\"}}\n";
        return 2;
    } catch (const feature_error& e) {
        std::cerr << "{\"error\": {\"type\": \"config\", \"message\": \"" << e.what()
                  << "\"}}\n";
        return 2;
    } catch (const levykit::error& e) {
        std::cerr << "{\"error\": {\"type\": \"numeric\", \"message\": \"" << e.what()
                  << "\"}}\n";
        return 3;
    }
}
