#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsteer/coarse_grain.hpp"
#include "qsteer/correlation.hpp"
#include "qsteer/errors.hpp"
#include "qsteer/state_io.hpp"
#include "qsteer/steering.hpp"
#include "qsteer/sweep_csv.hpp"
#include "qsteer/xstate.hpp"

namespace {

using namespace qsteer;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

const char* classification_str(Classification c) {
    switch (c) {
        case Classification::Separable: return "separable";
        case Classification::EntangledFulfilled: return "entangled-fulfilled";
        case Classification::EntangledViolating: return "entangled-violating";
        case Classification::NotApplicable: return "not-applicable";
    }
    return "not-applicable";
}

SteeringFunctional functional_from_name(const std::string& name) {
    if (name == "sum-squared") return SteeringFunctional::SumSquared;
    if (name == "sum-literal") return SteeringFunctional::SumLiteral;
    throw std::domain_error("unknown functional '" + name + "'");
}

struct ValidateConfig {
    std::string path;
    double tol = 1e-10;
    bool normalize = false;
};

struct SteerConfig {
    std::string path;
    std::vector<double> werner_p;
    std::vector<double> gisin_xa;
    std::string functional = "sum-squared";
    double tol = 1e-10;
};

struct SweepConfig {
    std::string family;
    double lo = -1.0 / 3.0;
    double hi = 1.0;
    double a = 0.2;
    int n = 201;
    std::string out_path;
    std::string plot_path;
    std::string functional = "sum-squared";
};

struct CoarseConfig {
    std::string path;
    double tol = 1e-10;
};

int cmd_validate(const ValidateConfig& cfg) {
    const DensityMatrix rho = read_density_json(cfg.path);
    const ValidationReport rep = validate_density(rho, Tolerance{cfg.tol}, cfg.normalize);
    if (cfg.normalize && rep.trace_dev > cfg.tol && rep.trace_dev <= kTraceSlack)
        std::cerr << "warning: trace deviates by " << fmt(rep.trace_dev)
                  << "; accepted because --normalize was given\n";
    std::cout << "hermitian      = " << bool_str(rep.hermitian) << "\n"
              << "trace_dev      = " << fmt(rep.trace_dev) << "\n"
              << "min_eigenvalue = " << fmt(rep.min_eigenvalue) << "\n"
              << "psd            = " << bool_str(rep.psd) << "\n"
              << "valid          = " << bool_str(rep.valid) << "\n";
    return rep.valid ? 0 : 1;
}

void print_steer_report(const std::string& functional, const SteeringReport& rep) {
    std::cout << "functional     = " << functional << "\n"
              << "lhs            = " << fmt(rep.lhs) << "\n"
              << "rhs            = " << fmt(rep.rhs) << "\n"
              << "fulfilled      = " << bool_str(rep.fulfilled) << "\n"
              << "entangled      = " << bool_str(rep.entangled) << "\n"
              << "classification = " << classification_str(rep.classification) << "\n";
}

int cmd_steer(const SteerConfig& cfg) {
    const int sources = (cfg.path.empty() ? 0 : 1) + (cfg.werner_p.empty() ? 0 : 1) +
                        (cfg.gisin_xa.empty() ? 0 : 1);
    if (sources != 1)
        throw std::domain_error("steer: give exactly one of <file>, --werner, --gisin");

    DensityMatrix rho;
    if (!cfg.path.empty()) {
        rho = read_density_json(cfg.path);
    } else if (!cfg.werner_p.empty()) {
        rho = xstate_to_density(werner(WernerParam{cfg.werner_p[0]}));
    } else {
        rho = xstate_to_density(
            gisin(GisinParam::with_a(cfg.gisin_xa[0], Complex{cfg.gisin_xa[1], 0.0})));
    }

    const Tolerance tol{cfg.tol};
    if (cfg.functional == "both") {
        print_steer_report("sum-squared",
                           steering_check(rho, SteeringFunctional::SumSquared, tol));
        print_steer_report("sum-literal",
                           steering_check(rho, SteeringFunctional::SumLiteral, tol));
    } else {
        print_steer_report(cfg.functional,
                           steering_check(rho, functional_from_name(cfg.functional), tol));
    }
    std::cout << "note: the entangled-fulfilled band is conventionally reported as steerable;"
                 " the alternative reading treats a fulfilled inequality as consistent with"
                 " no steering\n";
    return 0;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw IoError("failed writing '" + path + "'");
}

int cmd_sweep(const SweepConfig& cfg) {
    auto run = [&](SteeringFunctional f) {
        if (cfg.family == "werner") return sweep_werner(cfg.lo, cfg.hi, cfg.n, f);
        if (cfg.family == "gisin") return sweep_gisin(Complex{cfg.a, 0.0}, cfg.n, f);
        throw std::domain_error("sweep: family must be werner or gisin");
    };

    std::string csv;
    if (cfg.functional == "both") {
        csv = sweep_csv_both(run(SteeringFunctional::SumSquared),
                             run(SteeringFunctional::SumLiteral));
    } else {
        csv = sweep_csv(run(functional_from_name(cfg.functional)));
    }
    write_text_file(cfg.out_path, csv);

    if (!cfg.plot_path.empty()) {
        const bool is_werner = cfg.family == "werner";
        const std::string title =
            is_werner ? "Werner family" : "Gisin family (a=" + fmt(cfg.a) + ")";
        write_text_file(cfg.plot_path,
                        gnuplot_script(cfg.out_path, title, is_werner ? "p" : "x"));
    }
    return 0;
}

int cmd_coarse(const CoarseConfig& cfg) {
    const DensityMatrix rho = read_density_json(cfg.path);
    const ValidationReport v = validate_density(rho, Tolerance{cfg.tol});
    if (!v.valid) {
        std::cerr << "error: state failed validation\n";
        return 1;
    }
    const OutcomeDistribution d = outcome_distribution(rho);
    const CoarsePair c = qudit_coarse(d);
    const CorrelationTensor t = correlation_tensor(rho);
    std::cout << "p1          = " << fmt(c.p1) << "\n"
              << "p2          = " << fmt(c.p2) << "\n"
              << "pt1         = " << fmt(c.pt1) << "\n"
              << "pt2         = " << fmt(c.pt2) << "\n"
              << "correlation = " << fmt(coarse_correlation(d)) << "\n"
              << "covariance  = " << fmt(coarse_covariance(d)) << "\n"
              << "t33_check   = " << fmt(t(2, 2)) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steering and correlation analysis for 4-level (spin-3/2) qudit states"};
    app.require_subcommand(1);

    ValidateConfig validate_cfg;
    auto* validate = app.add_subcommand("validate", "Check a density-matrix JSON file");
    validate->add_option("file", validate_cfg.path, "state JSON file")->required();
    validate->add_option("--tol", validate_cfg.tol, "structural tolerance");
    validate->add_flag("--normalize", validate_cfg.normalize,
                       "accept trace deviations up to 1e-6 with a warning");

    SteerConfig steer_cfg;
    auto* steer = app.add_subcommand("steer", "Evaluate the steering-detection inequality");
    steer->add_option("file", steer_cfg.path, "state JSON file");
    steer->add_option("--werner", steer_cfg.werner_p, "Werner parameter p")->expected(1);
    steer->add_option("--gisin", steer_cfg.gisin_xa, "Gisin parameters x a")->expected(2);
    steer->add_option("--functional", steer_cfg.functional,
                      "sum-squared (default), sum-literal, or both");
    steer->add_option("--tol", steer_cfg.tol, "structural tolerance");

    SweepConfig sweep_cfg;
    auto* sweep = app.add_subcommand("sweep", "Sweep a state family and write CSV data");
    sweep->add_option("--family", sweep_cfg.family, "werner or gisin")->required();
    sweep->add_option("--lo", sweep_cfg.lo, "Werner sweep start (default -1/3)");
    sweep->add_option("--hi", sweep_cfg.hi, "Werner sweep end (default 1)");
    sweep->add_option("--a", sweep_cfg.a, "Gisin amplitude a (default 0.2)");
    sweep->add_option("-n", sweep_cfg.n, "number of grid points (default 201)");
    sweep->add_option("-o", sweep_cfg.out_path, "output CSV path")->required();
    sweep->add_option("--plot-script", sweep_cfg.plot_path, "also write a gnuplot script");
    sweep->add_option("--functional", sweep_cfg.functional,
                      "sum-squared (default), sum-literal, or both");

    CoarseConfig coarse_cfg;
    auto* coarse = app.add_subcommand("coarse", "Coarse-grained outcome correlations of a state");
    coarse->add_option("file", coarse_cfg.path, "state JSON file")->required();
    coarse->add_option("--tol", coarse_cfg.tol, "structural tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(validate_cfg);
        if (app.got_subcommand(steer)) return cmd_steer(steer_cfg);
        if (app.got_subcommand(sweep)) return cmd_sweep(sweep_cfg);
        if (app.got_subcommand(coarse)) return cmd_coarse(coarse_cfg);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
