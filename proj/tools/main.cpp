// Command-line front end: k-sweeps, resonance tables, closed-form
// polynomial tables and the self-verification report.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <string>

#include "deltacomb/oracle.hpp"
#include "deltacomb/polynomial.hpp"
#include "deltacomb/rng.hpp"
#include "deltacomb/transmission.hpp"

namespace {

struct RunConfig {
    int n = 1;
    double k_lo = 0.05;
    double k_hi = 10.0;
    int steps = 2000;
    double hbar = 1.0;
    double mass = 1.0;
    double lambda = 0.5;
    double length = 1.0;
    bool natural_units = false;
    std::string output = "-";
    std::uint64_t seed = 42;
    double tol = 0.0;  // 0 = built-in defaults

    deltacomb::PhysicalParams params() const {
        deltacomb::PhysicalParams p;
        if (natural_units) {
            p.hbar = 1.0;
            p.mass = 1.0;
            p.strength = 0.5;
        } else {
            p.hbar = hbar;
            p.mass = mass;
            p.strength = lambda;
        }
        p.spacing = length;
        p.count = n;
        p.validate();
        return p;
    }
};

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--n", cfg.n, "number of delta potentials");
    cmd->add_option("--k-lo", cfg.k_lo, "lower wave number");
    cmd->add_option("--k-hi", cfg.k_hi, "upper wave number");
    cmd->add_option("--steps", cfg.steps, "grid points");
    cmd->add_option("--hbar", cfg.hbar, "reduced Planck constant");
    cmd->add_option("--mass", cfg.mass, "particle mass");
    cmd->add_option("--lambda", cfg.lambda, "potential strength (sign selects barrier/well)");
    cmd->add_option("--length", cfg.length, "barrier spacing");
    cmd->add_flag("--natural-units", cfg.natural_units,
                  "force hbar = mass = 1, lambda = 0.5 (figure convention)");
    cmd->add_option("--output", cfg.output, "output path ('-' = stdout)");
    cmd->add_option("--seed", cfg.seed, "seed for randomized checks");
    cmd->add_option("--tol", cfg.tol, "tolerance override (verify) / bracket width (resonances)");
}

// CSV contract: 12 significant digits, '\n' endings, no trailing comma.
std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (path != "-") {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

int run_sweep(const RunConfig& cfg) {
    const auto records = deltacomb::sweep(cfg.n, cfg.k_lo, cfg.k_hi, cfg.steps, cfg.params());
    Output out(cfg.output);
    out.stream() << "k,T,R\n";
    for (const auto& r : records)
        out.stream() << fmt12(r.k) << ',' << fmt12(r.transmission) << ',' << fmt12(r.reflection)
                     << '\n';
    return 0;
}

int run_resonances(const RunConfig& cfg) {
    const double tol = cfg.tol > 0.0 ? cfg.tol : 1e-9;
    const auto records =
        deltacomb::find_resonances(cfg.n, cfg.k_lo, cfg.k_hi, cfg.params(), cfg.steps, tol);
    Output out(cfg.output);
    out.stream() << "k_star,T_peak\n";
    for (const auto& r : records) out.stream() << fmt12(r.k_star) << ',' << fmt12(r.t_peak) << '\n';
    return 0;
}

int run_table(const RunConfig& cfg) {
    if (cfg.n < 1) throw std::domain_error("--n must be at least 1");
    Output out(cfg.output);
    for (int n = 1; n <= cfg.n; ++n)
        out.stream() << n << ": " << deltacomb::format_polynomial(deltacomb::principal_element(n))
                     << '\n';
    return 0;
}

int run_verify(const RunConfig& cfg) {
    if (cfg.n < 1) throw std::domain_error("--n must be at least 1");
    Output output(cfg.output);
    std::ostream& out = output.stream();
    bool all_pass = true;
    char buf[200];

    for (int n = 1; n <= cfg.n; ++n) {
        auto report = deltacomb::polynomial_identity_check(n, 100, cfg.seed);
        if (cfg.tol > 0.0) {
            report.tolerance = cfg.tol;
            report.pass = report.max_rel_err <= cfg.tol;
        }
        all_pass = all_pass && report.pass;
        out << report.line() << '\n';
    }

    // boundary-condition solver vs closed form
    for (int n = 1; n <= std::min(cfg.n, 10); ++n) {
        const double tol = cfg.tol > 0.0 ? cfg.tol : 1e-8;
        std::mt19937_64 gen(cfg.seed);
        double worst = 0.0;
        for (int t = 0; t < 50; ++t) {
            const auto s = deltacomb::draw_sample(gen);
            deltacomb::PhysicalParams p;
            p.strength = s.strength;
            p.spacing = s.spacing;
            p.count = n;
            worst = std::max(worst, std::abs(deltacomb::transmission_direct(s.k, p) -
                                             deltacomb::transmission_closed(n, s.k, p)));
        }
        const bool pass = worst <= tol;
        all_pass = all_pass && pass;
        std::snprintf(buf, sizeof(buf),
                      "boundary N=%-3d points=50   seed=%llu max_abs_err=%.6e tol=%.1e %s", n,
                      static_cast<unsigned long long>(cfg.seed), worst, tol,
                      pass ? "PASS" : "FAIL");
        out << buf << '\n';
    }

    // specialized closed formulas vs the polynomial route
    struct FormulaCheck {
        int n;
        const char* name;
        double (*eval)(double, double, const deltacomb::PhysicalParams&);
    };
    const FormulaCheck checks[] = {
        {1, "T1",
         [](double k, double, const deltacomb::PhysicalParams& p) {
             return deltacomb::transmission_single(k, p);
         }},
        {2, "T2", &deltacomb::transmission_double},
        {4, "T4", &deltacomb::transmission_quad},
    };
    for (const auto& chk : checks) {
        if (cfg.n < chk.n) continue;
        const double tol = cfg.tol > 0.0 ? cfg.tol : 1e-9;
        std::mt19937_64 gen(cfg.seed);
        double worst = 0.0;
        for (int t = 0; t < 200; ++t) {
            const auto s = deltacomb::draw_sample(gen);
            deltacomb::PhysicalParams p;
            p.strength = s.strength;
            p.spacing = s.spacing;
            p.count = chk.n;
            const double a = chk.eval(s.k, s.spacing, p);
            const double b = deltacomb::transmission_closed(chk.n, s.k, p);
            worst = std::max(worst, std::abs(a - b) / std::max({a, b, 1e-300}));
        }
        const bool pass = worst <= tol;
        all_pass = all_pass && pass;
        std::snprintf(buf, sizeof(buf),
                      "formula  %-5s points=200  seed=%llu max_rel_err=%.6e tol=%.1e %s", chk.name,
                      static_cast<unsigned long long>(cfg.seed), worst, tol,
                      pass ? "PASS" : "FAIL");
        out << buf << '\n';
    }

    std::snprintf(buf, sizeof(buf), "VERIFY %s (n=%d, seed=%llu)", all_pass ? "PASS" : "FAIL",
                  cfg.n, static_cast<unsigned long long>(cfg.seed));
    out << buf << '\n';
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"transmission through equally spaced delta potentials"};
    app.require_subcommand(1);

    RunConfig cfg;
    CLI::App* cmd_sweep = app.add_subcommand("sweep", "emit a k,T,R CSV over a wave-number grid");
    CLI::App* cmd_res =
        app.add_subcommand("resonances", "locate perfect-transmission peaks (k_star,T_peak CSV)");
    CLI::App* cmd_table =
        app.add_subcommand("table", "print the closed-form M11 polynomials for N = 1..n");
    CLI::App* cmd_verify =
        app.add_subcommand("verify", "run identity and cross-formula checks; exit 0 iff all pass");
    for (CLI::App* cmd : {cmd_sweep, cmd_res, cmd_table, cmd_verify})
        add_common_options(cmd, cfg);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_sweep->parsed()) return run_sweep(cfg);
        if (cmd_res->parsed()) return run_resonances(cfg);
        if (cmd_table->parsed()) return run_table(cfg);
        if (cmd_verify->parsed()) return run_verify(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
