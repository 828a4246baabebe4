// Acceptance suite: runs every gate criterion and prints one line per
// criterion. Exit code is the number of failures. argv[1] (optional) names
// the CLI binary used by the determinism criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lef/bench.hpp"
#include "lef/catalog.hpp"
#include "lef/solver.hpp"
#include "lef/tuner.hpp"

namespace {

int failures = 0;

struct Criterion {
    const char* name;
    double time_limit;  // seconds, 0 = unlimited
};

void run(const Criterion& c, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit > 0 && dt > c.time_limit) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("time limit exceeded");
    }
    if (!ok) ++failures;
    std::printf("%-4s %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.name, dt,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

lef::GridFn exact_grid(const lef::Problem& p, const lef::Expr& e, int degree) {
    return lef::GridFn::sample([&](double x) { return e.eval_x(x, p.params); }, degree);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    run({"1. exact recovery of example 3 at c = -1, order 3", 1.0}, [](std::string& detail) {
        const auto& b = lef::builtin(3);
        lef::HamConfig cfg;
        cfg.order = 3;
        cfg.degree = 64;
        cfg.c10 = cfg.c20 = -1.0;
        lef::Solution s = lef::ham_solve(b.problem, cfg);
        const double e1 = (s.phi1() - exact_grid(b.problem, *b.problem.exact1, 64)).max_abs();
        const double e2 = (s.phi2() - exact_grid(b.problem, *b.problem.exact2, 64)).max_abs();
        detail = "errors " + lef::format_sig(e1) + ", " + lef::format_sig(e2);
        return e1 <= 1e-10 && e2 <= 1e-10;
    });

    run({"2. constant-source kernel oracle, shape factors 1..5", 1.0}, [](std::string& detail) {
        const double m = 4.25;
        double worst = 0.0;
        for (int k = 1; k <= 5; ++k) {
            lef::Weight w;
            w.k = k;
            lef::Kernel kern(w, 1.0, 0.0, 64);
            lef::GridFn got = kern.apply(lef::GridFn::constant(m, 64));
            lef::GridFn want = lef::GridFn::sample(
                [&](double x) { return m * (x * x - 1.0) / (2.0 * (k + 1)); }, 64);
            worst = std::max(worst, (got - want).max_abs());
        }
        detail = "worst deviation " + lef::format_sig(worst);
        return worst <= 1e-10;
    });

    run({"3. reference tables of example 1 (both variants)", 30.0}, [](std::string& detail) {
        lef::BenchOptions opts;
        opts.run_tuner = false;
        int bad = 0;
        double worst_sol = 0.0, worst_fac = 1.0;
        for (const char* key : {"1:v1", "1:v2"}) {
            lef::BenchResult r = lef::reproduce_table(lef::builtin(key), opts);
            for (const auto& c : r.checks) {
                if (!c.pass && c.gated) ++bad;
                const bool solution_cell = c.column[0] == 'p';
                if (solution_cell)
                    worst_sol = std::max(worst_sol, std::abs(c.got - c.ref));
                else if (c.got > 0 && c.ref > 0)
                    worst_fac = std::max(worst_fac, std::max(c.got / c.ref, c.ref / c.got));
            }
        }
        detail = "worst |dphi| " + lef::format_sig(worst_sol) + ", worst residual factor " +
                 lef::format_sig(worst_fac);
        return bad == 0;
    });

    run({"4. solution columns of the remaining reference tables", 120.0}, [](std::string& detail) {
        lef::BenchOptions opts;
        opts.run_tuner = false;
        double worst = 0.0;
        for (const char* key : {"2:v1", "2:v2", "4", "5", "6", "7"}) {
            lef::BenchResult r = lef::reproduce_table(lef::builtin(key), opts);
            for (const auto& c : r.checks) {
                if (c.column[0] != 'p') continue;  // solution columns
                worst = std::max(worst, std::abs(c.got - c.ref));
            }
        }
        detail = "worst |dphi| " + lef::format_sig(worst);
        return worst <= 5e-4;
    });

    run({"5. tuner recovers the reference control parameters", 120.0}, [](std::string& detail) {
        struct Case {
            const char* key;
            int order;
            double c10, c20, tol;
        };
        const Case cases[] = {{"3", 3, -1.0, -1.0, 1e-6},
                              {"1:v1", 3, -1.00010501, -1.0000443, 1e-2},
                              {"2:v1", 3, -0.767463, -0.789762, 2e-2}};
        bool ok = true;
        std::string parts;
        for (const auto& cs : cases) {
            lef::TuneOptions opts;
            opts.order = cs.order;
            lef::TuneReport rep = lef::optimize_c(lef::builtin(cs.key).problem, opts);
            const double d = std::max(std::abs(rep.c10_opt - cs.c10),
                                      std::abs(rep.c20_opt - cs.c20));
            if (d > cs.tol) ok = false;
            parts += std::string(cs.key) + ": (" + lef::format_sig(rep.c10_opt) + ", " +
                     lef::format_sig(rep.c20_opt) + ") off by " + lef::format_sig(d) + "  ";
        }
        detail = parts;
        return ok;
    });

    run({"6. decomposition series is the c = -1 homotopy series, termwise", 0.0},
        [](std::string& detail) {
        double worst = 0.0;
        for (int id = 1; id <= 7; ++id) {
            const auto& b = lef::builtin(id);
            lef::Solution adm = lef::adm_solve(b.problem, 4);
            lef::HamConfig cfg;
            cfg.order = 4;
            cfg.c10 = cfg.c20 = -1.0;
            lef::Solution ham = lef::ham_solve(b.problem, cfg);
            for (int k = 0; k <= 4; ++k) {
                const double s1 = std::max(1.0, ham.terms1[k].node_max_abs());
                const double s2 = std::max(1.0, ham.terms2[k].node_max_abs());
                worst = std::max(worst, (adm.terms1[k] - ham.terms1[k]).node_max_abs() / s1);
                worst = std::max(worst, (adm.terms2[k] - ham.terms2[k]).node_max_abs() / s2);
            }
        }
        detail = "worst relative term gap " + lef::format_sig(worst);
        return worst <= 1e-13;
    });

    run({"7. homotopy coefficients are the Taylor coefficients in q", 0.0},
        [](std::string& detail) {
        const int m = 4;
        std::mt19937 rng(987654321);
        std::uniform_real_distribution<double> uq(-0.1, 0.1);
        int trials = 0;
        double worst_ratio = 0.0, worst_h0 = 0.0;
        for (int id = 1; id <= 7; ++id) {
            const auto& b = lef::builtin(id);
            lef::Solution s = lef::adm_solve(b.problem, m + 2);
            lef::QSeries y1(s.terms1, m + 2), y2(s.terms2, m + 2);
            for (const lef::Expr* f : {&b.problem.f1, &b.problem.f2}) {
                lef::QSeries jet = lef::eval_series(*f, y1, y2, m + 2, b.problem.params);
                lef::GridFn h0 = lef::eval_grid(*f, s.terms1[0], s.terms2[0], b.problem.params);
                const double h0_scale = std::max(1.0, h0.node_max_abs());
                worst_h0 = std::max(worst_h0, (jet.coeff(0) - h0).node_max_abs() / h0_scale);
                const double scale = jet.coeff(m + 1).node_max_abs() +
                                     jet.coeff(m + 2).node_max_abs();
                for (int t = 0; t < 15 && trials < 200; ++t, ++trials) {
                    const double q0 = uq(rng);
                    lef::GridFn partial = jet.coeff(m);
                    for (int k = m - 1; k >= 0; --k)
                        partial = partial.scaled(q0) + jet.coeff(k);
                    lef::GridFn direct = lef::eval_grid(*f, y1.at(q0), y2.at(q0),
                                                        b.problem.params);
                    const double rem = (partial - direct).node_max_abs();
                    const double budget =
                        3.0 * std::max(scale, 1e-8) * std::pow(std::abs(q0), m + 1) + 1e-12;
                    worst_ratio = std::max(worst_ratio, rem / budget);
                }
            }
        }
        detail = std::to_string(trials) + " trials, worst remainder/budget " +
                 lef::format_sig(worst_ratio) + ", H0 gap " + lef::format_sig(worst_h0);
        return worst_ratio <= 1.0 && worst_h0 <= 1e-13;
    });

    run({"8. every partial sum satisfies the boundary data", 0.0}, [](std::string& detail) {
        double worst = 0.0;
        for (const auto& b : lef::catalog()) {
            lef::HamConfig cfg;
            cfg.order = b.table_order;
            cfg.c10 = b.c10_ref;
            cfg.c20 = b.c20_ref;
            lef::Solution s = lef::ham_solve(b.problem, cfg);
            const lef::Problem& p = b.problem;
            for (int mm = 0; mm <= cfg.order; ++mm) {
                const lef::GridFn& f1 = s.partial1[mm];
                const lef::GridFn& f2 = s.partial2[mm];
                worst = std::max(worst, std::abs(p.a1 * f1.eval(1.0) +
                                                 p.b1 * f1.diff().eval(1.0) - p.c1));
                worst = std::max(worst, std::abs(p.a2 * f2.eval(1.0) +
                                                 p.b2 * f2.diff().eval(1.0) - p.c2));
            }
        }
        detail = "worst Robin defect " + lef::format_sig(worst);
        return worst <= 1e-8;
    });

    run({"9. truncation bound dominates the measured error when certified", 0.0},
        [](std::string& detail) {
        bool ok = true;
        std::string parts;
        for (int id = 3; id <= 7; ++id) {
            const auto& b = lef::builtin(id);
            lef::BoundReport rep = lef::convergence_report(b.problem, -1.0, -1.0, 4);
            parts += std::string(b.key) + ": delta " + lef::format_sig(rep.delta);
            if (!rep.admissible) {
                parts += " (not certified)  ";
                continue;
            }
            lef::HamConfig cfg;
            cfg.order = 4;
            cfg.c10 = cfg.c20 = -1.0;
            lef::Solution s = lef::ham_solve(b.problem, cfg);
            lef::GridFn e1 = exact_grid(b.problem, *b.problem.exact1, cfg.degree);
            lef::GridFn e2 = exact_grid(b.problem, *b.problem.exact2, cfg.degree);
            double worst = 0.0;
            for (int mm = 1; mm <= 4; ++mm) {
                const double err = std::max((s.partial1[mm] - e1).max_abs(),
                                            (s.partial2[mm] - e2).max_abs());
                const double margin = err / rep.bound_per_order[mm - 1];
                worst = std::max(worst, margin);
            }
            parts += ", worst error/bound " + lef::format_sig(worst) + "  ";
            if (worst > 1.0) ok = false;
        }
        detail = parts;
        return ok;
    });

    run({"10. bench --all emits byte-identical output on repeated runs", 0.0},
        [&cli](std::string& detail) {
        if (cli.empty()) {
            detail = "no CLI binary supplied";
            return false;
        }
        namespace fs = std::filesystem;
        const fs::path dir = fs::temp_directory_path();
        const fs::path out1 = dir / "lanefowler-bench-1.csv";
        const fs::path out2 = dir / "lanefowler-bench-2.csv";
        for (const fs::path& out : {out1, out2}) {
            const std::string cmd = "\"" + cli + "\" bench --all --format csv --output \"" +
                                    out.string() + "\"";
            const int rc = std::system(cmd.c_str());
            if (rc != 0) {
                detail = "bench exited with " + std::to_string(rc);
                return false;
            }
        }
        const std::string a = slurp(out1.string()), b = slurp(out2.string());
        detail = std::to_string(a.size()) + " bytes";
        return !a.empty() && a == b;
    });

    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures;
}
