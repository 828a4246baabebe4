#include "lef/tuner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>

#include "lef/parallel.hpp"

namespace lef {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Objective {
    const Problem& p;
    int order;
    int degree;
    const std::vector<double>& nodes;

    // E_1n + E_2n at the candidate c; +inf when the recursion diverges or
    // leaves the domain of f
    double operator()(double c10, double c20, std::pair<double, double>* parts = nullptr) const {
        HamConfig cfg;
        cfg.order = order;
        cfg.degree = degree;
        cfg.c10 = c10;
        cfg.c20 = c20;
        try {
            Solution s = ham_solve(p, cfg);
            auto [e1, e2] = integral_residual(p, s.phi1(), s.phi2(), nodes);
            if (parts) *parts = {e1, e2};
            if (!std::isfinite(e1) || !std::isfinite(e2)) return kInf;
            return e1 + e2;
        } catch (const SolveError&) {
            return kInf;
        } catch (const EvalDomainError&) {
            return kInf;
        }
    }
};

struct Simplex {
    std::array<std::array<double, 2>, 3> x;
    std::array<double, 3> f;
};

// standard Nelder-Mead on two variables; deterministic
template <typename F>
void nelder_mead(F&& fn, Simplex& s, int max_evals, double tol, int& evals) {
    auto order_simplex = [&] {
        if (s.f[1] < s.f[0]) { std::swap(s.f[0], s.f[1]); std::swap(s.x[0], s.x[1]); }
        if (s.f[2] < s.f[0]) { std::swap(s.f[0], s.f[2]); std::swap(s.x[0], s.x[2]); }
        if (s.f[2] < s.f[1]) { std::swap(s.f[1], s.f[2]); std::swap(s.x[1], s.x[2]); }
    };
    order_simplex();
    int used = 0;
    while (used < max_evals) {
        const double diam = std::max(
            std::hypot(s.x[1][0] - s.x[0][0], s.x[1][1] - s.x[0][1]),
            std::hypot(s.x[2][0] - s.x[0][0], s.x[2][1] - s.x[0][1]));
        if (diam < tol) break;
        const double cx = 0.5 * (s.x[0][0] + s.x[1][0]);
        const double cy = 0.5 * (s.x[0][1] + s.x[1][1]);
        const double rx = cx + (cx - s.x[2][0]);
        const double ry = cy + (cy - s.x[2][1]);
        const double fr = fn(rx, ry); ++used;
        if (fr < s.f[0]) {
            const double ex = cx + 2.0 * (cx - s.x[2][0]);
            const double ey = cy + 2.0 * (cy - s.x[2][1]);
            const double fe = fn(ex, ey); ++used;
            if (fe < fr) { s.x[2] = {ex, ey}; s.f[2] = fe; }
            else         { s.x[2] = {rx, ry}; s.f[2] = fr; }
        } else if (fr < s.f[1]) {
            s.x[2] = {rx, ry}; s.f[2] = fr;
        } else {
            const bool outside = fr < s.f[2];
            const double px = outside ? cx + 0.5 * (rx - cx) : cx + 0.5 * (s.x[2][0] - cx);
            const double py = outside ? cy + 0.5 * (ry - cy) : cy + 0.5 * (s.x[2][1] - cy);
            const double fp = fn(px, py); ++used;
            if (fp < (outside ? fr : s.f[2])) {
                s.x[2] = {px, py}; s.f[2] = fp;
            } else {
                // shrink toward the best vertex
                for (int i = 1; i < 3; ++i) {
                    s.x[i][0] = s.x[0][0] + 0.5 * (s.x[i][0] - s.x[0][0]);
                    s.x[i][1] = s.x[0][1] + 0.5 * (s.x[i][1] - s.x[0][1]);
                    s.f[i] = fn(s.x[i][0], s.x[i][1]); ++used;
                }
            }
        }
        order_simplex();
    }
    evals += used;
}

}  // namespace

TuneReport optimize_c(const Problem& p, const TuneOptions& opts) {
    p.validate();
    if (opts.budget < 50) throw std::invalid_argument("optimize_c: budget must be >= 50");
    if (opts.search.c1_lo >= opts.search.c1_hi || opts.search.c2_lo >= opts.search.c2_hi)
        throw std::invalid_argument("optimize_c: empty search box");
    if ((opts.search.c1_lo <= 0.0 && opts.search.c1_hi >= 0.0) ||
        (opts.search.c2_lo <= 0.0 && opts.search.c2_hi >= 0.0))
        throw std::invalid_argument("optimize_c: search box must exclude c = 0");

    const std::vector<double> nodes =
        opts.residual_nodes.empty() ? HamConfig::default_nodes() : opts.residual_nodes;
    Objective obj{p, opts.order, opts.degree, nodes};

    TuneReport rep;
    std::mutex mu;
    auto tracked = [&](double c10, double c20) {
        const double v = obj(c10, c20);
        std::lock_guard<std::mutex> lock(mu);
        rep.history.push_back({c10, c20, v});
        return v;
    };

    // multistart grid
    const int g = std::max(2, opts.grid);
    std::vector<std::array<double, 2>> starts;
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            starts.push_back({opts.search.c1_lo + (opts.search.c1_hi - opts.search.c1_lo) * i / (g - 1),
                              opts.search.c2_lo + (opts.search.c2_hi - opts.search.c2_lo) * j / (g - 1)});

    const int polish_budget = std::max(200, opts.budget / 5);
    const int per_start = std::max(
        40, (opts.budget - polish_budget - static_cast<int>(starts.size())) /
                static_cast<int>(starts.size()));

    struct StartResult {
        std::array<double, 2> x{0.0, 0.0};
        double f = kInf;
        int evals = 0;
        bool converged = false;
    };
    std::vector<StartResult> results(starts.size());
    const double step1 = 0.05 * (opts.search.c1_hi - opts.search.c1_lo);
    const double step2 = 0.05 * (opts.search.c2_hi - opts.search.c2_lo);

    parallel_for(starts.size(), [&](std::size_t i) {
        Simplex s;
        s.x[0] = starts[i];
        s.x[1] = {starts[i][0] + step1, starts[i][1]};
        s.x[2] = {starts[i][0], starts[i][1] + step2};
        int evals = 0;
        for (int v = 0; v < 3; ++v) { s.f[v] = tracked(s.x[v][0], s.x[v][1]); ++evals; }
        if (!std::isfinite(s.f[0]) && !std::isfinite(s.f[1]) && !std::isfinite(s.f[2])) {
            results[i].evals = evals;
            return;
        }
        nelder_mead([&](double a, double b) { return tracked(a, b); }, s, per_start,
                    opts.tolerance, evals);
        results[i] = {s.x[0], s.f[0], evals,
                      std::hypot(s.x[1][0] - s.x[0][0], s.x[1][1] - s.x[0][1]) < opts.tolerance};
    });

    int total_evals = 0;
    int best = -1;
    for (std::size_t i = 0; i < results.size(); ++i) {
        total_evals += results[i].evals;
        if (best < 0 || results[i].f < results[static_cast<std::size_t>(best)].f)
            best = static_cast<int>(i);
    }
    if (best < 0 || !std::isfinite(results[static_cast<std::size_t>(best)].f))
        throw SolveError("optimize_c: every start diverged", 0);

    // polish the winner with the remaining budget
    Simplex s;
    const auto& win = results[static_cast<std::size_t>(best)];
    const double h = std::max(1e-6, 1e-3 * std::abs(win.x[0]));
    s.x[0] = win.x;
    s.x[1] = {win.x[0] + h, win.x[1]};
    s.x[2] = {win.x[0], win.x[1] + h};
    for (int v = 0; v < 3; ++v) { s.f[v] = tracked(s.x[v][0], s.x[v][1]); ++total_evals; }
    bool converged = false;
    {
        int evals = 0;
        nelder_mead([&](double a, double b) { return tracked(a, b); }, s, polish_budget,
                    opts.tolerance, evals);
        total_evals += evals;
        converged = std::max(std::hypot(s.x[1][0] - s.x[0][0], s.x[1][1] - s.x[0][1]),
                             std::hypot(s.x[2][0] - s.x[0][0], s.x[2][1] - s.x[0][1])) <
                    10.0 * opts.tolerance;
    }

    rep.c10_opt = s.x[0][0];
    rep.c20_opt = s.x[0][1];
    std::pair<double, double> parts{0.0, 0.0};
    rep.value_opt = obj(rep.c10_opt, rep.c20_opt, &parts);
    rep.e1_opt = parts.first;
    rep.e2_opt = parts.second;
    rep.converged = converged;
    rep.evaluations = total_evals;

    // stationarity diagnostic for the coupled system (reported, not enforced)
    const double fd = 1e-4;
    std::pair<double, double> pl{0, 0}, pr{0, 0};
    obj(rep.c10_opt - fd, rep.c20_opt, &pl);
    obj(rep.c10_opt + fd, rep.c20_opt, &pr);
    rep.grad_e1_c10 = (pr.first - pl.first) / (2 * fd);
    obj(rep.c10_opt, rep.c20_opt - fd, &pl);
    obj(rep.c10_opt, rep.c20_opt + fd, &pr);
    rep.grad_e2_c20 = (pr.second - pl.second) / (2 * fd);
    return rep;
}

LipschitzBox solution_box(const Solution& sol) {
    double lo1 = kInf, hi1 = -kInf, lo2 = kInf, hi2 = -kInf;
    for (const auto& g : sol.partial1)
        for (double v : g.values()) { lo1 = std::min(lo1, v); hi1 = std::max(hi1, v); }
    for (const auto& g : sol.partial2)
        for (double v : g.values()) { lo2 = std::min(lo2, v); hi2 = std::max(hi2, v); }
    auto inflate = [](double& lo, double& hi) {
        const double c = 0.5 * (lo + hi);
        double half = 0.5 * (hi - lo);
        half = std::max(1.2 * half, 1e-3 + 1e-3 * std::abs(c));
        lo = c - half;
        hi = c + half;
    };
    inflate(lo1, hi1);
    inflate(lo2, hi2);
    return {lo1, hi1, lo2, hi2};
}

double estimate_lipschitz(const Problem& p, const LipschitzBox& box, int samples) {
    if (samples < 2) throw std::invalid_argument("estimate_lipschitz: need >= 2 samples per axis");
    const double h1 = std::max(1e-7, 1e-4 * (box.y1_hi - box.y1_lo));
    const double h2 = std::max(1e-7, 1e-4 * (box.y2_hi - box.y2_lo));
    double l1 = 0.0, l2 = 0.0;
    for (int ix = 0; ix < samples; ++ix) {
        const double x = static_cast<double>(ix) / (samples - 1);
        for (int i1 = 0; i1 < samples; ++i1) {
            const double y1 = box.y1_lo + (box.y1_hi - box.y1_lo) * i1 / (samples - 1);
            for (int i2 = 0; i2 < samples; ++i2) {
                const double y2 = box.y2_lo + (box.y2_hi - box.y2_lo) * i2 / (samples - 1);
                for (const Expr* f : {&p.f1, &p.f2}) {
                    const double d1 = (f->eval(x, y1 + h1, y2, p.params) -
                                       f->eval(x, y1 - h1, y2, p.params)) / (2 * h1);
                    const double d2 = (f->eval(x, y1, y2 + h2, p.params) -
                                       f->eval(x, y1, y2 - h2, p.params)) / (2 * h2);
                    l1 = std::max(l1, std::abs(d1));
                    l2 = std::max(l2, std::abs(d2));
                }
            }
        }
    }
    return std::max(l1, l2);
}

BoundReport convergence_report(const Problem& p, double c10, double c20, int order,
                               std::optional<double> lipschitz, int degree) {
    BoundReport rep;
    auto [kern1, kern2] = problem_kernels(p, degree);
    rep.M = bound_constant(kern1, kern2);

    HamConfig cfg;
    cfg.order = order;
    cfg.degree = degree;
    cfg.c10 = c10;
    cfg.c20 = c20;
    Solution sol = ham_solve(p, cfg);
    rep.L = lipschitz ? *lipschitz : estimate_lipschitz(p, solution_box(sol));

    const double cmax = std::max(std::abs(c10), std::abs(c20));
    rep.delta1 = std::abs(1.0 + c10) + 2.0 * rep.L * rep.M * std::abs(c10);
    rep.delta2 = std::abs(1.0 + c20) + 2.0 * rep.L * rep.M * std::abs(c20);
    rep.delta = std::max(std::abs(1.0 + c10), std::abs(1.0 + c20)) + 2.0 * rep.L * rep.M * cmax;
    rep.admissible = rep.delta < 1.0;
    rep.remark_interval = (c10 >= -1.0 && c10 < 0.0) && (c20 >= -1.0 && c20 < 0.0);

    const double y10 = p.c1 / p.a1, y20 = p.c2 / p.a2;
    double mf = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double x = static_cast<double>(i) / 200;
        mf = std::max(mf, std::abs(p.f1.eval(x, y10, y20, p.params)));
        mf = std::max(mf, std::abs(p.f2.eval(x, y10, y20, p.params)));
    }
    rep.max_f0 = mf;

    rep.bound_per_order.clear();
    if (rep.admissible) {
        const double base = rep.M * cmax * mf / (1.0 - rep.delta);
        double dm = 1.0;
        for (int m = 1; m <= order; ++m) {
            dm *= rep.delta;
            rep.bound_per_order.push_back(dm * base);
        }
    }
    return rep;
}

Landscape landscape(const Problem& p, int order, const LandscapeGrid& grid, int degree) {
    if (grid.resolution < 2 || grid.resolution > 201)
        throw std::invalid_argument("landscape: resolution must be in [2, 201]");
    Landscape out;
    const int n = grid.resolution;
    out.c10s.resize(static_cast<std::size_t>(n));
    out.c20s.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out.c10s[i] = grid.box.c1_lo + (grid.box.c1_hi - grid.box.c1_lo) * i / (n - 1);
        out.c20s[i] = grid.box.c2_lo + (grid.box.c2_hi - grid.box.c2_lo) * i / (n - 1);
    }
    const std::vector<double> nodes = HamConfig::default_nodes();
    Objective obj{p, order, degree, nodes};
    out.value.assign(static_cast<std::size_t>(n) * n, kInf);
    parallel_for(out.value.size(), [&](std::size_t idx) {
        const int i1 = static_cast<int>(idx % static_cast<std::size_t>(n));
        const int i2 = static_cast<int>(idx / static_cast<std::size_t>(n));
        out.value[idx] = obj(out.c10s[i1], out.c20s[i2]);
    });
    return out;
}

}  // namespace lef
