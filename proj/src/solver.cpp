#include "lef/solver.hpp"

#include <cmath>

namespace lef {

namespace {

constexpr double kDivergenceGuard = 1e12;

}  // namespace

void Problem::validate() const {
    if (a1 == 0.0 || a2 == 0.0)
        throw std::invalid_argument("Problem: a_i must be nonzero");
    if (f1.empty() || f2.empty())
        throw std::invalid_argument("Problem: missing nonlinearity");
    for (const Expr* e : {&f1, &f2}) {
        for (const auto& name : e->parameters()) {
            if (!params.count(name)) throw UnboundParameter(name);
        }
    }
    if (weight1.k < 0 || weight2.k < 0)
        throw std::invalid_argument("Problem: negative shape factor");
}

void HamConfig::validate() const {
    if (order < 1) throw std::invalid_argument("HamConfig: order must be >= 1");
    if (c10 == 0.0 || c20 == 0.0)
        throw std::invalid_argument("HamConfig: convergence-control parameters must be nonzero");
    if (degree < 16) throw std::invalid_argument("HamConfig: degree must be >= 16");
}

std::vector<double> HamConfig::default_nodes(int count) {
    std::vector<double> xs(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) xs[i] = static_cast<double>(i) / (count - 1);
    return xs;
}

std::pair<Kernel, Kernel> problem_kernels(const Problem& p, int degree) {
    Weight w1 = p.weight1, w2 = p.weight2;
    w1.params = p.params;
    w2.params = p.params;
    return {Kernel(w1, p.a1, p.b1, degree), Kernel(w2, p.a2, p.b2, degree)};
}

Solution ham_solve(const Problem& p, const HamConfig& cfg) {
    p.validate();
    cfg.validate();
    const int n = cfg.order;
    const int N = cfg.degree;
    auto [kern1, kern2] = problem_kernels(p, N);

    Solution sol;
    sol.config = cfg;
    if (sol.config.residual_nodes.empty())
        sol.config.residual_nodes = HamConfig::default_nodes();

    sol.terms1.push_back(GridFn::constant(p.c1 / p.a1, N));
    sol.terms2.push_back(GridFn::constant(p.c2 / p.a2, N));
    sol.partial1.push_back(sol.terms1[0]);
    sol.partial2.push_back(sol.terms2[0]);

    for (int k = 1; k <= n; ++k) {
        const int m = k - 1;
        QSeries y1(sol.terms1, m), y2(sol.terms2, m);
        GridFn h1 = GridFn::constant(0.0, N), h2 = h1;
        try {
            h1 = eval_series(p.f1, y1, y2, m, p.params).coeff(m);
            h2 = eval_series(p.f2, y1, y2, m, p.params).coeff(m);
        } catch (const EvalDomainError& e) {
            throw SolveError(std::string("nonlinearity undefined along the iterates: ") + e.what(), k);
        }
        GridFn a1 = kern1.apply(h1);
        GridFn a2 = kern2.apply(h2);
        GridFn t1 = (k == 1) ? a1.scaled(-cfg.c10)
                             : sol.terms1.back().scaled(1.0 + cfg.c10) + a1.scaled(-cfg.c10);
        GridFn t2 = (k == 1) ? a2.scaled(-cfg.c20)
                             : sol.terms2.back().scaled(1.0 + cfg.c20) + a2.scaled(-cfg.c20);
        if (t1.node_max_abs() > kDivergenceGuard || t2.node_max_abs() > kDivergenceGuard)
            throw SolveError("series term exceeded the divergence guard", k);
        sol.terms1.push_back(t1);
        sol.terms2.push_back(t2);
        sol.partial1.push_back(sol.partial1.back() + t1);
        sol.partial2.push_back(sol.partial2.back() + t2);
    }
    return sol;
}

Solution adm_solve(const Problem& p, int order, int degree) {
    HamConfig cfg;
    cfg.order = order;
    cfg.degree = degree;
    cfg.c10 = cfg.c20 = -1.0;
    Solution sol = ham_solve(p, cfg);

    // direct decomposition recursion; (1 + c) = 0 kills the carry term, so
    // the two must agree termwise
    auto [kern1, kern2] = problem_kernels(p, degree);
    GridFn y10 = sol.terms1[0], y20 = sol.terms2[0];
    std::vector<GridFn> d1{y10}, d2{y20};
    for (int k = 1; k <= order; ++k) {
        const int m = k - 1;
        QSeries y1(d1, m), y2(d2, m);
        GridFn h1 = eval_series(p.f1, y1, y2, m, p.params).coeff(m);
        GridFn h2 = eval_series(p.f2, y1, y2, m, p.params).coeff(m);
        d1.push_back(kern1.apply(h1));
        d2.push_back(kern2.apply(h2));
        const double scale1 = std::max(1.0, d1.back().node_max_abs());
        const double scale2 = std::max(1.0, d2.back().node_max_abs());
        if ((d1.back() - sol.terms1[static_cast<std::size_t>(k)]).node_max_abs() > 1e-13 * scale1 ||
            (d2.back() - sol.terms2[static_cast<std::size_t>(k)]).node_max_abs() > 1e-13 * scale2)
            throw SolveError("decomposition identity violated", k);
    }
    return sol;
}

std::pair<double, double> integral_residual(const Problem& p, const GridFn& phi1,
                                            const GridFn& phi2,
                                            const std::vector<double>& nodes) {
    if (nodes.empty()) throw std::invalid_argument("integral_residual: no sample nodes");
    const int N = phi1.degree();
    auto [kern1, kern2] = problem_kernels(p, N);
    GridFn w1 = eval_grid(p.f1, phi1, phi2, p.params);
    GridFn w2 = eval_grid(p.f2, phi1, phi2, p.params);
    GridFn n1 = phi1.shifted(-p.c1 / p.a1) - kern1.apply(w1);
    GridFn n2 = phi2.shifted(-p.c2 / p.a2) - kern2.apply(w2);
    double e1 = 0.0, e2 = 0.0;
    for (double x : nodes) {
        const double r1 = n1.eval(x), r2 = n2.eval(x);
        e1 += r1 * r1;
        e2 += r2 * r2;
    }
    const double inv = 1.0 / static_cast<double>(nodes.size());
    return {e1 * inv, e2 * inv};
}

std::vector<ResidualRow> differential_residual(const Problem& p, const GridFn& phi1,
                                               const GridFn& phi2,
                                               const std::vector<double>& xs) {
    const int N = phi1.degree();
    Weight w1 = p.weight1, w2 = p.weight2;
    w1.params = p.params;
    w2.params = p.params;
    GridFn p1 = GridFn::sample([&](double x) { return w1.eval(x); }, N);
    GridFn p2 = GridFn::sample([&](double x) { return w2.eval(x); }, N);
    GridFn d1 = (p1 * phi1.diff()).diff();
    GridFn d2 = (p2 * phi2.diff()).diff();
    std::vector<ResidualRow> rows;
    rows.reserve(xs.size());
    for (double x : xs) {
        if (x <= 0.0)
            throw std::domain_error("differential_residual: x = 0 is singular");
        const double v1 = phi1.eval(x), v2 = phi2.eval(x);
        const double lhs1 = d1.eval(x) / w1.eval(x);
        const double lhs2 = d2.eval(x) / w2.eval(x);
        rows.push_back({x, std::abs(lhs1 - p.f1.eval(x, v1, v2, p.params)),
                        std::abs(lhs2 - p.f2.eval(x, v1, v2, p.params))});
    }
    return rows;
}

}  // namespace lef
