#include "lef/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace lef {

double Weight::eval(double x) const {
    double v = std::pow(x, k);
    if (g) v *= g->eval_x(x, params);
    return v;
}

Kernel::Kernel(Weight w, double a, double b, int degree)
    : weight_(std::move(w)), a_(a), b_(b), degree_(degree) {
    if (a_ == 0.0)
        throw std::invalid_argument("Kernel: a = 0 (pure Neumann data at x = 1) is not solvable here");
    if (weight_.k < 0) throw std::invalid_argument("Kernel: negative shape factor");

    const auto& B = cgl_basis(degree_);
    const int m = degree_ + 1;

    // g sampled on the working grid; must stay positive (p > 0 on (0,1])
    std::vector<double> gv(m, 1.0);
    if (weight_.g) {
        for (int j = 0; j < m; ++j) {
            gv[j] = weight_.g->eval_x(B.nodes[j], weight_.params);
            if (gv[j] <= 0.0)
                throw std::invalid_argument("Kernel: weight not positive on the grid");
        }
    }
    const double p1 = gv[m - 1];  // p(1) = g(1)
    C_ = b_ / (a_ * p1);

    // quadrature grid in t for u(x) = x * int_0^1 t^k g(xt) w(xt) dt / g(x);
    // the integrand has degree k + deg(w) in t, so M = N + k + 2 keeps the
    // rule exact for resolved w
    const int M = degree_ + weight_.k + 2;
    const auto& QB = cgl_basis(M);

    op_.assign(static_cast<std::size_t>(m) * m, 0.0);
    std::vector<double> row(m);
    for (int j = 0; j < m; ++j) {
        const double xj = B.nodes[j];
        std::fill(row.begin(), row.end(), 0.0);
        for (int q = 0; q <= M; ++q) {
            const double t = QB.nodes[q];
            double wq = QB.quad_w[q] * std::pow(t, weight_.k);
            if (wq == 0.0) continue;
            const double pt = xj * t;
            if (weight_.g) wq *= weight_.g->eval_x(pt, weight_.params);
            // barycentric row of the interpolation w(pt)
            double den = 0.0;
            int hit = -1;
            for (int i = 0; i < m; ++i) {
                const double d = pt - B.nodes[i];
                if (d == 0.0) { hit = i; break; }
                den += B.bary_w[i] / d;
            }
            if (hit >= 0) {
                row[hit] += wq;
            } else {
                for (int i = 0; i < m; ++i)
                    row[i] += wq * (B.bary_w[i] / (pt - B.nodes[i])) / den;
            }
        }
        const double s = xj / gv[j];
        double* out = &op_[static_cast<std::size_t>(j) * m];
        for (int i = 0; i < m; ++i) out[i] = row[i] * s;
    }
}

GridFn Kernel::apply(const GridFn& w) const {
    const GridFn& wf = w.degree() == degree_ ? w : w.resample(degree_);
    const int m = degree_ + 1;
    std::vector<double> u(m, 0.0);
    for (int j = 0; j < m; ++j) {
        const double* row = &op_[static_cast<std::size_t>(j) * m];
        double s = 0.0;
        for (int i = 0; i < m; ++i) s += row[i] * wf.values()[i];
        u[j] = s;
    }
    const double u1 = u[m - 1];
    GridFn R = GridFn(degree_, std::move(u)).cumint();
    const double shift = -R.values()[static_cast<std::size_t>(degree_)] - (b_ / a_) * u1;
    return R.shifted(shift);
}

double Kernel::profile_Q(double t) const {
    if (t <= 0.0) {
        if (weight_.k >= 1) return std::numeric_limits<double>::infinity();
        t = 0.0;
    }
    if (weight_.pure_power()) {
        const int k = weight_.k;
        if (k == 1) return -std::log(t);
        return (1.0 - std::pow(t, 1 - k)) / (1 - k);
    }
    // general weight: quadrature of 1/p over [t,1]
    const int M = 256;
    const auto& QB = cgl_basis(M);
    double s = 0.0;
    for (int q = 0; q <= M; ++q) {
        const double r = t + (1.0 - t) * QB.nodes[q];
        s += QB.quad_w[q] / weight_.eval(r);
    }
    return s * (1.0 - t);
}

Kernel make_kernel(const Weight& w, double a, double b, int degree) {
    return Kernel(w, a, b, degree);
}

double bound_constant(const Kernel& k1, const Kernel& k2) {
    const GridFn one1 = GridFn::constant(1.0, k1.degree());
    const GridFn one2 = GridFn::constant(1.0, k2.degree());
    return std::max(k1.apply(one1).max_abs(), k2.apply(one2).max_abs());
}

}  // namespace lef
