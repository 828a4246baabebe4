#include "lef/gridfn.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace lef {

namespace {

constexpr int kMinDegree = 8;
constexpr int kMaxMonomialDegree = 16;

void check_finite(const std::vector<double>& v) {
    for (double x : v) {
        if (!std::isfinite(x)) throw std::domain_error("GridFn: non-finite value");
    }
}

}  // namespace

CglBasis::CglBasis(int n) : degree(n) {
    const int m = n + 1;
    nodes.resize(m);
    bary_w.resize(m);
    vals2coef.resize(static_cast<std::size_t>(m) * m);
    coef2vals.resize(static_cast<std::size_t>(m) * m);

    // node j sits at angle theta_j = pi*(n-j)/n so that nodes ascend
    std::vector<double> theta(m);
    for (int j = 0; j <= n; ++j) {
        theta[j] = M_PI * static_cast<double>(n - j) / n;
        nodes[j] = 0.5 * (1.0 + std::cos(theta[j]));
    }
    nodes[0] = 0.0;
    nodes[n] = 1.0;
    if (n % 2 == 0) nodes[n / 2] = 0.5;

    for (int j = 0; j <= n; ++j) {
        double w = (j == 0 || j == n) ? 0.5 : 1.0;
        bary_w[j] = (j % 2 == 0) ? w : -w;
    }

    // interpolation coefficients: f = sum_k a_k T_k(2x-1)
    for (int k = 0; k <= n; ++k) {
        const double ck = (k == 0 || k == n) ? 2.0 : 1.0;
        for (int j = 0; j <= n; ++j) {
            const double cj = (j == 0 || j == n) ? 2.0 : 1.0;
            vals2coef[static_cast<std::size_t>(k) * m + j] =
                2.0 / (n * ck * cj) * std::cos(static_cast<double>(k) * theta[j]);
            coef2vals[static_cast<std::size_t>(j) * m + k] =
                std::cos(static_cast<double>(k) * theta[j]);
        }
    }

    // Clenshaw-Curtis weights: integral of the interpolant over [0,1],
    // i.e. quad_w = vals2coef^T * (int_0^1 T_k(2x-1) dx)
    std::vector<double> mom(m, 0.0);
    for (int k = 0; k <= n; k += 2) mom[k] = 1.0 / (1.0 - static_cast<double>(k) * k);
    quad_w.assign(m, 0.0);
    for (int k = 0; k <= n; ++k) {
        if (mom[k] == 0.0) continue;
        for (int j = 0; j <= n; ++j) {
            quad_w[j] += mom[k] * vals2coef[static_cast<std::size_t>(k) * m + j];
        }
    }
}

double CglBasis::interpolate(const std::vector<double>& values, double x) const {
    double num = 0.0, den = 0.0;
    for (int j = 0; j <= degree; ++j) {
        const double d = x - nodes[j];
        if (d == 0.0) return values[j];
        const double t = bary_w[j] / d;
        num += t * values[j];
        den += t;
    }
    return num / den;
}

const CglBasis& cgl_basis(int degree) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CglBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(degree);
    if (it == cache.end()) {
        it = cache.emplace(degree, std::make_unique<CglBasis>(degree)).first;
    }
    return *it->second;
}

GridFn::GridFn(int degree, std::vector<double> values)
    : degree_(degree), values_(std::move(values)) {
    if (degree_ < kMinDegree) throw std::invalid_argument("GridFn: degree must be >= 8");
    if (values_.size() != static_cast<std::size_t>(degree_) + 1)
        throw std::invalid_argument("GridFn: value count does not match degree");
    check_finite(values_);
}

GridFn GridFn::constant(double v, int degree) {
    return GridFn(degree, std::vector<double>(static_cast<std::size_t>(degree) + 1, v));
}

GridFn GridFn::identity(int degree) {
    return GridFn(degree, cgl_basis(degree).nodes);
}

GridFn GridFn::sample(const std::function<double(double)>& f, int degree) {
    const auto& b = cgl_basis(degree);
    std::vector<double> v(static_cast<std::size_t>(degree) + 1);
    for (int j = 0; j <= degree; ++j) v[j] = f(b.nodes[j]);
    return GridFn(degree, std::move(v));
}

double GridFn::eval(double x) const {
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("GridFn::eval: x outside [0,1]");
    return basis().interpolate(values_, x);
}

GridFn GridFn::resample(int new_degree) const {
    if (new_degree == degree_) return *this;
    const auto& nb = cgl_basis(new_degree);
    std::vector<double> v(static_cast<std::size_t>(new_degree) + 1);
    for (int j = 0; j <= new_degree; ++j) v[j] = basis().interpolate(values_, nb.nodes[j]);
    return GridFn(new_degree, std::move(v));
}

namespace {

// lift both operands to the larger degree
std::pair<GridFn, GridFn> aligned(const GridFn& f, const GridFn& g) {
    if (f.degree() == g.degree()) return {f, g};
    const int d = std::max(f.degree(), g.degree());
    return {f.resample(d), g.resample(d)};
}

}  // namespace

GridFn GridFn::scaled(double alpha) const {
    std::vector<double> v(values_);
    for (double& x : v) x *= alpha;
    return GridFn(degree_, std::move(v));
}

GridFn GridFn::shifted(double c) const {
    std::vector<double> v(values_);
    for (double& x : v) x += c;
    return GridFn(degree_, std::move(v));
}

GridFn operator+(const GridFn& f, const GridFn& g) {
    auto [a, b] = aligned(f, g);
    std::vector<double> v(a.values_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values_[i];
    return GridFn(a.degree_, std::move(v));
}

GridFn operator-(const GridFn& f, const GridFn& g) {
    auto [a, b] = aligned(f, g);
    std::vector<double> v(a.values_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b.values_[i];
    return GridFn(a.degree_, std::move(v));
}

GridFn operator*(const GridFn& f, const GridFn& g) {
    auto [a, b] = aligned(f, g);
    std::vector<double> v(a.values_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] *= b.values_[i];
    return GridFn(a.degree_, std::move(v));
}

GridFn& GridFn::operator+=(const GridFn& g) {
    *this = *this + g;
    return *this;
}

GridFn GridFn::map(const std::function<double(double)>& h) const {
    std::vector<double> v(values_);
    for (double& x : v) x = h(x);
    return GridFn(degree_, std::move(v));
}

std::vector<double> GridFn::cheb_coeffs() const {
    const auto& b = basis();
    const int m = degree_ + 1;
    std::vector<double> a(m, 0.0);
    for (int k = 0; k < m; ++k) {
        double s = 0.0;
        const double* row = &b.vals2coef[static_cast<std::size_t>(k) * m];
        for (int j = 0; j < m; ++j) s += row[j] * values_[j];
        a[k] = s;
    }
    return a;
}

namespace {

GridFn from_cheb(int degree, const std::vector<double>& a) {
    const auto& b = cgl_basis(degree);
    const int m = degree + 1;
    std::vector<double> v(m, 0.0);
    for (int j = 0; j < m; ++j) {
        double s = 0.0;
        const double* row = &b.coef2vals[static_cast<std::size_t>(j) * m];
        for (int k = 0; k < m; ++k) s += row[k] * a[k];
        v[j] = s;
    }
    return GridFn(degree, std::move(v));
}

}  // namespace

GridFn GridFn::cumint() const {
    const int n = degree_;
    std::vector<double> a = cheb_coeffs();
    a.resize(static_cast<std::size_t>(n) + 3, 0.0);
    std::vector<double> bcoef(static_cast<std::size_t>(n) + 1, 0.0);
    // antiderivative in t = 2x-1, then dx = dt/2; the degree-(n+1) tail is
    // dropped, which is exact whenever the top coefficient is resolved away
    bcoef[1] = 0.5 * (2.0 * a[0] - a[2]);
    for (int k = 2; k <= n; ++k) bcoef[k] = 0.5 * (a[k - 1] - a[k + 1]) / k;
    for (double& c : bcoef) c *= 0.5;
    GridFn F = from_cheb(n, bcoef);
    return F.shifted(-F.values_[0]);
}

namespace {

// derivative in coefficient space (t variable, then scaled by dx/dt = 2)
std::vector<double> diff_coeffs(const std::vector<double>& a, int n) {
    std::vector<double> b(static_cast<std::size_t>(n) + 3, 0.0);
    for (int k = n; k >= 1; --k) b[k - 1] = b[k + 1] + 2.0 * k * a[k];
    b[0] *= 0.5;
    b.resize(static_cast<std::size_t>(n) + 1);
    for (double& c : b) c *= 2.0;
    return b;
}

}  // namespace

GridFn GridFn::diff() const {
    return from_cheb(degree_, diff_coeffs(cheb_coeffs(), degree_));
}

GridFn GridFn::diff2() const {
    // both derivatives taken in coefficient space; one synthesis at the end
    // keeps the roundoff of the intermediate transform out of the result
    return from_cheb(degree_, diff_coeffs(diff_coeffs(cheb_coeffs(), degree_), degree_));
}

double GridFn::integral() const {
    const auto& b = basis();
    double s = 0.0;
    for (int j = 0; j <= degree_; ++j) s += b.quad_w[j] * values_[j];
    return s;
}

double GridFn::max_abs() const {
    double m = node_max_abs();
    const int samples = 10 * degree_;
    for (int i = 0; i <= samples; ++i) {
        const double x = static_cast<double>(i) / samples;
        m = std::max(m, std::abs(eval(x)));
    }
    return m;
}

double GridFn::node_max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

std::vector<double> GridFn::monomial_coeffs(int max_degree, double* tail_norm) const {
    if (max_degree < 0 || max_degree > kMaxMonomialDegree)
        throw std::invalid_argument("monomial_coeffs: degree must be in [0,16]");
    if (max_degree > degree_) max_degree = degree_;
    const std::vector<double> a = cheb_coeffs();
    if (tail_norm) {
        double t = 0.0;
        for (int k = max_degree + 1; k <= degree_; ++k) t = std::max(t, std::abs(a[k]));
        *tail_norm = t;
    }
    // monomial expansions of the shifted Chebyshev polynomials T_k(2x-1),
    // built by the three-term recurrence (integer-valued, exact in double
    // up to degree 16)
    const int m = max_degree + 1;
    std::vector<std::vector<double>> T(m);
    if (m > 0) T[0] = {1.0};
    if (m > 1) T[1] = {-1.0, 2.0};
    for (int k = 2; k < m; ++k) {
        T[k].assign(static_cast<std::size_t>(k) + 1, 0.0);
        for (int i = 0; i <= k - 1; ++i) {
            T[k][i] += -2.0 * T[k - 1][i];
            T[k][i + 1] += 4.0 * T[k - 1][i];
        }
        for (int i = 0; i <= k - 2; ++i) T[k][i] -= T[k - 2][i];
    }
    std::vector<double> c(m, 0.0);
    for (int k = 0; k < m; ++k)
        for (int i = 0; i <= k; ++i) c[i] += a[k] * T[k][i];
    return c;
}

GridFn add(const GridFn& f, const GridFn& g) { return f + g; }
GridFn scale(const GridFn& f, double alpha) { return f.scaled(alpha); }
GridFn mul(const GridFn& f, const GridFn& g) { return f * g; }

}  // namespace lef
