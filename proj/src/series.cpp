#include "lef/series.hpp"

#include <cmath>

namespace lef {

namespace {

constexpr double kLeadingTol = 1e-12;

// nodewise guard for the leading coefficient of /, ln and real powers
void require_leading_away_from_zero(const GridFn& u0, const char* what) {
    for (double v : u0.values()) {
        if (std::abs(v) < kLeadingTol)
            throw EvalDomainError(std::string("leading series coefficient vanishes for ") + what,
                                  what);
    }
}

void require_leading_positive(const GridFn& u0, const char* what) {
    for (double v : u0.values()) {
        if (v < kLeadingTol)
            throw EvalDomainError(std::string("leading series coefficient not positive for ") + what,
                                  what);
    }
}

}  // namespace

QSeries::QSeries(int order, int degree) : order_(order), degree_(degree) {
    if (order < 0) throw std::invalid_argument("QSeries: negative order");
    c_.assign(static_cast<std::size_t>(order) + 1, GridFn::constant(0.0, degree));
}

QSeries::QSeries(std::vector<GridFn> coeffs, int order) : order_(order) {
    if (coeffs.empty()) throw std::invalid_argument("QSeries: no coefficients");
    degree_ = coeffs.front().degree();
    for (const auto& g : coeffs)
        if (g.degree() != degree_)
            throw std::invalid_argument("QSeries: mixed coefficient degrees");
    coeffs.resize(static_cast<std::size_t>(order) + 1, GridFn::constant(0.0, degree_));
    c_ = std::move(coeffs);
}

QSeries QSeries::constant(double v, int order, int degree) {
    QSeries s(order, degree);
    s.c_[0] = GridFn::constant(v, degree);
    return s;
}

QSeries QSeries::from_grid(const GridFn& g, int order) {
    QSeries s(order, g.degree());
    s.c_[0] = g;
    return s;
}

GridFn QSeries::at(double q0) const {
    GridFn out = c_[static_cast<std::size_t>(order_)];
    for (int k = order_ - 1; k >= 0; --k) out = out.scaled(q0) + c_[static_cast<std::size_t>(k)];
    return out;
}

void QSeries::check_match(const QSeries& other) const {
    if (order_ != other.order_ || degree_ != other.degree_)
        throw std::invalid_argument("QSeries: order/degree mismatch");
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    a.check_match(b);
    QSeries r = a;
    for (int k = 0; k <= a.order_; ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    a.check_match(b);
    QSeries r = a;
    for (int k = 0; k <= a.order_; ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    a.check_match(b);
    QSeries r(a.order_, a.degree_);
    for (int i = 0; i <= a.order_; ++i)
        for (int j = 0; i + j <= a.order_; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    return r;
}

QSeries operator/(const QSeries& a, const QSeries& b) {
    a.check_match(b);
    require_leading_away_from_zero(b.c_[0], "/");
    QSeries r(a.order_, a.degree_);
    GridFn inv_b0 = b.c_[0].map([](double v) { return 1.0 / v; });
    r.c_[0] = a.c_[0] * inv_b0;
    for (int k = 1; k <= a.order_; ++k) {
        GridFn s = a.c_[k];
        for (int j = 1; j <= k; ++j) s = s - b.c_[j] * r.c_[k - j];
        r.c_[k] = s * inv_b0;
    }
    return r;
}

QSeries QSeries::scaled(double alpha) const {
    QSeries r = *this;
    for (auto& g : r.c_) g = g.scaled(alpha);
    return r;
}

QSeries QSeries::exp_() const {
    QSeries r(order_, degree_);
    r.c_[0] = c_[0].map([](double v) { return std::exp(v); });
    for (int k = 1; k <= order_; ++k) {
        GridFn s = GridFn::constant(0.0, degree_);
        for (int j = 1; j <= k; ++j) s += c_[j].scaled(j) * r.c_[k - j];
        r.c_[k] = s.scaled(1.0 / k);
    }
    return r;
}

QSeries QSeries::ln_() const {
    require_leading_positive(c_[0], "ln");
    QSeries r(order_, degree_);
    r.c_[0] = c_[0].map([](double v) { return std::log(v); });
    GridFn inv_u0 = c_[0].map([](double v) { return 1.0 / v; });
    for (int k = 1; k <= order_; ++k) {
        GridFn s = c_[k];
        for (int j = 1; j < k; ++j)
            s = s - r.c_[j].scaled(static_cast<double>(j) / k) * c_[k - j];
        r.c_[k] = s * inv_u0;
    }
    return r;
}

QSeries QSeries::pow_(double alpha) const {
    const bool integral = alpha == std::floor(alpha);
    if (integral && alpha >= 0.0) {
        // plain powering keeps u^m valid even when the leading coefficient
        // vanishes somewhere
        int n = static_cast<int>(alpha);
        QSeries r = QSeries::constant(1.0, order_, degree_);
        QSeries base = *this;
        while (n > 0) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }
    if (integral)
        require_leading_away_from_zero(c_[0], "negative power");
    else
        require_leading_positive(c_[0], "fractional power");
    QSeries r(order_, degree_);
    r.c_[0] = c_[0].map([alpha](double v) { return std::pow(v, alpha); });
    GridFn inv_u0 = c_[0].map([](double v) { return 1.0 / v; });
    for (int k = 1; k <= order_; ++k) {
        GridFn s = GridFn::constant(0.0, degree_);
        for (int j = 1; j <= k; ++j) {
            const double w = (alpha + 1.0) * j - k;
            if (w != 0.0) s += c_[j].scaled(w) * r.c_[k - j];
        }
        r.c_[k] = (s * inv_u0).scaled(1.0 / k);
    }
    return r;
}

namespace {

using ast::Func;
using ast::Kind;
using ast::NodePtr;

struct SeriesEnv {
    const QSeries* y1;
    const QSeries* y2;
    const Bindings* params;
    int order;
    int degree;
};

// an exponent must not depend on x, y1 or y2
double constant_value(const NodePtr& n, const Bindings& params) {
    switch (n->kind) {
        case Kind::Number: return n->number;
        case Kind::Param: {
            auto it = params.find(n->name);
            if (it == params.end()) throw UnboundParameter(n->name);
            return it->second;
        }
        case Kind::Neg: return -constant_value(n->a, params);
        case Kind::Add: return constant_value(n->a, params) + constant_value(n->b, params);
        case Kind::Sub: return constant_value(n->a, params) - constant_value(n->b, params);
        case Kind::Mul: return constant_value(n->a, params) * constant_value(n->b, params);
        case Kind::Div: return constant_value(n->a, params) / constant_value(n->b, params);
        case Kind::Pow:
            return std::pow(constant_value(n->a, params), constant_value(n->b, params));
        case Kind::Call: {
            const double v = constant_value(n->a, params);
            if (n->func == Func::Exp) return std::exp(v);
            if (n->func == Func::Ln) return std::log(v);
            return std::sqrt(v);
        }
        default:
            throw EvalDomainError("exponent depends on a series variable", to_string(n));
    }
}

QSeries eval_node_series(const NodePtr& n, const SeriesEnv& env) {
    switch (n->kind) {
        case Kind::Number: return QSeries::constant(n->number, env.order, env.degree);
        case Kind::VarX:
            return QSeries::from_grid(GridFn::identity(env.degree), env.order);
        case Kind::VarY1: return *env.y1;
        case Kind::VarY2: return *env.y2;
        case Kind::Param: {
            auto it = env.params->find(n->name);
            if (it == env.params->end()) throw UnboundParameter(n->name);
            return QSeries::constant(it->second, env.order, env.degree);
        }
        case Kind::Neg: return eval_node_series(n->a, env).negated();
        case Kind::Add: return eval_node_series(n->a, env) + eval_node_series(n->b, env);
        case Kind::Sub: return eval_node_series(n->a, env) - eval_node_series(n->b, env);
        case Kind::Mul: return eval_node_series(n->a, env) * eval_node_series(n->b, env);
        case Kind::Div: return eval_node_series(n->a, env) / eval_node_series(n->b, env);
        case Kind::Pow: {
            const double alpha = constant_value(n->b, *env.params);
            return eval_node_series(n->a, env).pow_(alpha);
        }
        case Kind::Call: {
            QSeries u = eval_node_series(n->a, env);
            if (n->func == Func::Exp) return u.exp_();
            if (n->func == Func::Ln) return u.ln_();
            return u.sqrt_();
        }
    }
    throw std::logic_error("eval_node_series: bad AST");
}

}  // namespace

QSeries eval_series(const Expr& f, const QSeries& y1, const QSeries& y2, int order,
                    const Bindings& params) {
    if (y1.order() < order || y2.order() < order)
        throw std::invalid_argument("eval_series: iterate series truncated below requested order");
    QSeries a = y1, b = y2;
    if (y1.order() != order) a = QSeries(std::vector<GridFn>(y1.coeffs().begin(),
                                         y1.coeffs().begin() + order + 1), order);
    if (y2.order() != order) b = QSeries(std::vector<GridFn>(y2.coeffs().begin(),
                                         y2.coeffs().begin() + order + 1), order);
    SeriesEnv env{&a, &b, &params, order, a.degree()};
    return eval_node_series(f.root(), env);
}

GridFn eval_grid(const Expr& f, const GridFn& phi1, const GridFn& phi2,
                 const Bindings& params) {
    if (phi1.degree() != phi2.degree())
        throw std::invalid_argument("eval_grid: degree mismatch");
    const auto& xs = phi1.basis().nodes;
    std::vector<double> v(phi1.values().size());
    for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = f.eval(xs[j], phi1.values()[j], phi2.values()[j], params);
    return GridFn(phi1.degree(), std::move(v));
}

GridFn eval_grid_x(const Expr& g, int degree, const Bindings& params) {
    const auto& xs = cgl_basis(degree).nodes;
    std::vector<double> v(static_cast<std::size_t>(degree) + 1);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = g.eval_x(xs[j], params);
    return GridFn(degree, std::move(v));
}

}  // namespace lef
