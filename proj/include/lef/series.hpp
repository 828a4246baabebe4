#ifndef LEF_SERIES_HPP
#define LEF_SERIES_HPP

#include <vector>

#include "lef/expr.hpp"
#include "lef/gridfn.hpp"

namespace lef {

// Power series in the embedding parameter q, truncated at a fixed order,
// with GridFn coefficients. Arithmetic is closed under the truncation:
// nothing beyond coefficient [order] is ever read or produced.
class QSeries {
  public:
    QSeries(int order, int degree);                       // zero series
    QSeries(std::vector<GridFn> coeffs, int order);       // pads with zeros

    static QSeries constant(double v, int order, int degree);
    static QSeries from_grid(const GridFn& g, int order);

    int order() const { return order_; }
    int degree() const { return degree_; }
    const GridFn& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
    const std::vector<GridFn>& coeffs() const { return c_; }

    // sum_k c_k q0^k evaluated coefficient-wise
    GridFn at(double q0) const;

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);  // Cauchy product
    friend QSeries operator/(const QSeries& a, const QSeries& b);  // back substitution
    QSeries scaled(double alpha) const;
    QSeries negated() const { return scaled(-1.0); }

    QSeries exp_() const;
    QSeries ln_() const;
    QSeries pow_(double alpha) const;
    QSeries sqrt_() const { return pow_(0.5); }

  private:
    void check_match(const QSeries& other) const;
    int order_;
    int degree_;
    std::vector<GridFn> c_;
};

// Truncation to the given order of f(x, Y1(q), Y2(q)) as a power series in q.
// Coefficient k is the k-th homotopy-derivative coefficient H_k of f along
// the iterate series; H_0 equals f evaluated at the leading coefficients.
QSeries eval_series(const Expr& f, const QSeries& y1, const QSeries& y2, int order,
                    const Bindings& params = {});

// Pointwise (nodewise) evaluation of f(x, phi1(x), phi2(x)) on the grid.
GridFn eval_grid(const Expr& f, const GridFn& phi1, const GridFn& phi2,
                 const Bindings& params = {});

// Pointwise evaluation of a function of x alone.
GridFn eval_grid_x(const Expr& g, int degree, const Bindings& params = {});

}  // namespace lef

#endif
