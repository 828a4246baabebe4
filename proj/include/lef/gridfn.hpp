#ifndef LEF_GRIDFN_HPP
#define LEF_GRIDFN_HPP

#include <functional>
#include <stdexcept>
#include <vector>

namespace lef {

// Chebyshev-Gauss-Lobatto machinery for one resolution N, on [0,1].
// Nodes are ascending with x_0 = 0 and x_N = 1. Instances are immutable
// and cached process-wide; look them up through cgl_basis().
struct CglBasis {
    int degree;                      // N
    std::vector<double> nodes;       // N+1 nodes, ascending
    std::vector<double> bary_w;      // barycentric weights
    std::vector<double> vals2coef;   // (N+1)^2 row-major, values -> Chebyshev coefficients
    std::vector<double> coef2vals;   // (N+1)^2 row-major, inverse map
    std::vector<double> quad_w;      // Clenshaw-Curtis weights on [0,1]

    explicit CglBasis(int n);

    // Interpolate node values at an arbitrary point of [0,1]; exact
    // (bit-identical) at the nodes themselves.
    double interpolate(const std::vector<double>& values, double x) const;
};

const CglBasis& cgl_basis(int degree);

// A real function on [0,1] represented by its values on the CGL node set.
// Immutable value type; every operation returns a fresh function.
class GridFn {
  public:
    GridFn() = default;
    GridFn(int degree, std::vector<double> values);

    static GridFn constant(double v, int degree);
    static GridFn identity(int degree);   // f(x) = x
    static GridFn sample(const std::function<double(double)>& f, int degree);

    int degree() const { return degree_; }
    int size() const { return degree_ + 1; }
    const std::vector<double>& values() const { return values_; }
    double value_at_node(int j) const { return values_[static_cast<std::size_t>(j)]; }
    const CglBasis& basis() const { return cgl_basis(degree_); }

    double eval(double x) const;
    double operator()(double x) const { return eval(x); }

    GridFn resample(int new_degree) const;

    // pointwise algebra
    GridFn scaled(double alpha) const;
    GridFn shifted(double c) const;   // f + c
    friend GridFn operator+(const GridFn& f, const GridFn& g);
    friend GridFn operator-(const GridFn& f, const GridFn& g);
    friend GridFn operator*(const GridFn& f, const GridFn& g);   // pointwise
    GridFn& operator+=(const GridFn& g);

    // apply h nodewise; the caller owns any domain guarantees
    GridFn map(const std::function<double(double)>& h) const;

    // calculus (spectral, exact for resolved polynomials)
    GridFn cumint() const;            // F(x) = int_0^x f, F(0) = 0
    GridFn diff() const;
    GridFn diff2() const { return diff().diff(); }
    double integral() const;          // int_0^1 f

    double max_abs() const;           // sup-norm over a dense sample set
    double node_max_abs() const;      // max over nodes only (cheap guard)

    std::vector<double> cheb_coeffs() const;

    // Monomial coefficients c_0..c_m with f ~ sum c_i x^i, m <= 16.
    // Uses the leading Chebyshev coefficients only; the conversion is
    // ill-conditioned for large m, hence the hard cap. tail_norm reports
    // the largest neglected Chebyshev coefficient.
    std::vector<double> monomial_coeffs(int max_degree, double* tail_norm = nullptr) const;

  private:
    int degree_ = 0;
    std::vector<double> values_;
};

GridFn add(const GridFn& f, const GridFn& g);
GridFn scale(const GridFn& f, double alpha);
GridFn mul(const GridFn& f, const GridFn& g);

}  // namespace lef

#endif
