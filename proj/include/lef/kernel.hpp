#ifndef LEF_KERNEL_HPP
#define LEF_KERNEL_HPP

#include <optional>

#include "lef/expr.hpp"
#include "lef/gridfn.hpp"

namespace lef {

// Weight p(x) = x^k * g(x) with g > 0 on [0,1]. A missing g means g == 1
// (the pure shape-factor case with closed-form kernel profile).
struct Weight {
    int k = 0;
    std::optional<Expr> g;
    Bindings params;

    double eval(double x) const;
    bool pure_power() const { return !g.has_value(); }
};

// Green's kernel of one component of the boundary value problem
//     (p y')' = p w,   y'(0) = 0,   a y(1) + b y'(1) = 0,
// with the sign convention G(x,s) = -(Q(max(x,s)) + C), Q(t) = int_t^1 dr/p(r)
// and C = b / (a p(1)).
//
// apply() evaluates I(x) = int_0^1 G(x,s) p(s) w(s) ds. Readers expecting the
// textbook assembly -( (Q(x)+C) Phi(x) + Psi(1) - Psi(x) ) with Phi, Psi the
// cumulative moments: integrating Psi by parts collapses it to
//     I(x) = R(x) - R(1) - (b/a) u(1),   u = Phi/p,  R = cumint(u),
// which is what is implemented. The two forms are identical in exact
// arithmetic; the collapsed one never multiplies the unbounded profile Q
// against a vanishing moment, so it stays accurate near x = 0. u itself is
// computed as u(x) = x * int_0^1 t^k g(xt) w(xt) dt / g(x), again avoiding
// division by p at nodes close to the singular end.
class Kernel {
  public:
    Kernel(Weight w, double a, double b, int degree);

    GridFn apply(const GridFn& w) const;

    double robin_constant() const { return C_; }     // b / (a p(1))
    double profile_Q(double t) const;                // diagnostic only
    const Weight& weight() const { return weight_; }
    int degree() const { return degree_; }
    double a() const { return a_; }
    double b() const { return b_; }

  private:
    Weight weight_;
    double a_, b_, C_;
    int degree_;
    std::vector<double> op_;  // (N+1)^2 matrix taking node values of w to u = Phi/p
};

Kernel make_kernel(const Weight& w, double a, double b, int degree);

// max over the two components of max_x |apply(kern_i, 1)(x)|; the constant M
// of the convergence bounds.
double bound_constant(const Kernel& k1, const Kernel& k2);

}  // namespace lef

#endif
