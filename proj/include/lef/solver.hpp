#ifndef LEF_SOLVER_HPP
#define LEF_SOLVER_HPP

#include <utility>

#include "lef/problem.hpp"
#include "lef/series.hpp"

namespace lef {

// The deformation recursion driven by the convergence-control parameters:
//     y_i0 = c_i/a_i
//     y_i1 = -c_i0 * K_i[H_i0]
//     y_ik = (1 + c_i0) y_i(k-1) - c_i0 * K_i[H_i(k-1)],  k >= 2,
// where K_i is the Green's kernel application and H_ik the k-th
// homotopy-derivative coefficient of f_i along the iterates (stage k reads
// terms of index <= k-1 only).
Solution ham_solve(const Problem& p, const HamConfig& cfg);

// The c10 = c20 = -1 special case (classical decomposition series). Also
// runs the direct recursion y_ik = K_i[H_i(k-1)] and cross-checks the two
// term sequences agree to 1e-13 of scale.
Solution adm_solve(const Problem& p, int order, int degree = 64);

// Mean-square defect of the integral-equation operator at the sample nodes:
//     E_i = (1/N) sum_k ( phi_i(x_k) - c_i/a_i - K_i[f_i(., phi1, phi2)](x_k) )^2
std::pair<double, double> integral_residual(const Problem& p, const GridFn& phi1,
                                            const GridFn& phi2,
                                            const std::vector<double>& nodes);

// Pointwise defect in the differential equation at the points xs (x > 0):
//     Res_i(x) = | (1/p_i) (p_i phi_i')'(x) - f_i(x, phi1(x), phi2(x)) |
struct ResidualRow {
    double x;
    double res1, res2;
};
std::vector<ResidualRow> differential_residual(const Problem& p, const GridFn& phi1,
                                               const GridFn& phi2,
                                               const std::vector<double>& xs);

// Kernels for the two components at the given resolution.
std::pair<Kernel, Kernel> problem_kernels(const Problem& p, int degree);

}  // namespace lef

#endif
