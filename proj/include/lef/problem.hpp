#ifndef LEF_PROBLEM_HPP
#define LEF_PROBLEM_HPP

#include <optional>
#include <string>
#include <vector>

#include "lef/expr.hpp"
#include "lef/kernel.hpp"

namespace lef {

// The full coupled boundary value problem
//     (p_i y_i')' = p_i f_i(x, y1, y2),  y_i'(0) = 0,  a_i y_i(1) + b_i y_i'(1) = c_i.
struct Problem {
    std::string name;
    Weight weight1, weight2;
    double a1 = 1.0, b1 = 0.0, c1 = 0.0;
    double a2 = 1.0, b2 = 0.0, c2 = 0.0;
    Expr f1, f2;
    Bindings params;
    std::optional<Expr> exact1, exact2;

    void validate() const;  // throws std::invalid_argument on bad data
};

struct HamConfig {
    int order = 4;             // truncation n of the series
    double c10 = -1.0, c20 = -1.0;
    int degree = 64;           // spectral resolution
    std::vector<double> residual_nodes;  // defaults to 101 equispaced points

    void validate() const;
    static std::vector<double> default_nodes(int count = 101);
};

// Series terms y_ik and partial sums phi_im = sum_{k<=m} y_ik, m = 0..order.
struct Solution {
    HamConfig config;
    std::vector<GridFn> terms1, terms2;
    std::vector<GridFn> partial1, partial2;

    int order() const { return static_cast<int>(terms1.size()) - 1; }
    const GridFn& phi1() const { return partial1.back(); }
    const GridFn& phi2() const { return partial2.back(); }
};

struct SolveError : std::runtime_error {
    int stage;
    SolveError(const std::string& msg, int k)
        : std::runtime_error(msg + " (stage " + std::to_string(k) + ")"), stage(k) {}
};

}  // namespace lef

#endif
