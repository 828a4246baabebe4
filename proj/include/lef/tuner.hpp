#ifndef LEF_TUNER_HPP
#define LEF_TUNER_HPP

#include <array>
#include <optional>
#include <vector>

#include "lef/solver.hpp"

namespace lef {

struct SearchBox {
    double c1_lo = -1.5, c1_hi = -0.25;
    double c2_lo = -1.5, c2_hi = -0.25;
};

struct TuneOptions {
    int order = 4;
    int degree = 64;
    SearchBox search;
    int budget = 2000;               // objective evaluations
    int grid = 5;                    // multistart grid per axis
    double tolerance = 1e-10;        // simplex diameter
    std::vector<double> residual_nodes;  // defaults to 101 equispaced
};

struct TuneEval {
    double c10, c20;
    double value;                    // E_1n + E_2n, +inf when diverged
};

struct TuneReport {
    double c10_opt = 0.0, c20_opt = 0.0;
    double value_opt = 0.0;          // E at the optimum
    double e1_opt = 0.0, e2_opt = 0.0;
    bool converged = false;
    int evaluations = 0;
    // a-posteriori check of the stationarity system dE1/dc10 = dE2/dc20 = 0
    double grad_e1_c10 = 0.0, grad_e2_c20 = 0.0;
    std::vector<TuneEval> history;
};

// Minimizes E_1n + E_2n over (c10, c20) by deterministic Nelder-Mead
// multistarted from a coarse grid. Diverging candidates score +inf.
// Throws SolveError only if every start diverged.
TuneReport optimize_c(const Problem& p, const TuneOptions& opts = {});

struct LipschitzBox {
    double y1_lo, y1_hi;
    double y2_lo, y2_hi;
};

// L = max_i max over samples of |df/dy_i| taken over both components,
// by central differences on a samples^3 grid of (x, y1, y2).
double estimate_lipschitz(const Problem& p, const LipschitzBox& box, int samples = 11);

// Box spanned by the partial sums of a solution, ranges inflated by 20%.
LipschitzBox solution_box(const Solution& sol);

struct BoundReport {
    double M = 0.0;                  // kernel bound constant
    double L = 0.0;                  // Lipschitz estimate
    double delta = 0.0;              // max-norm reading: max_i|1+c_i0| + 2LM max_i|c_i0|
    double delta1 = 0.0, delta2 = 0.0;  // per-component contraction constants
    double max_f0 = 0.0;             // max_i max_x |f_i(x, y10, y20)|
    bool admissible = false;         // delta < 1
    bool remark_interval = false;    // both c_i0 in [-1, 0)
    std::vector<double> bound_per_order;  // truncation bound for m = 1..n
};

// Evaluates the contraction constant delta = |1+c0| + 2 L M |c0| and the
// truncation bound delta^m M |c0| max|f(x,y10,y20)| / (1-delta). When L is
// not supplied it is estimated over the box spanned by an order-n solve.
BoundReport convergence_report(const Problem& p, double c10, double c20, int order,
                               std::optional<double> lipschitz = std::nullopt,
                               int degree = 64);

struct LandscapeGrid {
    SearchBox box;
    int resolution = 41;  // cells per axis, capped at 201
};

struct Landscape {
    std::vector<double> c10s, c20s;  // ascending
    std::vector<double> value;       // row-major [i2 * n1 + i1], +inf = diverged
    double at(int i1, int i2) const {
        return value[static_cast<std::size_t>(i2) * c10s.size() + i1];
    }
};

Landscape landscape(const Problem& p, int order, const LandscapeGrid& grid,
                    int degree = 64);

}  // namespace lef

#endif
