#ifndef LEF_REPORT_HPP
#define LEF_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "lef/problem.hpp"
#include "lef/solver.hpp"
#include "lef/tuner.hpp"

namespace lef {

// deterministic decimal formatting, 9 significant digits
std::string format_sig(double v);

struct SolveRow {
    double x;
    double phi1, phi2;
    double res1, res2;
    std::optional<double> exact1, exact2, err1, err2;
};

struct SolveReport {
    Problem problem;
    HamConfig config;
    std::vector<SolveRow> rows;
    double e1 = 0.0, e2 = 0.0;   // integral residuals of the final sums
    double max_err1 = 0.0, max_err2 = 0.0;  // vs exact, when available
    bool has_exact = false;
};

SolveReport make_solve_report(const Problem& p, const Solution& sol,
                              const std::vector<double>& xs);

std::string solve_csv(const SolveReport& rep);
std::string solve_json(const SolveReport& rep,
                       const TuneReport* tune = nullptr,
                       const BoundReport* bound = nullptr);
std::string solve_table(const SolveReport& rep);   // human-readable

std::string tune_json(const Problem& p, const TuneReport& tune, const BoundReport& bound);
std::string tune_table(const Problem& p, const TuneReport& tune, const BoundReport& bound);

std::string landscape_csv(const Landscape& ls);

}  // namespace lef

#endif
