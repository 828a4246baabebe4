#ifndef LEF_BENCH_HPP
#define LEF_BENCH_HPP

#include "lef/catalog.hpp"
#include "lef/report.hpp"

namespace lef {

// One tabulation point of a reproduced reference table.
struct BenchRow {
    double x;
    double phi1, phi2;        // tuned series at the reference (c10, c20)
    double psi1, psi2;        // decomposition series (c = -1)
    double res_h1, res_h2;    // differential residuals of the tuned series
    double res_a1, res_a2;    // ... of the decomposition series
    double tuned_phi1, tuned_phi2;  // tuned series at this build's own optimum
};

struct CellCheck {
    double x;
    const char* column;
    double got, ref;
    bool gated;     // informational cells never fail the table
    bool pass;
};

struct BenchResult {
    std::string key, title;
    int order = 0;
    double c10_ref = 0.0, c20_ref = 0.0;
    std::vector<BenchRow> rows;
    std::vector<CellCheck> checks;
    TuneReport tune;
    bool tuned = false;
    bool pass = true;
};

struct BenchOptions {
    bool run_tuner = true;
    int degree = 64;
    // comparison policy
    double solution_tol = 5e-4;     // absolute, solution columns
    double residual_factor = 5.0;   // multiplicative, residual columns
    double exact_tol = 1e-10;       // tables pinned by an exact solution
};

BenchResult reproduce_table(const Builtin& b, const BenchOptions& opts = {});

// all catalog entries, run concurrently
std::vector<BenchResult> run_bench(const std::vector<std::string>& keys,
                                   const BenchOptions& opts = {});

std::string bench_csv(const std::vector<BenchResult>& results);
std::string bench_json(const std::vector<BenchResult>& results);
std::string bench_summary(const std::vector<BenchResult>& results);  // human table

bool all_passed(const std::vector<BenchResult>& results);

}  // namespace lef

#endif
