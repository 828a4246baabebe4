#ifndef LEF_CATALOG_HPP
#define LEF_CATALOG_HPP

#include <array>
#include <string>
#include <vector>

#include "lef/problem.hpp"

namespace lef {

// x, phi1, psi1, phi2, psi2, Res1, res1, Res2, res2 (phi/Res tuned series,
// psi/res decomposition series)
struct RefRow {
    double x;
    double phi1, psi1, phi2, psi2;
    double res_h1, res_a1, res_h2, res_a2;
};

struct Builtin {
    int id = 0;           // 1..7
    int variant = 1;      // 1-based
    std::string key;      // "3", "2:v1", ...
    std::string title;
    Problem problem;
    int table_order;      // truncation that generated the reference table
    double c10_ref, c20_ref;  // reference optimal control parameters
    std::vector<RefRow> table;    // empty for problems without one (example 3)
    bool adm_residual_reliable;   // reference ADM residual columns usable?
};

// The benchmark catalog. Example ids 1..7; examples 1 and 2 carry two
// parameterizations each (variants 1 and 2).
const std::vector<Builtin>& catalog();

const Builtin& builtin(int id, int variant = 1);
const Builtin& builtin(const std::string& key);   // "N" or "N:vK"
int variant_count(int id);

}  // namespace lef

#endif
