#ifndef LEF_PROBLEM_FILE_HPP
#define LEF_PROBLEM_FILE_HPP

#include <optional>
#include <string>

#include "lef/problem.hpp"
#include "lef/tuner.hpp"

namespace lef {

// Solver/tuner settings a problem file may carry alongside the problem.
struct FileSettings {
    std::optional<int> order;
    std::optional<int> degree;
    std::optional<int> residual_node_count;
    std::optional<double> c10, c20;
    std::optional<SearchBox> search;
    std::optional<int> budget;
};

struct ProblemDocument {
    Problem problem;
    FileSettings settings;
};

// Line-oriented problem description; see docs/problem-format.md for the
// grammar. Scalar fields accept constant expressions ("-2*ln(2)", "1/10000").
ProblemDocument parse_problem_text(const std::string& text);
ProblemDocument load_problem(const std::string& path);

// Emits a document that parses back to an identical Problem.
std::string emit_problem(const Problem& p, const FileSettings& settings = {});
void save_problem(const std::string& path, const Problem& p,
                  const FileSettings& settings = {});

}  // namespace lef

#endif
