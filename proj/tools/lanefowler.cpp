// lanefowler: solver front end for coupled singular Lane-Emden-Fowler
// boundary value problems. Subcommands: solve, tune, bench, landscape,
// examples.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "lef/bench.hpp"
#include "lef/catalog.hpp"
#include "lef/problem_file.hpp"
#include "lef/report.hpp"

namespace {

struct Source {
    std::string example;   // "N" or "N:vK"
    std::string file;
};

lef::ProblemDocument resolve(const Source& src) {
    if (!src.example.empty() && !src.file.empty())
        throw CLI::ValidationError("give either --example or --problem, not both");
    if (src.example.empty() && src.file.empty())
        throw CLI::ValidationError("a problem source is required (--example or --problem)");
    if (!src.file.empty()) return lef::load_problem(src.file);
    const lef::Builtin& b = lef::builtin(src.example);
    lef::ProblemDocument doc;
    doc.problem = b.problem;
    doc.settings.order = b.table_order;
    doc.settings.c10 = b.c10_ref;
    doc.settings.c20 = b.c20_ref;
    return doc;
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << payload;
}

std::vector<double> parse_points(const std::string& spec) {
    // "a,b,c" explicit list
    std::vector<double> xs;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t next = spec.find(',', pos);
        if (next == std::string::npos) next = spec.size();
        xs.push_back(std::stod(spec.substr(pos, next - pos)));
        pos = next + 1;
    }
    return xs;
}

bool parse_search(const std::string& spec, lef::SearchBox& box) {
    // "a:b,c:d"
    double v[4];
    if (std::sscanf(spec.c_str(), "%lf:%lf,%lf:%lf", &v[0], &v[1], &v[2], &v[3]) != 4)
        return false;
    box = {v[0], v[1], v[2], v[3]};
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Green's-function homotopy series solver for coupled singular\n"
                 "Lane-Emden-Fowler boundary value problems on [0,1]"};
    app.require_subcommand(1);

    Source src;
    int order = 4;
    int degree = 64;
    int nodes = 101;
    double c1 = 0.0, c2 = 0.0;
    bool has_c1 = false, has_c2 = false;
    std::string output, format = "table", search_spec, points_spec;
    int budget = 2000;

    auto add_common = [&](CLI::App* cmd, bool with_c) {
        cmd->add_option("--example", src.example, "builtin problem id, N or N:vK");
        cmd->add_option("--problem", src.file, "problem description file");
        cmd->add_option("--order", order, "series truncation order")->check(CLI::PositiveNumber);
        cmd->add_option("--degree", degree, "spectral resolution")->check(CLI::Range(16, 4096));
        cmd->add_option("--nodes", nodes, "sample count for the mean-square residual")
            ->check(CLI::Range(2, 100000));
        cmd->add_option("--output", output, "write the report here instead of stdout");
        cmd->add_option("--format", format, "table, csv or json")
            ->check(CLI::IsMember({"table", "csv", "json"}));
        if (with_c) {
            cmd->add_option("--c1", c1, "convergence-control parameter c10")
                ->each([&](const std::string&) { has_c1 = true; });
            cmd->add_option("--c2", c2, "convergence-control parameter c20")
                ->each([&](const std::string&) { has_c2 = true; });
        }
    };

    CLI::App* solve = app.add_subcommand("solve", "run the series solver at fixed (c10, c20)");
    add_common(solve, true);
    solve->add_option("--points", points_spec, "tabulation points, comma separated");

    CLI::App* tune = app.add_subcommand("tune", "optimize (c10, c20) and report diagnostics");
    add_common(tune, false);
    tune->add_option("--search", search_spec, "search box a:b,c:d");
    tune->add_option("--budget", budget, "objective evaluation budget")->check(CLI::PositiveNumber);

    CLI::App* bench = app.add_subcommand("bench", "reproduce the stored reference tables");
    bool bench_all = false;
    bool bench_no_tune = false;
    std::vector<std::string> bench_keys;
    bench->add_flag("--all", bench_all, "run every catalog entry");
    bench->add_option("--example", bench_keys, "catalog entries to run (repeatable)");
    bench->add_flag("--no-tune", bench_no_tune, "skip the per-table tuner run");
    bench->add_option("--output", output, "write the report here instead of stdout");
    bench->add_option("--format", format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    CLI::App* land = app.add_subcommand("landscape", "objective values on a (c10, c20) grid");
    add_common(land, false);
    land->add_option("--search", search_spec, "grid box a:b,c:d");
    int resolution = 41;
    land->add_option("--resolution", resolution, "grid cells per axis")->check(CLI::Range(2, 201));

    CLI::App* examples = app.add_subcommand("examples", "list builtin problems");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (examples->parsed()) {
            for (const auto& b : lef::catalog()) {
                std::printf("%-6s %-55s order %d, c* = (%s, %s)%s\n", b.key.c_str(),
                            b.title.c_str(), b.table_order,
                            lef::format_sig(b.c10_ref).c_str(),
                            lef::format_sig(b.c20_ref).c_str(),
                            b.problem.exact1 ? ", exact solution known" : "");
            }
            return 0;
        }

        if (solve->parsed()) {
            lef::ProblemDocument doc = resolve(src);
            lef::HamConfig cfg;
            cfg.order = solve->count("--order") ? order : doc.settings.order.value_or(order);
            cfg.degree = solve->count("--degree") ? degree : doc.settings.degree.value_or(degree);
            cfg.c10 = has_c1 ? c1 : doc.settings.c10.value_or(-1.0);
            cfg.c20 = has_c2 ? c2 : doc.settings.c20.value_or(-1.0);
            cfg.residual_nodes = lef::HamConfig::default_nodes(
                solve->count("--nodes") ? nodes : doc.settings.residual_node_count.value_or(nodes));
            lef::Solution sol = lef::ham_solve(doc.problem, cfg);
            std::vector<double> xs = points_spec.empty()
                ? std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0}
                : parse_points(points_spec);
            lef::SolveReport rep = lef::make_solve_report(doc.problem, sol, xs);
            if (format == "csv") write_output(output, lef::solve_csv(rep));
            else if (format == "json") write_output(output, lef::solve_json(rep));
            else write_output(output, lef::solve_table(rep));
            return 0;
        }

        if (tune->parsed()) {
            lef::ProblemDocument doc = resolve(src);
            lef::TuneOptions topt;
            topt.order = tune->count("--order") ? order : doc.settings.order.value_or(order);
            topt.degree = tune->count("--degree") ? degree : doc.settings.degree.value_or(degree);
            topt.budget = tune->count("--budget") ? budget : doc.settings.budget.value_or(budget);
            topt.residual_nodes = lef::HamConfig::default_nodes(
                tune->count("--nodes") ? nodes : doc.settings.residual_node_count.value_or(nodes));
            if (!search_spec.empty()) {
                if (!parse_search(search_spec, topt.search))
                    throw CLI::ValidationError("--search expects a:b,c:d");
            } else if (doc.settings.search) {
                topt.search = *doc.settings.search;
            }
            lef::TuneReport rep = lef::optimize_c(doc.problem, topt);
            lef::BoundReport bound = lef::convergence_report(doc.problem, rep.c10_opt,
                                                             rep.c20_opt, topt.order,
                                                             std::nullopt, topt.degree);
            if (format == "json") write_output(output, lef::tune_json(doc.problem, rep, bound));
            else write_output(output, lef::tune_table(doc.problem, rep, bound));
            return 0;
        }

        if (bench->parsed()) {
            if (!bench_all && bench_keys.empty())
                throw CLI::ValidationError("bench needs --all or --example");
            lef::BenchOptions bopt;
            bopt.run_tuner = !bench_no_tune;
            auto results = lef::run_bench(bench_all ? std::vector<std::string>{} : bench_keys, bopt);
            if (format == "csv") write_output(output, lef::bench_csv(results));
            else if (format == "json") write_output(output, lef::bench_json(results));
            else write_output(output, lef::bench_summary(results));
            return lef::all_passed(results) ? 0 : 1;
        }

        if (land->parsed()) {
            lef::ProblemDocument doc = resolve(src);
            lef::LandscapeGrid grid;
            grid.resolution = resolution;
            if (!search_spec.empty()) {
                if (!parse_search(search_spec, grid.box))
                    throw CLI::ValidationError("--search expects a:b,c:d");
            } else if (doc.settings.search) {
                grid.box = *doc.settings.search;
            }
            const int n = land->count("--order") ? order : doc.settings.order.value_or(order);
            lef::Landscape ls = lef::landscape(doc.problem, n, grid,
                                               land->count("--degree") ? degree
                                               : doc.settings.degree.value_or(degree));
            write_output(output, lef::landscape_csv(ls));
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
