#include "lef/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace lef {

using nlohmann::json;

std::string format_sig(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

SolveReport make_solve_report(const Problem& p, const Solution& sol,
                              const std::vector<double>& xs) {
    SolveReport rep;
    rep.problem = p;
    rep.config = sol.config;
    rep.has_exact = p.exact1.has_value() && p.exact2.has_value();
    const auto res = differential_residual(p, sol.phi1(), sol.phi2(), xs);
    auto [e1, e2] = integral_residual(p, sol.phi1(), sol.phi2(), sol.config.residual_nodes);
    rep.e1 = e1;
    rep.e2 = e2;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        SolveRow row;
        row.x = xs[i];
        row.phi1 = sol.phi1().eval(xs[i]);
        row.phi2 = sol.phi2().eval(xs[i]);
        row.res1 = res[i].res1;
        row.res2 = res[i].res2;
        if (rep.has_exact) {
            row.exact1 = p.exact1->eval_x(xs[i], p.params);
            row.exact2 = p.exact2->eval_x(xs[i], p.params);
            row.err1 = std::abs(row.phi1 - *row.exact1);
            row.err2 = std::abs(row.phi2 - *row.exact2);
            rep.max_err1 = std::max(rep.max_err1, *row.err1);
            rep.max_err2 = std::max(rep.max_err2, *row.err2);
        }
        rep.rows.push_back(row);
    }
    return rep;
}

std::string solve_csv(const SolveReport& rep) {
    std::ostringstream out;
    out << "x,phi1,phi2,res1,res2";
    if (rep.has_exact) out << ",exact1,exact2,err1,err2";
    out << "\n";
    for (const auto& r : rep.rows) {
        out << format_sig(r.x) << ',' << format_sig(r.phi1) << ',' << format_sig(r.phi2)
            << ',' << format_sig(r.res1) << ',' << format_sig(r.res2);
        if (rep.has_exact)
            out << ',' << format_sig(*r.exact1) << ',' << format_sig(*r.exact2) << ','
                << format_sig(*r.err1) << ',' << format_sig(*r.err2);
        out << "\n";
    }
    return out.str();
}

namespace {

json config_json(const HamConfig& cfg) {
    return json{{"order", cfg.order},
                {"c10", cfg.c10},
                {"c20", cfg.c20},
                {"degree", cfg.degree},
                {"residual_nodes", cfg.residual_nodes.size()}};
}

json problem_json(const Problem& p) {
    json jp{{"name", p.name},
            {"k1", p.weight1.k},
            {"k2", p.weight2.k},
            {"a1", p.a1}, {"b1", p.b1}, {"c1", p.c1},
            {"a2", p.a2}, {"b2", p.b2}, {"c2", p.c2},
            {"f1", p.f1.str()},
            {"f2", p.f2.str()}};
    if (p.weight1.g) jp["g1"] = p.weight1.g->str();
    if (p.weight2.g) jp["g2"] = p.weight2.g->str();
    if (!p.params.empty()) jp["params"] = p.params;
    if (p.exact1) jp["exact1"] = p.exact1->str();
    if (p.exact2) jp["exact2"] = p.exact2->str();
    return jp;
}

json tune_json_obj(const TuneReport& t) {
    return json{{"c10", t.c10_opt},
                {"c20", t.c20_opt},
                {"objective", t.value_opt},
                {"e1", t.e1_opt},
                {"e2", t.e2_opt},
                {"converged", t.converged},
                {"evaluations", t.evaluations},
                {"grad_e1_c10", t.grad_e1_c10},
                {"grad_e2_c20", t.grad_e2_c20}};
}

json bound_json_obj(const BoundReport& b) {
    return json{{"M", b.M},
                {"L", b.L},
                {"delta", b.delta},
                {"delta1", b.delta1},
                {"delta2", b.delta2},
                {"max_f0", b.max_f0},
                {"admissible", b.admissible},
                {"c_in_unit_interval", b.remark_interval},
                {"bound_per_order", b.bound_per_order}};
}

}  // namespace

std::string solve_json(const SolveReport& rep, const TuneReport* tune,
                       const BoundReport* bound) {
    json rows = json::array();
    for (const auto& r : rep.rows) {
        json jr{{"x", r.x},
                {"phi1", r.phi1}, {"phi2", r.phi2},
                {"res1", r.res1}, {"res2", r.res2}};
        if (r.exact1) { jr["exact1"] = *r.exact1; jr["exact2"] = *r.exact2;
                        jr["err1"] = *r.err1;     jr["err2"] = *r.err2; }
        rows.push_back(jr);
    }
    json doc{{"problem", problem_json(rep.problem)},
             {"config", config_json(rep.config)},
             {"rows", rows},
             {"integral_residual", {{"e1", rep.e1}, {"e2", rep.e2}}}};
    if (rep.has_exact)
        doc["max_error"] = {{"y1", rep.max_err1}, {"y2", rep.max_err2}};
    if (tune) doc["tune"] = tune_json_obj(*tune);
    if (bound) doc["bounds"] = bound_json_obj(*bound);
    return doc.dump(2) + "\n";
}

std::string solve_table(const SolveReport& rep) {
    std::ostringstream out;
    char line[256];
    out << "order " << rep.config.order << ", degree " << rep.config.degree
        << ", c10 = " << format_sig(rep.config.c10)
        << ", c20 = " << format_sig(rep.config.c20) << "\n";
    out << "E1 = " << format_sig(rep.e1) << "  E2 = " << format_sig(rep.e2) << "\n";
    if (rep.has_exact) {
        out << "x          phi1           phi2           Res1       Res2       err1       err2\n";
        for (const auto& r : rep.rows) {
            std::snprintf(line, sizeof line, "%-10.4g %-14.9g %-14.9g %-10.3g %-10.3g %-10.3g %-10.3g\n",
                          r.x, r.phi1, r.phi2, r.res1, r.res2, *r.err1, *r.err2);
            out << line;
        }
        out << "max error: y1 " << format_sig(rep.max_err1) << ", y2 "
            << format_sig(rep.max_err2) << "\n";
    } else {
        out << "x          phi1           phi2           Res1       Res2\n";
        for (const auto& r : rep.rows) {
            std::snprintf(line, sizeof line, "%-10.4g %-14.9g %-14.9g %-10.3g %-10.3g\n",
                          r.x, r.phi1, r.phi2, r.res1, r.res2);
            out << line;
        }
    }
    return out.str();
}

std::string tune_json(const Problem& p, const TuneReport& tune, const BoundReport& bound) {
    json doc{{"problem", problem_json(p)},
             {"tune", tune_json_obj(tune)},
             {"bounds", bound_json_obj(bound)}};
    return doc.dump(2) + "\n";
}

std::string tune_table(const Problem& p, const TuneReport& tune, const BoundReport& bound) {
    std::ostringstream out;
    out << "optimal control parameters for " << (p.name.empty() ? "problem" : p.name) << "\n";
    out << "  c10 = " << format_sig(tune.c10_opt) << "\n";
    out << "  c20 = " << format_sig(tune.c20_opt) << "\n";
    out << "  E1 + E2 = " << format_sig(tune.value_opt)
        << "  (E1 = " << format_sig(tune.e1_opt) << ", E2 = " << format_sig(tune.e2_opt) << ")\n";
    out << "  evaluations = " << tune.evaluations
        << (tune.converged ? "  (converged)" : "  (budget exhausted)") << "\n";
    out << "  stationarity: dE1/dc10 = " << format_sig(tune.grad_e1_c10)
        << ", dE2/dc20 = " << format_sig(tune.grad_e2_c20) << "\n";
    out << "convergence diagnostics\n";
    out << "  M = " << format_sig(bound.M) << "  L = " << format_sig(bound.L)
        << "  delta = " << format_sig(bound.delta)
        << " (per component " << format_sig(bound.delta1) << ", "
        << format_sig(bound.delta2) << ")\n";
    out << "  contraction " << (bound.admissible ? "certified (delta < 1)" : "not certified")
        << ", c in [-1,0): " << (bound.remark_interval ? "yes" : "no") << "\n";
    if (!bound.bound_per_order.empty()) {
        out << "  truncation bound per order:";
        for (double b : bound.bound_per_order) out << ' ' << format_sig(b);
        out << "\n";
    }
    return out.str();
}

std::string landscape_csv(const Landscape& ls) {
    std::ostringstream out;
    out << "c10,c20,E\n";
    for (std::size_t i1 = 0; i1 < ls.c10s.size(); ++i1)
        for (std::size_t i2 = 0; i2 < ls.c20s.size(); ++i2)
            out << format_sig(ls.c10s[i1]) << ',' << format_sig(ls.c20s[i2]) << ','
                << format_sig(ls.at(static_cast<int>(i1), static_cast<int>(i2))) << "\n";
    return out.str();
}

}  // namespace lef
