#include "lef/problem_file.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace lef {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

struct Entry {
    std::string value;
    int line;
};

struct Section {
    std::map<std::string, Entry> kv;
    std::vector<std::pair<std::string, Entry>> ordered;
    int line = 0;
};

[[noreturn]] void fail(const std::string& msg, int line) {
    throw ParseError("problem file: " + msg, line, 1);
}

double scalar(const Entry& e, const Bindings& params) {
    try {
        const Expr ex = Expr::parse(e.value);
        if (ex.uses_var(ast::Kind::VarX) || ex.uses_var(ast::Kind::VarY1) ||
            ex.uses_var(ast::Kind::VarY2))
            fail("'" + e.value + "' is not a constant", e.line);
        return ex.eval(0.0, 0.0, 0.0, params);
    } catch (const UnboundParameter&) {
        throw;
    } catch (const ParseError& pe) {
        throw ParseError("problem file: bad numeric expression '" + e.value + "': " + pe.what(),
                         e.line, 1);
    } catch (const std::exception& ex) {
        throw ParseError("problem file: bad numeric expression '" + e.value + "': " + ex.what(),
                         e.line, 1);
    }
}

std::string format_scalar(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

ProblemDocument parse_problem_text(const std::string& text) {
    std::map<std::string, Section> sections;
    std::istringstream in(text);
    std::string line, current;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            if (t.back() != ']') fail("unterminated section header", lineno);
            current = trim(t.substr(1, t.size() - 2));
            if (current.empty()) fail("empty section name", lineno);
            sections[current].line = lineno;
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos) fail("expected 'key = value'", lineno);
        if (current.empty()) fail("entry before any [section]", lineno);
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty() || value.empty()) fail("empty key or value", lineno);
        auto& sec = sections[current];
        if (sec.kv.count(key)) fail("duplicate key '" + key + "'", lineno);
        sec.kv[key] = {value, lineno};
        sec.ordered.push_back({key, {value, lineno}});
    }

    for (const auto& [name, sec] : sections) {
        static const std::set<std::string> known{"weights", "boundary", "rhs",
                                                 "params", "exact", "solver", "tuner"};
        if (!known.count(name)) fail("unknown section [" + name + "]", sec.line);
    }

    auto need_section = [&](const std::string& name) -> const Section& {
        auto it = sections.find(name);
        if (it == sections.end()) fail("missing [" + name + "] section", 1);
        return it->second;
    };
    auto need = [&](const Section& sec, const std::string& key) -> const Entry& {
        auto it = sec.kv.find(key);
        if (it == sec.kv.end()) fail("missing key '" + key + "'", sec.line);
        return it->second;
    };

    ProblemDocument doc;
    Problem& p = doc.problem;

    if (sections.count("params")) {
        for (const auto& [key, entry] : sections["params"].ordered)
            p.params[key] = scalar(entry, p.params);
    }

    const Section& w = need_section("weights");
    p.weight1.k = static_cast<int>(scalar(need(w, "k1"), p.params));
    p.weight2.k = static_cast<int>(scalar(need(w, "k2"), p.params));
    if (w.kv.count("g1")) p.weight1.g = Expr::parse(w.kv.at("g1").value);
    if (w.kv.count("g2")) p.weight2.g = Expr::parse(w.kv.at("g2").value);

    const Section& b = need_section("boundary");
    p.a1 = scalar(need(b, "a1"), p.params);
    p.b1 = scalar(need(b, "b1"), p.params);
    p.c1 = scalar(need(b, "c1"), p.params);
    p.a2 = scalar(need(b, "a2"), p.params);
    p.b2 = scalar(need(b, "b2"), p.params);
    p.c2 = scalar(need(b, "c2"), p.params);

    const Section& r = need_section("rhs");
    p.f1 = Expr::parse(need(r, "f1").value);
    p.f2 = Expr::parse(need(r, "f2").value);

    if (sections.count("exact")) {
        const Section& e = sections["exact"];
        if (e.kv.count("y1")) p.exact1 = Expr::parse(e.kv.at("y1").value);
        if (e.kv.count("y2")) p.exact2 = Expr::parse(e.kv.at("y2").value);
    }

    if (sections.count("solver")) {
        const Section& s = sections["solver"];
        if (s.kv.count("order")) doc.settings.order = static_cast<int>(scalar(s.kv.at("order"), p.params));
        if (s.kv.count("degree")) doc.settings.degree = static_cast<int>(scalar(s.kv.at("degree"), p.params));
        if (s.kv.count("nodes"))
            doc.settings.residual_node_count = static_cast<int>(scalar(s.kv.at("nodes"), p.params));
        if (s.kv.count("c10")) doc.settings.c10 = scalar(s.kv.at("c10"), p.params);
        if (s.kv.count("c20")) doc.settings.c20 = scalar(s.kv.at("c20"), p.params);
    }

    if (sections.count("tuner")) {
        const Section& s = sections["tuner"];
        if (s.kv.count("budget")) doc.settings.budget = static_cast<int>(scalar(s.kv.at("budget"), p.params));
        SearchBox box;
        bool any = false;
        auto get = [&](const char* key, double& dst) {
            if (s.kv.count(key)) { dst = scalar(s.kv.at(key), p.params); any = true; }
        };
        get("c1_min", box.c1_lo);
        get("c1_max", box.c1_hi);
        get("c2_min", box.c2_lo);
        get("c2_max", box.c2_hi);
        if (any) doc.settings.search = box;
    }

    p.validate();
    if (p.exact1) {
        for (const auto& name : p.exact1->parameters())
            if (!p.params.count(name)) throw UnboundParameter(name);
    }
    if (p.exact2) {
        for (const auto& name : p.exact2->parameters())
            if (!p.params.count(name)) throw UnboundParameter(name);
    }
    return doc;
}

ProblemDocument load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open problem file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_problem_text(ss.str());
}

std::string emit_problem(const Problem& p, const FileSettings& settings) {
    std::ostringstream out;
    if (!p.name.empty()) out << "# " << p.name << "\n";
    out << "[weights]\n";
    out << "k1 = " << p.weight1.k << "\n";
    out << "k2 = " << p.weight2.k << "\n";
    if (p.weight1.g) out << "g1 = " << p.weight1.g->str() << "\n";
    if (p.weight2.g) out << "g2 = " << p.weight2.g->str() << "\n";
    out << "\n[boundary]\n";
    out << "a1 = " << format_scalar(p.a1) << "\n";
    out << "b1 = " << format_scalar(p.b1) << "\n";
    out << "c1 = " << format_scalar(p.c1) << "\n";
    out << "a2 = " << format_scalar(p.a2) << "\n";
    out << "b2 = " << format_scalar(p.b2) << "\n";
    out << "c2 = " << format_scalar(p.c2) << "\n";
    out << "\n[rhs]\n";
    out << "f1 = " << p.f1.str() << "\n";
    out << "f2 = " << p.f2.str() << "\n";
    if (!p.params.empty()) {
        out << "\n[params]\n";
        for (const auto& [k, v] : p.params) out << k << " = " << format_scalar(v) << "\n";
    }
    if (p.exact1 || p.exact2) {
        out << "\n[exact]\n";
        if (p.exact1) out << "y1 = " << p.exact1->str() << "\n";
        if (p.exact2) out << "y2 = " << p.exact2->str() << "\n";
    }
    std::ostringstream solver;
    if (settings.order) solver << "order = " << *settings.order << "\n";
    if (settings.degree) solver << "degree = " << *settings.degree << "\n";
    if (settings.residual_node_count) solver << "nodes = " << *settings.residual_node_count << "\n";
    if (settings.c10) solver << "c10 = " << format_scalar(*settings.c10) << "\n";
    if (settings.c20) solver << "c20 = " << format_scalar(*settings.c20) << "\n";
    if (!solver.str().empty()) out << "\n[solver]\n" << solver.str();
    std::ostringstream tuner;
    if (settings.search) {
        tuner << "c1_min = " << format_scalar(settings.search->c1_lo) << "\n";
        tuner << "c1_max = " << format_scalar(settings.search->c1_hi) << "\n";
        tuner << "c2_min = " << format_scalar(settings.search->c2_lo) << "\n";
        tuner << "c2_max = " << format_scalar(settings.search->c2_hi) << "\n";
    }
    if (settings.budget) tuner << "budget = " << *settings.budget << "\n";
    if (!tuner.str().empty()) out << "\n[tuner]\n" << tuner.str();
    return out.str();
}

void save_problem(const std::string& path, const Problem& p, const FileSettings& settings) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write problem file '" + path + "'");
    out << emit_problem(p, settings);
}

}  // namespace lef
