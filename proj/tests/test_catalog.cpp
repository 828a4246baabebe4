#include <doctest.h>

#include <cmath>

#include "lef/catalog.hpp"
#include "lef/problem_file.hpp"

using lef::Builtin;
using lef::Problem;

namespace {

bool same_problem(const Problem& a, const Problem& b) {
    auto same_weight = [](const lef::Weight& u, const lef::Weight& v) {
        if (u.k != v.k) return false;
        if (u.g.has_value() != v.g.has_value()) return false;
        return !u.g || *u.g == *v.g;
    };
    auto same_opt = [](const std::optional<lef::Expr>& u, const std::optional<lef::Expr>& v) {
        if (u.has_value() != v.has_value()) return false;
        return !u || *u == *v;
    };
    return same_weight(a.weight1, b.weight1) && same_weight(a.weight2, b.weight2) &&
           a.a1 == b.a1 && a.b1 == b.b1 && a.c1 == b.c1 &&
           a.a2 == b.a2 && a.b2 == b.b2 && a.c2 == b.c2 &&
           a.f1 == b.f1 && a.f2 == b.f2 && a.params == b.params &&
           same_opt(a.exact1, b.exact1) && same_opt(a.exact2, b.exact2);
}

}  // namespace

TEST_CASE("catalog contents") {
    CHECK(lef::catalog().size() == 9);
    CHECK(lef::variant_count(1) == 2);
    CHECK(lef::variant_count(2) == 2);
    CHECK(lef::variant_count(5) == 1);
    CHECK_THROWS_AS(lef::builtin(8), std::invalid_argument);
    CHECK_THROWS_AS(lef::builtin(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(lef::builtin("nope"), std::invalid_argument);

    const Builtin& b1 = lef::builtin(1, 2);
    CHECK(b1.problem.weight1.k == 2);
    CHECK(b1.problem.params.at("a") == 5.0);
    CHECK(b1.problem.params.at("b") == 1.0);
    CHECK(b1.problem.params.at("c") == doctest::Approx(0.1));
    CHECK(b1.problem.params.at("d") == doctest::Approx(0.1));
    CHECK(b1.problem.params.at("e") == doctest::Approx(0.05));
    CHECK(b1.problem.params.at("l1") == doctest::Approx(1e-4));
    CHECK(b1.problem.params.at("m2") == doctest::Approx(1e-4));

    const Builtin& b3 = lef::builtin("3");
    REQUIRE(b3.problem.exact1.has_value());
    CHECK(b3.problem.exact1->str() == lef::Expr::parse("3 - x^2").str());
    CHECK(b3.problem.exact2->str() == lef::Expr::parse("-1 + x^2").str());

    const Builtin& b4 = lef::builtin(4);
    CHECK(b4.problem.weight1.k == 5);
    CHECK(b4.problem.weight2.k == 3);
    CHECK(b4.problem.c1 == doctest::Approx(-2.0 * std::log(2.0)));

    const Builtin& b6 = lef::builtin("6:v1");
    CHECK(b6.problem.exact1->str() == lef::Expr::parse("-3*ln(2+x^2)").str());

    const Builtin& b7 = lef::builtin(7);
    CHECK(b7.problem.c1 == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(b7.problem.c2 == doctest::Approx(std::sqrt(2.0)));
    CHECK(b7.problem.weight1.k == 3);
    CHECK(b7.problem.weight2.k == 4);
}

TEST_CASE("every builtin round-trips through the file format") {
    for (const auto& b : lef::catalog()) {
        const std::string doc = lef::emit_problem(b.problem);
        lef::ProblemDocument back = lef::parse_problem_text(doc);
        CHECK(same_problem(b.problem, back.problem));
        // and the emitted form is a fixed point
        CHECK(lef::emit_problem(back.problem) == doc);
    }
}

TEST_CASE("problem files evaluate constant expressions") {
    const std::string text = R"(
# boundary data written as expressions
[weights]
k1 = 5
k2 = 3

[boundary]
a1 = 1
b1 = 0
c1 = -2*ln(2)
a2 = 1
b2 = 0
c2 = 1/sqrt(2)

[rhs]
f1 = 8*exp(y1) + 16*exp(-y2/2)
f2 = -(8*exp(-y2) + 8*exp(y1/2))

[solver]
order = 6
c10 = -0.763735
c20 = -0.743226
)";
    lef::ProblemDocument doc = lef::parse_problem_text(text);
    CHECK(doc.problem.c1 == doctest::Approx(-1.3862943611).epsilon(1e-9));
    CHECK(doc.problem.c2 == doctest::Approx(0.70710678).epsilon(1e-8));
    CHECK(doc.settings.order == 6);
    CHECK(doc.settings.c10 == doctest::Approx(-0.763735));
}

TEST_CASE("minimal zero problem parses") {
    const std::string text =
        "[weights]\nk1 = 2\nk2 = 2\n"
        "[boundary]\na1 = 1\nb1 = 0\nc1 = 1\na2 = 1\nb2 = 0\nc2 = 1\n"
        "[rhs]\nf1 = 0\nf2 = 0\n";
    CHECK_NOTHROW(lef::parse_problem_text(text));
}

TEST_CASE("problem file errors") {
    SUBCASE("parse error with location") {
        try {
            lef::parse_problem_text("[weights]\nk1 = 2\noops\n");
            FAIL("expected error");
        } catch (const lef::ParseError& e) {
            CHECK(e.line == 3);
        }
    }
    SUBCASE("unbound parameter") {
        const std::string text =
            "[weights]\nk1 = 2\nk2 = 2\n"
            "[boundary]\na1 = 1\nb1 = 0\nc1 = 1\na2 = 1\nb2 = 0\nc2 = 1\n"
            "[rhs]\nf1 = a*y1\nf2 = 0\n";
        CHECK_THROWS_AS(lef::parse_problem_text(text), lef::UnboundParameter);
    }
    SUBCASE("a = 0 is rejected") {
        const std::string text =
            "[weights]\nk1 = 2\nk2 = 2\n"
            "[boundary]\na1 = 0\nb1 = 1\nc1 = 1\na2 = 1\nb2 = 0\nc2 = 1\n"
            "[rhs]\nf1 = 0\nf2 = 0\n";
        CHECK_THROWS_AS(lef::parse_problem_text(text), std::invalid_argument);
    }
    SUBCASE("missing section") {
        CHECK_THROWS_AS(lef::parse_problem_text("[weights]\nk1 = 2\nk2 = 2\n"),
                        lef::ParseError);
    }
    SUBCASE("variables are not constants") {
        const std::string text =
            "[weights]\nk1 = 2\nk2 = 2\n"
            "[boundary]\na1 = x\nb1 = 0\nc1 = 1\na2 = 1\nb2 = 0\nc2 = 1\n"
            "[rhs]\nf1 = 0\nf2 = 0\n";
        CHECK_THROWS_AS(lef::parse_problem_text(text), lef::ParseError);
    }
}
