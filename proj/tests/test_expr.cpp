#include <doctest.h>

#include <cmath>

#include "lef/expr.hpp"

using lef::Bindings;
using lef::Expr;

TEST_CASE("parsing and structure") {
    Expr e = Expr::parse("a*y1^2 + b*y1*y2");
    auto params = e.parameters();
    CHECK(params == std::vector<std::string>{"a", "b"});
    CHECK(e.uses_var(lef::ast::Kind::VarY1));
    CHECK(e.uses_var(lef::ast::Kind::VarY2));
    CHECK_FALSE(e.uses_var(lef::ast::Kind::VarX));

    CHECK_NOTHROW(Expr::parse("-8*exp(y1) - 16*exp(-y2/2)"));
    CHECK_NOTHROW(Expr::parse("y1/(l1+y1)"));
    CHECK_NOTHROW(Expr::parse("y2^-3"));
    CHECK_NOTHROW(Expr::parse("(4*y1^(-2) + 1)*y2^(-3)"));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(Expr::parse(""), lef::ParseError);
    CHECK_THROWS_AS(Expr::parse("1 + "), lef::ParseError);
    CHECK_THROWS_AS(Expr::parse("sin(x)"), lef::ParseError);   // unknown function
    CHECK_THROWS_AS(Expr::parse("(1 + 2"), lef::ParseError);
    CHECK_THROWS_AS(Expr::parse("1 ? 2"), lef::ParseError);
    try {
        Expr::parse("1 + @");
    } catch (const lef::ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 5);
    }
}

TEST_CASE("precedence") {
    CHECK(Expr::parse("2 + 3*4").eval(0, 0, 0) == 14.0);
    CHECK(Expr::parse("-2^2").eval(0, 0, 0) == -4.0);        // ^ binds tighter than unary -
    CHECK(Expr::parse("2^3^2").eval(0, 0, 0) == 512.0);      // right associative
    CHECK(Expr::parse("2^-2").eval(0, 0, 0) == 0.25);
    CHECK(Expr::parse("6/3/2").eval(0, 0, 0) == 1.0);
    CHECK(Expr::parse("1 - 2 - 3").eval(0, 0, 0) == -4.0);
}

TEST_CASE("print/parse round trip is structural identity") {
    for (const char* src : {
             "a*y1^2 + b*y1*y2",
             "-8*exp(y1) - 16*exp(-y2/2)",
             "y1/(l1+y1)",
             "-(y1*y2 + 7 + (y1-1)^2)",
             "(3+y2^2)*y1^5",
             "-(4*y1^(-2) + 1)*y2^(-3)",
             "1/sqrt(1+x^2)",
             "2^3^2",
             "x - (1 - y1) - 2",
             "6*(exp(y2/3)+4)*exp(2*y1/3)",
         }) {
        Expr a = Expr::parse(src);
        Expr b = Expr::parse(a.str());
        CHECK(a == b);
        CHECK(a.str() == b.str());
    }
}

TEST_CASE("scalar evaluation") {
    Bindings ab{{"a", 1.0}, {"b", 0.4}};
    CHECK(Expr::parse("a*y1^2 + b*y1*y2").eval(0.0, 1.0, 2.0, ab) ==
          doctest::Approx(1.8).epsilon(1e-15));
    // direct substitution into the quadratic pair at (y1, y2) = (2, 0)
    CHECK(Expr::parse("y1*y2 + 7 + (y1-1)^2").eval(0.0, 2.0, 0.0) == 8.0);
    CHECK(Expr::parse("3.5").eval(0.9, 1.0, 1.0) == 3.5);
    CHECK(Expr::parse("-2*ln(2)").eval(0, 0, 0) == doctest::Approx(-std::log(4.0)));
    CHECK(Expr::parse("1/sqrt(2)").eval(0, 0, 0) == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("domain errors identify the subexpression") {
    CHECK_THROWS_AS(Expr::parse("1/y1").eval(0, 0, 0), lef::EvalDomainError);
    CHECK_THROWS_AS(Expr::parse("ln(y1)").eval(0, -1, 0), lef::EvalDomainError);
    CHECK_THROWS_AS(Expr::parse("y1^(-2)").eval(0, 0, 0), lef::EvalDomainError);
    CHECK_THROWS_AS(Expr::parse("y1^(1/2)").eval(0, -4, 0), lef::EvalDomainError);
    CHECK_THROWS_AS(Expr::parse("sqrt(y1)").eval(0, -1, 0), lef::EvalDomainError);
    try {
        Expr::parse("1 + y2/(l1+y1)").eval(0, 1, 1, {{"l1", -1.0}});
        FAIL("expected domain error");
    } catch (const lef::EvalDomainError& e) {
        CHECK(e.subexpr == "y2/(l1 + y1)");
    }
    CHECK_THROWS_AS(Expr::parse("a*y1").eval(0, 1, 1), lef::UnboundParameter);
}
