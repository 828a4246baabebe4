#include <doctest.h>

#include <cmath>
#include <random>

#include "lef/series.hpp"

using lef::Bindings;
using lef::Expr;
using lef::GridFn;
using lef::QSeries;

namespace {

QSeries series_of(std::vector<GridFn> coeffs, int order) {
    return QSeries(std::move(coeffs), order);
}

}  // namespace

TEST_CASE("leading coefficient is a plain evaluation") {
    const int N = 32;
    GridFn y10 = GridFn::constant(1.0, N), y20 = GridFn::constant(2.0, N);
    QSeries y1 = QSeries::from_grid(y10, 3), y2 = QSeries::from_grid(y20, 3);
    Expr f = Expr::parse("a*y1^2 + b*y1*y2");
    Bindings prm{{"a", 1.0}, {"b", 0.4}};
    QSeries s = eval_series(f, y1, y2, 3, prm);
    CHECK(s.coeff(0).eval(0.5) == doctest::Approx(1.8).epsilon(1e-15));
    for (int k = 1; k <= 3; ++k) CHECK(s.coeff(k).node_max_abs() == 0.0);
}

TEST_CASE("first-order coefficients: product rule") {
    const int N = 32;
    GridFn u = GridFn::sample([](double x) { return x; }, N);
    GridFn v = GridFn::sample([](double x) { return 1.0 - x; }, N);
    QSeries y1 = series_of({GridFn::constant(1.0, N), u}, 1);
    QSeries y2 = series_of({GridFn::constant(2.0, N), v}, 1);
    QSeries s = eval_series(Expr::parse("y1*y2"), y1, y2, 1);
    CHECK(s.coeff(0).eval(0.3) == doctest::Approx(2.0));
    // H_1 = v + 2u
    GridFn want = v + u.scaled(2.0);
    CHECK((s.coeff(1) - want).node_max_abs() < 1e-14);

    QSeries sq = eval_series(Expr::parse("y1^2"), y1, y2, 1);
    CHECK((sq.coeff(1) - u.scaled(2.0)).node_max_abs() < 1e-14);  // 2 y0 y1 with y0 = 1
}

TEST_CASE("exp jet recurrence") {
    const int N = 32;
    GridFn x2 = GridFn::sample([](double x) { return x * x; }, N);
    QSeries y1 = series_of({GridFn::constant(0.0, N), x2}, 2);
    QSeries y2 = QSeries::constant(0.0, 2, N);
    QSeries s = eval_series(Expr::parse("exp(y1)"), y1, y2, 2);
    CHECK((s.coeff(0) - GridFn::constant(1.0, N)).node_max_abs() < 1e-15);
    CHECK((s.coeff(1) - x2).node_max_abs() < 1e-15);
    CHECK((s.coeff(2) - (x2 * x2).scaled(0.5)).node_max_abs() < 1e-14);
}

TEST_CASE("series identities") {
    const int N = 32;
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> uni(-0.4, 0.4);
    std::vector<GridFn> coeffs;
    coeffs.push_back(GridFn::constant(2.0, N));
    for (int k = 1; k <= 4; ++k) {
        const double a = uni(rng), b = uni(rng);
        coeffs.push_back(GridFn::sample([&](double x) { return a + b * x * x; }, N));
    }
    QSeries u = series_of(coeffs, 4);

    SUBCASE("exp(ln u) = u") {
        QSeries w = u.ln_().exp_();
        for (int k = 0; k <= 4; ++k)
            CHECK((w.coeff(k) - u.coeff(k)).node_max_abs() < 1e-9);
    }
    SUBCASE("(u^2)/u = u") {
        QSeries w = (u * u) / u;
        for (int k = 0; k <= 4; ++k)
            CHECK((w.coeff(k) - u.coeff(k)).node_max_abs() < 1e-9);
    }
    SUBCASE("power recurrence matches repeated product") {
        QSeries via_pow = u.pow_(3.0);
        QSeries via_mul = u * u * u;
        for (int k = 0; k <= 4; ++k)
            CHECK((via_pow.coeff(k) - via_mul.coeff(k)).node_max_abs() < 1e-10);
    }
    SUBCASE("negative power inverts") {
        QSeries w = u.pow_(-2.0) * u * u;
        CHECK((w.coeff(0) - GridFn::constant(1.0, N)).node_max_abs() < 1e-10);
        for (int k = 1; k <= 4; ++k) CHECK(w.coeff(k).node_max_abs() < 1e-9);
    }
}

TEST_CASE("degenerate leading coefficients are rejected") {
    const int N = 32;
    QSeries zero_led = series_of({GridFn::constant(0.0, N), GridFn::constant(1.0, N)}, 1);
    QSeries one = QSeries::constant(1.0, 1, N);
    CHECK_THROWS_AS(one / zero_led, lef::EvalDomainError);
    CHECK_THROWS_AS(zero_led.ln_(), lef::EvalDomainError);
    CHECK_THROWS_AS(zero_led.pow_(-1.0), lef::EvalDomainError);
    CHECK_THROWS_AS(zero_led.pow_(0.5), lef::EvalDomainError);
    CHECK_NOTHROW(zero_led.pow_(2.0));  // plain powers stay legal
}

TEST_CASE("classical decomposition polynomials for f(y) = y^2") {
    // brute-force expansion of (y0 + y1 q + y2 q^2 + y3 q^3 + y4 q^4)^2
    const int N = 16;
    std::vector<GridFn> terms;
    std::vector<std::vector<double>> mono = {
        {1.0, 0.0}, {0.5, -0.5}, {0.0, 0.25}, {-0.125, 0.0}, {0.03, 0.01}};
    for (auto& m : mono)
        terms.push_back(GridFn::sample([&](double x) { return m[0] + m[1] * x * x; }, N));
    QSeries y1 = series_of(terms, 4);
    QSeries s = eval_series(Expr::parse("y1^2"), y1, QSeries::constant(0.0, 4, N), 4);
    for (int k = 0; k <= 4; ++k) {
        GridFn adomian = GridFn::constant(0.0, N);
        for (int i = 0; i <= k; ++i) adomian += terms[i] * terms[k - i];
        CHECK((s.coeff(k) - adomian).node_max_abs() < 1e-13);
    }
}

TEST_CASE("Taylor consistency of the jet against direct evaluation") {
    const int N = 32;
    const int m = 4;
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> uq(-0.1, 0.1);
    std::uniform_real_distribution<double> uc(-0.3, 0.3);

    Expr f = Expr::parse("exp(y1)/(2+y2) + y1*y2");
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<GridFn> t1, t2;
        t1.push_back(GridFn::constant(0.5, N));
        t2.push_back(GridFn::constant(1.0, N));
        for (int k = 1; k <= m + 2; ++k) {
            const double a = uc(rng), b = uc(rng);
            t1.push_back(GridFn::sample([&](double x) { return a * (1 - x * x); }, N));
            t2.push_back(GridFn::sample([&](double x) { return b * (1 - x); }, N));
        }
        QSeries y1 = series_of(t1, m + 2), y2 = series_of(t2, m + 2);
        QSeries jet = eval_series(f, y1, y2, m + 2);
        const double q0 = uq(rng);

        GridFn partial = GridFn::constant(0.0, N);
        for (int k = m; k >= 0; --k) partial = partial.scaled(q0) + jet.coeff(k);

        GridFn direct = eval_grid(f, y1.at(q0), y2.at(q0));
        const double remainder = (partial - direct).node_max_abs();
        const double scale = jet.coeff(m + 1).node_max_abs() + jet.coeff(m + 2).node_max_abs();
        const double bound = 3.0 * std::max(scale, 1e-6) * std::pow(std::abs(q0), m + 1) + 1e-13;
        CHECK(remainder <= bound);
    }
}

TEST_CASE("partial sums evaluate by Horner in q") {
    const int N = 16;
    QSeries s = series_of({GridFn::constant(1.0, N), GridFn::constant(2.0, N),
                           GridFn::constant(3.0, N)}, 2);
    CHECK(s.at(0.5).eval(0.3) == doctest::Approx(1.0 + 1.0 + 0.75));
}
