#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jstab/lp.hpp"
#include "support.hpp"

using namespace jstab;
using testing_support::rand_rat;

TEST_CASE("rational parsing and printing") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational(" -3 ")) == "-3/1");
    CHECK(to_string(parse_rational("0")) == "0/1");
    CHECK(to_string(parse_rational("4/-6")) == "-2/3");
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("abc"), InputError);
    CHECK_THROWS_AS(parse_rational("1.5"), InputError);
    CHECK(is_integral(Rational(8, 4)));
    CHECK_FALSE(is_integral(Rational(1, 3)));
    CHECK(lcm(Integer(4), Integer(6)) == 12);
    CHECK(binom(5, 2) == 10);
    CHECK(binom(3, 4) == 0);
    CHECK(factorial(5) == 120);
}

TEST_CASE("vector helpers") {
    RVec a{1, 2}, b{Rational(1, 2), -1};
    CHECK(dot(a, b) == Rational(-3, 2));
    CHECK((a + b) == RVec{Rational(3, 2), 1});
    CHECK(is_zero(a - a));
    CHECK((Rational(2) * b) == RVec{1, -2});
}

TEST_CASE("textbook LP") {
    LinearProgram lp(2);
    lp.add({1, 2}, Sense::LE, 4);
    lp.add({3, 1}, Sense::LE, 6);
    lp.objective = {1, 1};
    LPResult r = solve(lp);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.value == Rational(14, 5));
    CHECK(r.x == RVec{Rational(8, 5), Rational(6, 5)});
}

TEST_CASE("infeasible, unbounded, free and equality rows") {
    LinearProgram bad(1);
    bad.add({1}, Sense::GE, 2);
    bad.add({1}, Sense::LE, 1);
    CHECK(solve(bad).status == LPStatus::Infeasible);
    CHECK_FALSE(feasible(bad));

    LinearProgram open(1);
    open.add({1}, Sense::GE, 1);
    open.objective = {1};
    CHECK(solve(open).status == LPStatus::Unbounded);

    LinearProgram fr(2);
    fr.is_free = {true, false};
    fr.add({1, 1}, Sense::EQ, -3);
    fr.add({0, 1}, Sense::LE, 2);
    fr.objective = {-1, 0};
    LPResult r = solve(fr);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.x[0] == -5);
    CHECK(r.value == 5);

    // duplicated equality row is redundant
    LinearProgram red(2);
    red.add({1, 1}, Sense::EQ, 1);
    red.add({2, 2}, Sense::EQ, 2);
    red.objective = {1, 0};
    r = solve(red);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.value == 1);
}

TEST_CASE("strong duality on random bounded programs") {
    std::mt19937 g(7);
    for (int trial = 0; trial < 60; ++trial) {
        int m = 3, n = 3;
        std::vector<RVec> A(m, RVec(n));
        RVec b(m), c(n);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) A[i][j] = rand_rat(g, 0, 4);
            A[i][i] += 1;
            b[i] = rand_rat(g, 1, 5);
        }
        for (int j = 0; j < n; ++j) c[j] = rand_rat(g, -2, 3);
        // max c.x, Ax <= b, x >= 0   vs   min b.y, A^T y >= c, y >= 0
        LinearProgram p(n);
        for (int i = 0; i < m; ++i) p.add(A[i], Sense::LE, b[i]);
        p.objective = c;
        LinearProgram d(m);
        for (int j = 0; j < n; ++j) {
            RVec col(m);
            for (int i = 0; i < m; ++i) col[i] = A[i][j];
            d.add(col, Sense::GE, c[j]);
        }
        d.objective = -b;
        LPResult rp = solve(p), rd = solve(d);
        REQUIRE(rp.status == LPStatus::Optimal);
        REQUIRE(rd.status == LPStatus::Optimal);
        CHECK(rp.value == -rd.value);
        for (int i = 0; i < m; ++i) CHECK(dot(A[i], rp.x) <= b[i]);
        CHECK(dot(c, rp.x) == rp.value);
    }
}
