#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riordan/eco.hpp"
#include "riordan/errors.hpp"
#include "riordan/exprlang.hpp"
#include "riordan/riordan.hpp"
#include "test_util.hpp"

using namespace riordan;
using testutil::Rng;

namespace {

// Degree-one-rooted Fibonacci tree: the root has one child, a label of
// the other kind has two. Encoded with unbounded alternating labels:
// even k -> (k)(k+1), odd k -> (k+1); the degree-one behaviour is the
// odd class, so the axiom label is 1.
SuccessionRule fib_tree_rule(int axiom, int window) {
    SuccessionRule r;
    r.axiom = axiom;
    r.window = window;
    for (int k = 0; k + 1 < window; ++k) {
        if (k % 2 == 0)
            r.productions[k] = {k, k + 1};
        else
            r.productions[k] = {k + 1};
    }
    return r;
}

}  // namespace

TEST_CASE("rule_levels: Fibonacci, constant, binary") {
    LevelsResult fib = rule_levels(fib_tree_rule(1, 32), 8);
    const long expect[] = {1, 1, 2, 3, 5, 8, 13, 21, 34};
    for (int i = 0; i <= 8; ++i) CHECK(fib.counts[static_cast<std::size_t>(i)] == expect[i]);

    SuccessionRule constant{0, {{0, {0}}}, 4};
    LevelsResult c = rule_levels(constant, 6);
    for (const auto& n : c.counts) CHECK(n == 1);

    SuccessionRule binary{0, {{0, {0, 0}}}, 4};
    LevelsResult b = rule_levels(binary, 10);
    long want = 1;
    for (const auto& n : b.counts) {
        CHECK(n == want);
        want *= 2;
    }

    SuccessionRule runaway{0, {{0, {0, 1}}, {1, {2}}}, 2};
    try {
        rule_levels(runaway, 5);
        FAIL("expected WindowOverflow");
    } catch (const WindowOverflow& e) {
        CHECK(e.label == 2);  // the offending label is reported
    }
}

TEST_CASE("rule_production: trivial, Fibonacci pattern") {
    SuccessionRule constant{0, {{0, {0}}}, 1};
    Mat p = rule_production(constant);
    CHECK(p.rows() == 1);
    CHECK(p.at(0, 0) == 1);

    Mat fp = rule_production(fib_tree_rule(0, 16));
    for (int k = 0; k + 1 < 16; ++k) {
        if (k % 2 == 0) {
            CHECK(fp.at(k, k) == 1);
            CHECK(fp.at(k, k + 1) == 1);
        } else {
            CHECK(fp.at(k, k) == 0);
            CHECK(fp.at(k, k + 1) == 1);
        }
    }
}

TEST_CASE("generate_from_production: Pascal, all-ones, Fibonacci-Stanley") {
    // bidiagonal Pascal production assembled from the A/Z extraction
    RiordanSpec pascal(eval_expr_string("1/(1-t)", 12), eval_expr_string("t/(1-t)", 12));
    Mat pp = riordan_production(pascal, 8);
    Mat rows = generate_from_production(pp, 5);
    Mat direct = build_riordan(pascal, 5);
    CHECK(rows.topleft(5, 5) == direct);

    Mat ones = generate_from_production(rule_production(SuccessionRule{0, {{0, {0}}}, 1}), 6);
    for (int i = 0; i < 6; ++i) CHECK(ones.at(i, 0) == 1);

    // Fibonacci-Stanley triangle from the even-axiom tree rule
    Mat fs = generate_from_production(rule_production(fib_tree_rule(0, 24)), 6);
    const long expect[6][6] = {
        {1, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0}, {1, 1, 1, 0, 0, 0},
        {1, 1, 2, 1, 0, 0}, {1, 1, 3, 2, 1, 0}, {1, 1, 4, 3, 3, 1},
    };
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(fs.at(i, j) == expect[i][j]);
    const long sums[] = {1, 2, 3, 5, 8, 13};
    for (int i = 0; i < 6; ++i) {
        Rational s = 0;
        for (int j = 0; j < fs.cols(); ++j) s += fs.at(i, j);
        CHECK(s == sums[i]);
    }
}

TEST_CASE("is_riordan_production: Pascal yes, Fibonacci tree no, zero degenerate") {
    RiordanSpec pascal(eval_expr_string("1/(1-t)", 12), eval_expr_string("t/(1-t)", 12));
    RiordanShapeVerdict v = is_riordan_production(riordan_production(pascal, 8));
    CHECK(v.shape);
    CHECK(v.nonneg);

    RiordanShapeVerdict f = is_riordan_production(rule_production(fib_tree_rule(0, 12)));
    CHECK(!f.shape);
    CHECK(f.nonneg);

    RiordanShapeVerdict z = is_riordan_production(Mat(5, 5));
    CHECK(z.shape);
    CHECK(z.nonneg);
}

TEST_CASE("levels agree with row sums of the generated matrix") {
    for (int axiom : {0, 1}) {
        SuccessionRule rule = fib_tree_rule(axiom, 24);
        LevelsResult lv = rule_levels(rule, 9);
        Mat m = generate_from_production(rule_production(rule), 10, [&] {
            std::vector<Rational> seed(24);
            seed[static_cast<std::size_t>(axiom)] = 1;
            return seed;
        }());
        for (int i = 0; i < 10; ++i) {
            Rational s = 0;
            for (int j = 0; j < m.cols(); ++j) s += m.at(i, j);
            CHECK(s == Rational(lv.counts[static_cast<std::size_t>(i)]));
        }
    }
}

TEST_CASE("Pascal antidiagonal sums are Fibonacci numbers") {
    RiordanSpec pascal(eval_expr_string("1/(1-t)", 12), eval_expr_string("t/(1-t)", 12));
    Mat m = build_riordan(pascal, 8);
    const long fib[] = {1, 1, 2, 3, 5, 8};
    for (int n = 0; n < 6; ++n) {
        Rational s = 0;
        for (int k = 0; n - k >= 0 && n - k < 8 && k <= n - k; ++k) s += m.at(n - k, k);
        CHECK(s == fib[n]);
    }
}

TEST_CASE("Riordan-shaped nonnegative P round-trips through the recovered array") {
    // arrays with nonnegative A/Z data
    RiordanSpec pascal(eval_expr_string("1/(1-t)", 14), eval_expr_string("t/(1-t)", 14));
    RiordanSpec catalanish(eval_expr_string("1/(1-t)", 14), eval_expr_string("t/(1-t)^2", 14));
    for (const RiordanSpec* s : {&pascal, &catalanish}) {
        Mat p = riordan_production(*s, 10);
        RiordanShapeVerdict v = is_riordan_production(p);
        CHECK(v.shape);
        RiordanSpec rec = riordan_from_production(p, s->g[0], 9);
        Mat from_p = generate_from_production(p, 8);
        Mat from_spec = build_riordan(rec, 8);
        CHECK(from_p.topleft(8, 8) == from_spec);
    }
}
