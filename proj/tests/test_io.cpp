#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riordan/errors.hpp"
#include "riordan/exprlang.hpp"
#include "riordan/io.hpp"
#include "test_util.hpp"

using namespace riordan;
using testutil::Rng;

TEST_CASE("series JSON round trip") {
    Rng rng(601);
    for (int it = 0; it < 20; ++it) {
        Series s = testutil::random_series(rng, 9, it % 2 ? Parity::Even : Parity::None);
        Series back = series_from_json(series_to_json(s));
        CHECK(back.trunc() == s.trunc());
        CHECK(back.parity() == s.parity());
        CHECK(agree(back, s));
    }
    Series half({testutil::rational(1, 2), testutil::rational(-3, 4)});
    Json j = series_to_json(half);
    CHECK(j["coeffs"][0] == "1/2");
    CHECK(j["coeffs"][1] == "-3/4");
}

TEST_CASE("matrix JSON: ragged lower-triangular and dense forms") {
    DoubleAlmostSpec spec(eval_expr_string("1/(1-t^4)", 10), eval_expr_string("1/(1-t^2)", 10),
                          eval_expr_string("t", 10), eval_expr_string("t/(1-t^2)", 10));
    Mat m = build_dar(spec, 8);
    Json j = mat_to_json(m);
    REQUIRE(j.contains("entries"));
    CHECK(j["entries"][3].size() == 4);  // ragged rows
    CHECK(mat_from_json(j) == m);

    Mat p(3, 4);
    p.at(0, 2) = 5;
    Json dj = mat_to_json(p);
    REQUIRE(dj.contains("dense"));
    CHECK(mat_from_json(dj) == p);

    // CSV: dense below the diagonal, empty cells above it
    std::string csv = mat_to_csv(Mat::identity(3));
    CHECK(csv == "1,,\n0,1,\n0,0,1\n");
}

TEST_CASE("spec JSON uses expression strings") {
    Json j{{"b", "1/(1-t^4)"}, {"g", "1/(1-t^2)"}, {"f1", "t"}, {"f2", "t/(1-t^2)"}};
    DoubleAlmostSpec spec = dar_spec_from_json(j, 12);
    CHECK(spec.b[4] == 1);
    CHECK(spec.f2[3] == 1);

    Json cj{{"compressed", true}, {"b", "1/(1-t^2)"}, {"g", "1/(1-t)"}, {"f1", "t"},
            {"f2", "t/(1-t)"}};
    CompressedSpec cs = compressed_spec_from_json(cj, 10);
    CHECK(cs.g_hat[5] == 1);
}

TEST_CASE("TP report JSON carries the witness") {
    TPReport rep;
    rep.verdict = TPReport::Verdict::not_tp;
    rep.n = 5;
    rep.max_order = 3;
    rep.witness = TPWitness{{1, 2, 3}, {0, 1, 2}, Rational(-1)};
    Json j = tp_report_to_json(rep);
    CHECK(j["verdict"] == "not_tp");
    CHECK(j["witness"]["det"] == "-1");
    CHECK(j["witness"]["rows"][0] == 1);

    TPReport ok;
    ok.verdict = TPReport::Verdict::tp;
    CHECK(tp_report_to_json(ok)["witness"].is_null());
}

TEST_CASE("succession rule JSON") {
    Json j{{"axiom", 0}, {"productions", {{"0", {0, 1}}, {"1", {2}}}}, {"window", 16}};
    SuccessionRule rule = rule_from_json(j);
    CHECK(rule.axiom == 0);
    CHECK(rule.window == 16);
    CHECK(rule.productions.at(0) == std::vector<int>{0, 1});
    CHECK(rule.productions.at(1) == std::vector<int>{2});
}
