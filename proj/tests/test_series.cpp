#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "riordan/errors.hpp"
#include "riordan/series.hpp"
#include "test_util.hpp"

using namespace riordan;
using testutil::Rng;
using testutil::series_i;

namespace {

Series geometric(int trunc) {  // 1/(1-t)
    std::vector<Rational> c(static_cast<std::size_t>(trunc) + 1, Rational(1));
    return Series(std::move(c));
}

Series expand(const std::vector<long>& num, const std::vector<long>& den, int trunc,
              Parity p = Parity::None) {
    Series n = series_i(num).restricted(std::min<int>(trunc, (int)num.size() - 1));
    // pad numerator/denominator to trunc by embedding into zero series
    std::vector<Rational> nc(static_cast<std::size_t>(trunc) + 1);
    for (std::size_t i = 0; i < num.size() && i <= static_cast<std::size_t>(trunc); ++i)
        nc[i] = Rational(num[i]);
    std::vector<Rational> dc(static_cast<std::size_t>(trunc) + 1);
    for (std::size_t i = 0; i < den.size() && i <= static_cast<std::size_t>(trunc); ++i)
        dc[i] = Rational(den[i]);
    Series q = div(Series(std::move(nc)), Series(std::move(dc)));
    return p == Parity::None ? q : q.retagged(p);
}

}  // namespace

TEST_CASE("add: cancellation, identity, coefficientwise") {
    Series a = series_i({1, 1});
    Series b = series_i({1, -1});
    Series sum = add(a, b);
    CHECK(sum[0] == 2);
    CHECK(sum[1] == 0);

    Rng rng(7);
    Series s = testutil::random_series(rng, 9);
    CHECK(agree(add(Series::zero(9), s), s));

    Series u = series_i({1, 0, 1}, Parity::Even);
    Series v = series_i({0, 0, 3, 0, 1}, Parity::Even);
    Series w = add(u, v);
    CHECK(w.trunc() == 2);
    CHECK(w[0] == 1);
    CHECK(w[2] == 4);
    CHECK(w.parity() == Parity::Even);
}

TEST_CASE("mul: geometric products and commutativity") {
    int N = 12;
    // t * t/(1-t^2) = t^2 + t^4 + ...
    Series f2 = expand({0, 1}, {1, 0, -1}, N, Parity::Odd);
    Series p = mul(Series::t(N), f2);
    for (int k = 0; k <= N; ++k) CHECK(p[k] == ((k >= 2 && k % 2 == 0) ? 1 : 0));
    CHECK(p.parity() == Parity::Even);
    CHECK(p.order() == 4 - 2);

    Rng rng(11);
    for (int it = 0; it < 200; ++it) {
        Series a = testutil::random_series(rng, 16);
        Series b = testutil::random_series(rng, 16);
        CHECK(agree(mul(a, b), mul(b, a)));
    }
}

TEST_CASE("div: monomials, exact cancellation, geometric-type expansion") {
    int N = 10;
    Series num = series_i({0, 0, 1, 0, 1});  // t^2 + t^4
    Series q = div(num, Series::t(4));
    CHECK(q.trunc() == 3);
    CHECK(q[1] == 1);
    CHECK(q[3] == 1);
    CHECK(q[0] == 0);

    // tg/f2 with g = 1/(1-t^2), f2 = t/(1-t^2): exactly 1
    Series g = expand({1}, {1, 0, -1}, N, Parity::Even);
    Series f2 = expand({0, 1}, {1, 0, -1}, N, Parity::Odd);
    Series r = div(mul(Series::t(N), g), f2);
    CHECK(r[0] == 1);
    for (int k = 1; k <= r.trunc(); ++k) CHECK(r[k] == 0);

    // 1/(1+2t^2) = 1 - 2t^2 + 4t^4 - 8t^6 + ...
    Series s = expand({1}, {1, 0, 2}, N);
    long expect = 1;
    for (int k = 0; k <= N; k += 2) {
        CHECK(s[k] == expect);
        expect *= -2;
    }

    CHECK_THROWS_AS(div(Series::one(4), Series::t(4)), OrderError);
    CHECK_THROWS_AS(div(Series::t(4), Series::zero(4)), ZeroDivisor);
}

TEST_CASE("compose: identity inner, closed form, degree doubling") {
    int N = 10;
    Rng rng(3);
    Series s = testutil::random_series(rng, N);
    CHECK(agree(compose(s, Series::t(N)), s));

    // 1/(1-t) o t/(1-t) = (1-t)/(1-2t) = 1 + t + 2t^2 + 4t^3 + ...
    Series outer = geometric(N);
    Series inner = expand({0, 1}, {1, -1}, N);
    Series c = compose(outer, inner);
    CHECK(c[0] == 1);
    long expect = 1;
    for (int k = 1; k <= N; ++k) {
        CHECK(c[k] == expect);
        expect *= 2;
    }

    Series doubled = compose(geometric(N), Series::monomial(1, 2, N));
    for (int k = 0; k <= N; ++k) CHECK(doubled[k] == (k % 2 == 0 ? 1 : 0));

    CHECK_THROWS_AS(compose(geometric(4), Series::one(4)), OrderError);
}

TEST_CASE("comp_inverse: identity, moebius-type, and involution") {
    int N = 12;
    CHECK(agree(comp_inverse(Series::t(N)), Series::t(N)));

    Series f = expand({0, 1}, {1, -1}, N);  // t/(1-t)
    Series fbar = comp_inverse(f);
    Series expect = expand({0, 1}, {1, 1}, N);  // t/(1+t)
    CHECK(agree(fbar, expect));
    CHECK(agree(compose(f, fbar), Series::t(N)));
    CHECK(agree(compose(fbar, f), Series::t(N)));

    Rng rng(5);
    for (int it = 0; it < 20; ++it) {
        Series g = testutil::random_order1(rng, 10);
        CHECK(agree(comp_inverse(comp_inverse(g)), g));
    }

    CHECK_THROWS_AS(comp_inverse(Series::monomial(1, 2, 6)), OrderError);
}

TEST_CASE("hat: degree halving on both parities") {
    int N = 12;
    Series b = expand({1}, {1, 0, 0, 0, -1}, N, Parity::Even);      // 1/(1-t^4)
    Series bh = hat(b);
    Series expect_even = expand({1}, {1, 0, -1}, bh.trunc());        // 1/(1-t^2)
    CHECK(agree(bh, expect_even));

    Series f = expand({0, 1}, {1, 0, -1}, N, Parity::Odd);           // t/(1-t^2)
    Series fh = hat(f);
    Series expect_odd = expand({0, 1}, {1, -1}, fh.trunc());         // t/(1-t)
    CHECK(agree(fh, expect_odd));
    CHECK(fh.trunc() == (N + 1) / 2);

    CHECK(agree(hat(Series::t(5)), Series::t(3)));

    Series mixed = series_i({1, 1});
    CHECK_THROWS_AS(hat(mixed), ParityError);
}

TEST_CASE("unhat: zero interleaving and round trips") {
    int N = 6;
    Series gh = expand({1}, {1, 0, -1}, N);  // 1/(1-t^2)
    Series g = unhat(gh, Parity::Even);
    Series expect = expand({1}, {1, 0, 0, 0, -1}, g.trunc(), Parity::Even);  // 1/(1-t^4)
    CHECK(agree(g, expect));
    CHECK(g.parity() == Parity::Even);

    CHECK(agree(unhat(Series::t(4), Parity::Odd), Series::t(8)));
    CHECK_THROWS_AS(unhat(Series::one(4), Parity::Odd), OrderError);

    Rng rng(13);
    for (int it = 0; it < 100; ++it) {
        Series s = testutil::random_series(rng, 9);
        CHECK(agree(hat(unhat(s, Parity::Even)), s));
        std::vector<Rational> c = s.coeffs();
        c[0] = 0;
        Series s1(std::move(c));
        CHECK(agree(hat(unhat(s1, Parity::Odd)), s1));
    }
}

TEST_CASE("subst_sqrt_even: polynomial case and constant case") {
    int N = 12;
    Rng rng(17);
    Series s = mul(testutil::random_odd_mult(rng, N), testutil::random_odd_mult(rng, N));

    Series a = series_i({1, 0, 1}, Parity::Even);  // 1 + t^2 -> 1 + s
    std::vector<Rational> padded(static_cast<std::size_t>(N) + 1);
    padded[0] = 1;
    padded[2] = 1;
    Series a_pad(std::move(padded), Parity::Even);
    Series r = subst_sqrt_even(a_pad, s);
    CHECK(agree(r, add(Series::one(s.trunc()), s)));

    // constant even series stays constant
    Series one_sub = subst_sqrt_even(Series::one(N), s);
    CHECK(one_sub[0] == 1);
    for (int k = 1; k <= one_sub.trunc(); ++k) CHECK(one_sub[k] == 0);

    CHECK_THROWS_AS(subst_sqrt_even(Series::t(6), s), ParityError);
}

TEST_CASE("subst_sqrt_even agrees with a floating-point sqrt composition") {
    // Shadow oracle: compute a(sqrt(s)) with double-precision series and
    // compare against the exact kernel at trunc 12, tolerance 1e-9.
    int N = 12;
    Rng rng(19);
    // s of order 2 with positive leading coefficient so sqrt(s)/t is real.
    std::vector<Rational> sc(static_cast<std::size_t>(N) + 1);
    sc[2] = Rational(9, 4);
    for (int k = 3; k <= N; ++k) sc[static_cast<std::size_t>(k)] = testutil::random_rational(rng);
    Series s(std::move(sc));
    Series a = testutil::random_series(rng, N, Parity::Even);

    // sqrt(s) = t * v where v^2 = s/t^2, solved over doubles.
    std::vector<double> u(static_cast<std::size_t>(N) + 1, 0.0);
    for (int k = 0; k + 2 <= N; ++k) u[static_cast<std::size_t>(k)] = rat_double(s[k + 2]);
    std::vector<double> v(static_cast<std::size_t>(N) + 1, 0.0);
    v[0] = std::sqrt(u[0]);
    for (int n = 1; n <= N; ++n) {
        double acc = u[static_cast<std::size_t>(n)];
        for (int i = 1; i < n; ++i) acc -= v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(n - i)];
        v[static_cast<std::size_t>(n)] = acc / (2 * v[0]);
    }
    std::vector<double> sq(static_cast<std::size_t>(N) + 1, 0.0);  // sqrt(s): shift v by one degree
    for (int k = 0; k + 1 <= N; ++k) sq[static_cast<std::size_t>(k + 1)] = v[static_cast<std::size_t>(k)];

    // double-precision composition a(sq) by Horner
    std::vector<double> acc(static_cast<std::size_t>(N) + 1, 0.0);
    acc[0] = rat_double(a[N]);
    for (int j = N - 1; j >= 0; --j) {
        std::vector<double> next(static_cast<std::size_t>(N) + 1, 0.0);
        for (int i = 0; i <= N; ++i) {
            if (acc[static_cast<std::size_t>(i)] == 0.0) continue;
            for (int k = 1; i + k <= N; ++k)
                next[static_cast<std::size_t>(i + k)] +=
                    acc[static_cast<std::size_t>(i)] * sq[static_cast<std::size_t>(k)];
        }
        next[0] += rat_double(a[j]);
        acc = next;
    }

    Series exact = subst_sqrt_even(a, s);
    for (int k = 0; k <= exact.trunc(); ++k) {
        double want = acc[static_cast<std::size_t>(k)];
        double got = rat_double(exact[k]);
        CHECK(std::abs(want - got) <= 1e-9 * (1.0 + std::abs(want)));
    }
}

TEST_CASE("twisted_odd_subst: collapse cases and product identity") {
    int N = 12;
    Rng rng(23);
    Series f1 = testutil::random_odd_mult(rng, N);
    Series f2 = testutil::random_odd_mult(rng, N);
    Series s = mul(f1, f2);

    // h = t keeps the multiplier unchanged
    CHECK(agree(twisted_odd_subst(Series::t(N), f1, s), f1.restricted(s.trunc())));

    // s = t^2 collapses to plain composition
    Series h = expand({0, 1}, {1, 0, -1}, N, Parity::Odd);  // t/(1-t^2)
    Series collapsed = twisted_odd_subst(h, Series::t(N), Series::monomial(1, 2, N));
    CHECK(agree(collapsed, h.restricted(collapsed.trunc())));

    // the two twisted substitutions at h = k = t multiply to f1*f2
    Series left = twisted_odd_subst(Series::t(N), f1, s);
    Series right = twisted_odd_subst(Series::t(N), f2, s);
    CHECK(agree(mul(left, right), s));

    CHECK_THROWS_AS(twisted_odd_subst(Series::one(N), f1, s), ParityError);
}

TEST_CASE("qbar: identity pair and the closed-form pair") {
    int N = 14;
    QBundle idb = qbar(Series::t(N), Series::t(N));
    CHECK(agree(idb.s_hat, Series::t(idb.s_hat.trunc())));
    CHECK(agree(idb.r, Series::t(idb.r.trunc())));
    CHECK(agree(idb.q, Series::monomial(1, 2, idb.q.trunc())));

    Series f1 = Series::t(N);
    Series f2 = expand({0, 1}, {1, 0, -1}, N, Parity::Odd);
    QBundle qb = qbar(f1, f2);
    CHECK(agree(qb.s_hat, expand({0, 1}, {1, -1}, qb.s_hat.trunc())));
    CHECK(agree(qb.r, expand({0, 1}, {1, 1}, qb.r.trunc())));
    CHECK(agree(qb.q, expand({0, 0, 1}, {1, 0, 1}, qb.q.trunc())));
}

TEST_CASE("qbar: defining functional equation q*S(q) = t^2 on random pairs") {
    int N = 20;
    Rng rng(29);
    for (int it = 0; it < 12; ++it) {
        Series f1 = testutil::random_odd_mult(rng, N);
        Series f2 = testutil::random_odd_mult(rng, N);
        QBundle qb = qbar(f1, f2);
        // f1*f2 = t^2 S(t^2) with S = s_hat/x; check q*S(q) == t^2.
        Series S = div(qb.s_hat, Series::t(qb.s_hat.trunc()));
        Series lhs = mul(qb.q, compose(S, qb.q));
        CHECK(lhs.trunc() >= 6);
        CHECK(agree(lhs, Series::monomial(1, 2, lhs.trunc())));
    }
}

TEST_CASE("ring axioms hold exactly on random triples") {
    Rng rng(31);
    for (int it = 0; it < 40; ++it) {
        Series a = testutil::random_series(rng, 16);
        Series b = testutil::random_series(rng, 16);
        Series c = testutil::random_series(rng, 16);
        CHECK(agree(mul(mul(a, b), c), mul(a, mul(b, c))));
        CHECK(agree(mul(a, add(b, c)), add(mul(a, b), mul(a, c))));
        CHECK(agree(add(add(a, b), c), add(a, add(b, c))));
    }
}

TEST_CASE("compose is associative for order >= 1 inners") {
    Rng rng(37);
    for (int it = 0; it < 20; ++it) {
        Series a = testutil::random_series(rng, 12);
        Series b = testutil::random_order1(rng, 12);
        Series c = testutil::random_order1(rng, 12);
        CHECK(agree(compose(compose(a, b), c), compose(a, compose(b, c))));
    }
}

TEST_CASE("subst_sqrt_even at s = t^2 is the identity on even series") {
    Rng rng(41);
    for (int it = 0; it < 20; ++it) {
        Series a = testutil::random_series(rng, 14, Parity::Even);
        Series r = subst_sqrt_even(a, Series::monomial(1, 2, 14));
        CHECK(agree(r, a.restricted(r.trunc())));
    }
}

TEST_CASE("no truncation leakage: recomputing longer and restricting matches") {
    Rng rng(43);
    for (int it = 0; it < 10; ++it) {
        int N = 8;
        Series a_long = testutil::random_series(rng, 2 * N);
        Series b_long = testutil::random_order1(rng, 2 * N);
        Series a = a_long.restricted(N);
        Series b = b_long.restricted(N);

        CHECK(agree(mul(a_long, b_long).restricted(N), mul(a, b)));
        CHECK(agree(compose(a_long, b_long).restricted(N), compose(a, b)));
        CHECK(agree(comp_inverse(b_long).restricted(N), comp_inverse(b)));
        Series u_long = testutil::random_even_unit(rng, 2 * N);
        CHECK(agree(div(a_long, u_long).restricted(N), div(a, u_long.restricted(N))));
    }
}
