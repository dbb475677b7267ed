#include "riordan/selftest.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "riordan/compress.hpp"
#include "riordan/double_riordan.hpp"
#include "riordan/eco.hpp"
#include "riordan/errors.hpp"
#include "riordan/exprlang.hpp"
#include "riordan/riordan.hpp"
#include "riordan/tp.hpp"

namespace riordan {

namespace {

DoubleAlmostSpec fixture_dar(int trunc) {
    return DoubleAlmostSpec(
        eval_expr_string("1/(1-t^4)", trunc), eval_expr_string("1/(1-t^2)", trunc),
        eval_expr_string("t", trunc), eval_expr_string("t/(1-t^2)", trunc));
}

struct Check {
    bool ok = true;
    std::ostringstream problems;
    int passed = 0;

    void expect(bool cond, const std::string& what) {
        if (cond) {
            ++passed;
            return;
        }
        if (!ok) problems << "; ";
        ok = false;
        problems << what;
    }
};

// ---- deterministic random spec pool shared by criteria 7 and 8 ----

using Rng = std::mt19937_64;

Rational rnd_rational(Rng& rng) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

Rational rnd_nonzero(Rng& rng) {
    std::uniform_int_distribution<int> mag(1, 3), sign(0, 1);
    Rational q(mag(rng));
    return sign(rng) ? q : -q;
}

Series rnd_even_unit(Rng& rng, int trunc) {
    std::vector<Rational> c(static_cast<std::size_t>(trunc) + 1);
    c[0] = rnd_nonzero(rng);
    for (int k = 2; k <= trunc; k += 2) c[static_cast<std::size_t>(k)] = rnd_rational(rng);
    return Series(std::move(c), Parity::Even);
}

Series rnd_odd_mult(Rng& rng, int trunc) {
    std::vector<Rational> c(static_cast<std::size_t>(trunc) + 1);
    c[1] = rnd_nonzero(rng);
    for (int k = 3; k <= trunc; k += 2) c[static_cast<std::size_t>(k)] = rnd_rational(rng);
    return Series(std::move(c), Parity::Odd);
}

std::vector<DoubleAlmostSpec> random_spec_pool(int count, int trunc) {
    Rng rng(20250810);
    std::vector<DoubleAlmostSpec> pool;
    pool.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        pool.emplace_back(rnd_even_unit(rng, trunc), rnd_even_unit(rng, trunc),
                          rnd_odd_mult(rng, trunc), rnd_odd_mult(rng, trunc));
    return pool;
}

bool specs_prefix_equal(const DoubleAlmostSpec& a, const DoubleAlmostSpec& b, int floor_len) {
    auto comp = [&](const Series& x, const Series& y) {
        int upto = std::min(x.trunc(), y.trunc());
        return upto >= floor_len && prefix_eq(x, y, upto);
    };
    return comp(a.b, b.b) && comp(a.g, b.g) && comp(a.f1, b.f1) && comp(a.f2, b.f2);
}

// ---- criteria ----

CriterionResult criterion_matrix_golden() {
    Check c;
    const long expect[10][10] = {
        {1, 0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 1, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 1, 0, 0, 0, 0, 0, 0},
        {1, 0, 1, 0, 1, 0, 0, 0, 0, 0}, {0, 1, 0, 2, 0, 1, 0, 0, 0, 0},
        {0, 0, 1, 0, 2, 0, 1, 0, 0, 0}, {0, 1, 0, 3, 0, 3, 0, 1, 0, 0},
        {1, 0, 1, 0, 3, 0, 3, 0, 1, 0}, {0, 1, 0, 4, 0, 6, 0, 4, 0, 1},
    };
    Mat m = build_dar(fixture_dar(9), 10);
    bool all = true;
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j)
            if (m.at(i, j) != expect[i][j]) all = false;
    c.expect(all, "10x10 truncation differs from the printed rows");
    return {"dar-build-golden", c.ok, 0.0, c.ok ? "100 entries exact" : c.problems.str()};
}

CriterionResult criterion_seqchar_golden() {
    Check c;
    DarSeqChar sc = dar_seqchar(fixture_dar(26));
    const long a[] = {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0};
    const long z1[] = {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
    const long z2[] = {1, 0, 1, 0, -1, 0, 2, 0, -4, 0, 8};
    const long w[] = {0, 0, 1, 0, -1, 0, 2, 0, -4, 0, 8};
    c.expect(sc.A.trunc() >= 10 && sc.Z1.trunc() >= 10 && sc.Z2.trunc() >= 10 &&
                 sc.W.trunc() >= 10,
             "sequences not certified through degree 10");
    if (c.ok)
        for (int k = 0; k <= 10; ++k) {
            c.expect(sc.A[k] == a[k], "A coefficient " + std::to_string(k));
            c.expect(sc.Z1[k] == z1[k], "Z1 coefficient " + std::to_string(k));
            c.expect(sc.Z2[k] == z2[k], "Z2 coefficient " + std::to_string(k));
            c.expect(sc.W[k] == w[k], "W coefficient " + std::to_string(k));
        }
    return {"dar-seqchar-golden", c.ok, 0.0,
            c.ok ? "A, Z1, Z2, W exact through degree 10" : c.problems.str()};
}

CriterionResult criterion_production_golden() {
    Check c;
    DoubleAlmostSpec spec40 = fixture_dar(44);
    Mat p = dar_production(spec40, 16);
    DarSeqChar sc = dar_seqchar(spec40);
    for (int i = 0; i < 16; ++i) {
        c.expect(p.at(i, 0) == sc.W[i], "column 0 must carry W");
        c.expect(p.at(i, 2) == sc.Z2[i], "column 2 must carry Z2");
        c.expect(p.at(i, 1) == (i >= 1 ? sc.Z1[i - 1] : Rational(0)), "column 1 must carry tZ1");
        for (int j = 3; j < 16; ++j)
            c.expect(p.at(i, j) == (i - j + 2 >= 0 ? sc.A[i - j + 2] : Rational(0)),
                     "columns 3+ must carry the shifted A pattern");
    }
    // frozen prefix of the printed production matrix
    const long col0[] = {0, 0, 1, 0, -1, 0, 2, 0, -4, 0};
    const long col2[] = {1, 0, 1, 0, -1, 0, 2, 0, -4, 0};
    for (int i = 0; i < 10; ++i) {
        c.expect(p.at(i, 0) == col0[i], "printed column 0 prefix");
        c.expect(p.at(i, 2) == col2[i], "printed column 2 prefix");
    }
    Mat d = build_dar(fixture_dar(15), 16);
    c.expect(production_shift_holds(d, p, 2), "(D*P)[i][j] == D[i+2][j] at n=16");
    return {"dar-production-golden", c.ok, 0.0,
            c.ok ? "columns and two-row shift identity exact at n=16" : c.problems.str()};
}

CriterionResult criterion_compression_goldens() {
    Check c;
    DoubleSpec fs(eval_expr_string("1/(1-t^2)", 12), eval_expr_string("t", 12),
                  eval_expr_string("t/(1-t^2)", 12));
    Mat comp = compress_matrix(build_double(fs, 13));
    const long rows[7][7] = {
        {1, 0, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0, 0}, {1, 1, 1, 0, 0, 0, 0},
        {1, 1, 2, 1, 0, 0, 0}, {1, 1, 3, 2, 1, 0, 0}, {1, 1, 4, 3, 3, 1, 0},
        {1, 1, 5, 4, 6, 3, 1},
    };
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            c.expect(comp.at(i, j) == rows[i][j], "compressed row " + std::to_string(i));
    const long sums[] = {1, 2, 3, 5, 8, 13};
    for (int i = 0; i < 6; ++i) {
        Rational s = 0;
        for (int j = 0; j <= i; ++j) s += comp.at(i, j);
        c.expect(s == sums[i], "row sum " + std::to_string(i));
    }
    CompressedSpec cs = hat_spec(fixture_dar(20));
    c.expect(agree(cs.b_hat, eval_expr_string("1/(1-t^2)", cs.b_hat.trunc())), "hat of b");
    c.expect(agree(cs.g_hat, eval_expr_string("1/(1-t)", cs.g_hat.trunc())), "hat of g");
    c.expect(agree(cs.f1_hat, Series::t(cs.f1_hat.trunc())), "hat of f1");
    c.expect(agree(cs.f2_hat, eval_expr_string("t/(1-t)", cs.f2_hat.trunc())), "hat of f2");
    return {"compression-goldens", c.ok, 0.0,
            c.ok ? "rows, Fibonacci row sums, hatted spec exact" : c.problems.str()};
}

CriterionResult criterion_pascal_chain() {
    Check c;
    RiordanSpec pascal(eval_expr_string("1/(1-t)", 12), eval_expr_string("t/(1-t)", 12));
    AZ az = riordan_seqchar(pascal);
    c.expect(az.A[0] == 1 && az.A[1] == 1, "A must start (1,1)");
    for (int k = 2; k <= az.A.trunc(); ++k) c.expect(az.A[k] == 0, "A must vanish past t");
    c.expect(az.Z[0] == 1, "Z must start (1)");
    for (int k = 1; k <= az.Z.trunc(); ++k) c.expect(az.Z[k] == 0, "Z must vanish past 1");

    Mat p = riordan_production(pascal, 8);
    Mat rows = generate_from_production(p, 5);
    const long expect[5][5] = {
        {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            c.expect(rows.at(i, j) == expect[i][j], "generated Pascal row " + std::to_string(i));

    Mat pm = build_riordan(pascal, 8);
    const long fib[] = {1, 1, 2, 3, 5, 8};
    for (int n = 0; n < 6; ++n) {
        Rational s = 0;
        for (int k = 0; k <= n - k; ++k) s += pm.at(n - k, k);
        c.expect(s == fib[n], "antidiagonal sum " + std::to_string(n));
    }
    return {"pascal-chain", c.ok, 0.0,
            c.ok ? "A/Z, regenerated rows, Fibonacci antidiagonals exact" : c.problems.str()};
}

CriterionResult criterion_tp_witness() {
    Check c;
    CompressedSpec cs(eval_expr_string("(1+t)^2", 10), eval_expr_string("1/(1-t)", 10),
                      Series::t(10), Series::t(10));
    TPReport rep = is_tp(build_compressed(cs, 5), 3);
    c.expect(rep.verdict == TPReport::Verdict::not_tp, "verdict must be not_tp");
    c.expect(rep.witness.has_value(), "witness required");
    if (rep.witness) {
        c.expect(rep.witness->rows == std::vector<int>{1, 2, 3}, "witness rows {1,2,3}");
        c.expect(rep.witness->cols == std::vector<int>{0, 1, 2}, "witness cols {0,1,2}");
        c.expect(rep.witness->det == -1, "witness determinant -1");
    }
    return {"tp-negative-witness", c.ok, 0.0,
            c.ok ? "not_tp with minor rows {1,2,3} cols {0,1,2} det -1" : c.problems.str()};
}

CriterionResult criterion_group_laws() {
    Check c;
    std::vector<DoubleAlmostSpec> pool = random_spec_pool(52, 12);
    DoubleAlmostSpec id(Series::one(12), Series::one(12), Series::t(12), Series::t(12));
    for (std::size_t i = 0; i + 2 < pool.size() && c.ok; ++i) {
        const DoubleAlmostSpec& a = pool[i];
        const DoubleAlmostSpec& b = pool[i + 1];
        const DoubleAlmostSpec& cc = pool[i + 2];
        // (a) associativity, plus the triple matrix product as an oracle
        DoubleAlmostSpec l = dar_mul(dar_mul(a, b), cc);
        DoubleAlmostSpec r = dar_mul(a, dar_mul(b, cc));
        c.expect(specs_prefix_equal(l, r, 2), "associativity at spec " + std::to_string(i));
        int nl = std::min({l.b.trunc(), l.g.trunc(), l.f1.trunc(), l.f2.trunc()}) + 1;
        if (nl >= 5)
            c.expect(build_dar(a, nl).mul(build_dar(b, nl)).mul(build_dar(cc, nl)) ==
                         build_dar(l, nl),
                     "triple product matrix oracle at spec " + std::to_string(i));
        // (b) right inverse
        DoubleAlmostSpec inv_prod = dar_mul(a, dar_inverse(a));
        c.expect(specs_prefix_equal(inv_prod, id, 3), "a * a^-1 at spec " + std::to_string(i));
        // (c) matrix homomorphism
        DoubleAlmostSpec ab = dar_mul(a, b);
        int n = std::min({ab.b.trunc(), ab.g.trunc(), ab.f1.trunc(), ab.f2.trunc()}) + 1;
        c.expect(n >= 6, "certified product length at spec " + std::to_string(i));
        if (n >= 6)
            c.expect(build_dar(a, n).mul(build_dar(b, n)) == build_dar(ab, n),
                     "matrix homomorphism at spec " + std::to_string(i));
        // (d) closed form vs matrix oracle
        DarSeqChar closed = dar_seqchar(a);
        DarSeqChar oracle = dar_seqchar_oracle(build_dar(a, 13));
        for (const auto& [x, y] : {std::pair{&closed.A, &oracle.A}, {&closed.Z1, &oracle.Z1},
                                   {&closed.Z2, &oracle.Z2}, {&closed.W, &oracle.W}}) {
            int upto = std::min(x->trunc(), y->trunc());
            c.expect(upto >= 4 && prefix_eq(*x, *y, upto),
                     "closed form vs oracle at spec " + std::to_string(i));
        }
        // (e) the two W routes
        auto [w1, w2] = dar_w_two_routes(a);
        int upto = std::min(w1.trunc(), w2.trunc());
        c.expect(upto >= 4 && prefix_eq(w1, w2, upto),
                 "W route equality at spec " + std::to_string(i));
    }
    return {"group-law-properties", c.ok, 0.0,
            c.ok ? "50 specs: associativity, inverses, homomorphism, oracle, W routes"
                 : c.problems.str()};
}

CriterionResult criterion_compression_equivalence() {
    Check c;
    std::vector<DoubleAlmostSpec> pool = random_spec_pool(52, 12);
    for (std::size_t i = 0; i < pool.size() && c.ok; ++i) {
        const DoubleAlmostSpec& s = pool[i];
        Mat via = compress_matrix(build_dar(s, 13));  // 7 rows
        Mat direct = build_compressed(hat_spec(s), 7);
        c.expect(via.topleft(7, 7) == direct, "route equivalence at spec " + std::to_string(i));
        DarSeqChar cb = compressed_seqchar(hat_spec(s));
        DarSeqChar db = dar_seqchar(s);
        for (const auto& [x, y] : {std::pair{&cb.A, &db.A}, {&cb.Z1, &db.Z1}, {&cb.Z2, &db.Z2},
                                   {&cb.W, &db.W}}) {
            int upto = std::min(x->trunc(), y->trunc());
            c.expect(upto >= 4 && prefix_eq(*x, *y, upto),
                     "bundle equivalence at spec " + std::to_string(i));
        }
    }
    return {"compression-equivalence", c.ok, 0.0,
            c.ok ? "50 specs: both construction routes and both bundles agree"
                 : c.problems.str()};
}

CriterionResult criterion_tp_theorems() {
    Check c;
    Rng rng(77);
    std::uniform_int_distribution<int> cst(1, 3), cnt(0, 2), par(0, 2);
    auto random_pf = [&](int k) {
        PFGenerator gen;
        gen.C = cst(rng);
        gen.k = k;
        int na = cnt(rng), nb = cnt(rng);
        for (int i = 0; i < na; ++i) {
            Rational q(par(rng), 2);
            q.canonicalize();
            gen.alphas.push_back(q);
        }
        for (int i = 0; i < nb; ++i) {
            Rational q(par(rng), 2);
            q.canonicalize();
            gen.betas.push_back(q);
        }
        return gen;
    };
    // prepends an arbitrary even-order-allowed b column to the ladder
    auto bordered = [](const Series& b, const Series& gh, const Series& f1h, const Series& f2h,
                       int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i)
            if (i <= b.trunc()) m.at(i, 0) = b[i];
        Series col = mul(Series::t(gh.trunc()), gh);
        for (int k = 1; k < n; ++k) {
            for (int i = k; i < n; ++i) m.at(i, k) = col[i];
            if (k + 1 < n) col = mul(col, (k % 2 == 1) ? f1h : f2h);
        }
        return m;
    };
    for (int it = 0; it < 50 && c.ok; ++it) {
        Series g = pf_series(random_pf(0), 10);
        Series f1 = pf_series(random_pf(1), 10);
        Series f2 = pf_series(random_pf(1), 10);
        Thm61Result base = tp_check_thm61(g, f1, f2, 8, 3);
        c.expect(base.report.verdict == TPReport::Verdict::tp,
                 "PF triple " + std::to_string(it) + " must give a TP ladder");
        c.expect(base.factorization_ok && base.ladder_ok,
                 "factorization identities at triple " + std::to_string(it));
        for (const char* alpha : {"1", "5/2"}) {
            CompressedSpec spec = tp_build_tg_alpha(rat_parse(alpha), g, f1, f2, 8, 3);
            c.expect(is_tp(build_compressed(spec, 8), 3).verdict == TPReport::Verdict::tp,
                     std::string("t*g+") + alpha + " at triple " + std::to_string(it));
        }
        for (int b0 = 0; b0 <= 3 && c.ok; ++b0)
            for (int b1 = 0; b1 <= 3 && c.ok; ++b1) {
                std::vector<Rational> bc(static_cast<std::size_t>(11));
                bc[0] = b0;
                bc[1] = b1;
                Series b(std::move(bc));
                c.expect(is_tp(bordered(b, g, f1, f2, 8), 3).verdict == TPReport::Verdict::tp,
                         "linear b (" + std::to_string(b0) + "," + std::to_string(b1) +
                             ") at triple " + std::to_string(it));
            }
    }
    return {"tp-theorem-properties", c.ok, 0.0,
            c.ok ? "50 PF triples: ladders TP, both bordered constructions TP"
                 : c.problems.str()};
}

CriterionResult criterion_consistency_guards() {
    Check c;
    // The bidiagonal production assembled from the extracted A/Z is the
    // one that regenerates Pascal; the nearby variant with an extra
    // (1,1,1) second row does not, and must stay rejected.
    RiordanSpec pascal(eval_expr_string("1/(1-t)", 12), eval_expr_string("t/(1-t)", 12));
    Mat good = riordan_production(pascal, 8);
    Mat regen = generate_from_production(good, 5);
    c.expect(regen.topleft(5, 5) == build_riordan(pascal, 5),
             "computed production must regenerate Pascal");

    Mat variant(8, 8);
    variant.at(0, 0) = 1;
    variant.at(0, 1) = 1;
    variant.at(1, 0) = 1;
    variant.at(1, 1) = 1;
    variant.at(1, 2) = 1;
    for (int i = 2; i < 8; ++i) {
        variant.at(i, i) = 1;
        if (i + 1 < 8) variant.at(i, i + 1) = 1;
    }
    Mat bad = generate_from_production(variant, 5);
    c.expect(!(bad.topleft(5, 5) == build_riordan(pascal, 5)),
             "the variant production must NOT regenerate Pascal");

    // Two-row production shift holds; the one-row variant does not.
    DoubleAlmostSpec fix = fixture_dar(44);
    Mat d = build_dar(fixture_dar(15), 16);
    Mat p = dar_production(fix, 16);
    c.expect(production_shift_holds(d, p, 2), "two-row shift identity must hold");
    c.expect(!production_shift_holds(d, p, 1), "one-row shift identity must fail");
    return {"production-consistency-guards", c.ok, 0.0,
            c.ok ? "computed productions are the ground truth; wrong variants rejected"
                 : c.problems.str()};
}

}  // namespace

std::vector<CriterionResult> run_selftest(const std::string& filter) {
    using Clock = std::chrono::steady_clock;
    struct Entry {
        std::string name;
        std::function<CriterionResult()> fn;
        double time_limit;  // seconds; 0 means unconstrained
    };
    std::vector<Entry> table = {
        {"dar-build-golden", criterion_matrix_golden, 1.0},
        {"dar-seqchar-golden", criterion_seqchar_golden, 0.0},
        {"dar-production-golden", criterion_production_golden, 0.0},
        {"compression-goldens", criterion_compression_goldens, 0.0},
        {"pascal-chain", criterion_pascal_chain, 0.0},
        {"tp-negative-witness", criterion_tp_witness, 0.0},
        {"group-law-properties", criterion_group_laws, 30.0},
        {"compression-equivalence", criterion_compression_equivalence, 0.0},
        {"tp-theorem-properties", criterion_tp_theorems, 0.0},
        {"production-consistency-guards", criterion_consistency_guards, 0.0},
    };
    std::vector<CriterionResult> results;
    for (auto& entry : table) {
        if (!filter.empty() && entry.name.find(filter) == std::string::npos) continue;
        auto start = Clock::now();
        CriterionResult res;
        try {
            res = entry.fn();
        } catch (const std::exception& e) {
            res.name = entry.name;
            res.pass = false;
            res.detail = std::string("exception: ") + e.what();
        }
        res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (entry.time_limit > 0 && res.seconds > entry.time_limit) {
            res.pass = false;
            res.detail += (res.detail.empty() ? "" : "; ") + std::string("exceeded ") +
                          std::to_string(entry.time_limit) + "s budget";
        }
        results.push_back(std::move(res));
    }
    return results;
}

}  // namespace riordan
