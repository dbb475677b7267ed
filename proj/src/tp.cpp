#include "riordan/tp.hpp"

#include <algorithm>

#include "riordan/errors.hpp"

namespace riordan {

Rational det_bareiss(Mat m) {
    if (m.rows() != m.cols()) throw ShapeError("determinant of a non-square matrix");
    int n = m.rows();
    if (n == 0) return 1;
    Rational prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

namespace {

// Lexicographically next k-combination of {0..n-1}; false when exhausted.
bool next_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<std::size_t>(i)] < n - k + i) {
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

std::vector<int> first_combination(int k) {
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
    return c;
}

}  // namespace

TPReport is_tp(const Mat& m, int max_order) {
    TPReport rep;
    rep.n = m.rows();
    rep.max_order = max_order;
    if (m.rows() != m.cols()) throw ShapeError("TP check needs a square truncation");
    if (m.rows() == 0 || max_order <= 0) {
        rep.verdict = TPReport::Verdict::inconclusive;
        return rep;
    }
    int n = m.rows();
    for (int k = 1; k <= std::min(max_order, n); ++k) {
        std::vector<int> rows = first_combination(k);
        do {
            std::vector<int> cols = first_combination(k);
            do {
                Rational d = det_bareiss(m.submatrix(rows, cols));
                if (d < 0) {
                    rep.verdict = TPReport::Verdict::not_tp;
                    rep.witness = TPWitness{rows, cols, std::move(d)};
                    return rep;
                }
            } while (next_combination(cols, n));
        } while (next_combination(rows, n));
    }
    rep.verdict = TPReport::Verdict::tp;
    return rep;
}

TPReport is_pf(const std::vector<Rational>& seq, int n, int max_order) {
    if (static_cast<int>(seq.size()) < n)
        throw ShapeError("sequence shorter than the requested Toeplitz truncation");
    Mat t(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) t.at(i, j) = seq[static_cast<std::size_t>(i - j)];
    return is_tp(t, max_order);
}

Series pf_series(const PFGenerator& gen, int trunc) {
    if (gen.C <= 0) throw Error("PF generator needs C > 0");
    if (gen.gamma < 0) throw Error("PF generator needs gamma >= 0");
    if (gen.k > trunc) throw TruncError("t^k factor exceeds the requested truncation");
    Series s = Series::constant(gen.C, trunc);
    if (gen.gamma != 0) {
        // e^{gamma t}: coefficients gamma^m / m!, exact for rational gamma
        std::vector<Rational> c(static_cast<std::size_t>(trunc) + 1);
        Rational term = 1;
        c[0] = 1;
        for (int mth = 1; mth <= trunc; ++mth) {
            term *= gen.gamma;
            term /= mth;
            c[static_cast<std::size_t>(mth)] = term;
        }
        s = mul(s, Series(std::move(c)));
    }
    for (const Rational& a : gen.alphas) {
        if (a < 0) throw Error("PF generator needs alpha_j >= 0");
        std::vector<Rational> lin(static_cast<std::size_t>(trunc) + 1);
        lin[0] = 1;
        lin[1] = a;
        s = mul(s, Series(std::move(lin)));
    }
    for (const Rational& b : gen.betas) {
        if (b < 0) throw Error("PF generator needs beta_j >= 0");
        std::vector<Rational> lin(static_cast<std::size_t>(trunc) + 1);
        lin[0] = 1;
        lin[1] = -b;
        s = div(s, Series(std::move(lin)));
    }
    if (gen.k > 0) s = mul(s, Series::monomial(1, gen.k, trunc));
    return s;
}

namespace {

Mat toeplitz_of(const Series& s, int n) {
    Mat t(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j)
            if (i - j <= s.trunc()) t.at(i, j) = s[i - j];
    return t;
}

// (1; f1, f2) truncation: leading 1 block over the swapped Bell ladder.
Mat lagrange_block(const Series& f1, const Series& f2, int n) {
    Mat m(n, n);
    m.at(0, 0) = 1;
    if (n == 1) return m;
    Series col = f1;
    for (int k = 1; k < n; ++k) {
        for (int i = k; i < n; ++i) m.at(i, k) = col[i];
        if (k + 1 < n) col = mul(col, (k % 2 == 1) ? f2 : f1);
    }
    return m;
}

// Bell-type array (a/t; b, a): columns (a/t), (a/t)b, (a/t)ba, ...
Mat bell_block(const Series& a, const Series& b, int n) {
    Mat m(n, n);
    Series col = div(a, Series::t(a.trunc()));
    for (int k = 0; k < n; ++k) {
        for (int i = k; i < n; ++i) m.at(i, k) = col[i];
        if (k + 1 < n) col = mul(col, (k % 2 == 0) ? b : a);
    }
    return m;
}

Mat one_plus(const Mat& inner) {
    Mat out(inner.rows() + 1, inner.cols() + 1);
    out.at(0, 0) = 1;
    for (int i = 0; i < inner.rows(); ++i)
        for (int j = 0; j < inner.cols(); ++j) out.at(i + 1, j + 1) = inner.at(i, j);
    return out;
}

}  // namespace

Thm61Result tp_check_thm61(const Series& g_hat, const Series& f1_hat, const Series& f2_hat,
                           int n, int max_order) {
    int trunc = std::min({g_hat.trunc(), f1_hat.trunc(), f2_hat.trunc()});
    if (n - 1 > trunc) throw TruncError("TP check needs series certified through the last row");
    Thm61Result res;
    Mat array = build_compressed_double(g_hat, f1_hat, f2_hat, n);

    // Toeplitz split
    Mat toeplitz = toeplitz_of(g_hat, n);
    Mat lagrange = lagrange_block(f1_hat, f2_hat, n);
    res.factorization_ok = (toeplitz.mul(lagrange) == array);

    // mutual recursion of the two Bell-type blocks: with T~i the
    // Toeplitz matrix of fi^/t,
    //   H1 = T~1 (1 (+) H2) and H2 = T~2 (1 (+) H1)
    Mat h1 = bell_block(f1_hat, f2_hat, n);
    Mat h2 = bell_block(f2_hat, f1_hat, n);
    Mat t1 = toeplitz_of(div(f1_hat, Series::t(f1_hat.trunc())), n);
    Mat t2 = toeplitz_of(div(f2_hat, Series::t(f2_hat.trunc())), n);
    res.ladder_ok = (t1.mul(one_plus(h2.topleft(n - 1, n - 1))) == h1) &&
                    (t2.mul(one_plus(h1.topleft(n - 1, n - 1))) == h2);

    res.report = is_tp(array, max_order);
    return res;
}

namespace {

void require_tp_base(const Series& g_hat, const Series& f1_hat, const Series& f2_hat, int n,
                     int max_order) {
    Mat base = build_compressed_double(g_hat, f1_hat, f2_hat, n);
    TPReport rep = is_tp(base, max_order);
    if (rep.verdict != TPReport::Verdict::tp)
        throw NonTPBase("the compressed double Riordan part is not TP at truncation " +
                        std::to_string(n) + ", order " + std::to_string(max_order));
}

}  // namespace

CompressedSpec tp_build_tg_alpha(const Rational& alpha, const Series& g_hat,
                                 const Series& f1_hat, const Series& f2_hat, int n,
                                 int max_order) {
    if (alpha <= 0) throw Error("alpha must be positive");
    require_tp_base(g_hat, f1_hat, f2_hat, n, max_order);
    Series b = add(mul(Series::t(g_hat.trunc()), g_hat),
                   Series::constant(alpha, g_hat.trunc()));
    return CompressedSpec(std::move(b), g_hat, f1_hat, f2_hat);
}

CompressedSpec tp_build_linear_b(const Rational& b0, const Rational& b1, const Series& g_hat,
                                 const Series& f1_hat, const Series& f2_hat, int n,
                                 int max_order) {
    if (b0 < 0 || b1 < 0) throw Error("linear b needs nonnegative coefficients");
    if (b0 == 0) throw OrderError("b(0) must be nonzero for a valid compressed spec");
    require_tp_base(g_hat, f1_hat, f2_hat, n, max_order);
    std::vector<Rational> c(static_cast<std::size_t>(g_hat.trunc()) + 1);
    c[0] = b0;
    if (g_hat.trunc() >= 1) c[1] = b1;
    return CompressedSpec(Series(std::move(c)), g_hat, f1_hat, f2_hat);
}

}  // namespace riordan
