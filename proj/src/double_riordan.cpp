#include "riordan/double_riordan.hpp"

#include <algorithm>

#include "riordan/errors.hpp"

namespace riordan {

DoubleSpec::DoubleSpec(Series g_, Series f1_, Series f2_)
    : g(std::move(g_).retagged(Parity::Even)),
      f1(std::move(f1_).retagged(Parity::Odd)),
      f2(std::move(f2_).retagged(Parity::Odd)) {
    if (g.order() != 0) throw OrderError("double Riordan g needs g(0) != 0");
    if (f1.order() != 1 || f2.order() != 1)
        throw OrderError("double Riordan multipliers need order exactly 1");
}

DoubleAlmostSpec::DoubleAlmostSpec(Series b_, Series g_, Series f1_, Series f2_)
    : b(std::move(b_).retagged(Parity::Even)),
      g(std::move(g_).retagged(Parity::Even)),
      f1(std::move(f1_).retagged(Parity::Odd)),
      f2(std::move(f2_).retagged(Parity::Odd)) {
    if (b.order() != 0) throw OrderError("double almost-Riordan b needs b(0) != 0");
    if (g.order() != 0) throw OrderError("double almost-Riordan g needs g(0) != 0");
    if (f1.order() != 1 || f2.order() != 1)
        throw OrderError("double almost-Riordan multipliers need order exactly 1");
}

Mat build_double(const DoubleSpec& spec, int n) {
    int trunc = std::min({spec.g.trunc(), spec.f1.trunc(), spec.f2.trunc()});
    if (n - 1 > trunc) throw TruncError("double build needs series certified to the last row");
    Mat m(n, n);
    Series col = spec.g;
    for (int k = 0; k < n; ++k) {
        for (int i = k; i < n; ++i) m.at(i, k) = col[i];
        if (k + 1 < n) col = mul(col, (k % 2 == 0) ? spec.f1 : spec.f2);
    }
    return m;
}

Mat build_dar(const DoubleAlmostSpec& spec, int n) {
    int trunc = std::min({spec.b.trunc(), spec.g.trunc(), spec.f1.trunc(), spec.f2.trunc()});
    if (n - 1 > trunc)
        throw TruncError("double almost-Riordan build needs series certified to the last row");
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, 0) = spec.b[i];
    Series col = mul(Series::t(spec.g.trunc()), spec.g);
    for (int k = 1; k < n; ++k) {
        for (int i = k; i < n; ++i) m.at(i, k) = col[i];
        if (k + 1 < n) col = mul(col, (k % 2 == 1) ? spec.f1 : spec.f2);
    }
    return m;
}

Series double_apply(const DoubleSpec& spec, const Series& u) {
    Series s = mul(spec.f1, spec.f2);
    Parity p = u.parity() != Parity::None ? u.parity() : u.with_inferred_parity().parity();
    if (p == Parity::Even) return mul(spec.g, subst_sqrt_even(u.retagged(Parity::Even), s));
    if (p == Parity::Odd)
        return mul(spec.g, twisted_odd_subst(u.retagged(Parity::Odd), spec.f1, s));
    throw ParityError("double Riordan arrays act on definite-parity series only");
}

DoubleSpec double_mul(const DoubleSpec& a, const DoubleSpec& b) {
    Series s = mul(a.f1, a.f2);
    return DoubleSpec(mul(a.g, subst_sqrt_even(b.g, s)),
                      twisted_odd_subst(b.f1, a.f1, s),
                      twisted_odd_subst(b.f2, a.f2, s));
}

Series dar_apply(const DoubleAlmostSpec& spec, const Series& u) {
    Series s = mul(spec.f1, spec.f2);
    Series tg = mul(Series::t(spec.g.trunc()), spec.g);
    Parity p = u.parity() != Parity::None ? u.parity() : u.with_inferred_parity().parity();
    if (p == Parity::Even) {
        Series inner = subst_sqrt_even(u.retagged(Parity::Even), s);
        Series delta = sub(inner, Series::constant(u[0], inner.trunc()));
        return add(mul_scalar(u[0], spec.b), mul(div(tg, spec.f2), delta));
    }
    if (p == Parity::Odd) return twisted_odd_subst(u.retagged(Parity::Odd), tg, s);
    throw ParityError("double almost-Riordan arrays act on definite-parity series only");
}

DoubleAlmostSpec dar_mul(const DoubleAlmostSpec& a, const DoubleAlmostSpec& b) {
    DoubleSpec inner = double_mul(DoubleSpec(a.g, a.f1, a.f2), DoubleSpec(b.g, b.f1, b.f2));
    return DoubleAlmostSpec(dar_apply(a, b.b), inner.g, inner.f1, inner.f2);
}

namespace {

// Hatted view of a spec plus the rational inverse kernel; every closed
// form below is evaluated in these halved coordinates and un-hatted at
// the end.
struct HattedDar {
    Series bh, gh, f1h, f2h;  // hat(b), hat(g), hat(f1), hat(f2)
    Series r;                 // compositional inverse of hat(f1)hat(f2)/t
};

HattedDar hatted(const DoubleAlmostSpec& spec) {
    QBundle qb = qbar(spec.f1, spec.f2);
    return HattedDar{hat(spec.b), hat(spec.g), hat(spec.f1), hat(spec.f2), qb.r};
}

}  // namespace

DoubleSpec double_inverse(const DoubleSpec& a) {
    QBundle qb = qbar(a.f1, a.f2);
    const Series& r = qb.r;
    Series gh = hat(a.g);
    Series ghr = compose(gh, r);
    Series ginv_h = div(Series::one(ghr.trunc()), ghr);
    Series x = Series::t(r.trunc());
    Series f1_h = div(mul(x, r), compose(hat(a.f1), r));
    Series f2_h = div(mul(x, r), compose(hat(a.f2), r));
    return DoubleSpec(unhat(ginv_h, Parity::Even), unhat(f1_h, Parity::Odd),
                      unhat(f2_h, Parity::Odd));
}

DoubleAlmostSpec dar_inverse(const DoubleAlmostSpec& a) {
    HattedDar h = hatted(a);
    const Series& r = h.r;
    Series x = Series::t(r.trunc());
    const Rational& b0 = a.b[0];

    Series ghr = compose(h.gh, r);
    Series bhr = compose(h.bh, r);
    Series f2hr = compose(h.f2h, r);

    Series ginv_h = div(Series::one(ghr.trunc()), ghr);
    Series f1inv_h = div(mul(x, r), compose(h.f1h, r));
    Series f2inv_h = div(mul(x, r), f2hr);
    // c = 1/b0 + f2(rbar)/(b0*rbar*g(rbar)) * (b0 - b(rbar)), hatted form
    Series num = mul(f2hr, sub(Series::constant(b0, bhr.trunc()), bhr));
    Series den = mul_scalar(b0, mul(r, ghr));
    Series cinv_h = add(Series::constant(Rational(1) / b0, num.trunc()), div(num, den));
    return DoubleAlmostSpec(unhat(cinv_h, Parity::Even), unhat(ginv_h, Parity::Even),
                            unhat(f1inv_h, Parity::Odd), unhat(f2inv_h, Parity::Odd));
}

DoubleSeqChar double_seqchar(const DoubleSpec& spec) {
    QBundle qb = qbar(spec.f1, spec.f2);
    const Series& r = qb.r;
    Series x = Series::t(r.trunc());
    Series a1_h = div(compose(hat(spec.f1), r), r);
    Series a2_h = div(x, r);
    Series ghr = compose(hat(spec.g), r);
    Series z_h = div(sub(Series::one(ghr.trunc()),
                         div(Series::constant(spec.g[0], ghr.trunc()), ghr)),
                     r);
    return DoubleSeqChar{unhat(a1_h, Parity::Even), unhat(a2_h, Parity::Even),
                         unhat(z_h, Parity::Even)};
}

std::pair<Series, Series> dar_w_two_routes(const DoubleAlmostSpec& spec) {
    HattedDar h = hatted(spec);
    const Series& r = h.r;
    const Rational& b0 = spec.b[0];
    if (spec.b.trunc() < 2) throw TruncError("need b certified to degree 2 for w0 = b2/b0");
    const Rational& b2 = spec.b[2];
    Rational w0 = b2 / b0;
    Series ghr = compose(h.gh, r);
    Series bhr = compose(h.bh, r);
    Series f2hr = compose(h.f2h, r);

    // W = f2(rbar)((1 - w0 rbar^2) b(rbar) - b0)/(rbar^3 g(rbar)) + w0;
    // hatted, rbar^2 becomes r and the leftover rbar pairs with f2(rbar).
    Series one_minus = sub(Series::one(r.trunc()), mul_scalar(w0, r));
    Series w_num = mul(f2hr, sub(mul(one_minus, bhr), Series::constant(b0, bhr.trunc())));
    Series w_den = mul(mul(r, r), ghr);
    Series w_h = add(div(w_num, w_den), Series::constant(w0, w_num.trunc()));

    // W = w0 + f2(rbar)(b(rbar)(b0 - b2 rbar^2) - b0^2)/(b0 rbar^3 g(rbar))
    Series alt_num = mul(f2hr, sub(mul(bhr, sub(Series::constant(b0, bhr.trunc()),
                                                mul_scalar(b2, r))),
                                   Series::constant(b0 * b0, bhr.trunc())));
    Series alt_den = mul_scalar(b0, mul(mul(r, r), ghr));
    Series w_alt = add(div(alt_num, alt_den), Series::constant(w0, alt_num.trunc()));
    return {unhat(w_h, Parity::Even), unhat(w_alt, Parity::Even)};
}

DarSeqChar dar_seqchar(const DoubleAlmostSpec& spec) {
    HattedDar h = hatted(spec);
    const Series& r = h.r;
    Series x = Series::t(r.trunc());
    const Rational& b0 = spec.b[0];
    const Rational& g0 = spec.g[0];
    const Rational& f11 = spec.f1[1];
    Rational z20 = g0 * f11 / b0;

    Series ghr = compose(h.gh, r);
    Series bhr = compose(h.bh, r);
    Series f2hr = compose(h.f2h, r);

    Series a_h = div(x, r);
    Series z1_h = div(sub(Series::one(ghr.trunc()),
                          div(Series::constant(g0, ghr.trunc()), ghr)),
                      r);
    // Z2 = z20 + x/r - z20 * b(rbar) f2(rbar) / (rbar g(rbar)) in hatted form
    Series z2_h = add(Series::constant(z20, a_h.trunc()),
                      sub(a_h, mul_scalar(z20, div(mul(bhr, f2hr), mul(r, ghr)))));

    auto [w, w_alt] = dar_w_two_routes(spec);
    if (!agree(w, w_alt))
        throw Error("the two closed forms for the W sequence disagree; spec is inconsistent");

    return DarSeqChar{unhat(a_h, Parity::Even), unhat(z1_h, Parity::Even),
                      unhat(z2_h, Parity::Even), std::move(w)};
}

namespace {

// Solves sum_{i<=j} coeff[i] * m[base_row + 2j][col_of(i)] = m[lhs_row(j)][lhs_col]
// style triangular systems shared by the four extractions below.
std::vector<Rational> solve_band(const Mat& m, int lhs_col, int first_row, int ref_col_start,
                                 int ref_col_step, int ref_col0) {
    // lhs rows: first_row, first_row+2, ...; references live two rows up.
    std::vector<Rational> out;
    for (int j = 0;; ++j) {
        int n = first_row + 2 * j;
        if (n >= m.rows()) break;
        Rational acc = m.at(n, lhs_col);
        for (int i = 0; i < j; ++i) {
            int col = (i == 0) ? ref_col0 : ref_col_start + ref_col_step * i;
            acc -= out[static_cast<std::size_t>(i)] * m.at(n - 2, col);
        }
        int diag_col = (j == 0) ? ref_col0 : ref_col_start + ref_col_step * j;
        const Rational& pivot = m.at(n - 2, diag_col);
        if (pivot == 0)
            throw SingularSystem("zero diagonal entry at (" + std::to_string(n - 2) + "," +
                                 std::to_string(diag_col) + ") while extracting sequences");
        out.push_back(acc / pivot);
    }
    return out;
}

Series even_series_from(const std::vector<Rational>& coeffs) {
    if (coeffs.empty()) throw TruncError("matrix too small to certify any sequence coefficient");
    std::vector<Rational> c(2 * coeffs.size());
    for (std::size_t j = 0; j < coeffs.size(); ++j) c[2 * j] = coeffs[j];
    return Series(std::move(c), Parity::Even);
}

}  // namespace

DarSeqChar dar_seqchar_oracle(const Mat& m) {
    if (m.rows() != m.cols()) throw ShapeError("sequence extraction needs a square truncation");
    if (m.rows() < 4) throw TruncError("sequence extraction needs at least 4 rows");
    // W:  d(2+2j, 0) = sum_i w_i d(2j, 2i)
    std::vector<Rational> w = solve_band(m, 0, 2, 0, 2, 0);
    // Z2: d(2+2j, 2) = sum_i z2_i d(2j, 2i)
    std::vector<Rational> z2 = solve_band(m, 2, 2, 0, 2, 0);
    // Z1: d(3+2j, 1) = sum_i z1_i d(1+2j, 1+2i)
    std::vector<Rational> z1 = solve_band(m, 1, 3, 1, 2, 1);
    // A:  d(3+2j, 3) = sum_i a_i d(1+2j, 1+2i)
    std::vector<Rational> a = solve_band(m, 3, 3, 1, 2, 1);
    return DarSeqChar{even_series_from(a), even_series_from(z1), even_series_from(z2),
                      even_series_from(w)};
}

Mat dar_production(const DoubleAlmostSpec& spec, int n) {
    DarSeqChar sc = dar_seqchar(spec);
    int need = n - 1;
    if (sc.W.trunc() < need || sc.Z1.trunc() < need - 1 || sc.Z2.trunc() < need ||
        sc.A.trunc() < need)
        throw TruncError("production matrix of size " + std::to_string(n) +
                         " needs sequences certified to degree " + std::to_string(need) +
                         "; evaluate the generating functions at a larger truncation");
    Mat p(n, n);
    for (int i = 0; i < n; ++i) {
        p.at(i, 0) = sc.W[i];
        if (i >= 1) p.at(i, 1) = sc.Z1[i - 1];
        p.at(i, 2) = sc.Z2[i];
        for (int j = 3; j < n; ++j)
            if (i - j + 2 >= 0) p.at(i, j) = sc.A[i - j + 2];
    }
    return p;
}

std::pair<Mat, Mat> split_parity(const Mat& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int k = 0; k < m.cols(); ++k)
            if ((i + k) % 2 == 1 && m.at(i, k) != 0)
                throw ShapeError("checkerboard pattern violated at (" + std::to_string(i) + "," +
                                 std::to_string(k) + ")");
    std::vector<int> odd, even2;
    for (int i = 1; i < std::min(m.rows(), m.cols()); i += 2) odd.push_back(i);
    for (int i = 2; i < std::min(m.rows(), m.cols()); i += 2) even2.push_back(i);
    return {m.submatrix(odd, odd), m.submatrix(even2, even2)};
}

}  // namespace riordan
