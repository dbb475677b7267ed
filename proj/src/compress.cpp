#include "riordan/compress.hpp"

#include <algorithm>

#include "riordan/errors.hpp"

namespace riordan {

CompressedSpec::CompressedSpec(Series b_, Series g_, Series f1_, Series f2_)
    : b_hat(std::move(b_)), g_hat(std::move(g_)), f1_hat(std::move(f1_)), f2_hat(std::move(f2_)) {
    if (b_hat.order() != 0) throw OrderError("compressed b needs b(0) != 0");
    if (g_hat.order() != 0) throw OrderError("compressed g needs g(0) != 0");
    if (f1_hat.order() != 1 || f2_hat.order() != 1)
        throw OrderError("compressed multipliers need order exactly 1");
}

Mat compress_matrix(const Mat& m) {
    if (m.rows() != m.cols()) throw ShapeError("compression needs a square truncation");
    int n = (m.rows() + 1) / 2;
    Mat out(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= i; ++k) {
            if (2 * i - k >= m.rows())
                throw ShapeError("source too small for compressed entry (" + std::to_string(i) +
                                 "," + std::to_string(k) + ")");
            out.at(i, k) = m.at(2 * i - k, k);
        }
    return out;
}

CompressedSpec hat_spec(const DoubleAlmostSpec& spec) {
    return CompressedSpec(hat(spec.b), hat(spec.g), hat(spec.f1), hat(spec.f2));
}

Mat build_compressed(const CompressedSpec& cs, int n) {
    int trunc = std::min({cs.b_hat.trunc(), cs.g_hat.trunc(), cs.f1_hat.trunc(),
                          cs.f2_hat.trunc()});
    if (n - 1 > trunc) throw TruncError("compressed build needs series certified to the last row");
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, 0) = cs.b_hat[i];
    Series col = mul(Series::t(cs.g_hat.trunc()), cs.g_hat);
    for (int k = 1; k < n; ++k) {
        for (int i = k; i < n; ++i) m.at(i, k) = col[i];
        if (k + 1 < n) col = mul(col, (k % 2 == 1) ? cs.f1_hat : cs.f2_hat);
    }
    m.require_lower_triangular("compressed build");
    return m;
}

Mat build_compressed_double(const Series& g_hat, const Series& f1_hat, const Series& f2_hat,
                            int n) {
    int trunc = std::min({g_hat.trunc(), f1_hat.trunc(), f2_hat.trunc()});
    if (n - 1 > trunc) throw TruncError("compressed build needs series certified to the last row");
    Mat m(n, n);
    Series col = g_hat;
    for (int k = 0; k < n; ++k) {
        for (int i = k; i < n; ++i) m.at(i, k) = col[i];
        if (k + 1 < n) col = mul(col, (k % 2 == 0) ? f1_hat : f2_hat);
    }
    return m;
}

DarSeqChar compressed_seqchar(const CompressedSpec& cs) {
    Series prod = mul(cs.f1_hat, cs.f2_hat);
    if (prod.order() != 2) throw OrderError("f1^ f2^ must have order 2");
    Series t = Series::t(prod.trunc());
    Series sigma = div(prod, t);        // order 1, the substitution kernel
    Series rho = comp_inverse(sigma);   // equals the r of the uncompressed array

    const Rational& b0 = cs.b_hat[0];
    const Rational& g0 = cs.g_hat[0];
    Rational z20 = g0 * cs.f1_hat[1] / b0;
    Rational w0 = (cs.b_hat.trunc() >= 1 ? cs.b_hat[1] : Rational(0)) / b0;

    int T = std::min({sigma.trunc(), cs.b_hat.trunc(), cs.g_hat.trunc(), cs.f2_hat.trunc()});
    Series tt = Series::t(T);
    Series gh = cs.g_hat.restricted(T);
    Series bh = cs.b_hat.restricted(T);
    Series f1h = cs.f1_hat.restricted(T);
    Series f2h = cs.f2_hat.restricted(T);

    // Right-hand sides in the t variable, then composed with rho.
    // A(sigma)  = f1^ f2^ / t^2 = sigma / t
    Series a_rhs = div(sigma.restricted(T), tt);
    // Z1(sigma) = (1/t)(1 - g0/g^)
    Series z1_rhs = div(sub(Series::one(T), div(Series::constant(g0, T), gh)), tt);
    // Z2(sigma) = (f2^/(t^2 g^))(g^ f1^ - z20 t b^) + z20; the inner
    // difference has order >= 2, so divide the assembled product.
    Series z2_core = div(mul(f2h, sub(mul(gh, f1h), mul_scalar(z20, mul(tt, bh)))),
                         mul(mul(tt, tt), gh));
    Series z2_rhs = add(z2_core, Series::constant(z20, z2_core.trunc()));
    // W(sigma)  = (f2^/(t^2 g^))(b^ (1 - w0 t) - b0) + w0, same shape
    Series w_core = div(mul(f2h, sub(mul(bh, sub(Series::one(T), mul_scalar(w0, tt))),
                                     Series::constant(b0, T))),
                        mul(mul(tt, tt), gh));
    Series w_rhs = add(w_core, Series::constant(w0, w_core.trunc()));

    Series a_h = compose(a_rhs, rho);
    Series z1_h = compose(z1_rhs, rho);
    Series z2_h = compose(z2_rhs, rho);
    Series w_h = compose(w_rhs, rho);
    return DarSeqChar{unhat(a_h, Parity::Even), unhat(z1_h, Parity::Even),
                      unhat(z2_h, Parity::Even), unhat(w_h, Parity::Even)};
}

RecurrenceReport compressed_recurrence_check(const Mat& m, const DarSeqChar& bundle) {
    RecurrenceReport rep;
    int n = m.rows();
    auto coeff_count = [](const Series& s) { return s.trunc() / 2 + 1; };

    auto run = [&](int col_lo, int col_hi, const Series& coeffs, int row_off, int row_min,
                   auto col_of, const char* name) {
        int jmax_bundle = coeff_count(coeffs) - 1;
        for (int row = row_min; row < n && rep.ok; ++row) {
            for (int k = col_lo; k <= std::min(row, col_hi) && rep.ok; ++k) {
                // structural cutoff: term j references col_of(k,j) <= ref row
                Rational acc = 0;
                bool evaluable = true;
                for (int j = 0;; ++j) {
                    int rr = row + j + row_off;
                    int cc = col_of(k, j);
                    if (cc > rr) break;  // above the diagonal: zero forever after
                    if (j > jmax_bundle || rr >= n || rr < 0 || cc < 0) {
                        evaluable = false;
                        break;
                    }
                    const Rational& c = coeffs[2 * j];
                    if (c != 0 && m.at(rr, cc) != 0) acc += c * m.at(rr, cc);
                }
                if (!evaluable) continue;
                ++rep.checked;
                if (acc != m.at(row, k)) {
                    rep.ok = false;
                    rep.row = row;
                    rep.col = k;
                    rep.detail = std::string(name) + " recurrence fails at (" +
                                 std::to_string(row) + "," + std::to_string(k) + ")";
                }
            }
        }
    };

    run(3, n - 1, bundle.A, -2, 1, +[](int k, int j) { return k + 2 * (j - 1); }, "A");
    run(2, 2, bundle.Z2, -2, 2, +[](int, int j) { return 2 * j; }, "Z2");
    // the column-1 relation pulls from row 2n-1 of the source, so it only
    // binds from the second compressed row on
    run(1, 1, bundle.Z1, -1, 2, +[](int, int j) { return 2 * j + 1; }, "Z1");
    run(0, 0, bundle.W, -1, 1, +[](int, int j) { return 2 * j; }, "W");
    return rep;
}

}  // namespace riordan
