#include "riordan/riordan.hpp"

#include <algorithm>

#include "riordan/errors.hpp"

namespace riordan {

RiordanSpec::RiordanSpec(Series g_, Series f_) : g(std::move(g_)), f(std::move(f_)) {
    if (g.order() != 0) throw OrderError("Riordan g needs g(0) != 0");
    if (f.order() != 1) throw OrderError("Riordan f needs order exactly 1");
}

// Lays out columns col_k = g*f^k; entry (i,k) = [t^i] col_k.
Mat build_riordan(const RiordanSpec& spec, int n) {
    int trunc = std::min(spec.g.trunc(), spec.f.trunc());
    if (n - 1 > trunc)
        throw TruncError("building " + std::to_string(n) +
                         " rows needs series certified to degree " + std::to_string(n - 1));
    Mat m(n, n);
    Series col = spec.g;
    for (int k = 0; k < n; ++k) {
        for (int i = k; i < n; ++i) m.at(i, k) = col[i];
        if (k + 1 < n) col = mul(col, spec.f);
    }
    return m;
}

RiordanSpec riordan_mul(const RiordanSpec& a, const RiordanSpec& b) {
    return RiordanSpec(mul(a.g, compose(b.g, a.f)), compose(b.f, a.f));
}

RiordanSpec riordan_inverse(const RiordanSpec& a) {
    Series fbar = comp_inverse(a.f);
    return RiordanSpec(div(Series::one(fbar.trunc()), compose(a.g, fbar)), fbar);
}

AZ riordan_seqchar(const RiordanSpec& spec, const Rational& d00) {
    Series fbar = comp_inverse(spec.f);
    Series A = div(Series::t(fbar.trunc()), fbar);
    // Z = (1/fbar)(1 - d00/g(fbar))
    Series gbar = compose(spec.g, fbar);
    Series one = Series::one(gbar.trunc());
    Series Z = div(sub(one, div(mul_scalar(d00, one), gbar)), fbar);
    return AZ{std::move(A), std::move(Z)};
}

AZ riordan_seqchar(const RiordanSpec& spec) { return riordan_seqchar(spec, spec.g[0]); }

Mat riordan_production(const RiordanSpec& spec, int n) {
    AZ az = riordan_seqchar(spec);
    if (az.A.trunc() < n - 1 || az.Z.trunc() < n - 1)
        throw TruncError("production matrix of size " + std::to_string(n) +
                         " needs A/Z certified to degree " + std::to_string(n - 1));
    Mat p(n, n);
    for (int i = 0; i < n; ++i) p.at(i, 0) = az.Z[i];
    for (int j = 1; j < n; ++j)
        for (int i = j - 1; i < n; ++i) p.at(i, j) = az.A[i - j + 1];
    return p;
}

bool production_shift_holds(const Mat& d, const Mat& p, int shift) {
    if (d.rows() != d.cols() || p.rows() != d.rows() || p.cols() != d.cols()) return false;
    Mat dp = d.mul(p);
    for (int i = 0; i + shift < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j)
            if (dp.at(i, j) != d.at(i + shift, j)) return false;
    return true;
}

RiordanSpec riordan_from_production(const Mat& p, const Rational& d00, int trunc) {
    // A from column 1, Z from column 0 of the banded shape.
    std::vector<Rational> ac(static_cast<std::size_t>(trunc) + 1),
        zc(static_cast<std::size_t>(trunc) + 1);
    for (int i = 0; i <= trunc && i < p.rows(); ++i) {
        if (p.cols() > 1) ac[static_cast<std::size_t>(i)] = p.at(i, 1);
        zc[static_cast<std::size_t>(i)] = p.at(i, 0);
    }
    Series A(std::move(ac)), Z(std::move(zc));
    if (A.order() != 0) throw OrderError("production matrix has a_0 == 0; not a proper array");
    // f = t*A(f): each pass fixes one more coefficient.
    Series f = Series::t(trunc);
    for (int it = 0; it < trunc; ++it) f = mul(Series::t(trunc), compose(A, f));
    Series one = Series::one(trunc);
    Series g = div(mul_scalar(d00, one), sub(one, mul(Series::t(trunc), compose(Z, f))));
    return RiordanSpec(std::move(g), std::move(f));
}

QuasiSpec::QuasiSpec(Series g_, Series f_) : g(std::move(g_)), f(std::move(f_)) {
    if (g.order() != 0) throw OrderError("quasi-Riordan g needs g(0) != 0");
    if (f.order() < 1) throw OrderError("quasi-Riordan f needs order >= 1");
}

Mat build_quasi(const QuasiSpec& spec, int n) {
    int trunc = std::min(spec.g.trunc(), spec.f.trunc());
    if (n - 1 > trunc) throw TruncError("quasi build needs series certified to the last row");
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, 0) = spec.g[i];
    for (int j = 1; j < n; ++j)
        for (int i = j - 1; i < n; ++i)
            if (i - j + 1 <= spec.f.trunc()) m.at(i, j) = spec.f[i - j + 1];
    m.require_lower_triangular("quasi-Riordan build");
    return m;
}

Series quasi_apply(const QuasiSpec& spec, const Series& u) {
    Series delta = sub(u, Series::constant(u[0], u.trunc()));
    Series f_over_t = div(spec.f, Series::t(spec.f.trunc()));
    return add(mul_scalar(u[0], spec.g), mul(f_over_t, delta));
}

QuasiSpec quasi_mul(const QuasiSpec& a, const QuasiSpec& b) {
    // [g,f][d,h] = [g*d(0) + (f/t)(d - d(0)), f*h/t]; with d(0) = 1 this
    // is the classical formula.
    Series second = div(mul(a.f, b.f), Series::t(std::min(a.f.trunc(), b.f.trunc())));
    return QuasiSpec(quasi_apply(a, b.g), std::move(second));
}

QuasiSpec quasi_inverse(const QuasiSpec& a) {
    if (a.f.order() != 1)
        throw OrderError("quasi-Riordan inverse needs order(f) == 1 (nonzero diagonal)");
    int T = std::min(a.g.trunc(), a.f.trunc());
    Series t = Series::t(T);
    Series h = div(mul(t, t), a.f.restricted(T));
    Rational g0inv = Rational(1) / a.g[0];
    // g*d0 + (f/t)(d - d0) = 1  =>  d = d0 + (t/f)(1 - d0*g), d0 = 1/g0
    Series d = add(Series::constant(g0inv, T),
                   mul(div(t, a.f.restricted(T)),
                       sub(Series::one(T), mul_scalar(g0inv, a.g.restricted(T)))));
    return QuasiSpec(std::move(d), std::move(h));
}

AlmostSpec::AlmostSpec(Series d_, Series g_, Series f_)
    : d(std::move(d_)), g(std::move(g_)), f(std::move(f_)) {
    if (d.order() != 0) throw OrderError("almost-Riordan d needs d(0) != 0");
    if (g.order() != 0) throw OrderError("almost-Riordan g needs g(0) != 0");
    if (f.order() != 1) throw OrderError("almost-Riordan f needs order exactly 1");
}

Mat build_almost(const AlmostSpec& spec, int n) {
    int trunc = std::min({spec.d.trunc(), spec.g.trunc(), spec.f.trunc()});
    if (n - 1 > trunc) throw TruncError("almost build needs series certified to the last row");
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, 0) = spec.d[i];
    Series col = mul(Series::t(spec.g.trunc()), spec.g);
    for (int k = 1; k < n; ++k) {
        for (int i = k; i < n; ++i) m.at(i, k) = col[i];
        if (k + 1 < n) col = mul(col, spec.f);
    }
    return m;
}

Series almost_apply(const AlmostSpec& spec, const Series& u) {
    // (a|g,f)u = a*u(0) + (tg/f)(u(f) - u(0))
    Series tg = mul(Series::t(spec.g.trunc()), spec.g);
    Series uf = compose(u, spec.f);
    Series delta = sub(uf, Series::constant(u[0], uf.trunc()));
    return add(mul_scalar(u[0], spec.d), mul(div(tg, spec.f), delta));
}

AlmostSpec almost_mul(const AlmostSpec& a, const AlmostSpec& b) {
    Series first = almost_apply(a, b.d);
    return AlmostSpec(std::move(first), mul(a.g, compose(b.g, a.f)), compose(b.f, a.f));
}

AlmostSpec almost_inverse(const AlmostSpec& a) {
    Series fbar = comp_inverse(a.f);
    Series ginv = div(Series::one(fbar.trunc()), compose(a.g, fbar));
    // first column: b = 1/a0 + [(f/(tg))(1 - a/a0)] o fbar
    Rational a0inv = Rational(1) / a.d[0];
    int T = std::min({a.d.trunc(), a.g.trunc(), a.f.trunc()});
    Series e = mul(div(a.f.restricted(T), mul(Series::t(T), a.g.restricted(T))),
                   sub(Series::one(T), mul_scalar(a0inv, a.d.restricted(T))));
    Series binv = add(Series::constant(a0inv, std::min(e.trunc(), fbar.trunc())),
                      compose(e, fbar));
    return AlmostSpec(std::move(binv), std::move(ginv), std::move(fbar));
}

std::pair<QuasiSpec, AlmostSpec> almost_factorize(const AlmostSpec& spec) {
    Series tg = mul(Series::t(spec.g.trunc()), spec.g);
    QuasiSpec left(spec.d, std::move(tg));
    AlmostSpec right(Series::one(spec.f.trunc()), Series::one(spec.f.trunc()), spec.f);
    return {std::move(left), std::move(right)};
}

}  // namespace riordan
