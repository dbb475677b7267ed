#pragma once

#include <utility>

#include "riordan/matrix.hpp"
#include "riordan/series.hpp"

namespace riordan {

// Proper Riordan array (g, f): column k is generated by g*f^k.
// g has order 0 with g(0) != 0, f has order 1 with f'(0) != 0.
struct RiordanSpec {
    Series g, f;
    RiordanSpec(Series g_, Series f_);
};

Mat build_riordan(const RiordanSpec& spec, int n);
RiordanSpec riordan_mul(const RiordanSpec& a, const RiordanSpec& b);
RiordanSpec riordan_inverse(const RiordanSpec& a);

// A- and Z-sequences: the unique series with f = t*A(f) and
// g = d00/(1 - t*Z(f)).
struct AZ {
    Series A, Z;
};

AZ riordan_seqchar(const RiordanSpec& spec, const Rational& d00);
AZ riordan_seqchar(const RiordanSpec& spec);  // d00 = g(0)

// Production (Stieltjes) matrix P = (Z, A, tA, t^2 A, ...) columnwise.
Mat riordan_production(const RiordanSpec& spec, int n);

// Shift-by-one identity (D*P)[i][j] == D[i+1][j], checked for i <= n-2.
bool production_shift_holds(const Mat& d, const Mat& p, int shift);

// Recovers (g, f) from a Riordan-shaped production matrix: f solves
// f = t*A(f) by fixed-point iteration, then g = d00/(1 - t*Z(f)).
RiordanSpec riordan_from_production(const Mat& p, const Rational& d00, int trunc);

// Quasi-Riordan array [g, f]: columns (g, f, tf, t^2 f, ...).
// order(f) >= 1; g(0) != 0 (the classical normalization g(0) = 1 is not
// required, the product formulas carry a general constant term through).
struct QuasiSpec {
    Series g, f;
    QuasiSpec(Series g_, Series f_);
};

Mat build_quasi(const QuasiSpec& spec, int n);
QuasiSpec quasi_mul(const QuasiSpec& a, const QuasiSpec& b);
QuasiSpec quasi_inverse(const QuasiSpec& a);  // needs order(f) == 1
// Fundamental theorem: [g,f]u = g*u(0) + (f/t)(u - u(0)).
Series quasi_apply(const QuasiSpec& spec, const Series& u);

// Almost-Riordan array (d | g, f): first column d, then the Riordan
// array (g, f) shifted down one row: columns (d, tg, tgf, tgf^2, ...).
struct AlmostSpec {
    Series d, g, f;
    AlmostSpec(Series d_, Series g_, Series f_);
};

Mat build_almost(const AlmostSpec& spec, int n);
AlmostSpec almost_mul(const AlmostSpec& a, const AlmostSpec& b);
AlmostSpec almost_inverse(const AlmostSpec& a);
Series almost_apply(const AlmostSpec& spec, const Series& u);
// Semidirect factorization (d | g, f) = [d, tg] * (1 | 1, f).
std::pair<QuasiSpec, AlmostSpec> almost_factorize(const AlmostSpec& spec);

}  // namespace riordan
