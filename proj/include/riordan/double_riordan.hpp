#pragma once

#include <utility>

#include "riordan/matrix.hpp"
#include "riordan/series.hpp"

namespace riordan {

// Double Riordan array (g; f1, f2): even g with g(0) != 0, odd
// multipliers f1, f2 of order 1. Columns: g, gf1, gf1f2, gf1^2f2, ...
struct DoubleSpec {
    Series g, f1, f2;
    DoubleSpec(Series g_, Series f1_, Series f2_);
};

// Double almost-Riordan array (b | g; f1, f2): even first column b
// prepended to the t-shifted double Riordan ladder.
// Columns: b, tg, tgf1, tgf1f2, tgf1^2f2, ...
struct DoubleAlmostSpec {
    Series b, g, f1, f2;
    DoubleAlmostSpec(Series b_, Series g_, Series f1_, Series f2_);
};

// Sequence characterization of a double almost-Riordan array. All four
// are even series in t: A drives columns k >= 3 of the production
// matrix, Z1 column 1, Z2 column 2 and W column 0. The derived
// constants are the constant terms: w0 = W(0) = b2/b0 and
// z20 = Z2(0) = g0*f11/b0.
struct DarSeqChar {
    Series A, Z1, Z2, W;
};

// Characterization of a plain double Riordan array: f1 = t*A1(sqrt(f1f2)),
// f1f2 = t^2*A2(sqrt(f1f2)), g = g0/(1 - t^2 Z(sqrt(f1f2))).
struct DoubleSeqChar {
    Series A1, A2, Z;
};

Mat build_double(const DoubleSpec& spec, int n);
DoubleSpec double_mul(const DoubleSpec& a, const DoubleSpec& b);
DoubleSpec double_inverse(const DoubleSpec& a);
// Fundamental theorem: even u -> g*u(sqrt(f1f2)); odd u -> the twisted
// odd substitution against f1. ParityError on mixed input.
Series double_apply(const DoubleSpec& spec, const Series& u);
DoubleSeqChar double_seqchar(const DoubleSpec& spec);

Mat build_dar(const DoubleAlmostSpec& spec, int n);
// Fundamental theorem: even u -> u0*b + (tg/f2)(u(sqrt(f1f2)) - u0);
// odd u -> tg * sum u_{2k+1} (f1f2)^k.
Series dar_apply(const DoubleAlmostSpec& spec, const Series& u);
DoubleAlmostSpec dar_mul(const DoubleAlmostSpec& a, const DoubleAlmostSpec& b);
DoubleAlmostSpec dar_inverse(const DoubleAlmostSpec& a);

// Closed-form extraction through the rational kernel r (see QBundle).
// Also evaluates the second algebraic route to W and insists the two
// agree on the certified prefix.
DarSeqChar dar_seqchar(const DoubleAlmostSpec& spec);

// The two closed forms of the W generating function, evaluated through
// distinct expression trees. They are algebraically identical; exposing
// both keeps that fact a checkable property rather than an assumption.
std::pair<Series, Series> dar_w_two_routes(const DoubleAlmostSpec& spec);

// Independent extraction: solves the four triangular systems for
// (a_j), (z1_j), (z2_j), (w_j) directly from the entries of a built
// truncation. SingularSystem on vanishing diagonal entries.
DarSeqChar dar_seqchar_oracle(const Mat& m);

// Production matrix P = (W, tZ1, Z2, tA, t^2A, ...) columnwise; the
// defining identity is (D*P)[i][j] == D[i+2][j].
Mat dar_production(const DoubleAlmostSpec& spec, int n);

// The two embedded Riordan arrays of a built double almost-Riordan
// truncation: rows/columns of one parity class each, with zero rows and
// columns deleted. First = odd rows x odd cols, second = even rows x
// even cols (both starting at index 2 for the second).
std::pair<Mat, Mat> split_parity(const Mat& m);

}  // namespace riordan
