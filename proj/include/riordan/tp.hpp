#pragma once

#include <optional>
#include <vector>

#include "riordan/compress.hpp"
#include "riordan/matrix.hpp"
#include "riordan/series.hpp"

namespace riordan {

// Finite total-positivity certificate: "tp" means no negative minor of
// order <= max_order exists on the examined truncation, nothing more.
struct TPWitness {
    std::vector<int> rows, cols;
    Rational det;
};

struct TPReport {
    enum class Verdict { tp, not_tp, inconclusive };
    Verdict verdict = Verdict::inconclusive;
    int n = 0;
    int max_order = 0;
    std::optional<TPWitness> witness;
};

// Exact determinant by fraction-free (Bareiss) elimination with row
// pivoting.
Rational det_bareiss(Mat m);

// Enumerates every minor of orders 1..max_order over arbitrary row and
// column subsets, in lexicographic order, stopping at the first
// negative one.
TPReport is_tp(const Mat& m, int max_order);

// Toeplitz total positivity of a sequence prefix: builds [a_{i-j}] of
// size n x n and delegates to is_tp.
TPReport is_pf(const std::vector<Rational>& seq, int n, int max_order);

// Product form C t^k e^{gamma t} prod(1+alpha_j t)/prod(1-beta_j t)
// with C > 0 and nonnegative rational parameters; expands exactly.
struct PFGenerator {
    Rational C = 1;
    int k = 0;
    Rational gamma = 0;
    std::vector<Rational> alphas, betas;
};

Series pf_series(const PFGenerator& gen, int trunc);

// TP check for a compressed double Riordan array together with the two
// factorization identities it rests on: the Toeplitz split
// (g; f1, f2) = (g; t, t) (1; f1, f2) and the mutual block recursion of
// the two embedded Bell-type arrays.
struct Thm61Result {
    TPReport report;
    bool factorization_ok = false;
    bool ladder_ok = false;
};

Thm61Result tp_check_thm61(const Series& g_hat, const Series& f1_hat, const Series& f2_hat,
                           int n, int max_order);

// Builds (t*g^ + alpha | g^; f1^, f2^). NonTPBase when the double
// Riordan part fails the TP check at the working scope.
CompressedSpec tp_build_tg_alpha(const Rational& alpha, const Series& g_hat,
                                 const Series& f1_hat, const Series& f2_hat, int n,
                                 int max_order);

// Builds (b0 + b1 t | g^; f1^, f2^); same premise handling.
CompressedSpec tp_build_linear_b(const Rational& b0, const Rational& b1, const Series& g_hat,
                                 const Series& f1_hat, const Series& f2_hat, int n,
                                 int max_order);

}  // namespace riordan
