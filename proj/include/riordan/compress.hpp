#pragma once

#include <string>

#include "riordan/double_riordan.hpp"
#include "riordan/matrix.hpp"
#include "riordan/series.hpp"

namespace riordan {

// Compressed (hatted) description of a double almost-Riordan array:
// the degree-halved series b^, g^ (order 0) and f1^, f2^ (order 1).
// Columns of the compressed array: b^, t g^, t g^ f1^, t g^ f1^ f2^, ...
struct CompressedSpec {
    Series b_hat, g_hat, f1_hat, f2_hat;
    CompressedSpec(Series b_, Series g_, Series f1_, Series f2_);
};

// Entrywise reindexing m^[n][k] = m[2n-k][k]. A source of size S
// certifies floor((S+1)/2) compressed rows.
Mat compress_matrix(const Mat& m);

CompressedSpec hat_spec(const DoubleAlmostSpec& spec);

Mat build_compressed(const CompressedSpec& cs, int n);

// The compressed double Riordan ladder (g^; f1^, f2^) without the
// prepended b^ column: columns g^, g^f1^, g^f1^f2^, g^ f1^2 f2^, ...
Mat build_compressed_double(const Series& g_hat, const Series& f1_hat, const Series& f2_hat,
                            int n);

// Same bundle as dar_seqchar, recovered from the compressed data alone
// through the order-1 substitution x = f1^ f2^ / t.
DarSeqChar compressed_seqchar(const CompressedSpec& cs);

// Scan of the skewed recurrences that characterize a compressed array:
//   col k>=3:  m^[n][k] = sum_j a_j    m^[n+j-2][k+2(j-1)]
//   col 2:     m^[n][2] = sum_j z2_j   m^[n+j-2][2j]
//   col 1:     m^[n][1] = sum_j z1_j   m^[n+j-1][2j+1]
//   col 0:     m^[n][0] = sum_j w_j    m^[n+j-1][2j]
// Only index tuples whose every referenced entry lies inside the
// truncation (and whose bundle coefficients are certified) are checked.
struct RecurrenceReport {
    bool ok = true;
    int checked = 0;    // number of (row, col) pairs fully evaluated
    int row = -1, col = -1;  // first violation, when !ok
    std::string detail;
};

RecurrenceReport compressed_recurrence_check(const Mat& m, const DarSeqChar& bundle);

}  // namespace riordan
