#pragma once

#include <string>
#include <vector>

#include "riordan/rational.hpp"

namespace riordan {

// Dense exact matrix. Array constructions produce lower-triangular
// instances; production matrices reuse the same type without the
// triangular invariant (they are banded with entries above the diagonal).
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static Mat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[index(i, j)]; }
    const Rational& at(int i, int j) const { return a_[index(i, j)]; }

    Mat mul(const Mat& other) const;
    Mat topleft(int r, int c) const;
    Mat submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;

    bool operator==(const Mat& other) const;

    bool is_lower_triangular() const;
    void require_lower_triangular(const std::string& what) const;

    std::string str() const;  // aligned human-readable table

  private:
    std::size_t index(int i, int j) const;
    int rows_, cols_;
    std::vector<Rational> a_;
};

// row * M for the ECO iteration; row length must equal M.rows().
std::vector<Rational> row_times(const std::vector<Rational>& row, const Mat& m);

}  // namespace riordan
