#include "riordan/matrix.hpp"

#include <iomanip>
#include <sstream>

#include "riordan/errors.hpp"

namespace riordan {

std::size_t Mat::index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw ShapeError("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                         ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j);
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::mul(const Mat& other) const {
    if (cols_ != other.rows_)
        throw ShapeError("matrix product shape mismatch: " + std::to_string(cols_) + " vs " +
                         std::to_string(other.rows_));
    Mat out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < other.cols_; ++j) {
                const Rational& bkj = other.at(k, j);
                if (bkj != 0) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

Mat Mat::topleft(int r, int c) const {
    if (r > rows_ || c > cols_) throw ShapeError("topleft block larger than matrix");
    Mat out(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) out.at(i, j) = at(i, j);
    return out;
}

Mat Mat::submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
    Mat out(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            out.at(static_cast<int>(i), static_cast<int>(j)) = at(row_idx[i], col_idx[j]);
    return out;
}

bool Mat::operator==(const Mat& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    return a_ == other.a_;
}

bool Mat::is_lower_triangular() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != 0) return false;
    return true;
}

void Mat::require_lower_triangular(const std::string& what) const {
    if (!is_lower_triangular()) throw ShapeError(what + ": matrix is not lower triangular");
}

std::string Mat::str() const {
    std::vector<std::string> cells(a_.size());
    std::size_t width = 1;
    for (std::size_t k = 0; k < a_.size(); ++k) {
        cells[k] = rat_str(a_[k]);
        width = std::max(width, cells[k].size());
    }
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << std::setw(static_cast<int>(width))
               << cells[static_cast<std::size_t>(i) * cols_ + j];
        }
        os << '\n';
    }
    return os.str();
}

std::vector<Rational> row_times(const std::vector<Rational>& row, const Mat& m) {
    if (static_cast<int>(row.size()) != m.rows())
        throw ShapeError("row-vector length does not match matrix rows");
    std::vector<Rational> out(static_cast<std::size_t>(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        if (row[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < m.cols(); ++j) {
            const Rational& mij = m.at(i, j);
            if (mij != 0) out[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(i)] * mij;
        }
    }
    return out;
}

}  // namespace riordan
