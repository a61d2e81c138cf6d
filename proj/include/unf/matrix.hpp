/*
   Copyright 2026 The unf authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "unf/poly.hpp"
#include "unf/rational.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace unf {

// Dense rational matrix, row-major. Everything here is exact Gaussian
// elimination territory; pivoting is deterministic (leftmost column, topmost
// nonzero row) so every basis the library produces is reproducible.
class Mat {
  public:
    Mat() = default;

    Mat(int rows, int cols)
        : rows_(rows), cols_(cols),
          data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0)) {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("negative matrix dimension");
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    static Mat from_rows(std::vector<std::vector<Rational>> rows) {
        const int r = static_cast<int>(rows.size());
        const int c = r ? static_cast<int>(rows[0].size()) : 0;
        Mat m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
                throw std::invalid_argument("ragged matrix rows");
            for (int j = 0; j < c; ++j)
                m(i, j) = std::move(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(int i, int j) { return data_[index(i, j)]; }
    const Rational& operator()(int i, int j) const { return data_[index(i, j)]; }

    bool operator==(const Mat& other) const = default;

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0)
                return false;
        return true;
    }

    Mat operator-() const {
        Mat r = *this;
        for (auto& x : r.data_)
            x = -x;
        return r;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        a.require_same_shape(b);
        Mat r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i)
            r.data_[i] += b.data_[i];
        return r;
    }

    friend Mat operator-(const Mat& a, const Mat& b) { return a + (-b); }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("matrix product shape mismatch");
        Mat r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik == 0)
                    continue;
                for (int j = 0; j < b.cols_; ++j)
                    r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend Mat operator*(const Rational& s, const Mat& m) {
        Mat r = m;
        for (auto& x : r.data_)
            x *= s;
        return r;
    }

    Mat& operator+=(const Mat& other) { return *this = *this + other; }
    Mat& operator-=(const Mat& other) { return *this = *this - other; }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                r(j, i) = (*this)(i, j);
        return r;
    }

    Rational trace() const {
        if (!is_square())
            throw std::invalid_argument("trace of a non-square matrix");
        Rational t(0);
        for (int i = 0; i < rows_; ++i)
            t += (*this)(i, i);
        return t;
    }

    Mat col(int j) const {
        Mat c(rows_, 1);
        for (int i = 0; i < rows_; ++i)
            c(i, 0) = (*this)(i, j);
        return c;
    }

    /// Columns [first, last) as a new matrix.
    Mat cols_slice(int first, int last) const {
        Mat r(rows_, last - first);
        for (int i = 0; i < rows_; ++i)
            for (int j = first; j < last; ++j)
                r(i, j - first) = (*this)(i, j);
        return r;
    }

  private:
    std::size_t index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("matrix index out of range");
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }

    void require_same_shape(const Mat& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

inline std::ostream& operator<<(std::ostream& os, const Mat& m) {
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        if (i)
            os << "; ";
        for (int j = 0; j < m.cols(); ++j) {
            if (j)
                os << " ";
            os << m(i, j);
        }
    }
    return os << "]";
}

/// [a | b] side by side.
inline Mat hcat(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows())
        throw std::invalid_argument("hcat row mismatch");
    Mat r(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j)
            r(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j)
            r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

/// a stacked on top of b.
inline Mat vcat(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols())
        throw std::invalid_argument("vcat column mismatch");
    Mat r(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            r(a.rows() + i, j) = b(i, j);
    return r;
}

/// Kronecker product a (x) b.
inline Mat kron(const Mat& a, const Mat& b) {
    Mat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0)
                continue;
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q)
                    r(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
    return r;
}

/// Column-major flattening of m into a single column.
inline Mat vec(const Mat& m) {
    Mat v(m.rows() * m.cols(), 1);
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i)
            v(j * m.rows() + i, 0) = m(i, j);
    return v;
}

/// Inverse of vec: reshape a column into rows x cols, column-major.
inline Mat unvec(const Mat& v, int rows, int cols) {
    if (v.cols() != 1 || v.rows() != rows * cols)
        throw std::invalid_argument("unvec shape mismatch");
    Mat m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i)
            m(i, j) = v(j * rows + i, 0);
    return m;
}

struct RrefResult {
    Mat reduced;
    std::vector<int> pivot_cols;
    int rank = 0;
};

/// Reduced row echelon form with deterministic pivoting: scan columns left to
/// right, pick the topmost nonzero entry at or below the current row.
inline RrefResult rref(Mat m) {
    RrefResult res;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != row)
            for (int j = 0; j < m.cols(); ++j)
                std::swap(m(pivot, j), m(row, j));
        const Rational inv = Rational(1) / m(row, col);
        for (int j = col; j < m.cols(); ++j)
            m(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0)
                continue;
            const Rational f = m(i, col);
            for (int j = col; j < m.cols(); ++j)
                m(i, j) -= f * m(row, j);
        }
        res.pivot_cols.push_back(col);
        ++row;
    }
    res.rank = row;
    res.reduced = std::move(m);
    return res;
}

inline int rank(const Mat& m) { return rref(m).rank; }

/// Solve a * x = b for all right-hand-side columns at once. Returns nullopt
/// if any column is inconsistent. Free variables are set to zero, so the
/// solution is deterministic.
inline std::optional<Mat> solve(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows())
        throw std::invalid_argument("solve shape mismatch");
    const RrefResult r = rref(hcat(a, b));
    // Any pivot landing in the right block marks an inconsistent system.
    for (int pc : r.pivot_cols)
        if (pc >= a.cols())
            return std::nullopt;
    Mat x(a.cols(), b.cols());
    for (std::size_t k = 0; k < r.pivot_cols.size(); ++k)
        for (int j = 0; j < b.cols(); ++j)
            x(r.pivot_cols[k], j) = r.reduced(static_cast<int>(k), a.cols() + j);
    return x;
}

inline std::optional<Mat> inverse(const Mat& a) {
    if (!a.is_square())
        throw std::invalid_argument("inverse of a non-square matrix");
    auto x = solve(a, Mat::identity(a.rows()));
    if (x && rank(a) == a.rows())
        return x;
    return std::nullopt;
}

/// Monic characteristic polynomial det(lambda I - A) by the Faddeev-LeVerrier
/// recurrence: M_0 = I, c_k = -tr(A M_{k-1}) / k, M_k = A M_{k-1} + c_k I.
/// Exact over the rationals and factorization free.
inline Poly char_poly(const Mat& a) {
    if (!a.is_square())
        throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    const int n = a.rows();
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1, Rational(0));
    coeffs[static_cast<std::size_t>(n)] = 1;
    Mat m = Mat::identity(n);
    for (int k = 1; k <= n; ++k) {
        m = a * m;
        const Rational ck = -m.trace() / k;
        coeffs[static_cast<std::size_t>(n - k)] = ck;
        for (int i = 0; i < n; ++i)
            m(i, i) += ck;
    }
    return Poly::from_coeffs(std::move(coeffs));
}

/// p(A) by Horner's scheme on matrices.
inline Mat eval_poly_at(const Poly& p, const Mat& a) {
    if (!a.is_square())
        throw std::invalid_argument("polynomial of a non-square matrix");
    const int n = a.rows();
    Mat acc(n, n);
    for (int i = p.degree(); i >= 0; --i) {
        acc = a * acc;
        const Rational c = p.coeff(i);
        if (c != 0)
            for (int d = 0; d < n; ++d)
                acc(d, d) += c;
    }
    return acc;
}

/// Companion matrix of a monic polynomial: ones on the subdiagonal and the
/// negated coefficients in the last column, so that char_poly(companion(p)) == p.
inline Mat companion_matrix(const Poly& p) {
    if (!p.is_monic())
        throw std::invalid_argument("companion matrix needs a monic polynomial");
    const int q = p.degree();
    if (q < 1)
        throw std::invalid_argument("companion matrix needs degree >= 1");
    Mat c(q, q);
    for (int i = 1; i < q; ++i)
        c(i, i - 1) = 1;
    for (int i = 0; i < q; ++i)
        c(i, q - 1) = -p.coeff(i);
    return c;
}

} // namespace unf
