#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lg3/rational.hpp"

namespace lg3 {

/// Dense matrix over a field-like scalar T. Sizes in this project are tiny
/// (at most 36x36), so everything below is plain Gaussian elimination; the
/// pivot/zero decisions are delegated to a policy so the same code serves
/// the exact and the thresholded numeric instantiations.
template <class T>
class Mat {
  public:
    Mat() = default;
    Mat(std::size_t r, std::size_t c, T fill = T(0))
        : r_(r), c_(c), d_(r * c, fill) {}

    [[nodiscard]] std::size_t rows() const { return r_; }
    [[nodiscard]] std::size_t cols() const { return c_; }

    T& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }

    [[nodiscard]] static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    [[nodiscard]] Mat transposed() const {
        Mat m(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    Mat operator*(const Mat& o) const {
        if (c_ != o.r_) throw std::invalid_argument("Mat::*: shape mismatch");
        Mat m(r_, o.c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t k = 0; k < c_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0)) continue;
                for (std::size_t j = 0; j < o.c_; ++j) m(i, j) += a * o(k, j);
            }
        return m;
    }

    Mat operator+(const Mat& o) const {
        Mat m = *this;
        for (std::size_t i = 0; i < d_.size(); ++i) m.d_[i] += o.d_[i];
        return m;
    }

    Mat operator-(const Mat& o) const {
        Mat m = *this;
        for (std::size_t i = 0; i < d_.size(); ++i) m.d_[i] -= o.d_[i];
        return m;
    }

    Mat operator*(const T& s) const {
        Mat m = *this;
        for (auto& x : m.d_) x *= s;
        return m;
    }

    bool operator==(const Mat& o) const {
        return r_ == o.r_ && c_ == o.c_ && d_ == o.d_;
    }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(d_.begin() + i * c_, d_.begin() + (i + 1) * c_);
    }

  private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<T> d_;
};

/// Pivot policy for exact scalars: a pivot is any nonzero entry and the
/// first one found is taken, which keeps echelon forms deterministic.
template <class T>
struct ExactPivot {
    bool is_zero(const T& x) const { return x == T(0); }
    bool prefer(const T& /*cand*/, const T& /*cur*/) const { return false; }
};

/// Row-reduce M in place to reduced row-echelon form.
/// Returns the pivot column of each pivot row, in order.
template <class T, class Policy = ExactPivot<T>>
std::vector<std::size_t> rref_in_place(Mat<T>& M, Policy pol = {}) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < M.cols() && row < M.rows(); ++col) {
        std::size_t best = row;
        bool found = false;
        for (std::size_t i = row; i < M.rows(); ++i) {
            if (pol.is_zero(M(i, col))) continue;
            if (!found || pol.prefer(M(i, col), M(best, col))) best = i;
            found = true;
        }
        if (!found) continue;
        if (best != row)
            for (std::size_t j = 0; j < M.cols(); ++j) std::swap(M(row, j), M(best, j));
        T inv = T(1) / M(row, col);
        for (std::size_t j = col; j < M.cols(); ++j) M(row, j) *= inv;
        M(row, col) = T(1);
        for (std::size_t i = 0; i < M.rows(); ++i) {
            if (i == row || pol.is_zero(M(i, col))) continue;
            T f = M(i, col);
            for (std::size_t j = col; j < M.cols(); ++j) M(i, j) -= f * M(row, j);
            M(i, col) = T(0);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class T, class Policy = ExactPivot<T>>
[[nodiscard]] std::size_t rank_of(Mat<T> M, Policy pol = {}) {
    return rref_in_place(M, pol).size();
}

/// Basis of the right kernel {x : Mx = 0}, one column vector per basis
/// element, produced from the rref free-variable parametrization.
template <class T, class Policy = ExactPivot<T>>
[[nodiscard]] std::vector<std::vector<T>> kernel_of(Mat<T> M, Policy pol = {}) {
    auto pivots = rref_in_place(M, pol);
    std::vector<bool> is_pivot(M.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t free_col = 0; free_col < M.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<T> v(M.cols(), T(0));
        v[free_col] = T(1);
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            v[pivots[pr]] = -M(pr, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solve Ax = b; throws if inconsistent or underdetermined pick is needed
/// (returns the unique solution of a full-column-rank system, else the
/// particular solution with free variables set to zero).
template <class T, class Policy = ExactPivot<T>>
[[nodiscard]] std::vector<T> solve(const Mat<T>& A, const std::vector<T>& b, Policy pol = {}) {
    if (A.rows() != b.size()) throw std::invalid_argument("solve: shape mismatch");
    Mat<T> M(A.rows(), A.cols() + 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) M(i, j) = A(i, j);
        M(i, A.cols()) = b[i];
    }
    auto pivots = rref_in_place(M, pol);
    if (!pivots.empty() && pivots.back() == A.cols())
        throw std::runtime_error("solve: inconsistent system");
    std::vector<T> x(A.cols(), T(0));
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = M(pr, A.cols());
    return x;
}

template <class T, class Policy = ExactPivot<T>>
[[nodiscard]] Mat<T> inverse_of(const Mat<T>& A, Policy pol = {}) {
    if (A.rows() != A.cols()) throw std::invalid_argument("inverse_of: not square");
    std::size_t n = A.rows();
    Mat<T> M(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) M(i, j) = A(i, j);
        M(i, n + i) = T(1);
    }
    auto pivots = rref_in_place(M, pol);
    if (pivots.size() != n) throw std::runtime_error("inverse_of: singular matrix");
    Mat<T> R(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) R(i, j) = M(i, n + j);
    return R;
}

/// Determinant by elimination (exact path keeps entries rational).
template <class T, class Policy = ExactPivot<T>>
[[nodiscard]] T det_of(Mat<T> M, Policy pol = {}) {
    if (M.rows() != M.cols()) throw std::invalid_argument("det_of: not square");
    T det(1);
    std::size_t n = M.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = col;
        bool found = false;
        for (std::size_t i = col; i < n; ++i) {
            if (pol.is_zero(M(i, col))) continue;
            if (!found || pol.prefer(M(i, col), M(best, col))) best = i;
            found = true;
        }
        if (!found) return T(0);
        if (best != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(M(col, j), M(best, j));
            det = -det;
        }
        det *= M(col, col);
        T inv = T(1) / M(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (pol.is_zero(M(i, col))) continue;
            T f = M(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) M(i, j) -= f * M(col, j);
        }
    }
    return det;
}

using RatMat = Mat<Rat>;

}  // namespace lg3
