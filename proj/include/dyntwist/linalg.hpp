#pragma once

// Dense exact linear algebra over a field F providing field_is_zero / field_inverse.
// Pivoting is deterministic (first nonzero entry scanning rows top-down), so
// every result is reproducible across runs and platforms.

#include <stdexcept>
#include <vector>

#include "dyntwist/polynomial.hpp"
#include "dyntwist/rational.hpp"

namespace dyntwist {

template <class F>
using Vec = std::vector<F>;

template <class F>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, F{}) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = unit();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    F& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const F& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!field_is_zero(x)) return false;
        return true;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same(a, b);
        Matrix r(a.rows_, a.cols_);
        for (size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] + b.a_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same(a, b);
        Matrix r(a.rows_, a.cols_);
        for (size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] - b.a_[k];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (field_is_zero(a.at(i, k))) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    if (field_is_zero(b.at(k, j))) continue;
                    r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
                }
            }
        return r;
    }

    Matrix scaled(const F& c) const {
        Matrix r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * c;
        return r;
    }

    Matrix transposed() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (size_t k = 0; k < a.a_.size(); ++k)
            if (!(a.a_[k] == b.a_[k])) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Vec<F> apply(const Vec<F>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Matrix::apply: shape mismatch");
        Vec<F> r(rows_, F{});
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                if (field_is_zero(at(i, j)) || field_is_zero(v[j])) continue;
                r[i] = r[i] + at(i, j) * v[j];
            }
        return r;
    }

    /// Kronecker product: (a (x) b)(i1*rb+i2, j1*cb+j2) = a(i1,j1) b(i2,j2).
    friend Matrix kron(const Matrix& a, const Matrix& b) {
        Matrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (int i1 = 0; i1 < a.rows_; ++i1)
            for (int j1 = 0; j1 < a.cols_; ++j1) {
                if (field_is_zero(a.at(i1, j1))) continue;
                for (int i2 = 0; i2 < b.rows_; ++i2)
                    for (int j2 = 0; j2 < b.cols_; ++j2)
                        r.at(i1 * b.rows_ + i2, j1 * b.cols_ + j2) = a.at(i1, j1) * b.at(i2, j2);
            }
        return r;
    }

    static F unit() { return field_unit<F>(); }

private:
    static void check_same(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    }

    int rows_, cols_;
    std::vector<F> a_;
};

enum class SolveStatus { Unique, Family, Inconsistent };

template <class F>
struct SolveResult {
    SolveStatus status = SolveStatus::Inconsistent;
    Vec<F> particular;          // defined unless Inconsistent
    std::vector<Vec<F>> kernel; // basis of the homogeneous solution space
};

/// Row-reduce [A | B] in place; returns pivot columns of A.
template <class F>
std::vector<int> row_reduce(Matrix<F>& A, Matrix<F>* B = nullptr) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < A.cols() && row < A.rows(); ++col) {
        int p = -1;
        for (int i = row; i < A.rows(); ++i)
            if (!field_is_zero(A.at(i, col))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row) {
            for (int j = 0; j < A.cols(); ++j) std::swap(A.at(p, j), A.at(row, j));
            if (B)
                for (int j = 0; j < B->cols(); ++j) std::swap(B->at(p, j), B->at(row, j));
        }
        F inv = field_inverse(A.at(row, col));
        for (int j = 0; j < A.cols(); ++j) A.at(row, j) = A.at(row, j) * inv;
        if (B)
            for (int j = 0; j < B->cols(); ++j) B->at(row, j) = B->at(row, j) * inv;
        for (int i = 0; i < A.rows(); ++i) {
            if (i == row || field_is_zero(A.at(i, col))) continue;
            F f = A.at(i, col);
            for (int j = 0; j < A.cols(); ++j) A.at(i, j) = A.at(i, j) - f * A.at(row, j);
            if (B)
                for (int j = 0; j < B->cols(); ++j) B->at(i, j) = B->at(i, j) - f * B->at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
SolveResult<F> solve_linear(Matrix<F> A, Vec<F> b) {
    if (static_cast<int>(b.size()) != A.rows()) throw std::invalid_argument("solve_linear: shape mismatch");
    Matrix<F> B(A.rows(), 1);
    for (int i = 0; i < A.rows(); ++i) B.at(i, 0) = b[i];
    std::vector<int> pivots = row_reduce(A, &B);
    int rank = static_cast<int>(pivots.size());
    SolveResult<F> res;
    for (int i = rank; i < A.rows(); ++i)
        if (!field_is_zero(B.at(i, 0))) {
            res.status = SolveStatus::Inconsistent;
            return res;
        }
    res.particular.assign(A.cols(), F{});
    for (int r = 0; r < rank; ++r) res.particular[pivots[r]] = B.at(r, 0);
    std::vector<bool> is_pivot(A.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    for (int c = 0; c < A.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec<F> k(A.cols(), F{});
        k[c] = Matrix<F>::unit();
        for (int r = 0; r < rank; ++r) k[pivots[r]] = F{} - A.at(r, c);
        res.kernel.push_back(std::move(k));
    }
    res.status = res.kernel.empty() ? SolveStatus::Unique : SolveStatus::Family;
    return res;
}

template <class F>
std::vector<Vec<F>> kernel_basis(Matrix<F> A) {
    Vec<F> zero(static_cast<size_t>(A.rows()), F{});
    return solve_linear(std::move(A), std::move(zero)).kernel;
}

template <class F>
int rank(Matrix<F> A) {
    return static_cast<int>(row_reduce(A).size());
}

template <class F>
Matrix<F> inverse(Matrix<F> A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("inverse: matrix not square");
    Matrix<F> B = Matrix<F>::identity(A.rows());
    std::vector<int> pivots = row_reduce(A, &B);
    if (static_cast<int>(pivots.size()) != A.rows()) throw std::domain_error("inverse: singular matrix");
    return B;
}

template <class F>
F det(Matrix<F> A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("det: matrix not square");
    int n = A.rows();
    F d = Matrix<F>::unit();
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int i = col; i < n; ++i)
            if (!field_is_zero(A.at(i, col))) {
                p = i;
                break;
            }
        if (p < 0) return F{};
        if (p != col) {
            for (int j = 0; j < n; ++j) std::swap(A.at(p, j), A.at(col, j));
            d = F{} - d;
        }
        d = d * A.at(col, col);
        F inv = field_inverse(A.at(col, col));
        for (int i = col + 1; i < n; ++i) {
            if (field_is_zero(A.at(i, col))) continue;
            F f = A.at(i, col) * inv;
            for (int j = col; j < n; ++j) A.at(i, j) = A.at(i, j) - f * A.at(col, j);
        }
    }
    return d;
}

}  // namespace dyntwist
