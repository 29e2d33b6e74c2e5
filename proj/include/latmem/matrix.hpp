#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "latmem/rational.hpp"

namespace latmem {

template <class T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::initializer_list<T> entries)
        : rows_(rows), cols_(cols), a_(entries) {
        check(a_.size() == rows * cols, "Matrix: entry count mismatch");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<T> col(std::size_t j) const {
        std::vector<T> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    std::vector<T> row(std::size_t i) const {
        std::vector<T> v(cols_);
        for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
        return v;
    }
    void set_col(std::size_t j, const std::vector<T>& v) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    Matrix transposed() const {
        Matrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<T> a_;
};

using RatMatrix = Matrix<Rat>;
using IntMatrix = Matrix<Int>;

RatMatrix to_rat(const IntMatrix& m);
RatVector to_rat(const IntVector& v);

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    check(a.cols() == b.rows(), "matrix product: shape mismatch");
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x) {
    check(a.cols() == x.size(), "matrix-vector product: shape mismatch");
    std::vector<T> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

RatVector mul(const RatMatrix& a, const IntVector& x);

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
    check(a.size() == b.size(), "dot: length mismatch");
    T s = T(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}
Rat dot(const IntVector& a, const RatVector& b);
Int dot_ii(const IntVector& a, const IntVector& b);

bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);
Rat norm2_sq(const RatVector& v);
Rat norm2_sq(const IntVector& v);

// Exact Gauss-Jordan inverse. Throws Singular.
RatMatrix rat_inverse(const RatMatrix& m);
Rat rat_det(const RatMatrix& m);
std::size_t rat_rank(RatMatrix m);

// Solve A x = b exactly over Q; nullopt when inconsistent. For underdetermined
// systems returns one solution (free variables set to zero).
std::optional<RatVector> rat_solve(const RatMatrix& a, const RatVector& b);

// Unit lower-triangular L and positive diagonal d with A = L diag(d) L^T.
// Throws NotPositiveDefinite when a pivot is <= 0.
struct Ldlt {
    RatMatrix l;
    RatVector d;
};
Ldlt ldlt(const RatMatrix& a);

Int lcm_of_denominators(const RatVector& v);
Int gcd_of(const IntVector& v);

Int size_of(const RatMatrix& m);
Int size_of(const IntMatrix& m);
Int size_of(const RatVector& v);
Int size_of(const IntVector& v);

}  // namespace latmem
