#pragma once

#include <vector>

#include "kellipse/gaussian.hpp"

namespace kellipse {

/// Minimal dense row-major matrix.
template <class T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols, T fill = T()) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    T& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        Matrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
        return r;
    }
    Matrix scaled(const T& s) const {
        Matrix r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    bool is_symmetric() const {
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = i + 1; j < cols_; ++j)
                if (!((*this)(i, j) == (*this)(j, i))) return false;
        return true;
    }

  private:
    size_t rows_, cols_;
    std::vector<T> a_;
};

template <class T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            for (size_t k = 0; k < b.rows(); ++k)
                for (size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return r;
}

/// A (+) B = A (x) I + I (x) B; eigenvalues are the pairwise sums.
template <class T>
Matrix<T> tensor_sum(const Matrix<T>& a, const Matrix<T>& b) {
    return kronecker(a, Matrix<T>::identity(b.rows())) + kronecker(Matrix<T>::identity(a.rows()), b);
}

/// Exact determinant of a rational matrix: rows are scaled to integers, then
/// fraction-free Bareiss elimination runs over mpz.
Rational det_rational(const Matrix<Rational>& m);

/// Bareiss over an exact field (used for Sylvester matrices over Q(i)).
GaussianRational det_gaussian(const Matrix<GaussianRational>& m);

/// Determinant by LU with partial pivoting (float path for plots/oracles).
double det_lu(std::vector<double> a, int n);

/// Eigenvalues of a symmetric matrix by cyclic Jacobi, ascending order.
/// `a` is row-major n x n and is consumed.
std::vector<double> sym_eigenvalues(std::vector<double> a, int n);
double sym_lambda_min(std::vector<double> a, int n);

}  // namespace kellipse
