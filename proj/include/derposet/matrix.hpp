#pragma once

#include <cstddef>
#include <vector>
#include "derposet/field.hpp"

namespace derposet {

/// Dense matrix over an exact ring. A zero exemplar is kept so that rings
/// whose values carry runtime state (Fp moduli, Poly coefficient fields)
/// work even for matrices with no entries.
template <typename T>
class Matrix {
public:
    Matrix(size_t rows, size_t cols, const T& fill)
        : rows_(rows), cols_(cols), zero_(fill - fill), data_(rows * cols, fill) {}

    static Matrix identity(size_t n, const T& one) {
        Matrix m(n, n, one - one);
        for (size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const T& zero() const { return zero_; }

    T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix r(cols_, rows_, zero_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw SizeMismatch("matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_, a.zero_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                for (size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw SizeMismatch("matrix sum shape mismatch");
        Matrix r = a;
        for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw SizeMismatch("matrix diff shape mismatch");
        Matrix r = a;
        for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    size_t rows_, cols_;
    T zero_;
    std::vector<T> data_;
};

/// Kronecker product, block order row-major in the left factor.
template <typename T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols(), a.zero());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            for (size_t k = 0; k < b.rows(); ++k)
                for (size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return r;
}

// Ring conversions.
inline Matrix<mpq_class> to_rational(const Matrix<mpz_class>& m) {
    Matrix<mpq_class> r(m.rows(), m.cols(), mpq_class(0));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r(i, j) = mpq_class(m(i, j));
    return r;
}

inline Matrix<Fp> to_mod_p(const Matrix<mpz_class>& m, long long p) {
    require_prime(p);
    Matrix<Fp> r(m.rows(), m.cols(), Fp(0, p));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            mpz_class red = m(i, j) % mpz_class(static_cast<long>(p));
            r(i, j) = Fp(red.get_si(), p);
        }
    return r;
}

} // namespace derposet
