#pragma once

#include <optional>
#include <vector>
#include "derposet/matrix.hpp"
#include "derposet/poly.hpp"

namespace derposet {

namespace detail {

template <typename T>
void swap_rows(Matrix<T>& a, size_t r1, size_t r2) {
    if (r1 == r2) return;
    for (size_t j = 0; j < a.cols(); ++j) std::swap(a(r1, j), a(r2, j));
}

template <typename T>
void swap_cols(Matrix<T>& a, size_t c1, size_t c2) {
    if (c1 == c2) return;
    for (size_t i = 0; i < a.rows(); ++i) std::swap(a(i, c1), a(i, c2));
}

} // namespace detail

/// In-place reduced row echelon form; returns the pivot column indices.
template <typename F>
std::vector<size_t> rref(Matrix<F>& a) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        size_t pivot = r;
        while (pivot < a.rows() && field_is_zero(a(pivot, c))) ++pivot;
        if (pivot == a.rows()) continue;
        detail::swap_rows(a, pivot, r);
        F inv = field_one(a(r, c)) / a(r, c);
        for (size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (size_t i = 0; i < a.rows(); ++i) {
            if (i == r || field_is_zero(a(i, c))) continue;
            F f = a(i, c);
            for (size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <typename F>
size_t rank(Matrix<F> a) {
    return rref(a).size();
}

/// Columns form a basis of the right null space {v : Av = 0}, in the
/// reduced-echelon free-column convention.
template <typename F>
Matrix<F> nullspace(Matrix<F> a) {
    size_t n = a.cols();
    std::vector<size_t> pivots = rref(a);
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix<F> basis(n, free_cols.size(), a.zero());
    for (size_t k = 0; k < free_cols.size(); ++k) {
        size_t fc = free_cols[k];
        basis(fc, k) = field_one(a.zero());
        for (size_t r = 0; r < pivots.size(); ++r)
            basis(pivots[r], k) = -a(r, fc);
    }
    return basis;
}

/// Inverse over a field, or nullopt if singular.
template <typename F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
    if (a.rows() != a.cols()) throw NotSquare("inverse of non-square matrix");
    size_t n = a.rows();
    Matrix<F> aug(n, 2 * n, a.zero());
    F one = field_one(a.zero());
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = one;
    }
    std::vector<size_t> pivots = rref(aug);
    if (pivots.size() != n || (n > 0 && pivots.back() != n - 1)) return std::nullopt;
    Matrix<F> inv(n, n, a.zero());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

/// Solve AX = B for X. The system must be consistent with a unique
/// solution (A of full column rank).
template <typename F>
Matrix<F> solve(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows()) throw SizeMismatch("solve: row mismatch");
    size_t n = a.cols(), k = b.cols();
    Matrix<F> aug(a.rows(), n + k, a.zero());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        for (size_t j = 0; j < k; ++j) aug(i, n + j) = b(i, j);
    }
    std::vector<size_t> pivots = rref(aug);
    Matrix<F> x(n, k, a.zero());
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] >= n) throw Error("solve: inconsistent system");
        for (size_t j = 0; j < k; ++j) x(pivots[r], j) = aug(r, n + j);
    }
    if (pivots.size() != n) throw Error("solve: solution not unique");
    return x;
}

/// Determinant over a field by Gaussian elimination.
template <typename F>
F determinant(Matrix<F> a) {
    if (a.rows() != a.cols()) throw NotSquare("determinant of non-square matrix");
    size_t n = a.rows();
    F det = field_one(a.zero());
    for (size_t c = 0; c < n; ++c) {
        size_t pivot = c;
        while (pivot < n && field_is_zero(a(pivot, c))) ++pivot;
        if (pivot == n) return a.zero();
        if (pivot != c) {
            detail::swap_rows(a, pivot, c);
            det = -det;
        }
        det *= a(c, c);
        F inv = field_one(a(c, c)) / a(c, c);
        for (size_t i = c + 1; i < n; ++i) {
            if (field_is_zero(a(i, c))) continue;
            F f = a(i, c) * inv;
            for (size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

/// Exact inverse of an integer matrix with determinant +-1.
inline Matrix<mpz_class> inverse_unimodular(const Matrix<mpz_class>& m) {
    if (m.rows() != m.cols()) throw NotSquare("inverse of non-square matrix");
    Matrix<mpq_class> q = to_rational(m);
    mpq_class det = determinant(q);
    if (det != 1 && det != -1) throw NotUnimodular("determinant is " + scalar_str(det));
    auto inv = inverse(q);
    Matrix<mpz_class> r(m.rows(), m.cols(), mpz_class(0));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            mpq_class v = (*inv)(i, j);
            v.canonicalize();
            if (v.get_den() != 1) throw NotUnimodular("non-integer inverse entry");
            r(i, j) = v.get_num();
        }
    return r;
}

/// Characteristic polynomial det(xI - A) over a field, via Hessenberg
/// reduction and the leading-minor recurrence.
template <typename F>
Poly<F> char_poly_field(Matrix<F> a) {
    if (a.rows() != a.cols()) throw NotSquare("char_poly of non-square matrix");
    size_t n = a.rows();
    F one = field_one(a.zero());
    Poly<F> x = Poly<F>::x(one);
    if (n == 0) return Poly<F>::constant(one);

    // reduce to upper Hessenberg form by similarity
    for (size_t c = 0; c + 2 < n; ++c) {
        size_t pivot = c + 1;
        while (pivot < n && field_is_zero(a(pivot, c))) ++pivot;
        if (pivot == n) continue;
        detail::swap_rows(a, pivot, c + 1);
        detail::swap_cols(a, pivot, c + 1);
        F inv = one / a(c + 1, c);
        for (size_t r = c + 2; r < n; ++r) {
            if (field_is_zero(a(r, c))) continue;
            F f = a(r, c) * inv;
            for (size_t j = 0; j < n; ++j) a(r, j) -= f * a(c + 1, j);
            for (size_t i = 0; i < n; ++i) a(i, c + 1) += f * a(i, r);
        }
    }

    std::vector<Poly<F>> p;
    p.push_back(Poly<F>::constant(one));
    for (size_t k = 1; k <= n; ++k) {
        Poly<F> pk = (x - Poly<F>::constant(a(k - 1, k - 1))) * p[k - 1];
        F prod = one;
        for (size_t i = k - 1; i >= 1; --i) {
            prod *= a(i, i - 1);
            pk -= p[i - 1] * (a(i - 1, k - 1) * prod);
        }
        p.push_back(pk);
    }
    return p[n];
}

/// Characteristic polynomial of an integer matrix; monic coefficient list,
/// ascending powers.
inline std::vector<mpz_class> char_poly(const Matrix<mpz_class>& m) {
    Poly<mpq_class> p = char_poly_field(to_rational(m));
    std::vector<mpz_class> coeffs;
    for (int i = 0; i <= p.degree(); ++i) {
        mpq_class c = p.coeff(i);
        c.canonicalize();
        coeffs.push_back(c.get_num()); // denominators cancel for integer input
    }
    return coeffs;
}

inline Poly<Fp> char_poly_mod_p(const Matrix<mpz_class>& m, long long p) {
    return char_poly_field(to_mod_p(m, p));
}

} // namespace derposet
