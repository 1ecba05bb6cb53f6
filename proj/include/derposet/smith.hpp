#pragma once

#include <vector>
#include "derposet/linalg.hpp"

namespace derposet {

namespace detail {

// Minimal-degree nonzero entry of the trailing submatrix, ties row-major.
template <typename F>
bool find_pivot(const Matrix<Poly<F>>& a, size_t t, size_t& pi, size_t& pj) {
    bool found = false;
    int best = -1;
    for (size_t i = t; i < a.rows(); ++i)
        for (size_t j = t; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            int d = a(i, j).degree();
            if (!found || d < best) {
                found = true;
                best = d;
                pi = i;
                pj = j;
            }
        }
    return found;
}

} // namespace detail

/// Diagonalize a polynomial matrix by row/column operations so that the
/// diagonal entries form a divisibility chain (Smith normal form over F[x]).
/// If u/v are given they accumulate the transforms: u * input * v = result.
template <typename F>
Matrix<Poly<F>> smith_normal_form(Matrix<Poly<F>> a,
                                  Matrix<Poly<F>>* u = nullptr,
                                  Matrix<Poly<F>>* v = nullptr) {
    using P = Poly<F>;
    size_t n = a.rows(), m = a.cols();
    P pone = field_one(a.zero());
    if (u) *u = Matrix<P>::identity(n, pone);
    if (v) *v = Matrix<P>::identity(m, pone);

    auto row_sub = [&](Matrix<P>& mat, size_t dst, size_t src, const P& q) {
        for (size_t j = 0; j < mat.cols(); ++j) mat(dst, j) -= q * mat(src, j);
    };
    auto col_sub = [&](Matrix<P>& mat, size_t dst, size_t src, const P& q) {
        for (size_t i = 0; i < mat.rows(); ++i) mat(i, dst) -= q * mat(i, src);
    };
    auto row_add = [&](Matrix<P>& mat, size_t dst, size_t src) {
        for (size_t j = 0; j < mat.cols(); ++j) mat(dst, j) += mat(src, j);
    };

    for (size_t t = 0; t < std::min(n, m); ++t) {
        for (;;) {
            size_t pi = t, pj = t;
            if (!detail::find_pivot(a, t, pi, pj)) {
                t = std::min(n, m); // trailing block zero
                break;
            }
            if (pi != t) {
                detail::swap_rows(a, pi, t);
                if (u) detail::swap_rows(*u, pi, t);
            }
            if (pj != t) {
                detail::swap_cols(a, pj, t);
                if (v) detail::swap_cols(*v, pj, t);
            }
            bool dirty = false;
            for (size_t i = t + 1; i < n; ++i) {
                if (a(i, t).is_zero()) continue;
                auto [q, r] = P::divmod(a(i, t), a(t, t));
                row_sub(a, i, t, q);
                if (u) row_sub(*u, i, t, q);
                if (!r.is_zero()) dirty = true;
            }
            for (size_t j = t + 1; j < m; ++j) {
                if (a(t, j).is_zero()) continue;
                auto [q, r] = P::divmod(a(t, j), a(t, t));
                col_sub(a, j, t, q);
                if (v) col_sub(*v, j, t, q);
                if (!r.is_zero()) dirty = true;
            }
            if (dirty) continue;
            // pivot divides its row and column; enforce divisibility of the
            // trailing block by pulling a bad row into the pivot row
            bool done = true;
            for (size_t i = t + 1; i < n && done; ++i)
                for (size_t j = t + 1; j < m && done; ++j) {
                    if (a(i, j).is_zero()) continue;
                    if (!P::divmod(a(i, j), a(t, t)).second.is_zero()) {
                        row_add(a, t, i);
                        if (u) row_add(*u, t, i);
                        done = false;
                    }
                }
            if (done) break;
        }
        if (t >= std::min(n, m)) break;
    }

    // normalize diagonal monic (scaling rows is a unit row operation)
    for (size_t t = 0; t < std::min(n, m); ++t) {
        if (a(t, t).is_zero() || a(t, t).leading() == field_one(a(t, t).one())) continue;
        F c = field_one(a(t, t).one()) / a(t, t).leading();
        for (size_t j = 0; j < m; ++j) a(t, j) = a(t, j) * c;
        if (u)
            for (size_t j = 0; j < n; ++j) (*u)(t, j) = (*u)(t, j) * c;
    }
    return a;
}

/// xI - M for a square matrix over a field.
template <typename F>
Matrix<Poly<F>> characteristic_matrix(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw NotSquare("characteristic matrix of non-square input");
    using P = Poly<F>;
    F one = field_one(m.zero());
    Matrix<P> a(m.rows(), m.cols(), P(one));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            P e = P::constant(-m(i, j));
            if (i == j) e += P::x(one);
            a(i, j) = e;
        }
    return a;
}

/// Nonconstant invariant factors of xI - M, monic, in divisibility order.
template <typename F>
std::vector<Poly<F>> invariant_factors(const Matrix<F>& m) {
    Matrix<Poly<F>> d = smith_normal_form(characteristic_matrix(m));
    std::vector<Poly<F>> factors;
    for (size_t t = 0; t < d.rows(); ++t)
        if (!d(t, t).is_constant()) factors.push_back(d(t, t));
    return factors;
}

/// Matrix similarity over a field: equality of invariant factor lists.
template <typename F>
bool similar(const Matrix<F>& m1, const Matrix<F>& m2) {
    if (m1.rows() != m2.rows() || m1.cols() != m2.cols())
        throw SizeMismatch("similar: size mismatch");
    return invariant_factors(m1) == invariant_factors(m2);
}

} // namespace derposet
