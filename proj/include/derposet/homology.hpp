#pragma once

#include <functional>
#include <map>
#include "derposet/linalg.hpp"
#include "derposet/poset.hpp"

namespace derposet {

/// All chains of the poset, grouped by dimension (a p-simplex is a chain
/// of p+1 elements); each group sorted lexicographically by index sequence.
struct OrderComplex {
    std::vector<std::vector<std::vector<size_t>>> simplices_by_dim;

    int dim() const { return static_cast<int>(simplices_by_dim.size()) - 1; }
    size_t count(int p) const {
        if (p < 0 || p > dim()) return 0;
        return simplices_by_dim[static_cast<size_t>(p)].size();
    }
};

inline OrderComplex order_complex(const Poset& x) {
    OrderComplex k;
    std::vector<size_t> chain;
    auto record = [&](const std::vector<size_t>& c) {
        size_t p = c.size() - 1;
        if (k.simplices_by_dim.size() <= p) k.simplices_by_dim.resize(p + 1);
        k.simplices_by_dim[p].push_back(c);
    };
    std::function<void()> extend = [&]() {
        record(chain);
        size_t last = chain.back();
        for (size_t j = 0; j < x.size(); ++j) {
            if (!x.less(last, j)) continue;
            chain.push_back(j);
            extend();
            chain.pop_back();
        }
    };
    for (size_t i = 0; i < x.size(); ++i) {
        chain = {i};
        extend();
    }
    for (auto& level : k.simplices_by_dim) std::sort(level.begin(), level.end());
    return k;
}

/// Simplicial coboundary d^p : C^p -> C^{p+1}, face j signed (-1)^j.
template <typename F>
Matrix<F> coboundary(const OrderComplex& k, int p, const F& one) {
    size_t rows = k.count(p + 1), cols = k.count(p);
    Matrix<F> d(rows, cols, one - one);
    if (rows == 0 || cols == 0) return d;
    std::map<std::vector<size_t>, size_t> index;
    for (size_t c = 0; c < cols; ++c) index[k.simplices_by_dim[static_cast<size_t>(p)][c]] = c;
    for (size_t r = 0; r < rows; ++r) {
        const auto& sigma = k.simplices_by_dim[static_cast<size_t>(p) + 1][r];
        F sign = one;
        for (size_t j = 0; j < sigma.size(); ++j) {
            std::vector<size_t> face;
            for (size_t t = 0; t < sigma.size(); ++t)
                if (t != j) face.push_back(sigma[t]);
            d(r, index.at(face)) += sign;
            sign = -sign;
        }
    }
    return d;
}

template <typename F>
std::vector<size_t> betti_impl(const OrderComplex& k, const F& one) {
    int top = k.dim();
    std::vector<size_t> ranks(static_cast<size_t>(top) + 1, 0);
    for (int p = 0; p <= top; ++p) ranks[static_cast<size_t>(p)] = rank(coboundary(k, p, one));
    std::vector<size_t> b(static_cast<size_t>(top) + 1, 0);
    for (int p = 0; p <= top; ++p) {
        size_t ker = k.count(p) - ranks[static_cast<size_t>(p)];
        size_t im = p == 0 ? 0 : ranks[static_cast<size_t>(p) - 1];
        b[static_cast<size_t>(p)] = ker - im;
    }
    return b;
}

/// Unreduced Betti numbers beta^0..beta^dim over the given field.
inline std::vector<size_t> betti(const Poset& x, const FieldTag& field) {
    OrderComplex k = order_complex(x);
    if (field.is_rational()) return betti_impl(k, mpq_class(1));
    require_prime(field.p);
    return betti_impl(k, Fp(1, field.p));
}

/// Alternating face count; field-independent.
inline mpz_class euler_char_simplicial(const Poset& x) {
    OrderComplex k = order_complex(x);
    mpz_class chi = 0;
    for (int p = 0; p <= k.dim(); ++p) {
        mpz_class c(static_cast<unsigned long>(k.count(p)));
        chi += (p % 2 == 0) ? c : -c;
    }
    return chi;
}

} // namespace derposet
