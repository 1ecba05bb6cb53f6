#pragma once

#include <sstream>
#include "derposet/homology.hpp"
#include "derposet/smith.hpp"

namespace derposet {

/// 0/1 matrix of the relation, rows and columns in canonical linear
/// extension order (upper-unitriangular).
inline Matrix<mpz_class> incidence_matrix(const Poset& x) {
    std::vector<size_t> order = linear_extension(x);
    size_t n = x.size();
    Matrix<mpz_class> m(n, n, mpz_class(0));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            if (x.leq(order[a], order[b])) m(a, b) = 1;
    return m;
}

inline Matrix<mpz_class> mobius_matrix(const Poset& x) {
    return inverse_unimodular(incidence_matrix(x));
}

/// Mobius function in original element indices: mu(i,j).
inline mpz_class mobius_value(const Poset& x, size_t i, size_t j) {
    std::vector<size_t> order = linear_extension(x);
    std::vector<size_t> pos(x.size());
    for (size_t a = 0; a < order.size(); ++a) pos[order[a]] = a;
    Matrix<mpz_class> mu = mobius_matrix(x);
    return mu(pos[i], pos[j]);
}

/// The incidence matrix times the inverse of its transpose (no extra sign).
inline Matrix<mpz_class> coxeter_matrix(const Poset& x) {
    Matrix<mpz_class> inc = incidence_matrix(x);
    return inc * inverse_unimodular(inc).transpose();
}

/// Entry sum of the inverse incidence matrix.
inline mpz_class euler_char_mobius(const Poset& x) {
    Matrix<mpz_class> mu = mobius_matrix(x);
    mpz_class s = 0;
    for (size_t i = 0; i < mu.rows(); ++i)
        for (size_t j = 0; j < mu.cols(); ++j) s += mu(i, j);
    return s;
}

namespace detail {

inline std::vector<std::string> factor_strings(const std::vector<Poly<mpq_class>>& fs) {
    std::vector<std::string> out;
    for (const auto& f : fs) out.push_back(f.str());
    return out;
}
inline std::vector<std::string> factor_strings(const std::vector<Poly<Fp>>& fs) {
    std::vector<std::string> out;
    for (const auto& f : fs) out.push_back(f.str());
    return out;
}

template <typename T>
std::string seq_str(const std::vector<T>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

inline std::string poly_coeffs_str(const std::vector<mpz_class>& asc) {
    // render an ascending coefficient list with descending powers
    std::vector<mpq_class> q(asc.begin(), asc.end());
    return Poly<mpq_class>(q, mpq_class(1)).str();
}

inline std::vector<size_t> padded(std::vector<size_t> v, size_t len) {
    v.resize(std::max(v.size(), len), 0);
    return v;
}

} // namespace detail

/// The full invariant battery of one poset for a list of primes and fields.
struct InvariantReport {
    size_t n = 0;
    size_t component_count = 0;
    std::vector<size_t> component_sizes; // sorted multiset
    int dim = 0;
    mpz_class mobius_entry_sum;
    std::vector<mpz_class> coxeter_charpoly;            // ascending coefficients
    std::vector<std::string> q_invariant_factors;        // printed polynomials
    std::map<long long, std::vector<std::string>> p_invariant_factors;
    std::map<FieldTag, std::vector<size_t>> betti_by_field;
    mpz_class euler_char;
};

inline InvariantReport invariant_report(const Poset& x, const std::vector<long long>& primes,
                                        const std::vector<FieldTag>& fields) {
    for (long long p : primes) require_prime(p);
    InvariantReport r;
    r.n = x.size();
    auto comps = connected_components(x);
    r.component_count = comps.size();
    for (const auto& c : comps) r.component_sizes.push_back(c.size());
    std::sort(r.component_sizes.begin(), r.component_sizes.end());
    r.dim = longest_chain(x);
    r.mobius_entry_sum = euler_char_mobius(x);
    r.euler_char = r.mobius_entry_sum;

    Matrix<mpz_class> cox = coxeter_matrix(x);
    r.coxeter_charpoly = char_poly(cox);
    auto q_factors = invariant_factors(to_rational(cox));
    r.q_invariant_factors = detail::factor_strings(q_factors);
    for (long long p : primes)
        r.p_invariant_factors[p] = detail::factor_strings(invariant_factors(to_mod_p(cox, p)));
    for (const FieldTag& f : fields) r.betti_by_field[f] = betti(x, f);

    // internal cross-checks
    for (const auto& [field, b] : r.betti_by_field) {
        mpz_class chi = 0;
        for (size_t i = 0; i < b.size(); ++i) {
            mpz_class v(static_cast<unsigned long>(b[i]));
            chi += (i % 2 == 0) ? v : -v;
        }
        if (chi != r.euler_char)
            throw Error("invariant report inconsistency: Betti vs Mobius Euler characteristic over " +
                        field.name());
    }
    {
        Poly<mpq_class> prod = Poly<mpq_class>::constant(mpq_class(1));
        for (const auto& f : q_factors) prod *= f;
        std::vector<mpq_class> cc(r.coxeter_charpoly.begin(), r.coxeter_charpoly.end());
        if (prod != Poly<mpq_class>(cc, mpq_class(1)))
            throw Error("invariant report inconsistency: invariant factor product vs char poly");
    }
    return r;
}

/// Outcome of the pairwise comparison: either the first invariant that
/// differs, or the list of invariants that were checked and agree.
struct Verdict {
    bool distinguished = false;
    std::string invariant;
    std::string value_x, value_y;
    std::vector<std::string> checked;
};

/// Necessary-condition battery, fixed order. NotDistinguished is NOT a
/// proof of derived equivalence.
inline Verdict distinguish(const Poset& x, const Poset& y, const std::vector<long long>& primes) {
    for (long long p : primes) require_prime(p);
    Verdict v;
    auto fail = [&](const std::string& name, const std::string& vx, const std::string& vy) {
        v.distinguished = true;
        v.invariant = name;
        v.value_x = vx;
        v.value_y = vy;
        return v;
    };
    auto pass = [&](const std::string& name) { v.checked.push_back(name); };

    if (x.size() != y.size())
        return fail("point count", std::to_string(x.size()), std::to_string(y.size()));
    pass("point count");

    auto cx = connected_components(x), cy = connected_components(y);
    if (cx.size() != cy.size())
        return fail("component count", std::to_string(cx.size()), std::to_string(cy.size()));
    pass("component count");

    std::vector<size_t> sx, sy;
    for (const auto& c : cx) sx.push_back(c.size());
    for (const auto& c : cy) sy.push_back(c.size());
    std::sort(sx.begin(), sx.end());
    std::sort(sy.begin(), sy.end());
    if (sx != sy)
        return fail("component size multiset", detail::seq_str(sx), detail::seq_str(sy));
    pass("component size multiset");

    mpz_class chix = euler_char_mobius(x), chiy = euler_char_mobius(y);
    if (chix != chiy) return fail("Euler characteristic", chix.get_str(), chiy.get_str());
    pass("Euler characteristic");

    std::vector<FieldTag> fields{rational_field()};
    for (long long p : primes) fields.push_back(FieldTag{p});
    for (const FieldTag& f : fields) {
        auto bx = betti(x, f), by = betti(y, f);
        size_t len = std::max(bx.size(), by.size());
        bx = detail::padded(bx, len);
        by = detail::padded(by, len);
        std::string name = "Betti numbers over " + f.name();
        if (bx != by) return fail(name, detail::seq_str(bx), detail::seq_str(by));
        pass(name);
    }

    Matrix<mpz_class> coxx = coxeter_matrix(x), coxy = coxeter_matrix(y);
    auto cpx = char_poly(coxx), cpy = char_poly(coxy);
    if (cpx != cpy)
        return fail("Coxeter characteristic polynomial", detail::poly_coeffs_str(cpx),
                    detail::poly_coeffs_str(cpy));
    pass("Coxeter characteristic polynomial");

    auto qx = detail::factor_strings(invariant_factors(to_rational(coxx)));
    auto qy = detail::factor_strings(invariant_factors(to_rational(coxy)));
    if (qx != qy)
        return fail("invariant factors over Q", detail::seq_str(qx), detail::seq_str(qy));
    pass("invariant factors over Q");

    for (long long p : primes) {
        auto px = detail::factor_strings(invariant_factors(to_mod_p(coxx, p)));
        auto py = detail::factor_strings(invariant_factors(to_mod_p(coxy, p)));
        std::string name = "invariant factors over F_" + std::to_string(p);
        if (px != py) return fail(name, detail::seq_str(px), detail::seq_str(py));
        pass(name);
    }
    return v;
}

/// All primes up to 50: covers the counterexample prime with margin.
inline std::vector<long long> default_primes() {
    return {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
}

} // namespace derposet
