#pragma once

#include <variant>
#include "derposet/poset.hpp"

namespace derposet {

/// Lexicographic sum along S: element s of S is replaced by the poset
/// components[s]; x <= y across components iff s < t in S. Labels "s.x".
inline Poset lex_sum(const Poset& s, const std::vector<Poset>& components) {
    if (components.size() != s.size())
        throw MissingComponent("lex_sum needs one component per element of the shape poset");
    for (const Poset& c : components)
        if (c.size() == 0) throw EmptyComponent("empty component in lex_sum");

    std::vector<size_t> offset(s.size(), 0);
    size_t n = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        offset[i] = n;
        n += components[i].size();
    }
    std::vector<std::string> labels;
    labels.reserve(n);
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t a = 0; a < components[i].size(); ++a)
            labels.push_back(s.label(i) + "." + components[i].label(a));
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t a = 0; a < components[i].size(); ++a)
            for (size_t j = 0; j < s.size(); ++j)
                for (size_t b = 0; b < components[j].size(); ++b) {
                    bool rel = (i == j) ? components[i].leq(a, b) : s.less(i, j);
                    leq[offset[i] + a][offset[j] + b] = rel;
                }
    return Poset::from_leq(std::move(labels), std::move(leq));
}

/// Ordinal sum: every element of an earlier part below every element of a
/// later part. Lexicographic sum along the chain 1 < 2 < ... < k.
inline Poset ordinal_sum(const std::vector<Poset>& parts) {
    if (parts.empty()) throw EmptyList("ordinal sum of no posets");
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> rels;
    for (size_t i = 0; i < parts.size(); ++i) labels.push_back(std::to_string(i + 1));
    for (size_t i = 0; i + 1 < parts.size(); ++i) rels.emplace_back(labels[i], labels[i + 1]);
    return lex_sum(Poset::from_relations(std::move(labels), rels), parts);
}

inline Poset ordinal_sum(const Poset& a, const Poset& b) { return ordinal_sum({a, b}); }

/// Two-level partition S0 < S1 of a bipartite poset.
struct BipartitePartition {
    std::vector<size_t> s0, s1;
};

/// S0 = minimal elements lying below something, S1 = the rest; validated
/// against the bipartite definition. Antichains are rejected (no strict
/// relation pins down the split).
inline std::optional<BipartitePartition> bipartite_partition(const Poset& s) {
    size_t n = s.size();
    BipartitePartition part;
    for (size_t i = 0; i < n; ++i) {
        bool minimal = true, below = false;
        for (size_t j = 0; j < n; ++j) {
            if (s.less(j, i)) minimal = false;
            if (s.less(i, j)) below = true;
        }
        if (minimal && below)
            part.s0.push_back(i);
        else
            part.s1.push_back(i);
    }
    if (part.s0.empty() || part.s1.empty()) return std::nullopt;
    std::vector<bool> in_s0(n, false);
    for (size_t i : part.s0) in_s0[i] = true;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (s.less(i, j) && !(in_s0[i] && !in_s0[j])) return std::nullopt;
    return part;
}

/// The derived-equivalent pair of a bipartite lexicographic sum: the sum
/// along S and the sum along its opposite.
inline std::pair<Poset, Poset> bipartite_flip(const Poset& s, const std::vector<Poset>& components) {
    if (!bipartite_partition(s)) throw NotBipartite("shape poset is not bipartite");
    return {lex_sum(s, components), lex_sum(opposite(s), components)};
}

/// Witness that the compatibility condition fails: y <= y' in Y, u' <= u
/// in U, y < u, but not y' < u'.
struct StarViolation {
    size_t y, y_prime, u_prime, u;
};

namespace detail {

inline std::vector<size_t> open_complement(const Poset& x, const std::vector<size_t>& y_set) {
    if (!is_closed(x, y_set)) throw NotClosed("subset is not downward closed");
    std::vector<bool> in(x.size(), false);
    for (size_t i : y_set) in[i] = true;
    std::vector<size_t> u;
    for (size_t i = 0; i < x.size(); ++i)
        if (!in[i]) u.push_back(i);
    return u;
}

} // namespace detail

/// The reordered poset X' = U + Y whose incidence algebra is the tilted
/// endomorphism algebra, when the compatibility condition holds; otherwise
/// the lexicographically first violating quadruple.
inline std::variant<Poset, StarViolation> ay_poset(const Poset& x, std::vector<size_t> y_set) {
    std::sort(y_set.begin(), y_set.end());
    std::vector<size_t> u_set = detail::open_complement(x, y_set);
    for (size_t y : y_set)
        for (size_t yp : y_set) {
            if (!x.leq(y, yp)) continue;
            for (size_t up : u_set)
                for (size_t u : u_set) {
                    if (!x.leq(up, u) || !x.less(y, u)) continue;
                    if (!x.less(yp, up)) return StarViolation{y, yp, up, u};
                }
        }
    size_t n = x.size();
    std::vector<bool> in_y(n, false);
    for (size_t i : y_set) in_y[i] = true;
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (in_y[i] == in_y[j])
                leq[i][j] = x.leq(i, j);
            else if (!in_y[i] && in_y[j]) // u <=' y iff y < u in X
                leq[i][j] = x.less(j, i);
        }
    for (size_t i = 0; i < n; ++i) leq[i][i] = true;
    return Poset::from_leq(x.labels(), std::move(leq));
}

/// Finite-dimensional algebra given by a basis with 0/1 structure constants.
struct AlgebraPresentation {
    struct Entry {
        int sign = 0;     // 0 means the product is zero
        size_t index = 0; // basis index when sign != 0
    };
    std::vector<std::string> basis;
    std::vector<size_t> idempotents; // their sum is the unit
    std::vector<std::vector<Entry>> product;

    size_t dim() const { return basis.size(); }
};

/// The endomorphism algebra of the truncated projective/injective
/// collection, by its explicit basis and product rules.
inline AlgebraPresentation ay_algebra(const Poset& x, std::vector<size_t> y_set) {
    std::sort(y_set.begin(), y_set.end());
    std::vector<size_t> u_set = detail::open_complement(x, y_set);

    enum Kind { YY, UU, UY };
    struct Basis {
        Kind kind;
        size_t a, b;
    };
    std::vector<Basis> elems;
    for (size_t y : y_set)
        for (size_t yp : y_set)
            if (x.leq(y, yp)) elems.push_back({YY, y, yp});
    for (size_t up : u_set)
        for (size_t u : u_set)
            if (x.leq(up, u)) elems.push_back({UU, up, u});
    for (size_t u : u_set)
        for (size_t y : y_set)
            if (x.less(y, u)) elems.push_back({UY, u, y});

    auto find = [&](Kind k, size_t a, size_t b) -> size_t {
        for (size_t i = 0; i < elems.size(); ++i)
            if (elems[i].kind == k && elems[i].a == a && elems[i].b == b) return i;
        throw Error("internal: basis element not found");
    };

    AlgebraPresentation alg;
    for (const Basis& e : elems)
        alg.basis.push_back("e_{" + x.label(e.a) + "," + x.label(e.b) + "}");
    for (size_t i = 0; i < elems.size(); ++i)
        if (elems[i].kind != UY && elems[i].a == elems[i].b) alg.idempotents.push_back(i);

    size_t m = elems.size();
    alg.product.assign(m, std::vector<AlgebraPresentation::Entry>(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            const Basis& a = elems[i];
            const Basis& b = elems[j];
            AlgebraPresentation::Entry& e = alg.product[i][j];
            if (a.kind == YY && b.kind == YY && a.b == b.a)
                e = {1, find(YY, a.a, b.b)};
            else if (a.kind == UU && b.kind == UU && a.b == b.a)
                e = {1, find(UU, a.a, b.b)};
            else if (a.kind == UY && b.kind == YY && a.b == b.a) {
                if (x.less(b.b, a.a)) e = {1, find(UY, a.a, b.b)};
            } else if (a.kind == UU && b.kind == UY && a.b == b.a) {
                if (x.less(b.b, a.a)) e = {1, find(UY, a.a, b.b)};
            }
        }
    return alg;
}

} // namespace derposet
