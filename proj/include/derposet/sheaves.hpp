#pragma once

#include <functional>
#include <map>
#include "derposet/homology.hpp"
#include "derposet/invariants.hpp"
#include "derposet/linalg.hpp"
#include "derposet/poset.hpp"

namespace derposet {

/// A diagram of finite-dimensional vector spaces over a poset: one stalk
/// per element, one linear map per Hasse cover x -> y (as a
/// dim(y) x dim(x) matrix), commuting along all cover paths.
template <typename FF>
struct Diagram {
    Poset base;
    FF one;
    std::vector<size_t> stalk; // per element, original index order
    std::map<std::pair<size_t, size_t>, Matrix<FF>> edge;

    size_t dim(size_t x) const { return stalk[x]; }
    bool is_zero() const {
        for (size_t d : stalk)
            if (d != 0) return false;
        return true;
    }
};

/// One matrix per element, stalk_F(x) -> stalk_G(x); naturality squares
/// commute with the edge maps.
template <typename FF>
struct DiagramMorphism {
    std::vector<Matrix<FF>> comp;
};

namespace detail {

template <typename FF>
Matrix<FF> zero_matrix(size_t r, size_t c, const FF& one) {
    return Matrix<FF>(r, c, one - one);
}

/// Indicator diagram: stalk k on the support set, identity maps between
/// adjacent supported stalks. The caller guarantees path-closedness of the
/// support (every saturated chain between supported elements is supported).
template <typename FF>
Diagram<FF> indicator_diagram(const Poset& x, const FF& one,
                              const std::function<bool(size_t)>& supported) {
    Diagram<FF> d{x, one, std::vector<size_t>(x.size(), 0), {}};
    for (size_t i = 0; i < x.size(); ++i)
        if (supported(i)) d.stalk[i] = 1;
    for (auto [a, b] : covers(x).covers) {
        Matrix<FF> m = zero_matrix(d.stalk[b], d.stalk[a], one);
        if (d.stalk[a] == 1 && d.stalk[b] == 1) m(0, 0) = one;
        d.edge.emplace(std::pair(a, b), m);
    }
    return d;
}

} // namespace detail

enum class SheafKind { simple, projective, injective, constant };

/// The paper's standard one-element sheaves and the constant sheaf.
template <typename FF>
Diagram<FF> standard_sheaf(const Poset& x, const FF& one, SheafKind kind,
                           std::optional<size_t> elem = std::nullopt) {
    if (kind != SheafKind::constant) {
        if (!elem) throw MissingElement("standard_sheaf needs an element");
        if (*elem >= x.size()) throw MissingElement("element index out of range");
    }
    switch (kind) {
        case SheafKind::simple:
            return detail::indicator_diagram<FF>(x, one, [&](size_t i) { return i == *elem; });
        case SheafKind::projective: // constant on the up-set U_x
            return detail::indicator_diagram<FF>(x, one,
                                                 [&](size_t i) { return x.leq(*elem, i); });
        case SheafKind::injective: // constant on the down-set of x
            return detail::indicator_diagram<FF>(x, one,
                                                 [&](size_t i) { return x.leq(i, *elem); });
        case SheafKind::constant:
            return detail::indicator_diagram<FF>(x, one, [](size_t) { return true; });
    }
    throw Error("unreachable");
}

enum class TruncKind { proj_trunc, inj_trunc };

/// Truncated projectives/injectives for a closed subset Y with open
/// complement U: P~_y supported on U_y intersected with Y, I~_u on the
/// down-set of u intersected with U.
template <typename FF>
Diagram<FF> truncated_sheaf(const Poset& x, const std::vector<size_t>& y_set, const FF& one,
                            TruncKind kind, size_t elem) {
    if (!is_closed(x, y_set)) throw NotClosed("Y is not downward closed");
    std::vector<bool> in_y(x.size(), false);
    for (size_t i : y_set) {
        if (i >= x.size()) throw MissingElement("subset index out of range");
        in_y[i] = true;
    }
    if (elem >= x.size()) throw MissingElement("element index out of range");
    if (kind == TruncKind::proj_trunc && !in_y[elem])
        throw ElementOnWrongSide("proj_trunc element must lie in Y");
    if (kind == TruncKind::inj_trunc && in_y[elem])
        throw ElementOnWrongSide("inj_trunc element must lie in the open complement");
    if (kind == TruncKind::proj_trunc)
        return detail::indicator_diagram<FF>(
            x, one, [&](size_t i) { return in_y[i] && x.leq(elem, i); });
    return detail::indicator_diagram<FF>(x, one,
                                         [&](size_t i) { return !in_y[i] && x.leq(i, elem); });
}

/// Composite map along one cover path from a to b (a <= b); commutativity
/// makes the choice of path immaterial.
template <typename FF>
Matrix<FF> path_map(const Diagram<FF>& f, size_t a, size_t b) {
    if (a == b) return Matrix<FF>::identity(f.stalk[a], f.one);
    for (const auto& [e, m] : f.edge) {
        if (e.first != a || !f.base.leq(e.second, b)) continue;
        return path_map(f, e.second, b) * m;
    }
    throw Error("path_map: no path found (not a <= b?)");
}

/// Exhaustive commutativity audit: all cover paths between every comparable
/// pair compose to the same map. Desk-scale only.
template <typename FF>
bool check_commutativity(const Diagram<FF>& f) {
    const Poset& x = f.base;
    auto hasse = covers(x).covers;
    for (size_t a = 0; a < x.size(); ++a)
        for (size_t b = 0; b < x.size(); ++b) {
            if (!x.less(a, b)) continue;
            std::vector<Matrix<FF>> composed;
            std::function<void(size_t, const Matrix<FF>&)> walk = [&](size_t at,
                                                                      const Matrix<FF>& acc) {
                if (at == b) {
                    composed.push_back(acc);
                    return;
                }
                for (auto [u, v] : hasse)
                    if (u == at && x.leq(v, b)) walk(v, f.edge.at({u, v}) * acc);
            };
            walk(a, Matrix<FF>::identity(f.stalk[a], f.one));
            for (const auto& m : composed)
                if (!(m == composed.front())) return false;
        }
    return true;
}

namespace detail {

template <typename FF>
void require_compatible(const Diagram<FF>& f, const Diagram<FF>& g) {
    if (!(f.base == g.base)) throw BaseMismatch("diagrams live over different posets");
    if (!field_is_zero(f.one - g.one)) throw FieldMismatch("diagrams over different fields");
}

/// Flattening layout for morphism spaces: per element in index order, the
/// entries of comp[x] row-major.
template <typename FF>
std::vector<size_t> hom_offsets(const Diagram<FF>& f, const Diagram<FF>& g) {
    std::vector<size_t> off(f.base.size() + 1, 0);
    for (size_t i = 0; i < f.base.size(); ++i) off[i + 1] = off[i] + g.stalk[i] * f.stalk[i];
    return off;
}

template <typename FF>
Matrix<FF> flatten_morphism(const Diagram<FF>& f, const Diagram<FF>& g,
                            const DiagramMorphism<FF>& phi) {
    auto off = hom_offsets(f, g);
    Matrix<FF> v(off.back(), 1, f.one - f.one);
    for (size_t x = 0; x < f.base.size(); ++x)
        for (size_t r = 0; r < g.stalk[x]; ++r)
            for (size_t c = 0; c < f.stalk[x]; ++c)
                v(off[x] + r * f.stalk[x] + c, 0) = phi.comp[x](r, c);
    return v;
}

} // namespace detail

template <typename FF>
struct HomSpace {
    size_t dim = 0;
    std::vector<DiagramMorphism<FF>> basis;
};

/// Solves the naturality constraints G_edge * phi_x = phi_y * F_edge for
/// every cover x -> y; deterministic echelon basis.
template <typename FF>
HomSpace<FF> hom_space(const Diagram<FF>& f, const Diagram<FF>& g) {
    detail::require_compatible(f, g);
    const Poset& x = f.base;
    auto off = detail::hom_offsets(f, g);
    size_t nvars = off.back();
    size_t nrows = 0;
    for (const auto& [e, m] : f.edge) nrows += g.stalk[e.second] * f.stalk[e.first];
    Matrix<FF> a(nrows, nvars, f.one - f.one);
    size_t row = 0;
    for (const auto& [e, fm] : f.edge) {
        auto [ex, ey] = e;
        const Matrix<FF>& gm = g.edge.at(e);
        for (size_t r = 0; r < g.stalk[ey]; ++r)
            for (size_t c = 0; c < f.stalk[ex]; ++c) {
                // (G_edge * phi_x - phi_y * F_edge)(r, c) = 0
                for (size_t k = 0; k < g.stalk[ex]; ++k)
                    a(row, off[ex] + k * f.stalk[ex] + c) += gm(r, k);
                for (size_t k = 0; k < f.stalk[ey]; ++k)
                    a(row, off[ey] + r * f.stalk[ey] + k) -= fm(k, c);
                ++row;
            }
    }
    Matrix<FF> ns = nullspace(a);
    HomSpace<FF> h;
    h.dim = ns.cols();
    for (size_t j = 0; j < ns.cols(); ++j) {
        DiagramMorphism<FF> phi;
        for (size_t z = 0; z < x.size(); ++z) {
            Matrix<FF> m = detail::zero_matrix(g.stalk[z], f.stalk[z], f.one);
            for (size_t r = 0; r < g.stalk[z]; ++r)
                for (size_t c = 0; c < f.stalk[z]; ++c)
                    m(r, c) = ns(off[z] + r * f.stalk[z] + c, j);
            phi.comp.push_back(m);
        }
        h.basis.push_back(phi);
    }
    return h;
}

/// Stalkwise composition psi o phi for phi: F -> G, psi: G -> H.
template <typename FF>
DiagramMorphism<FF> compose(const DiagramMorphism<FF>& psi, const DiagramMorphism<FF>& phi) {
    DiagramMorphism<FF> r;
    for (size_t x = 0; x < phi.comp.size(); ++x) r.comp.push_back(psi.comp[x] * phi.comp[x]);
    return r;
}

/// A projective object as explicit multiplicities of the indecomposables
/// P_x, realized as a Diagram with ordered summand blocks.
template <typename FF>
struct ProjCover {
    std::map<size_t, size_t> top; // element -> dim of the top there
    Diagram<FF> proj;             // direct sum of P_x^{top[x]}
    DiagramMorphism<FF> cover;    // stalkwise surjection proj -> F
};

namespace detail {

/// Realize the projective ⊕_x P_x^{m[x]}: the stalk at z concatenates, in
/// increasing x order, m[x] coordinates for every x <= z.
template <typename FF>
Diagram<FF> realize_projective(const Poset& x, const FF& one,
                               const std::map<size_t, size_t>& mult) {
    Diagram<FF> p{x, one, std::vector<size_t>(x.size(), 0), {}};
    auto offsets_at = [&](size_t z) {
        std::map<size_t, size_t> off;
        size_t total = 0;
        for (const auto& [gen, m] : mult)
            if (x.leq(gen, z)) {
                off[gen] = total;
                total += m;
            }
        return std::pair(off, total);
    };
    for (size_t z = 0; z < x.size(); ++z) p.stalk[z] = offsets_at(z).second;
    for (auto [a, b] : covers(x).covers) {
        auto [offa, da] = offsets_at(a);
        auto [offb, db] = offsets_at(b);
        Matrix<FF> m = zero_matrix(db, da, one);
        for (const auto& [gen, o] : offa)
            for (size_t c = 0; c < mult.at(gen); ++c) m(offb.at(gen) + c, o + c) = one;
        p.edge.emplace(std::pair(a, b), m);
    }
    return p;
}

/// Standard-basis complement of a column space: rows not hit by the pivots
/// of rref(R^T) complete span(columns of R) to the full space.
template <typename FF>
std::vector<size_t> complement_rows(const Matrix<FF>& r) {
    Matrix<FF> t = r.transpose();
    std::vector<size_t> piv = rref(t);
    std::vector<bool> hit(r.rows(), false);
    for (size_t c : piv) hit[c] = true;
    std::vector<size_t> out;
    for (size_t i = 0; i < r.rows(); ++i)
        if (!hit[i]) out.push_back(i);
    return out;
}

} // namespace detail

/// Minimal projective cover: top(x) = F(x) modulo the images of all
/// incoming cover maps; generators are standard-basis complements.
template <typename FF>
ProjCover<FF> top_and_cover(const Diagram<FF>& f) {
    const Poset& x = f.base;
    auto hasse = covers(x).covers;
    std::map<size_t, size_t> top;
    std::map<size_t, std::vector<size_t>> gens; // element -> chosen coordinate rows
    for (size_t z = 0; z < x.size(); ++z) {
        size_t rad_cols = 0;
        for (auto [a, b] : hasse)
            if (b == z) rad_cols += f.stalk[a];
        Matrix<FF> rad(f.stalk[z], rad_cols, f.one - f.one);
        size_t at = 0;
        for (auto [a, b] : hasse) {
            if (b != z) continue;
            const Matrix<FF>& m = f.edge.at({a, b});
            for (size_t r = 0; r < m.rows(); ++r)
                for (size_t c = 0; c < m.cols(); ++c) rad(r, at + c) = m(r, c);
            at += m.cols();
        }
        auto rows = detail::complement_rows(rad);
        if (!rows.empty()) {
            top[z] = rows.size();
            gens[z] = rows;
        }
    }
    ProjCover<FF> pc{top, detail::realize_projective(x, f.one, top), {}};
    for (size_t z = 0; z < x.size(); ++z) {
        Matrix<FF> m = detail::zero_matrix(f.stalk[z], pc.proj.stalk[z], f.one);
        size_t col = 0;
        for (const auto& [gen, rows] : gens) {
            if (!x.leq(gen, z)) continue;
            Matrix<FF> pm = path_map(f, gen, z);
            for (size_t r : rows) {
                for (size_t i = 0; i < f.stalk[z]; ++i) m(i, col) = pm(i, r);
                ++col;
            }
        }
        pc.cover.comp.push_back(m);
        if (rank(m) != f.stalk[z]) throw Error("projective cover not surjective");
    }
    return pc;
}

/// Stalkwise kernel of phi: F -> G with the induced edge maps; returns the
/// kernel diagram and its inclusion into F.
template <typename FF>
std::pair<Diagram<FF>, DiagramMorphism<FF>> kernel(const Diagram<FF>& f,
                                                   const DiagramMorphism<FF>& phi) {
    Diagram<FF> k{f.base, f.one, std::vector<size_t>(f.base.size(), 0), {}};
    DiagramMorphism<FF> incl;
    std::vector<Matrix<FF>> bases;
    for (size_t z = 0; z < f.base.size(); ++z) {
        Matrix<FF> b = nullspace(phi.comp[z]);
        k.stalk[z] = b.cols();
        bases.push_back(b);
        incl.comp.push_back(b);
    }
    for (const auto& [e, m] : f.edge)
        k.edge.emplace(e, solve(bases[e.second], m * bases[e.first]));
    return {k, incl};
}

/// Minimal projective resolution ... -> P1 -> P0 -> F -> 0 by iterated
/// covers of kernels; terminates within longest_chain(base) + 1 terms.
template <typename FF>
struct ProjResolution {
    std::vector<std::map<size_t, size_t>> multiplicities;
    std::vector<Diagram<FF>> terms;
    std::vector<DiagramMorphism<FF>> differentials; // terms[i+1] -> terms[i]
    DiagramMorphism<FF> augmentation;               // terms[0] -> F
};

template <typename FF>
ProjResolution<FF> projective_resolution(const Diagram<FF>& f) {
    ProjResolution<FF> res;
    size_t bound = static_cast<size_t>(longest_chain(f.base)) + 2;
    Diagram<FF> target = f;
    DiagramMorphism<FF> carry; // inclusion of target into the previous term
    while (true) {
        if (res.terms.size() > bound) throw Error("projective resolution did not terminate");
        ProjCover<FF> pc = top_and_cover(target);
        if (res.terms.empty())
            res.augmentation = pc.cover;
        else
            res.differentials.push_back(compose(carry, pc.cover));
        res.multiplicities.push_back(pc.top);
        res.terms.push_back(pc.proj);
        auto [k, incl] = kernel(pc.proj, pc.cover);
        if (k.is_zero()) break;
        target = k;
        carry = incl;
    }
    // consecutive differentials compose to zero
    for (size_t i = 0; i + 1 < res.differentials.size(); ++i) {
        auto z = compose(res.differentials[i], res.differentials[i + 1]);
        for (const auto& m : z.comp)
            for (size_t r = 0; r < m.rows(); ++r)
                for (size_t c = 0; c < m.cols(); ++c)
                    if (!field_is_zero(m(r, c))) throw Error("resolution differential d*d != 0");
    }
    return res;
}

/// dim Ext^i(F, G) for i = 0..longest_chain(base): cohomology of
/// Hom(P^., G) for a minimal projective resolution P^. of F.
template <typename FF>
std::vector<size_t> ext_dims(const Diagram<FF>& f, const Diagram<FF>& g) {
    detail::require_compatible(f, g);
    size_t top = static_cast<size_t>(longest_chain(f.base));
    ProjResolution<FF> res = projective_resolution(f);
    size_t len = res.terms.size();
    std::vector<HomSpace<FF>> hs;
    for (size_t i = 0; i < len; ++i) hs.push_back(hom_space(res.terms[i], g));
    // map Hom(P^i, G) -> Hom(P^{i+1}, G): precompose with d_i
    std::vector<size_t> map_rank(len, 0);
    for (size_t i = 0; i + 1 < len; ++i) {
        auto offs = detail::hom_offsets(res.terms[i + 1], g);
        Matrix<FF> bm(offs.back(), hs[i + 1].dim, f.one - f.one);
        Matrix<FF> cm(offs.back(), hs[i].dim, f.one - f.one);
        for (size_t j = 0; j < hs[i + 1].dim; ++j) {
            auto v = detail::flatten_morphism(res.terms[i + 1], g, hs[i + 1].basis[j]);
            for (size_t r = 0; r < v.rows(); ++r) bm(r, j) = v(r, 0);
        }
        for (size_t j = 0; j < hs[i].dim; ++j) {
            auto comp = compose(hs[i].basis[j], res.differentials[i]);
            auto v = detail::flatten_morphism(res.terms[i + 1], g, comp);
            for (size_t r = 0; r < v.rows(); ++r) cm(r, j) = v(r, 0);
        }
        Matrix<FF> coords = solve(bm, cm); // basis has full column rank
        map_rank[i] = rank(coords);
    }
    std::vector<size_t> out(top + 1, 0);
    for (size_t i = 0; i <= top; ++i) {
        if (i >= len) break;
        size_t ker = hs[i].dim - (i + 1 < len ? map_rank[i] : 0);
        size_t im = i == 0 ? 0 : map_rank[i - 1];
        out[i] = ker - im;
    }
    return out;
}

template <typename FF>
long long euler_form_sheaves(const Diagram<FF>& f, const Diagram<FF>& g) {
    auto e = ext_dims(f, g);
    long long s = 0;
    for (size_t i = 0; i < e.size(); ++i)
        s += (i % 2 == 0) ? static_cast<long long>(e[i]) : -static_cast<long long>(e[i]);
    return s;
}

/// The simplicial injective resolution of the constant sheaf: term p is the
/// direct sum over p-simplices sigma of I_{min sigma}, with component maps
/// (-1)^j for deletion of vertex j.
template <typename FF>
struct InjResolution {
    OrderComplex complex;
    Diagram<FF> constant;
    DiagramMorphism<FF> augmentation;               // constant -> terms[0]
    std::vector<Diagram<FF>> terms;                 // degrees 0..dim
    std::vector<DiagramMorphism<FF>> differentials; // terms[p] -> terms[p+1]
};

template <typename FF>
InjResolution<FF> constant_sheaf_injective_resolution(const Poset& x, const FF& one) {
    InjResolution<FF> res{order_complex(x), standard_sheaf(x, one, SheafKind::constant), {}, {}, {}};
    const OrderComplex& k = res.complex;
    // summand sigma is present at z iff z <= min(sigma) = sigma[0]
    auto summands_at = [&](int p, size_t z) {
        std::vector<size_t> idx;
        for (size_t s = 0; s < k.count(p); ++s)
            if (x.leq(z, k.simplices_by_dim[static_cast<size_t>(p)][s][0])) idx.push_back(s);
        return idx;
    };
    for (int p = 0; p <= k.dim(); ++p) {
        Diagram<FF> term{x, one, std::vector<size_t>(x.size(), 0), {}};
        for (size_t z = 0; z < x.size(); ++z) term.stalk[z] = summands_at(p, z).size();
        for (auto [a, b] : covers(x).covers) {
            auto sa = summands_at(p, a), sb = summands_at(p, b);
            Matrix<FF> m = detail::zero_matrix(sb.size(), sa.size(), one);
            for (size_t r = 0; r < sb.size(); ++r)
                for (size_t c = 0; c < sa.size(); ++c)
                    if (sa[c] == sb[r]) m(r, c) = one;
            term.edge.emplace(std::pair(a, b), m);
        }
        res.terms.push_back(term);
    }
    for (size_t z = 0; z < x.size(); ++z) {
        Matrix<FF> m(res.terms[0].stalk[z], 1, one);
        res.augmentation.comp.push_back(m); // all-ones: constant section to each vertex summand
    }
    for (int p = 0; p + 1 <= k.dim(); ++p) {
        DiagramMorphism<FF> d;
        std::map<std::vector<size_t>, size_t> lower;
        for (size_t s = 0; s < k.count(p); ++s)
            lower[k.simplices_by_dim[static_cast<size_t>(p)][s]] = s;
        for (size_t z = 0; z < x.size(); ++z) {
            auto sa = summands_at(p, z), sb = summands_at(p + 1, z);
            std::map<size_t, size_t> col_of;
            for (size_t c = 0; c < sa.size(); ++c) col_of[sa[c]] = c;
            Matrix<FF> m = detail::zero_matrix(sb.size(), sa.size(), one);
            for (size_t r = 0; r < sb.size(); ++r) {
                const auto& tau = k.simplices_by_dim[static_cast<size_t>(p) + 1][sb[r]];
                FF sign = one;
                for (size_t j = 0; j < tau.size(); ++j) {
                    std::vector<size_t> face;
                    for (size_t t = 0; t < tau.size(); ++t)
                        if (t != j) face.push_back(tau[t]);
                    // min(face) >= min(tau) >= z, so the face summand is present at z
                    m(r, col_of.at(lower.at(face))) += sign;
                    sign = -sign;
                }
            }
            d.comp.push_back(m);
        }
        res.differentials.push_back(d);
    }
    return res;
}

/// Ext(k_X, k_X) over the requested field; equals the Betti numbers.
inline std::vector<size_t> sheaf_cohomology_constant(const Poset& x, const FieldTag& field) {
    if (field.is_rational()) {
        mpq_class one(1);
        auto k = standard_sheaf(x, one, SheafKind::constant);
        return ext_dims(k, k);
    }
    require_prime(field.p);
    Fp one(1, field.p);
    auto k = standard_sheaf(x, one, SheafKind::constant);
    return ext_dims(k, k);
}

namespace detail {

template <typename FF>
std::vector<size_t> hochschild_impl(const Poset& x, const FF& one, size_t max_degree) {
    // enveloping poset and the incidence bimodule: stalk k at (a, b) iff
    // b <= a in X; any path between nonzero stalks stays nonzero
    Poset e = product(x, opposite(x));
    size_t n = x.size();
    Diagram<FF> f = indicator_diagram<FF>(e, one, [&](size_t i) {
        size_t a = i / n, b = i % n;
        return x.leq(b, a);
    });
    auto ext = ext_dims(f, f);
    ext.resize(max_degree + 1, 0);
    return ext;
}

} // namespace detail

/// HH^0..HH^max_degree of the incidence algebra via the enveloping poset.
inline std::vector<size_t> hochschild_dims(const Poset& x, const FieldTag& field,
                                           size_t max_degree) {
    if (field.is_rational()) return detail::hochschild_impl(x, mpq_class(1), max_degree);
    require_prime(field.p);
    return detail::hochschild_impl(x, Fp(1, field.p), max_degree);
}

} // namespace derposet
