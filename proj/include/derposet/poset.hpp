#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>
#include "derposet/errors.hpp"

namespace derposet {

/// Finite poset: distinct element labels plus the full order relation.
/// All computation uses indices in input order; labels are for I/O.
class Poset {
public:
    /// Build from strict relations "a < b"; the reflexive-transitive
    /// closure is taken and the poset axioms validated.
    static Poset from_relations(std::vector<std::string> labels,
                                const std::vector<std::pair<std::string, std::string>>& relations) {
        if (labels.empty()) throw EmptyPoset("poset must have at least one element");
        std::map<std::string, size_t> index;
        for (size_t i = 0; i < labels.size(); ++i) {
            if (!index.emplace(labels[i], i).second)
                throw DuplicateLabel("duplicate label: " + labels[i]);
        }
        size_t n = labels.size();
        std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
        for (size_t i = 0; i < n; ++i) leq[i][i] = true;
        for (const auto& [a, b] : relations) {
            auto ia = index.find(a), ib = index.find(b);
            if (ia == index.end()) throw UnknownLabel("unknown label: " + a);
            if (ib == index.end()) throw UnknownLabel("unknown label: " + b);
            leq[ia->second][ib->second] = true;
        }
        transitive_closure(leq);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (i != j && leq[i][j] && leq[j][i])
                    throw CycleDetected("cycle through " + labels[i] + " and " + labels[j]);
        return Poset(std::move(labels), std::move(leq));
    }

    /// Build from a full relation matrix; validates all poset axioms.
    static Poset from_leq(std::vector<std::string> labels, std::vector<std::vector<bool>> leq) {
        if (labels.empty()) throw EmptyPoset("poset must have at least one element");
        size_t n = labels.size();
        {
            std::map<std::string, size_t> seen;
            for (size_t i = 0; i < n; ++i)
                if (!seen.emplace(labels[i], i).second)
                    throw DuplicateLabel("duplicate label: " + labels[i]);
        }
        for (size_t i = 0; i < n; ++i) {
            if (leq[i].size() != n) throw Error("relation matrix shape mismatch");
            if (!leq[i][i]) throw Error("relation not reflexive");
        }
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                if (i != j && leq[i][j] && leq[j][i])
                    throw CycleDetected("relation not antisymmetric");
                if (!leq[i][j]) continue;
                for (size_t k = 0; k < n; ++k)
                    if (leq[j][k] && !leq[i][k]) throw Error("relation not transitive");
            }
        return Poset(std::move(labels), std::move(leq));
    }

    size_t size() const { return labels_.size(); }
    const std::string& label(size_t i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<size_t> index_of(const std::string& name) const {
        for (size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == name) return i;
        return std::nullopt;
    }

    bool leq(size_t i, size_t j) const { return leq_[i][j]; }
    bool less(size_t i, size_t j) const { return i != j && leq_[i][j]; }

    friend bool operator==(const Poset& a, const Poset& b) {
        return a.labels_ == b.labels_ && a.leq_ == b.leq_;
    }

private:
    Poset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq)
        : labels_(std::move(labels)), leq_(std::move(leq)) {}

    static void transitive_closure(std::vector<std::vector<bool>>& r) {
        size_t n = r.size();
        for (size_t k = 0; k < n; ++k)
            for (size_t i = 0; i < n; ++i) {
                if (!r[i][k]) continue;
                for (size_t j = 0; j < n; ++j)
                    if (r[k][j]) r[i][j] = true;
            }
    }

    std::vector<std::string> labels_;
    std::vector<std::vector<bool>> leq_;
};

/// Cover relations (transitive reduction), lexicographic by index pair.
struct HasseDiagram {
    std::vector<std::pair<size_t, size_t>> covers;
};

inline HasseDiagram covers(const Poset& x) {
    HasseDiagram h;
    size_t n = x.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (!x.less(i, j)) continue;
            bool direct = true;
            for (size_t z = 0; z < n && direct; ++z)
                if (x.less(i, z) && x.less(z, j)) direct = false;
            if (direct) h.covers.emplace_back(i, j);
        }
    std::sort(h.covers.begin(), h.covers.end());
    return h;
}

/// Topological order: repeatedly emit the minimal remaining element of
/// smallest input index. Returns original indices in emission order.
inline std::vector<size_t> linear_extension(const Poset& x) {
    size_t n = x.size();
    std::vector<bool> emitted(n, false);
    std::vector<size_t> order;
    order.reserve(n);
    for (size_t step = 0; step < n; ++step) {
        for (size_t i = 0; i < n; ++i) {
            if (emitted[i]) continue;
            bool minimal = true;
            for (size_t j = 0; j < n && minimal; ++j)
                if (!emitted[j] && x.less(j, i)) minimal = false;
            if (minimal) {
                order.push_back(i);
                emitted[i] = true;
                break;
            }
        }
    }
    return order;
}

inline Poset opposite(const Poset& x) {
    size_t n = x.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) leq[i][j] = x.leq(j, i);
    return Poset::from_leq(x.labels(), std::move(leq));
}

/// Componentwise order on pairs; labels "(x,y)".
inline Poset product(const Poset& x, const Poset& y) {
    size_t nx = x.size(), ny = y.size();
    std::vector<std::string> labels;
    labels.reserve(nx * ny);
    for (size_t i = 0; i < nx; ++i)
        for (size_t j = 0; j < ny; ++j)
            labels.push_back("(" + x.label(i) + "," + y.label(j) + ")");
    std::vector<std::vector<bool>> leq(nx * ny, std::vector<bool>(nx * ny, false));
    for (size_t i = 0; i < nx; ++i)
        for (size_t j = 0; j < ny; ++j)
            for (size_t k = 0; k < nx; ++k)
                for (size_t l = 0; l < ny; ++l)
                    leq[i * ny + j][k * ny + l] = x.leq(i, k) && y.leq(j, l);
    return Poset::from_leq(std::move(labels), std::move(leq));
}

inline Poset disjoint_union(const Poset& x, const Poset& y) {
    size_t nx = x.size(), ny = y.size(), n = nx + ny;
    bool clash = false;
    for (const auto& l : y.labels())
        if (x.index_of(l)) clash = true;
    std::vector<std::string> labels;
    for (const auto& l : x.labels()) labels.push_back(clash ? "1." + l : l);
    for (const auto& l : y.labels()) labels.push_back(clash ? "2." + l : l);
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < nx; ++i)
        for (size_t j = 0; j < nx; ++j) leq[i][j] = x.leq(i, j);
    for (size_t i = 0; i < ny; ++i)
        for (size_t j = 0; j < ny; ++j) leq[nx + i][nx + j] = y.leq(i, j);
    return Poset::from_leq(std::move(labels), std::move(leq));
}

/// Equivalence classes of the comparability graph, ordered by smallest
/// member index.
inline std::vector<std::vector<size_t>> connected_components(const Poset& x) {
    size_t n = x.size();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<size_t>> result;
    for (size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<size_t> members, stack{s};
        comp[s] = static_cast<int>(result.size());
        while (!stack.empty()) {
            size_t v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (size_t w = 0; w < n; ++w) {
                if (comp[w] >= 0 || (!x.leq(v, w) && !x.leq(w, v))) continue;
                comp[w] = comp[s];
                stack.push_back(w);
            }
        }
        std::sort(members.begin(), members.end());
        result.push_back(std::move(members));
    }
    return result;
}

/// Maximal chain length (number of strict steps); 0 for antichains.
inline int longest_chain(const Poset& x) {
    size_t n = x.size();
    std::vector<size_t> order = linear_extension(x);
    std::vector<int> height(n, 0);
    int best = 0;
    for (size_t pos = 0; pos < n; ++pos) {
        size_t i = order[pos];
        for (size_t q = 0; q < pos; ++q) {
            size_t j = order[q];
            if (x.less(j, i)) height[i] = std::max(height[i], height[j] + 1);
        }
        best = std::max(best, height[i]);
    }
    return best;
}

/// Longest chain ending at each element (used as an isomorphism signature).
inline std::vector<int> chain_heights(const Poset& x) {
    size_t n = x.size();
    std::vector<size_t> order = linear_extension(x);
    std::vector<int> height(n, 0);
    for (size_t pos = 0; pos < n; ++pos)
        for (size_t q = 0; q < pos; ++q)
            if (x.less(order[q], order[pos]))
                height[order[pos]] = std::max(height[order[pos]], height[order[q]] + 1);
    return height;
}

inline bool is_closed(const Poset& x, const std::vector<size_t>& subset) {
    std::vector<bool> in(x.size(), false);
    for (size_t i : subset) in[i] = true;
    for (size_t y : subset)
        for (size_t z = 0; z < x.size(); ++z)
            if (x.leq(z, y) && !in[z]) return false;
    return true;
}

struct PrincipalSets {
    std::vector<size_t> up;   // U_x
    std::vector<size_t> down; // closure of {x}
};

inline PrincipalSets principal_sets(const Poset& x, size_t v) {
    if (v >= x.size()) throw MissingElement("element index out of range");
    PrincipalSets r;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x.leq(v, i)) r.up.push_back(i);
        if (x.leq(i, v)) r.down.push_back(i);
    }
    return r;
}

namespace detail {

inline bool iso_backtrack(const Poset& x, const Poset& y,
                          const std::vector<std::vector<size_t>>& candidates,
                          std::vector<size_t>& assign, std::vector<bool>& used, size_t pos) {
    size_t n = x.size();
    if (pos == n) return true;
    for (size_t c : candidates[pos]) {
        if (used[c]) continue;
        bool ok = true;
        for (size_t q = 0; q < pos && ok; ++q)
            if (x.leq(pos, q) != y.leq(c, assign[q]) || x.leq(q, pos) != y.leq(assign[q], c))
                ok = false;
        if (!ok) continue;
        assign[pos] = c;
        used[c] = true;
        if (iso_backtrack(x, y, candidates, assign, used, pos + 1)) return true;
        used[c] = false;
    }
    return false;
}

} // namespace detail

/// Order-isomorphism search: backtracking pruned by (|up|, |down|, chain
/// height) signatures. Returns the image index for each element of x.
inline std::optional<std::vector<size_t>> is_isomorphic(const Poset& x, const Poset& y) {
    if (x.size() != y.size()) return std::nullopt;
    size_t n = x.size();
    auto signature = [](const Poset& p) {
        std::vector<int> h = chain_heights(p);
        std::vector<std::tuple<size_t, size_t, int>> sig(p.size());
        for (size_t i = 0; i < p.size(); ++i) {
            PrincipalSets s = principal_sets(p, i);
            sig[i] = {s.up.size(), s.down.size(), h[i]};
        }
        return sig;
    };
    auto sx = signature(x), sy = signature(y);
    {
        auto mx = sx, my = sy;
        std::sort(mx.begin(), mx.end());
        std::sort(my.begin(), my.end());
        if (mx != my) return std::nullopt;
    }
    std::vector<std::vector<size_t>> candidates(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (sx[i] == sy[j]) candidates[i].push_back(j);
    std::vector<size_t> assign(n, 0);
    std::vector<bool> used(n, false);
    if (detail::iso_backtrack(x, y, candidates, assign, used, 0)) return assign;
    return std::nullopt;
}

/// Random poset: independent edges i -> j (i < j as input indices) with
/// probability num/den, then transitive closure.
inline Poset random_poset(size_t n, long long num, long long den, unsigned long long seed) {
    if (n < 1) throw EmptyPoset("random poset needs n >= 1");
    if (den <= 0 || num < 0 || num > den) throw BadProbability("edge probability must be in [0,1]");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> dist(0, den - 1);
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> rels;
    for (size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (dist(rng) < num) rels.emplace_back(labels[i], labels[j]);
    return Poset::from_relations(std::move(labels), rels);
}

} // namespace derposet
