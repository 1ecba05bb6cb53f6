#pragma once

#include "derposet/constructions.hpp"

namespace derposet {
namespace fixtures {

inline Poset chain(size_t n) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> rels;
    for (size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    for (size_t i = 0; i + 1 < n; ++i) rels.emplace_back(labels[i], labels[i + 1]);
    return Poset::from_relations(std::move(labels), rels);
}

inline Poset antichain(size_t n) {
    std::vector<std::string> labels;
    for (size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return Poset::from_relations(std::move(labels), {});
}

inline Poset point() { return antichain(1); }

/// Two minimal elements 1, 2 under a common maximum 3.
inline Poset v3() {
    return Poset::from_relations({"1", "2", "3"}, {{"1", "3"}, {"2", "3"}});
}

/// One minimum t, two middle elements l and r, one maximum b.
inline Poset diamond() {
    return Poset::from_relations({"t", "l", "r", "b"},
                                 {{"t", "l"}, {"t", "r"}, {"l", "b"}, {"r", "b"}});
}

/// The tilting partner of the diamond: minima l, r under m, then m < b.
inline Poset apr_r() {
    return Poset::from_relations({"l", "r", "m", "b"}, {{"l", "m"}, {"r", "m"}, {"m", "b"}});
}

/// Order complex is a circle: 4 vertices, 4 edges, no triangles.
inline Poset crown4() {
    return Poset::from_relations({"a", "b", "c", "d"},
                                 {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}

/// A 2-chain plus an isolated point.
inline Poset yp() {
    return Poset::from_relations({"p", "q", "r"}, {{"p", "q"}});
}

/// Bipartite shape poset: {1,2} below {3,4,5} with 1<3, 1<4, 2<4, 2<5.
inline Poset exs() {
    return Poset::from_relations({"1", "2", "3", "4", "5"},
                                 {{"1", "3"}, {"1", "4"}, {"2", "4"}, {"2", "5"}});
}

/// The five components summed along exs(): one min under two maxima, a
/// 2-chain, a point, two minima under one max, and the crown.
inline std::vector<Poset> exx() {
    Poset x1 = Poset::from_relations({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});
    Poset x4 = Poset::from_relations({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});
    return {x1, chain(2), point(), x4, crown4()};
}

/// The 12-element counterexample pair: ordinal sums of A = antichain(3),
/// Y = yp(), Z = A + Y in the two orders A+Y+Z and Y+A+Z.
inline Poset fig1_z() { return ordinal_sum({antichain(3), yp()}); }
inline Poset fig1_left() { return ordinal_sum({antichain(3), yp(), fig1_z()}); }
inline Poset fig1_right() { return ordinal_sum({yp(), antichain(3), fig1_z()}); }

} // namespace fixtures
} // namespace derposet
