#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include "derposet/constructions.hpp"
#include "derposet/fixtures.hpp"
#include "derposet/invariants.hpp"

using namespace derposet;
using namespace derposet::fixtures;

namespace {

// same label set and the same order relation under the label matching
bool same_order_by_labels(const Poset& a, const Poset& b) {
    if (a.size() != b.size()) return false;
    std::vector<size_t> to_b(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        auto j = b.index_of(a.label(i));
        if (!j) return false;
        to_b[i] = *j;
    }
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j)
            if (a.leq(i, j) != b.leq(to_b[i], to_b[j])) return false;
    return true;
}

std::vector<size_t> prefix_indices(const Poset& sum, const Poset& s,
                                   const std::vector<size_t>& s_elems) {
    std::vector<size_t> out;
    for (size_t i = 0; i < sum.size(); ++i) {
        std::string pre = sum.label(i).substr(0, sum.label(i).find('.'));
        for (size_t e : s_elems)
            if (s.label(e) == pre) out.push_back(i);
    }
    return out;
}

bool associative(const AlgebraPresentation& alg) {
    using E = AlgebraPresentation::Entry;
    auto mul = [&](const E& e, size_t c) -> E {
        if (e.sign == 0) return {0, 0};
        E r = alg.product[e.index][c];
        return {e.sign * r.sign, r.index};
    };
    auto lmul = [&](size_t a, const E& e) -> E {
        if (e.sign == 0) return {0, 0};
        E r = alg.product[a][e.index];
        return {e.sign * r.sign, r.index};
    };
    for (size_t a = 0; a < alg.dim(); ++a)
        for (size_t b = 0; b < alg.dim(); ++b)
            for (size_t c = 0; c < alg.dim(); ++c) {
                E left = mul(alg.product[a][b], c);
                E right = lmul(a, alg.product[b][c]);
                if (left.sign != right.sign) return false;
                if (left.sign != 0 && left.index != right.index) return false;
            }
    return true;
}

std::vector<Poset> random_components(size_t count, std::mt19937_64& rng) {
    std::uniform_int_distribution<size_t> nsize(1, 3);
    std::vector<Poset> out;
    for (size_t i = 0; i < count; ++i)
        out.push_back(random_poset(nsize(rng), 1, 2, static_cast<unsigned>(rng())));
    return out;
}

} // namespace

TEST_CASE("ordinal_sum") {
    CHECK(is_isomorphic(ordinal_sum(point(), point()), chain(2)).has_value());
    CHECK(is_isomorphic(ordinal_sum(antichain(3), yp()), fig1_z()).has_value());
    CHECK_THROWS_AS(ordinal_sum(std::vector<Poset>{}), EmptyList);

    std::mt19937_64 rng(3);
    for (int t = 0; t < 8; ++t) {
        auto parts = random_components(2 + t % 3, rng);
        Poset sum = ordinal_sum(parts);
        size_t total = 0;
        for (const auto& p : parts) total += p.size();
        CHECK(sum.size() == total);
        // earlier part strictly below later part
        size_t off = 0;
        for (size_t i = 0; i < parts.size(); ++i) {
            size_t next = off + parts[i].size();
            for (size_t a = off; a < next; ++a)
                for (size_t b = next; b < sum.size(); ++b) CHECK(sum.less(a, b));
            off = next;
        }
    }
}

TEST_CASE("lex_sum") {
    // all components points: the shape itself
    Poset s = exs();
    std::vector<Poset> pts(s.size(), point());
    CHECK(is_isomorphic(lex_sum(s, pts), s).has_value());

    // along a chain it is the ordinal sum
    std::mt19937_64 rng(9);
    auto comps = random_components(3, rng);
    CHECK(is_isomorphic(lex_sum(chain(3), comps), ordinal_sum(comps)).has_value());

    Poset paper = lex_sum(exs(), exx());
    CHECK(paper.size() == 13);
    CHECK(paper.label(0) == "1.a");

    CHECK_THROWS_AS(lex_sum(chain(2), {point()}), MissingComponent);
}

TEST_CASE("bipartite_partition") {
    auto p = bipartite_partition(exs());
    REQUIRE(p.has_value());
    CHECK(p->s0 == std::vector<size_t>{0, 1});
    CHECK(p->s1 == std::vector<size_t>{2, 3, 4});

    CHECK_FALSE(bipartite_partition(chain(3)).has_value());
    CHECK_FALSE(bipartite_partition(antichain(2)).has_value());
    CHECK(bipartite_partition(crown4()).has_value());
    CHECK(bipartite_partition(v3()).has_value());
}

TEST_CASE("bipartite_flip") {
    auto [l, r] = bipartite_flip(exs(), exx());
    CHECK(l.size() == 13);
    CHECK(r.size() == 13);

    auto [c1, c2] = bipartite_flip(chain(2), {point(), point()});
    CHECK(is_isomorphic(c1, chain(2)).has_value());
    CHECK(is_isomorphic(c2, chain(2)).has_value());

    Poset a = v3(), b = crown4();
    auto [ab, ba] = bipartite_flip(chain(2), {a, b});
    CHECK(is_isomorphic(ab, ordinal_sum(a, b)).has_value());
    CHECK(is_isomorphic(ba, ordinal_sum(b, a)).has_value());

    CHECK_THROWS_AS(bipartite_flip(chain(3), {point(), point(), point()}), NotBipartite);
}

TEST_CASE("flip pairs agree on all invariants") {
    std::vector<long long> primes{2, 3, 5, 7, 11};
    std::vector<FieldTag> fields{rational_field(), prime_field(2), prime_field(11)};
    auto [l, r] = bipartite_flip(exs(), exx());
    auto v = distinguish(l, r, default_primes());
    CHECK_FALSE(v.distinguished);

    std::mt19937_64 rng(21);
    int done = 0;
    for (unsigned seed = 0; done < 6; ++seed) {
        Poset s = random_poset(3, 1, 2, seed);
        if (!bipartite_partition(s)) continue;
        ++done;
        auto comps = random_components(s.size(), rng);
        auto [x, y] = bipartite_flip(s, comps);
        CHECK_FALSE(distinguish(x, y, primes).distinguished);
    }
}

TEST_CASE("ay_poset") {
    // one empty side: nothing moves
    Poset x = random_poset(5, 1, 2, 2);
    std::vector<size_t> all{0, 1, 2, 3, 4};
    auto full = ay_poset(x, all);
    REQUIRE(std::holds_alternative<Poset>(full));
    CHECK(std::get<Poset>(full) == x);
    auto none = ay_poset(x, {});
    REQUIRE(std::holds_alternative<Poset>(none));
    CHECK(std::get<Poset>(none) == x);

    // the paper's failing example: Y = {1} in V3
    auto bad = ay_poset(v3(), {0});
    REQUIRE(std::holds_alternative<StarViolation>(bad));
    auto w = std::get<StarViolation>(bad);
    CHECK(w.y == 0);
    CHECK(w.y_prime == 0);
    CHECK(w.u_prime == 1);
    CHECK(w.u == 2);

    CHECK_THROWS_AS(ay_poset(chain(2), {1}), NotClosed);
}

TEST_CASE("ay_poset realizes the bipartite flip") {
    std::mt19937_64 rng(55);
    std::vector<std::pair<Poset, std::vector<Poset>>> cases;
    cases.emplace_back(exs(), exx());
    int made = 0;
    for (unsigned seed = 0; made < 5; ++seed) {
        Poset s = random_poset(3, 1, 2, seed + 200);
        if (!bipartite_partition(s)) continue;
        ++made;
        cases.emplace_back(s, random_components(s.size(), rng));
    }
    for (const auto& [s, comps] : cases) {
        auto part = bipartite_partition(s);
        REQUIRE(part.has_value());
        auto [sum, flipped] = bipartite_flip(s, comps);
        std::vector<size_t> y = prefix_indices(sum, s, part->s0);
        auto res = ay_poset(sum, y);
        REQUIRE(std::holds_alternative<Poset>(res));
        CHECK(same_order_by_labels(std::get<Poset>(res), flipped));
    }
}

TEST_CASE("ay_algebra") {
    // V3 with Y = {1}: basis e_11, e_22, e_33, e_23, e_31; e_23 e_31 = 0
    auto alg = ay_algebra(v3(), {0});
    CHECK(alg.dim() == 5);
    CHECK(alg.idempotents.size() == 3);
    auto at = [&](const std::string& name) {
        for (size_t i = 0; i < alg.dim(); ++i)
            if (alg.basis[i] == name) return i;
        FAIL("missing basis element");
        return size_t(0);
    };
    CHECK(alg.product[at("e_{2,3}")][at("e_{3,1}")].sign == 0);
    CHECK(associative(alg));

    std::mt19937_64 rng(13);
    for (unsigned seed = 0; seed < 10; ++seed) {
        Poset x = random_poset(5, 1, 2, seed);
        // Y = a random down-set
        std::uniform_int_distribution<size_t> pick(0, x.size() - 1);
        size_t root = pick(rng);
        std::vector<size_t> y;
        for (size_t i = 0; i < x.size(); ++i)
            if (x.leq(i, root)) y.push_back(i);
        auto a = ay_algebra(x, y);
        CHECK(associative(a));

        // dimension formula
        std::vector<bool> in_y(x.size(), false);
        for (size_t i : y) in_y[i] = true;
        size_t expect = 0;
        for (size_t i = 0; i < x.size(); ++i)
            for (size_t j = 0; j < x.size(); ++j) {
                if (in_y[i] && in_y[j] && x.leq(i, j)) ++expect;
                if (!in_y[i] && !in_y[j] && x.leq(i, j)) ++expect;
                if (in_y[j] && !in_y[i] && x.less(j, i)) ++expect;
            }
        CHECK(a.dim() == expect);

        // the idempotents act as a partition of the unit
        for (size_t b = 0; b < a.dim(); ++b) {
            size_t hits = 0;
            for (size_t e : a.idempotents) {
                auto le = a.product[e][b];
                if (le.sign != 0) {
                    CHECK(le.index == b);
                    ++hits;
                }
            }
            CHECK(hits == 1);
        }

        // Y = X: the incidence algebra itself
        std::vector<size_t> allv(x.size());
        for (size_t i = 0; i < x.size(); ++i) allv[i] = i;
        size_t pairs = 0;
        for (size_t i = 0; i < x.size(); ++i)
            for (size_t j = 0; j < x.size(); ++j)
                if (x.leq(i, j)) ++pairs;
        CHECK(ay_algebra(x, allv).dim() == pairs);
    }

    // when the condition holds, the structure constants match the incidence
    // algebra of the reordered poset
    auto [sum, flipped] = bipartite_flip(exs(), exx());
    auto part = bipartite_partition(exs());
    std::vector<size_t> y = prefix_indices(sum, exs(), part->s0);
    auto res = ay_poset(sum, y);
    REQUIRE(std::holds_alternative<Poset>(res));
    const Poset& xp = std::get<Poset>(res);
    auto alg2 = ay_algebra(sum, y);
    size_t pairs = 0;
    for (size_t i = 0; i < xp.size(); ++i)
        for (size_t j = 0; j < xp.size(); ++j)
            if (xp.leq(i, j)) ++pairs;
    CHECK(alg2.dim() == pairs);
    CHECK(associative(alg2));
}

TEST_CASE("ordinal sum commutation is invisible to invariants") {
    std::mt19937_64 rng(99);
    std::vector<long long> primes{2, 3, 5, 7, 11, 13};
    for (int t = 0; t < 10; ++t) {
        Poset a = random_poset(1 + t % 4, 1, 2, static_cast<unsigned>(rng()));
        Poset b = random_poset(1 + (t * 2) % 4, 1, 2, static_cast<unsigned>(rng()));
        auto v = distinguish(ordinal_sum(a, b), ordinal_sum(b, a), primes);
        CHECK_FALSE(v.distinguished);
    }
}
