#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include "derposet/fixtures.hpp"
#include "derposet/io.hpp"

using namespace derposet;
using namespace derposet::fixtures;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("parse_poset text") {
    Poset p = parse_poset("elements: a b\na < b\n");
    CHECK(is_isomorphic(p, chain(2)).has_value());
    CHECK(p.labels() == std::vector<std::string>{"a", "b"});

    // comments, blank lines, non-cover relations (closure applied)
    Poset q = parse_poset("# a diamond\nelements: t l r b\n\nt < l\nt < r\nl < b\nr < b\nt < b\n");
    CHECK(q == diamond());

    CHECK_THROWS_AS(parse_poset("elements: a\nb < a\n"), UnknownLabel);
    CHECK_THROWS_AS(parse_poset("a < b\n"), SyntaxError);
    CHECK_THROWS_AS(parse_poset("elements: a b\na << b\n"), SyntaxError);
    CHECK_THROWS_AS(parse_poset(""), SyntaxError);
    CHECK_THROWS_AS(parse_poset("elements: a b\na < b\nb < a\n"), CycleDetected);
}

TEST_CASE("parse_poset json") {
    Poset p = parse_poset_json(R"({"elements":["a","b"],"less_than":[["a","b"]]})");
    CHECK(is_isomorphic(p, chain(2)).has_value());
    // labels differ from the fixture but the shape matches
    CHECK_FALSE(parse_poset_json(R"({"elements":["x"]})") == point());
    CHECK(is_isomorphic(parse_poset_json(R"({"elements":["x"]})"), point()).has_value());

    CHECK_THROWS_AS(parse_poset_json("not json"), SyntaxError);
    CHECK_THROWS_AS(parse_poset_json(R"({"less_than":[]})"), SyntaxError);
    CHECK_THROWS_AS(parse_poset_json(R"({"elements":["a"],"less_than":[["a"]]})"), SyntaxError);
}

TEST_CASE("serialize_poset") {
    std::string s = serialize_poset(chain(3));
    CHECK(s == "elements: 0 1 2\n0 < 1\n1 < 2\n");
    // diamond: exactly four relation lines
    std::string d = serialize_poset(diamond());
    CHECK(std::count(d.begin(), d.end(), '<') == 4);

    for (unsigned seed = 0; seed < 20; ++seed) {
        Poset x = random_poset(7, 1, 2, seed);
        Poset back = parse_poset(serialize_poset(x));
        CHECK(back == x);
        Poset jback = parse_poset_json(poset_to_json(x).dump());
        CHECK(jback == x);
    }
}

TEST_CASE("shipped fixture files") {
    std::string dir = FIXTURE_DIR;
    Poset l = parse_poset(slurp(dir + "/FIG1L.poset"));
    Poset r = parse_poset(slurp(dir + "/FIG1R.poset"));
    CHECK(l.size() == 12);
    CHECK(r.size() == 12);
    CHECK(is_isomorphic(l, fig1_left()).has_value());
    CHECK(is_isomorphic(r, fig1_right()).has_value());
    CHECK(parse_poset(slurp(dir + "/V3.poset")) == v3());
    CHECK(parse_poset(slurp(dir + "/DIAMOND.poset")) == diamond());
}

TEST_CASE("report and diagram json") {
    auto rep = invariant_report(crown4(), {2, 11}, {rational_field(), prime_field(2)});
    auto j = report_to_json(rep);
    CHECK(j["n"] == 4);
    CHECK(j["euler_char"] == "0");
    CHECK(j["betti"]["Q"] == std::vector<size_t>{1, 1});
    CHECK(j["components"]["count"] == 1);
    CHECK(j["p_invariant_factors"].contains("11"));

    auto d = standard_sheaf(chain(2), mpq_class(1), SheafKind::constant);
    auto dj = diagram_to_json(d, "Q");
    CHECK(dj["stalk_dim"] == std::vector<size_t>{1, 1});
    CHECK(dj["edges"].size() == 1);
    CHECK(dj["edges"][0]["matrix"][0][0] == "1");
}
