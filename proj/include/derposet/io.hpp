#pragma once

#include <json.hpp>
#include <sstream>
#include "derposet/invariants.hpp"
#include "derposet/poset.hpp"
#include "derposet/sheaves.hpp"

namespace derposet {

namespace detail {

inline std::vector<std::string> tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

inline std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

} // namespace detail

/// Text format: optional '#' comments, one "elements: a b c" line, then
/// lines "A < B". The relation list is closed transitively on load.
inline Poset parse_poset(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    std::optional<std::vector<std::string>> elements;
    std::vector<std::pair<std::string, std::string>> relations;
    while (std::getline(is, line)) {
        ++lineno;
        auto toks = detail::tokens(detail::strip_comment(line));
        if (toks.empty()) continue;
        if (!elements) {
            if (toks[0] != "elements:")
                throw SyntaxError(lineno, "expected an 'elements:' line first");
            elements = std::vector<std::string>(toks.begin() + 1, toks.end());
            continue;
        }
        if (toks.size() != 3 || toks[1] != "<")
            throw SyntaxError(lineno, "expected a relation line 'A < B'");
        relations.emplace_back(toks[0], toks[2]);
    }
    if (!elements) throw SyntaxError(lineno, "missing 'elements:' line");
    return Poset::from_relations(*elements, relations);
}

/// JSON format: {"elements": [...], "less_than": [[a, b], ...]}.
inline Poset parse_poset_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SyntaxError(1, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
        throw SyntaxError(1, "expected an object with an 'elements' array");
    std::vector<std::string> elements;
    for (const auto& e : j["elements"]) {
        if (!e.is_string()) throw SyntaxError(1, "element labels must be strings");
        elements.push_back(e.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> relations;
    if (j.contains("less_than")) {
        if (!j["less_than"].is_array()) throw SyntaxError(1, "'less_than' must be an array");
        for (const auto& r : j["less_than"]) {
            if (!r.is_array() || r.size() != 2 || !r[0].is_string() || !r[1].is_string())
                throw SyntaxError(1, "'less_than' entries must be [a, b] label pairs");
            relations.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
        }
    }
    return Poset::from_relations(elements, relations);
}

/// Canonical form: element line plus the cover relations, sorted by label
/// pair. parse(serialize(X)) reproduces X up to its canonical closure.
inline std::string serialize_poset(const Poset& x) {
    std::ostringstream os;
    os << "elements:";
    for (const auto& l : x.labels()) os << " " << l;
    os << "\n";
    std::vector<std::pair<std::string, std::string>> lines;
    for (auto [a, b] : covers(x).covers) lines.emplace_back(x.label(a), x.label(b));
    std::sort(lines.begin(), lines.end());
    for (const auto& [a, b] : lines) os << a << " < " << b << "\n";
    return os.str();
}

inline nlohmann::json poset_to_json(const Poset& x) {
    nlohmann::json j;
    j["elements"] = x.labels();
    auto rel = nlohmann::json::array();
    std::vector<std::pair<std::string, std::string>> lines;
    for (auto [a, b] : covers(x).covers) lines.emplace_back(x.label(a), x.label(b));
    std::sort(lines.begin(), lines.end());
    for (const auto& [a, b] : lines) rel.push_back({a, b});
    j["less_than"] = rel;
    return j;
}

inline nlohmann::json report_to_json(const InvariantReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["components"] = {{"count", r.component_count}, {"sizes", r.component_sizes}};
    j["dim"] = r.dim;
    j["mobius_entry_sum"] = r.mobius_entry_sum.get_str();
    j["euler_char"] = r.euler_char.get_str();
    auto cox = nlohmann::json::array();
    for (const auto& c : r.coxeter_charpoly) cox.push_back(c.get_str());
    j["coxeter_charpoly"] = cox;
    j["q_invariant_factors"] = r.q_invariant_factors;
    auto pif = nlohmann::json::object();
    for (const auto& [p, fs] : r.p_invariant_factors) pif[std::to_string(p)] = fs;
    j["p_invariant_factors"] = pif;
    auto betti = nlohmann::json::object();
    for (const auto& [f, b] : r.betti_by_field) betti[f.name()] = b;
    j["betti"] = betti;
    return j;
}

/// Diagram interchange: labels, field tag, stalk dimensions, cover-edge
/// matrices as entry string arrays.
template <typename FF>
nlohmann::json diagram_to_json(const Diagram<FF>& d, const std::string& field_name) {
    nlohmann::json j;
    j["base"] = poset_to_json(d.base);
    j["field"] = field_name;
    j["stalk_dim"] = d.stalk;
    auto edges = nlohmann::json::array();
    for (const auto& [e, m] : d.edge) {
        nlohmann::json je;
        je["from"] = d.base.label(e.first);
        je["to"] = d.base.label(e.second);
        auto rows = nlohmann::json::array();
        for (size_t r = 0; r < m.rows(); ++r) {
            auto row = nlohmann::json::array();
            for (size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_str(m(r, c)));
            rows.push_back(row);
        }
        je["matrix"] = rows;
        edges.push_back(je);
    }
    j["edges"] = edges;
    return j;
}

} // namespace derposet
