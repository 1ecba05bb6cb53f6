#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "derposet/constructions.hpp"
#include "derposet/io.hpp"
#include "derposet/sheaves.hpp"

using namespace derposet;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDistinguished = 10;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 1;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw SyntaxError(0, "cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Poset load_poset(const std::string& path) {
    std::string text = read_file(path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        return parse_poset_json(text);
    return parse_poset(text);
}

void write_poset(const Poset& x, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << serialize_poset(x);
        return;
    }
    std::ofstream os(out);
    if (!os.good()) throw Error("cannot write file: " + out);
    if (out.size() >= 5 && out.substr(out.size() - 5) == ".json")
        os << poset_to_json(x).dump(2) << "\n";
    else
        os << serialize_poset(x);
}

std::vector<long long> parse_primes(const std::string& spec) {
    if (spec.empty()) return default_primes();
    std::vector<long long> out;
    std::istringstream is(spec);
    std::string item;
    while (std::getline(is, item, ',')) {
        try {
            out.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw SyntaxError(0, "bad prime list entry: " + item);
        }
    }
    for (long long p : out) require_prime(p);
    return out;
}

FieldTag parse_field(const std::string& spec) {
    if (spec.empty() || spec == "q" || spec == "Q") return rational_field();
    try {
        return prime_field(std::stoll(spec));
    } catch (const NotPrime&) {
        throw;
    } catch (const std::exception&) {
        throw SyntaxError(0, "bad field spec: " + spec + " (use q or a prime)");
    }
}

size_t index_of_label(const Poset& x, const std::string& label) {
    auto i = x.index_of(label);
    if (!i) throw UnknownLabel("no element labeled '" + label + "'");
    return *i;
}

template <typename T>
std::string seq(const std::vector<T>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

void print_report(const InvariantReport& r, bool as_json) {
    if (as_json) {
        std::cout << report_to_json(r).dump(2) << "\n";
        return;
    }
    std::cout << "n: " << r.n << "\n";
    std::cout << "components: " << r.component_count << " sizes " << seq(r.component_sizes)
              << "\n";
    std::cout << "dim: " << r.dim << "\n";
    std::cout << "euler_char: " << r.euler_char << "\n";
    std::cout << "coxeter_charpoly: " << detail::poly_coeffs_str(r.coxeter_charpoly) << "\n";
    std::cout << "invariant_factors[Q]:";
    for (const auto& f : r.q_invariant_factors) std::cout << " (" << f << ")";
    std::cout << "\n";
    for (const auto& [p, fs] : r.p_invariant_factors) {
        std::cout << "invariant_factors[F_" << p << "]:";
        for (const auto& f : fs) std::cout << " (" << f << ")";
        std::cout << "\n";
    }
    for (const auto& [f, b] : r.betti_by_field)
        std::cout << "betti[" << f.name() << "]: " << seq(b) << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"invariants, constructions and cohomology of finite posets"};
    app.require_subcommand(1);

    std::string primes_spec, field_spec, out_path;
    bool as_json = false;

    // info
    auto* info = app.add_subcommand("info", "invariant report of one poset");
    std::string info_file;
    info->add_option("file", info_file)->required();
    info->add_option("--primes", primes_spec, "comma-separated prime list");
    info->add_flag("--json", as_json);

    // compare
    auto* compare = app.add_subcommand("compare", "derived-invariant comparison of two posets");
    std::string cmp_a, cmp_b;
    compare->add_option("a", cmp_a)->required();
    compare->add_option("b", cmp_b)->required();
    compare->add_option("--primes", primes_spec);
    compare->add_flag("--json", as_json);

    // construct
    auto* construct = app.add_subcommand("construct", "build derived-equivalence constructions");
    construct->require_subcommand(1);
    std::vector<std::string> files;
    std::string closed_spec;
    auto* c_opp = construct->add_subcommand("opposite", "opposite poset");
    c_opp->add_option("file", files)->required();
    c_opp->add_option("--out", out_path);
    auto* c_prod = construct->add_subcommand("product", "product poset");
    c_prod->add_option("files", files)->expected(2);
    c_prod->add_option("--out", out_path);
    auto* c_osum = construct->add_subcommand("ordinal-sum", "ordinal sum, in argument order");
    c_osum->add_option("files", files)->expected(-2);
    c_osum->add_option("--out", out_path);
    auto* c_lsum = construct->add_subcommand(
        "lex-sum", "lexicographic sum: shape file then one component per shape element");
    c_lsum->add_option("files", files)->expected(-2);
    c_lsum->add_option("--out", out_path);
    auto* c_flip = construct->add_subcommand(
        "flip", "bipartite flip: the sum along the opposite shape");
    c_flip->add_option("files", files)->expected(-2);
    c_flip->add_option("--out", out_path);
    auto* c_ay = construct->add_subcommand("ay", "reordered poset for a closed subset");
    c_ay->add_option("file", files)->required();
    c_ay->add_option("--closed", closed_spec, "comma-separated labels of the closed subset")
        ->required();
    c_ay->add_option("--out", out_path);

    // ext
    auto* ext = app.add_subcommand("ext", "Ext dimensions between two simple sheaves");
    std::string ext_file, from_label, to_label;
    ext->add_option("file", ext_file)->required();
    ext->add_option("--from", from_label)->required();
    ext->add_option("--to", to_label)->required();
    ext->add_option("--field", field_spec, "q or a prime");
    ext->add_flag("--json", as_json);

    // cohomology
    auto* coh = app.add_subcommand("cohomology", "cohomology of the constant sheaf");
    std::string coh_file;
    coh->add_option("file", coh_file)->required();
    coh->add_option("--field", field_spec);
    coh->add_flag("--json", as_json);

    // hochschild
    auto* hh = app.add_subcommand("hochschild", "Hochschild cohomology dimensions");
    std::string hh_file;
    size_t max_degree = 3;
    hh->add_option("file", hh_file)->required();
    hh->add_option("--max-degree", max_degree);
    hh->add_option("--field", field_spec);
    hh->add_flag("--json", as_json);

    // iso
    auto* iso = app.add_subcommand("iso", "order-isomorphism test");
    std::string iso_a, iso_b;
    iso->add_option("a", iso_a)->required();
    iso->add_option("b", iso_b)->required();
    iso->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (info->parsed()) {
        auto primes = parse_primes(primes_spec);
        std::vector<FieldTag> fields{rational_field()};
        for (long long p : primes) fields.push_back(prime_field(p));
        print_report(invariant_report(load_poset(info_file), primes, fields), as_json);
        return kExitOk;
    }

    if (compare->parsed()) {
        auto primes = parse_primes(primes_spec);
        Verdict v = distinguish(load_poset(cmp_a), load_poset(cmp_b), primes);
        if (as_json) {
            json j;
            j["distinguished"] = v.distinguished;
            if (v.distinguished) {
                j["invariant"] = v.invariant;
                j["value_a"] = v.value_x;
                j["value_b"] = v.value_y;
            } else {
                j["checked"] = v.checked;
            }
            std::cout << j.dump(2) << "\n";
        } else if (v.distinguished) {
            std::cout << "distinguished by " << v.invariant << ":\n  a: " << v.value_x
                      << "\n  b: " << v.value_y << "\n";
        } else {
            std::cout << "not distinguished; checked " << v.checked.size() << " invariants\n";
        }
        return v.distinguished ? kExitDistinguished : kExitOk;
    }

    if (construct->parsed()) {
        if (c_opp->parsed()) {
            write_poset(opposite(load_poset(files[0])), out_path);
        } else if (c_prod->parsed()) {
            write_poset(product(load_poset(files[0]), load_poset(files[1])), out_path);
        } else if (c_osum->parsed()) {
            std::vector<Poset> parts;
            for (const auto& f : files) parts.push_back(load_poset(f));
            write_poset(ordinal_sum(parts), out_path);
        } else if (c_lsum->parsed() || c_flip->parsed()) {
            Poset shape = load_poset(files[0]);
            std::vector<Poset> comps;
            for (size_t i = 1; i < files.size(); ++i) comps.push_back(load_poset(files[i]));
            if (c_lsum->parsed()) {
                write_poset(lex_sum(shape, comps), out_path);
            } else {
                auto [sum, flipped] = bipartite_flip(shape, comps);
                (void)sum;
                write_poset(flipped, out_path);
            }
        } else if (c_ay->parsed()) {
            Poset x = load_poset(files[0]);
            std::vector<size_t> y;
            std::istringstream is(closed_spec);
            std::string item;
            while (std::getline(is, item, ',')) y.push_back(index_of_label(x, item));
            auto alg = ay_algebra(x, y);
            std::cout << "algebra dimension: " << alg.dim() << "\n";
            std::cout << "basis:";
            for (const auto& b : alg.basis) std::cout << " " << b;
            std::cout << "\n";
            auto res = ay_poset(x, y);
            if (std::holds_alternative<StarViolation>(res)) {
                auto w = std::get<StarViolation>(res);
                std::cout << "condition fails: y=" << x.label(w.y) << " y'=" << x.label(w.y_prime)
                          << " u'=" << x.label(w.u_prime) << " u=" << x.label(w.u)
                          << " (y < u but not y' < u')\n";
            } else {
                std::cout << "condition holds; reordered poset:\n";
                write_poset(std::get<Poset>(res), out_path);
            }
        }
        return kExitOk;
    }

    if (ext->parsed()) {
        Poset x = load_poset(ext_file);
        FieldTag field = parse_field(field_spec);
        size_t a = index_of_label(x, from_label), b = index_of_label(x, to_label);
        std::vector<size_t> dims;
        if (field.is_rational()) {
            mpq_class one(1);
            dims = ext_dims(standard_sheaf(x, one, SheafKind::simple, a),
                            standard_sheaf(x, one, SheafKind::simple, b));
        } else {
            Fp one(1, field.p);
            dims = ext_dims(standard_sheaf(x, one, SheafKind::simple, a),
                            standard_sheaf(x, one, SheafKind::simple, b));
        }
        if (as_json) {
            std::cout << json(dims).dump() << "\n";
        } else {
            std::cout << "ext[" << field.name() << "](" << from_label << "," << to_label
                      << "): " << seq(dims) << "\n";
        }
        return kExitOk;
    }

    if (coh->parsed()) {
        FieldTag field = parse_field(field_spec);
        auto dims = sheaf_cohomology_constant(load_poset(coh_file), field);
        if (as_json)
            std::cout << json(dims).dump() << "\n";
        else
            std::cout << "cohomology[" << field.name() << "]: " << seq(dims) << "\n";
        return kExitOk;
    }

    if (hh->parsed()) {
        Poset x = load_poset(hh_file);
        if (x.size() > 20)
            throw Error("hochschild is limited to 20 points (the enveloping poset has n^2)");
        FieldTag field = parse_field(field_spec);
        auto dims = hochschild_dims(x, field, max_degree);
        if (as_json)
            std::cout << json(dims).dump() << "\n";
        else
            std::cout << "hochschild[" << field.name() << "]: " << seq(dims) << "\n";
        return kExitOk;
    }

    if (iso->parsed()) {
        Poset a = load_poset(iso_a), b = load_poset(iso_b);
        auto f = is_isomorphic(a, b);
        if (as_json) {
            json j;
            j["isomorphic"] = f.has_value();
            if (f) {
                auto m = json::object();
                for (size_t i = 0; i < a.size(); ++i) m[a.label(i)] = b.label((*f)[i]);
                j["bijection"] = m;
            }
            std::cout << j.dump(2) << "\n";
        } else if (f) {
            std::cout << "isomorphic:";
            for (size_t i = 0; i < a.size(); ++i)
                std::cout << " " << a.label(i) << "->" << b.label((*f)[i]);
            std::cout << "\n";
        } else {
            std::cout << "not isomorphic\n";
        }
        return kExitOk;
    }

    return kExitInternal;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DuplicateLabel& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnknownLabel& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CycleDetected& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotPrime& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotClosed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotBipartite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const MissingComponent& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const EmptyList& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
