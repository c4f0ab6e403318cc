#pragma once

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "liekn/liekn.hpp"

namespace liekn::cli {

using io::json;

enum ExitCode : int { pass = 0, math_failure = 1, input_error = 2 };

/// Outcome of one command before rendering.
struct Outcome {
    std::string kind;
    CheckReport report;
    std::map<std::string, json> certificates;
    std::optional<std::string> failed_hypothesis;
    std::string precondition_detail;
    json extra = json::object(); ///< additional top-level JSON fields

    bool holds() const { return !failed_hypothesis && report.holds(); }
};

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot read file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string index_tuple(const std::vector<std::size_t>& idx) {
    std::string s = "(";
    for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + std::to_string(idx[k]);
    return s + ")";
}

inline json outcome_json(const Outcome& o) {
    json j = io::report_json(o.kind, o.report, o.certificates);
    j["verdict"] = o.holds();
    if (o.failed_hypothesis)
        j["witnesses"].push_back(json{{"condition", "precondition"},
                                      {"hypothesis", *o.failed_hypothesis},
                                      {"detail", o.precondition_detail}});
    for (const auto& [k, v] : o.extra.items()) j[k] = v;
    return j;
}

inline void render_text(const Outcome& o, std::ostream& out) {
    out << o.kind << ": " << (o.holds() ? "pass" : "fail") << "\n";
    if (o.failed_hypothesis)
        out << "  precondition " << *o.failed_hypothesis << " does not hold\n    "
            << o.precondition_detail << "\n";
    for (const auto& w : o.report.witnesses()) {
        out << "  " << w.condition << " at " << index_tuple(w.indices) << ": defect ";
        std::visit([&out](const auto& d) { out << d; }, w.defect);
        out << "\n";
    }
    for (const auto& [k, v] : o.certificates) out << "  " << k << " = " << v.dump() << "\n";
    if (o.extra.contains("results"))
        for (const auto& r : o.extra["results"]) {
            out << " ";
            for (const auto& [k, m] : r.items()) out << " " << k << " = " << m.dump();
            out << "\n";
        }
}

inline Outcome from_report(std::string kind, CheckReport r) { return Outcome{std::move(kind), std::move(r), {}, {}, {}}; }

inline Outcome from_verdict(std::string kind, const StructureVerdict& v) {
    Outcome o = from_report(std::move(kind), v.report);
    for (const auto& [k, c] : v.certificates) o.certificates[k] = io::certificate_json(c);
    return o;
}

inline const BilinearForm& form(const io::Document& d) {
    if (!d.bilinear_form) throw io::MissingStanza("bilinear_form");
    return *d.bilinear_form;
}

inline const Bivector& bivector(const io::Document& d) {
    if (!d.bivector) throw io::MissingStanza("bivector");
    return *d.bivector;
}

inline const DeformationPair& deformation(const io::Document& d) {
    if (!d.deformation) throw io::MissingStanza("deformation");
    return *d.deformation;
}

using CheckFn = std::function<Outcome(const io::Document&, const LieAlgebra&)>;

inline const std::map<std::string, CheckFn>& check_table() {
    using D = io::Document;
    using G = LieAlgebra;
    auto rep = [](const D& d, const G& g) { return io::representation(d, g); };
    static const std::map<std::string, CheckFn> table{
        {"jacobi", [](const D&, const G& g) { return from_report("jacobi", check_jacobi(g)); }},
        {"representation",
         [](const D& d, const G& g) {
             if (!d.representation) throw io::MissingStanza("representation");
             if (const auto* a = std::get_if<RepAction>(&*d.representation))
                 return from_report("representation", check_representation(g, *a));
             return from_report("representation", check_representation(g, io::representation(d, g).action()));
         }},
        {"nijenhuis", [](const D& d, const G& g) { return from_report("nijenhuis", is_nijenhuis(g, d.op("N"))); }},
        {"rota_baxter", [](const D& d, const G& g) { return from_report("rota_baxter", is_rota_baxter(g, d.op("R"))); }},
        {"kupershmidt",
         [rep](const D& d, const G& g) { return from_report("kupershmidt", is_kupershmidt(g, rep(d, g), d.op("T"))); }},
        {"nijenhuis_pair",
         [rep](const D& d, const G& g) {
             return from_report("nijenhuis_pair", is_nijenhuis_pair(g, rep(d, g), d.op("N"), d.op("S")));
         }},
        {"dual_nijenhuis_pair",
         [rep](const D& d, const G& g) {
             return from_report("dual_nijenhuis_pair", is_dual_nijenhuis_pair(g, rep(d, g), d.op("N"), d.op("S")));
         }},
        {"perfect_pair",
         [rep](const D& d, const G& g) {
             return from_report("perfect_pair", is_perfect_pair(g, rep(d, g), d.op("N"), d.op("S")));
         }},
        {"semidirect_pair",
         [rep](const D& d, const G& g) {
             return from_report("semidirect_pair", nijenhuis_pair_semidirect_test(g, rep(d, g), d.op("N"), d.op("S")));
         }},
        {"pre_lie",
         [rep](const D& d, const G& g) {
             return from_report("pre_lie", check_pre_lie(pre_lie_product(g, rep(d, g), d.op("T"))));
         }},
        {"deformation",
         [rep](const D& d, const G& g) {
             return from_report("deformation", check_deformation_pair(g, rep(d, g), deformation(d)));
         }},
        {"trivial_deformation",
         [rep](const D& d, const G& g) {
             return from_report("trivial_deformation",
                                check_trivial_equivalence(g, rep(d, g), d.op("N"), d.op("S"), deformation(d)));
         }},
        {"kn",
         [rep](const D& d, const G& g) {
             return from_verdict("kn", is_kn_structure(g, rep(d, g), d.op("T"), d.op("S"), d.op("N")));
         }},
        {"kdn",
         [rep](const D& d, const G& g) {
             return from_verdict("kdn", is_kdn_structure(g, rep(d, g), d.op("T"), d.op("S"), d.op("N")));
         }},
        {"compatible",
         [rep](const D& d, const G& g) {
             return from_report("compatible", are_compatible_kupershmidt(g, rep(d, g), d.op("T1"), d.op("T2")));
         }},
        {"r_matrix", [](const D& d, const G& g) { return from_report("r_matrix", is_r_matrix(g, bivector(d))); }},
        {"rmn", [](const D& d, const G& g) { return from_verdict("rmn", is_r_matrix_nijenhuis(g, bivector(d), d.op("N"))); }},
        {"rbn", [](const D& d, const G& g) { return from_verdict("rbn", is_rbn_structure(g, d.op("R"), d.op("N"))); }},
        {"bilinear_form", [](const D& d, const G& g) { return from_report("bilinear_form", check_bilinear_form(g, form(d))); }},
        {"skew", [](const D& d, const G& g) { return from_report("skew", is_skew_endomorphism(g, d.op("R"), form(d))); }},
        {"form_compatibility",
         [](const D& d, const G& g) {
             return from_report("form_compatibility", check_form_compatibility(g, d.op("N"), form(d)));
         }},
    };
    return table;
}

inline std::string kind_list() {
    std::string s;
    for (const auto& [k, _] : check_table()) s += (s.empty() ? "" : ", ") + k;
    return s;
}

/// Runs `body`; algebra/representation validation failures become reports and
/// failing hypotheses become precondition outcomes.
inline Outcome guarded(const std::string& kind, const std::function<Outcome()>& body) {
    try {
        return body();
    } catch (const ValidationError& e) {
        Outcome o = from_report(kind, e.report());
        return o;
    } catch (const PreconditionError& e) {
        Outcome o = from_report(kind, CheckReport(kind));
        o.failed_hypothesis = e.hypothesis();
        o.precondition_detail = e.detail();
        return o;
    }
}

inline Outcome cmd_validate(const io::Document& d) {
    CheckReport all("validate");
    all.absorb(check_jacobi(d.bracket));
    if (all.holds() && d.representation) {
        const LieAlgebra g = io::algebra(d);
        if (const auto* a = std::get_if<RepAction>(&*d.representation)) all.absorb(check_representation(g, *a));
    }
    return from_report("validate", all);
}

inline Outcome cmd_check(const std::string& kind, const io::Document& d) {
    auto it = check_table().find(kind);
    return guarded(kind, [&] { return it->second(d, io::algebra(d)); });
}

inline Outcome cmd_hierarchy(const io::Document& d, unsigned kmax) {
    return guarded("hierarchy", [&] {
        const LieAlgebra g = io::algebra(d);
        const Representation rho = io::representation(d, g);
        HierarchyResult h = hierarchy(g, rho, d.op("T"), d.op("S"), d.op("N"), kmax);
        Outcome o = from_report("hierarchy", h.report);
        o.certificates["base_kind"] = to_string(h.base_kind);
        json ops = json::array(), kup = json::array(), comp = json::array();
        for (std::size_t k = 0; k < h.operators.size(); ++k) {
            ops.push_back(io::to_json(h.operators[k]));
            kup.push_back(h.kupershmidt[k].holds());
            comp.push_back(h.compatible[k]);
        }
        o.certificates["operators"] = std::move(ops);
        o.certificates["kupershmidt"] = std::move(kup);
        o.certificates["compatible"] = std::move(comp);
        return o;
    });
}

/// Replaces R by pi_sharp (or back), leaving every other stanza untouched.
inline Outcome cmd_convert(const std::string& direction, io::Document d, const std::optional<std::string>& output) {
    const BilinearForm& b = form(d);
    Outcome o = guarded(direction, [&] {
        const LieAlgebra g = io::algebra(d);
        if (direction == "rbn-to-rmn") {
            auto r = rbn_to_rmn(g, d.op("R"), d.op("N"), b);
            Outcome out = from_verdict(direction, r.verdict);
            d.operators.erase("R");
            d.bivector = r.pi;
            return out;
        }
        if (!d.operators.count("N")) throw io::MissingStanza("operators/N");
        auto r = rmn_to_rbn(g, bivector(d), d.op("N"), b);
        Outcome out = from_verdict(direction, r.verdict);
        d.bivector.reset();
        d.operators["R"] = r.r;
        return out;
    });
    if (o.failed_hypothesis) return o;
    const std::string text = io::write_document(d);
    if (output) {
        std::ofstream f(*output, std::ios::binary);
        if (!f) throw ParseError(*output + ": cannot write file");
        f << text;
    }
    o.extra["document"] = io::to_json(d);
    return o;
}

inline std::vector<Rational> parse_grid(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        if (first == std::string::npos) throw ParseError("empty grid entry in \"" + text + "\"");
        out.push_back(Rational::parse(item.substr(first, last - first + 1)));
    }
    if (out.empty()) throw ParseError("empty grid");
    return out;
}

inline json operator_set_json(const OperatorSet& ops) {
    json j = json::object();
    for (const auto& key : io::operator_keys())
        if (auto it = ops.find(key); it != ops.end()) j[key] = io::to_json(it->second);
    if (auto it = ops.find("pi_sharp"); it != ops.end()) j["pi_sharp"] = io::to_json(it->second);
    return j;
}

inline Outcome cmd_search(const std::string& kind_name, const std::string& algebra, const std::string& rep,
                          const std::string& grid_text, std::uint64_t cap) {
    auto kind = parse_search_kind(kind_name);
    if (!kind) throw UnknownName("unknown search kind " + kind_name);
    const CatalogEntry& e = get_entry(algebra);
    std::vector<Rational> grid = parse_grid(grid_text);
    auto results = grid_search(e.algebra, e.representation(rep), *kind, grid, cap);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    Outcome o = from_report("search", CheckReport("search"));
    o.certificates["search_kind"] = kind_name;
    o.certificates["algebra"] = algebra;
    o.certificates["representation"] = rep;
    json g = json::array();
    for (const auto& q : grid) g.push_back(q.str());
    o.certificates["grid"] = std::move(g);
    o.certificates["count"] = results.size();
    json rs = json::array();
    for (const auto& r : results) rs.push_back(operator_set_json(r));
    o.extra["results"] = std::move(rs);
    return o;
}

inline io::Document export_entry(const CatalogEntry& e, const std::optional<std::string>& bundle) {
    io::Document d;
    d.bracket = e.algebra.bracket();
    d.basis = e.algebra.basis_names();
    d.bilinear_form = e.bilinear_form;
    if (bundle) {
        const OperatorBundle& b = e.bundle(*bundle);
        d.representation = b.representation;
        for (const auto& [k, m] : b.operators) {
            if (k == "pi_sharp")
                d.bivector = Bivector{m};
            else
                d.operators.emplace(k, m);
        }
    } else {
        d.representation = std::string("ad");
    }
    return d;
}

inline json catalog_json() {
    json entries = json::array();
    for (const auto& e : catalog()) {
        json bundles = json::array();
        for (const auto& b : e.bundles)
            bundles.push_back(json{{"name", b.name}, {"representation", b.representation}, {"kinds", b.kinds}});
        entries.push_back(json{{"name", e.name},
                               {"dim", e.algebra.dim()},
                               {"bilinear_form", e.bilinear_form.has_value()},
                               {"bundles", std::move(bundles)}});
    }
    return json{{"catalog", std::move(entries)}};
}

} // namespace detail

/**
 * Runs one invocation. `args` excludes the program name. Returns the exit
 * code: 0 all checks pass, 1 a mathematical check failed, 2 input or usage
 * error.
 */
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of Lie-algebraic operator structures", "liekn"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false, quiet = false;
    app.add_flag("--json", as_json, "Machine-readable output");
    app.add_flag("--quiet", quiet, "Suppress standard output; only the exit code reports the verdict");

    std::string file, kind, direction, algebra, grid, rep = "ad", name;
    std::optional<std::string> output, bundle;
    unsigned kmax = 3;
    std::uint64_t cap = default_grid_cap;

    auto* validate = app.add_subcommand("validate", "Parse a document and check the Jacobi and representation axioms");
    validate->add_option("file", file, "Document")->required();

    auto* check = app.add_subcommand("check", "Run one predicate on a document");
    check->add_option("kind", kind, "One of: " + detail::kind_list())->required();
    check->add_option("file", file, "Document")->required();

    auto* hier = app.add_subcommand("hierarchy", "Build T_k = N^k T and check every hierarchy property");
    hier->add_option("file", file, "Document with T, S, N")->required();
    hier->add_option("--kmax", kmax, "Largest k")->capture_default_str();

    auto* convert = app.add_subcommand("convert", "Convert between RBN and r-matrix-Nijenhuis structures");
    convert->add_option("direction", direction, "rbn-to-rmn or rmn-to-rbn")
        ->required()
        ->check(CLI::IsMember({"rbn-to-rmn", "rmn-to-rbn"}));
    convert->add_option("file", file, "Document")->required();
    convert->add_option("-o,--output", output, "Write the converted document here");

    auto* search = app.add_subcommand("search", "Exhaustive grid search over a catalog algebra");
    search->add_option("kind", kind, "Search kind")->required();
    search->add_option("--algebra", algebra, "Catalog algebra")->required();
    search->add_option("--grid", grid, "Comma-separated rationals, e.g. -1,0,1")->required()->allow_extra_args(false);
    search->add_option("--rep", rep, "ad or coad")->capture_default_str();
    search->add_option("--cap", cap, "Maximum raw candidate count")->capture_default_str();

    auto* cat = app.add_subcommand("catalog", "Built-in algebras and operators");
    cat->require_subcommand(1);
    cat->add_subcommand("list", "List entries");
    auto* exp = cat->add_subcommand("export", "Print an entry as a document");
    exp->add_option("name", name, "Entry name")->required();
    exp->add_option("--bundle", bundle, "Operator bundle to include");

    std::vector<std::string> argv_store{"liekn"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return pass;
    } catch (const CLI::ParseError& e) {
        err << "liekn: " << e.what() << "\n";
        return input_error;
    }

    auto emit = [&](const Outcome& o) {
        if (!quiet) {
            if (as_json)
                out << io::dump(detail::outcome_json(o));
            else
                detail::render_text(o, out);
        }
        return o.holds() ? pass : math_failure;
    };

    try {
        if (*validate) return emit(detail::cmd_validate(io::parse_document(detail::read_file(file))));
        if (*check) {
            if (!detail::check_table().count(kind)) {
                err << "liekn: unknown check kind \"" << kind << "\"; expected one of: " << detail::kind_list() << "\n";
                return input_error;
            }
            return emit(detail::cmd_check(kind, io::parse_document(detail::read_file(file))));
        }
        if (*hier) return emit(detail::cmd_hierarchy(io::parse_document(detail::read_file(file)), kmax));
        if (*convert) return emit(detail::cmd_convert(direction, io::parse_document(detail::read_file(file)), output));
        if (*search) return emit(detail::cmd_search(kind, algebra, rep, grid, cap));
        if (*cat) {
            if (cat->got_subcommand("list")) {
                if (!quiet) {
                    if (as_json)
                        out << io::dump(detail::catalog_json());
                    else
                        for (const auto& n : list_catalog()) out << n << "\n";
                }
                return pass;
            }
            const io::Document d = detail::export_entry(get_entry(name), bundle);
            if (!quiet) out << io::write_document(d);
            return pass;
        }
    } catch (const io::MissingStanza& e) {
        err << "liekn: " << e.what() << "\n";
        return input_error;
    } catch (const ParseError& e) {
        err << "liekn: " << e.what() << "\n";
        return input_error;
    } catch (const CapExceeded& e) {
        err << "liekn: " << e.what() << "\n";
        return input_error;
    } catch (const std::invalid_argument& e) {
        err << "liekn: " << e.what() << "\n";
        return input_error;
    } catch (const std::out_of_range& e) {
        err << "liekn: " << e.what() << "\n";
        return input_error;
    }
    return input_error;
}

} // namespace liekn::cli
