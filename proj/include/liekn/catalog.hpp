#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liekn/check_report.hpp"
#include "liekn/errors.hpp"
#include "liekn/grid_search.hpp"
#include "liekn/lie_algebra.hpp"
#include "liekn/operators.hpp"
#include "liekn/representation.hpp"
#include "liekn/structures.hpp"

namespace liekn {

/// Operators together with the structure kinds they are asserted to satisfy.
struct OperatorBundle {
    std::string name;
    std::string representation; ///< key into CatalogEntry::representations
    OperatorSet operators;
    std::vector<std::string> kinds;
    std::string provenance;

    const Matrix& at(const std::string& key) const {
        auto it = operators.find(key);
        if (it == operators.end()) throw UnknownName("bundle " + name + " has no operator " + key);
        return it->second;
    }
};

struct CatalogEntry {
    std::string name;
    LieAlgebra algebra;
    std::map<std::string, Representation> representations;
    std::vector<OperatorBundle> bundles;
    std::optional<BilinearForm> bilinear_form;
    std::string provenance;

    const Representation& representation(const std::string& key) const {
        auto it = representations.find(key);
        if (it == representations.end()) throw UnknownName(name + " has no representation " + key);
        return it->second;
    }

    const OperatorBundle& bundle(const std::string& key) const {
        for (const auto& b : bundles)
            if (b.name == key) return b;
        throw UnknownName(name + " has no operator bundle " + key);
    }
};

/// Kinds a bundle may assert.
inline const std::vector<std::string>& assertable_kinds() {
    static const std::vector<std::string> kinds{
        "nijenhuis", "rota_baxter", "kupershmidt", "nijenhuis_pair", "dual_nijenhuis_pair", "kn", "kdn",
        "compatible_pair", "r_matrix", "rmn", "rbn", "skew", "form_compatible"};
    return kinds;
}

/// Re-runs the predicate named by `kind` on the bundle's operators.
inline CheckReport verify_assertion(const CatalogEntry& e, const OperatorBundle& b, const std::string& kind) {
    const LieAlgebra& g = e.algebra;
    const Representation& rho = e.representation(b.representation);
    auto form = [&]() -> const BilinearForm& {
        if (!e.bilinear_form) throw UnknownName(e.name + " has no bilinear form");
        return *e.bilinear_form;
    };
    if (kind == "nijenhuis") return is_nijenhuis(g, b.at("N"));
    if (kind == "rota_baxter") return is_rota_baxter(g, b.at("R"));
    if (kind == "kupershmidt") return is_kupershmidt(g, rho, b.at("T"));
    if (kind == "nijenhuis_pair") return is_nijenhuis_pair(g, rho, b.at("N"), b.at("S"));
    if (kind == "dual_nijenhuis_pair") return is_dual_nijenhuis_pair(g, rho, b.at("N"), b.at("S"));
    if (kind == "kn") return is_kn_structure(g, rho, b.at("T"), b.at("S"), b.at("N")).report;
    if (kind == "kdn") return is_kdn_structure(g, rho, b.at("T"), b.at("S"), b.at("N")).report;
    if (kind == "compatible_pair") return are_compatible_kupershmidt(g, rho, b.at("T1"), b.at("T2"));
    if (kind == "r_matrix") return is_r_matrix(g, Bivector{b.at("pi_sharp")});
    if (kind == "rmn") return is_r_matrix_nijenhuis(g, Bivector{b.at("pi_sharp")}, b.at("N")).report;
    if (kind == "rbn") return is_rbn_structure(g, b.at("R"), b.at("N")).report;
    if (kind == "skew") return is_skew_endomorphism(g, b.at("R"), form());
    if (kind == "form_compatible") return check_form_compatibility(g, b.at("N"), form());
    throw UnknownName("unknown structure kind " + kind);
}

namespace detail {

inline std::map<std::string, Representation> standard_reps(const LieAlgebra& g) {
    return {{"ad", adjoint_rep(g)}, {"coad", coadjoint_rep(g)}};
}

inline CatalogEntry make_abelian(std::size_t n) {
    LieAlgebra g = LieAlgebra::abelian(n);
    CatalogEntry e{"abelian_" + std::to_string(n), g, standard_reps(g), {}, BilinearForm{Matrix::identity(n)},
                   "definition"};
    e.bundles.push_back({"identity", "ad", {{"N", Matrix::identity(n)}}, {"nijenhuis"}, "every endomorphism"});
    e.bundles.push_back({"rbn_zero",
                         "ad",
                         {{"R", Matrix(n, n)}, {"N", Matrix::identity(n)}},
                         {"rota_baxter", "nijenhuis", "rbn", "skew", "form_compatible"},
                         "definition"});
    return e;
}

inline CatalogEntry make_aff1() {
    Bracket b(2);
    b.set(0, 1, Vector{0, 1});
    LieAlgebra g(std::move(b));
    CatalogEntry e{"aff1", g, standard_reps(g), {}, std::nullopt, "[e1,e2] = e2"};
    const std::string grid = "grid search over {-1,0,1}";
    e.bundles.push_back({"rb_diag", "ad", {{"R", Matrix::diagonal({1, 0})}}, {"rota_baxter"}, grid});
    e.bundles.push_back({"nijenhuis_diag", "ad", {{"N", Matrix::diagonal({2, 5})}}, {"nijenhuis"}, "diagonal family"});
    e.bundles.push_back({"kn_ad",
                         "ad",
                         {{"T", Matrix::diagonal({1, 0})}, {"S", Matrix::diagonal({1, -1})}, {"N", Matrix{{1, 1}, {0, -1}}}},
                         {"kupershmidt", "nijenhuis_pair", "kn"},
                         grid});
    e.bundles.push_back({"kn_kdn_ad",
                         "ad",
                         {{"T", Matrix::diagonal({1, 0})}, {"S", Matrix{{1, 0}, {1, 1}}}, {"N", Matrix::diagonal({1, 0})}},
                         {"kn", "kdn"},
                         grid});
    e.bundles.push_back({"kdn_ad",
                         "ad",
                         {{"T", Matrix::diagonal({1, 0})}, {"S", Matrix{{0, 0}, {-1, 1}}}, {"N", Matrix{{0, 1}, {0, 1}}}},
                         {"dual_nijenhuis_pair", "kdn"},
                         grid});
    e.bundles.push_back({"kn_coad",
                         "coad",
                         {{"T", Matrix{{0, 1}, {-1, 0}}}, {"S", Matrix{{1, 1}, {0, 1}}}, {"N", Matrix{{1, 0}, {-1, 1}}}},
                         {"kn", "kdn"},
                         grid});
    e.bundles.push_back({"compatible_coad",
                         "coad",
                         {{"T1", Matrix{{0, -1}, {1, -1}}}, {"T2", Matrix{{0, -1}, {1, 0}}}},
                         {"compatible_pair"},
                         grid});
    e.bundles.push_back({"r_matrix", "coad", {{"pi_sharp", Matrix{{0, 1}, {-1, 0}}}}, {"r_matrix"}, grid});
    return e;
}

inline CatalogEntry make_heis3() {
    Bracket b(3);
    b.set(0, 1, Vector{0, 0, 1});
    LieAlgebra g(std::move(b));
    CatalogEntry e{"heis3", g, standard_reps(g), {}, std::nullopt, "[e1,e2] = e3"};
    e.bundles.push_back({"kn_ad",
                         "ad",
                         {{"T", Matrix{{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}},
                          {"S", Matrix{{1, 0, 0}, {0, 1, 0}, {0, 1, 1}}},
                          {"N", Matrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}}},
                         {"kn", "kdn"},
                         "T with central image; S, N searched over {0,1}"});
    e.bundles.push_back({"kn_coad",
                         "coad",
                         {{"T", Matrix{{1, 1, 0}, {1, 1, 1}, {1, 0, 0}}},
                          {"S", Matrix{{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}},
                          {"N", Matrix{{0, 1, 0}, {-1, 2, 0}, {0, 0, 1}}}},
                         {"kn", "kdn"},
                         "invertible Kupershmidt T over {0,1}, S over {0,1}, N = T S T^-1"});
    return e;
}

inline CatalogEntry make_sl2() {
    Bracket b(3);
    b.set(0, 1, Vector{0, 2, 0});
    b.set(0, 2, Vector{0, 0, -2});
    b.set(1, 2, Vector{1, 0, 0});
    LieAlgebra g(std::move(b), {"h", "e", "f"});
    CatalogEntry e{"sl2", g, standard_reps(g), {}, BilinearForm{Matrix{{8, 0, 0}, {0, 0, 4}, {0, 4, 0}}},
                   "[h,e] = 2e, [h,f] = -2f, [e,f] = h; Killing form"};
    const Matrix n{{1, 0, 0}, {0, 1, 1}, {0, 0, 1}};
    e.bundles.push_back({"rbn",
                         "ad",
                         {{"R", Matrix{{0, 0, -4}, {8, 0, 0}, {0, 0, 0}}}, {"N", n}},
                         {"rota_baxter", "nijenhuis", "rbn", "skew", "form_compatible"},
                         "R = pi# G for the r-matrix h^e; N searched over {-1,0,1}"});
    e.bundles.push_back({"rmn",
                         "coad",
                         {{"pi_sharp", Matrix{{0, -1, 0}, {1, 0, 0}, {0, 0, 0}}}, {"N", n}},
                         {"r_matrix", "rmn", "form_compatible"},
                         "r-matrix search over {-1,0,1}"});
    return e;
}

inline std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> entries;
    for (std::size_t n = 1; n <= 3; ++n) entries.push_back(make_abelian(n));
    entries.push_back(make_aff1());
    entries.push_back(make_heis3());
    entries.push_back(make_sl2());
    for (const auto& e : entries)
        for (const auto& b : e.bundles)
            for (const auto& kind : b.kinds) {
                CheckReport r = verify_assertion(e, b, kind);
                if (!r.holds()) {
                    CheckReport named("catalog " + e.name + "/" + b.name + ": " + kind);
                    named.absorb(r);
                    throw ValidationError(std::move(named));
                }
            }
    return entries;
}

} // namespace detail

/// All entries, built and re-verified on first use.
inline const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = detail::build_catalog();
    return entries;
}

inline std::vector<std::string> list_catalog() {
    std::vector<std::string> names;
    for (const auto& e : catalog()) names.push_back(e.name);
    return names;
}

inline const CatalogEntry& get_entry(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    throw UnknownName("no catalog entry named " + name);
}

} // namespace liekn
