// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "liekn/liekn.hpp"
#include "oracle.hpp"

using namespace liekn;

namespace {

struct Tally {
    std::size_t checks = 0, failures = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && failures++ == 0) first_failure = what;
    }
};

std::string str(const Matrix& m) {
    std::ostringstream s;
    s << m;
    return s.str();
}

std::vector<Matrix> grid_matrices(std::size_t rows, std::size_t cols, const std::vector<int>& values) {
    std::vector<Matrix> out;
    for (const auto& m : oracle::all_matrices(rows, cols, oracle::grid(values))) out.push_back(oracle::to_matrix(m));
    return out;
}

std::vector<Matrix> diagonals(std::size_t n, const std::vector<int>& values) {
    std::vector<Matrix> out;
    for (const auto& d : grid_matrices(1, n, values)) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = d(0, i);
        out.push_back(m);
    }
    return out;
}

std::vector<Matrix> kupershmidt_grid(const LieAlgebra& g, const Representation& rho, const std::vector<int>& vals) {
    std::vector<Matrix> out;
    for (const auto& t : grid_matrices(g.dim(), rho.module_dim(), vals))
        if (is_kupershmidt(g, rho, t).holds()) out.push_back(t);
    return out;
}

std::vector<oracle::Mat> oracle_rep(const Representation& rho) {
    std::vector<oracle::Mat> out;
    for (const auto& m : rho.action().matrices()) out.push_back(oracle::from(m));
    return out;
}

// 1: Jacobi, adjoint/coadjoint representations, g semidirect g.
Tally foundation() {
    Tally t;
    for (const auto& e : catalog()) {
        t.expect(check_jacobi(e.algebra).holds(), e.name + " jacobi");
        t.expect(check_representation(e.algebra, adjoint_rep(e.algebra).action()).holds(), e.name + " ad");
        t.expect(check_representation(e.algebra, dual_action(adjoint_rep(e.algebra).action())).holds(), e.name + " coad");
        t.expect(check_jacobi(semidirect_product(e.algebra, adjoint_rep(e.algebra)).bracket()).holds(),
                 e.name + " semidirect");
    }
    return t;
}

// 2: Nijenhuis pairs give trivial deformations; duality and semidirect tests agree.
Tally deformations() {
    Tally t;
    std::size_t failing = 0;
    for (const char* name : {"aff1", "heis3"}) {
        const LieAlgebra& g = get_entry(name).algebra;
        const Representation ad = adjoint_rep(g);
        const Representation coad = dual_representation(ad);
        std::vector<Matrix> family = g.dim() == 2 ? grid_matrices(2, 2, {-1, 0, 1}) : diagonals(3, {-1, 0, 1});
        if (g.dim() == 3) {
            const auto extra = grid_matrices(3, 3, {0, 1});
            for (std::size_t k = 0; k < extra.size(); k += 8) family.push_back(extra[k]);
        }
        for (const auto& n : family) {
            if (!is_nijenhuis(g, n).holds()) continue;
            for (const auto& s : family) {
                const bool pair = is_nijenhuis_pair(g, ad, n, s).holds();
                const std::string label = std::string(name) + " N=" + str(n) + " S=" + str(s);
                t.expect(pair == is_dual_nijenhuis_pair(g, coad, n, s.transpose()).holds(), "duality " + label);
                t.expect(pair == nijenhuis_pair_semidirect_test(g, ad, n, s).holds(), "semidirect " + label);
                if (!pair) {
                    ++failing;
                    continue;
                }
                const DeformationPair d = trivial_deformation_from_pair(g, ad, n, s);
                t.expect(check_deformation_pair(g, ad, d).holds(), "deformation " + label);
                t.expect(check_trivial_equivalence(g, ad, n, s, d).holds(), "equivalence " + label);
            }
        }
    }
    t.expect(failing >= 5, "at least 5 failing pairs");
    return t;
}

struct Triple {
    std::string label;
    const LieAlgebra* g;
    const Representation* rho;
    Matrix t, s, n;
};

std::vector<Triple> triples() {
    std::vector<Triple> out;
    for (const auto& e : catalog())
        for (const auto& b : e.bundles) {
            const Representation& rho = e.representation(b.representation);
            const std::size_t n = e.algebra.dim(), m = rho.module_dim();
            const bool structure = std::find(b.kinds.begin(), b.kinds.end(), "kn") != b.kinds.end() ||
                                   std::find(b.kinds.begin(), b.kinds.end(), "kdn") != b.kinds.end();
            if (structure) out.push_back({e.name + "/" + b.name, &e.algebra, &rho, b.at("T"), b.at("S"), b.at("N")});
            if (!b.operators.count("T")) continue;
            for (int l : {1, 2, -1})
                out.push_back({e.name + "/" + b.name + " scaled " + std::to_string(l), &e.algebra, &rho, b.at("T"),
                               Matrix::scalar(m, l), Matrix::scalar(n, l)});
        }
    return out;
}

// 3: bracket coincidence, sub-adjacent Nijenhuis, Kupershmidt on the deformed algebra, KdN promotion.
Tally kn_structures() {
    Tally t;
    for (const auto& tr : triples()) {
        const bool kn = is_kn_structure(*tr.g, *tr.rho, tr.t, tr.s, tr.n).holds();
        const bool kdn = is_kdn_structure(*tr.g, *tr.rho, tr.t, tr.s, tr.n).holds();
        t.expect(kn || kdn, "structure " + tr.label);
        const Bracket sub = sub_adjacent_bracket(*tr.g, *tr.rho, tr.t);
        const Bracket by_s = deform_bracket_by_S(sub, tr.s);
        t.expect(by_s == sub_adjacent_bracket(*tr.g, *tr.rho, tr.n * tr.t), "coincidence " + tr.label);
        if (kn) t.expect(by_s == bracket_from_rep(rho_hat(*tr.rho, tr.n, tr.s), tr.t), "hat coincidence " + tr.label);
        if (kdn)
            t.expect(by_s == bracket_from_rep(rho_tilde(*tr.rho, tr.n, tr.s), tr.t), "tilde coincidence " + tr.label);
        t.expect(is_nijenhuis(LieAlgebra(sub), tr.s).holds(), "sub-adjacent nijenhuis " + tr.label);
        const Bracket deformed = deformed_algebra(*tr.g, tr.n);
        if (kn) t.expect(is_kupershmidt(deformed, rho_hat(*tr.rho, tr.n, tr.s), tr.t).holds(), "hat " + tr.label);
        if (kdn) t.expect(is_kupershmidt(deformed, rho_tilde(*tr.rho, tr.n, tr.s), tr.t).holds(), "tilde " + tr.label);
        t.expect(is_kupershmidt(*tr.g, *tr.rho, tr.n * tr.t).holds(), "NT " + tr.label);
        if (kn && invert(tr.t)) t.expect(kdn, "invertible promotes " + tr.label);
    }
    const LieAlgebra& g = get_entry("aff1").algebra;
    const Representation coad = coadjoint_rep(g);
    std::size_t promoted = 0;
    for (const auto& r : grid_search(g, coad, SearchKind::kn_structure, {-1, 0, 1})) {
        if (!invert(r.at("T"))) continue;
        ++promoted;
        t.expect(is_kdn_structure(g, coad, r.at("T"), r.at("S"), r.at("N")).holds(), "invertible promotes " + str(r.at("T")));
    }
    t.expect(promoted > 0, "invertible KN instances exist");
    return t;
}

// 4: compatibility, invertible pairs, hierarchies, KdN from compatible pairs.
Tally compatibility() {
    Tally t;
    for (const char* name : {"aff1", "heis3"})
        for (const char* rep : {"ad", "coad"}) {
            const CatalogEntry& e = get_entry(name);
            const Representation& rho = e.representation(rep);
            const auto ts = kupershmidt_grid(e.algebra, rho, e.algebra.dim() == 2 ? std::vector<int>{-1, 0, 1}
                                                                                   : std::vector<int>{0, 1});
            const auto c = oracle::from(e.algebra.bracket());
            const auto orho = oracle_rep(rho);
            for (std::size_t a = 0; a < ts.size(); ++a)
                for (std::size_t b = a; b < ts.size(); ++b)
                    t.expect(are_compatible_kupershmidt(e.algebra, rho, ts[a], ts[b]).holds() ==
                                 oracle::compatible_by_definition(c, orho, oracle::from(ts[a]), oracle::from(ts[b])),
                             std::string("compatible ") + name + "/" + rep + " " + str(ts[a]) + str(ts[b]));
        }

    const LieAlgebra& aff1 = get_entry("aff1").algebra;
    for (const char* rep : {"ad", "coad"}) {
        const Representation& rho = get_entry("aff1").representation(rep);
        std::vector<Matrix> inv;
        for (const auto& m : kupershmidt_grid(aff1, rho, {-1, 0, 1}))
            if (invert(m)) inv.push_back(m);
        for (const auto& t1 : inv)
            for (const auto& t2 : inv)
                t.expect(are_compatible_kupershmidt(aff1, rho, t1, t2).holds() ==
                             is_nijenhuis(aff1, t1 * *invert(t2)).holds(),
                         "nijenhuis quotient " + str(t1) + str(t2));
    }

    for (const auto& tr : triples()) {
        const HierarchyResult h = hierarchy(*tr.g, *tr.rho, tr.t, tr.s, tr.n, 5);
        t.expect(h.holds(), "hierarchy " + tr.label);
    }
    for (const char* rep : {"ad", "coad"}) {
        const Representation& rho = get_entry("aff1").representation(rep);
        for (const auto& r : grid_search(aff1, rho, SearchKind::kn_structure, {-1, 0, 1}))
            t.expect(hierarchy(aff1, rho, r.at("T"), r.at("S"), r.at("N"), 5).holds(),
                     std::string("hierarchy aff1/") + rep + " " + str(r.at("T")) + str(r.at("S")) + str(r.at("N")));
    }

    std::size_t built = 0;
    for (const char* name : {"aff1", "heis3"}) {
        const CatalogEntry& e = get_entry(name);
        const Representation& coad = e.representation("coad");
        const auto ts = kupershmidt_grid(e.algebra, coad, e.algebra.dim() == 2 ? std::vector<int>{-1, 0, 1}
                                                                                : std::vector<int>{0, 1});
        for (const auto& tm : ts) {
            if (!invert(tm)) continue;
            for (const auto& t1 : ts) {
                if (!are_compatible_kupershmidt(e.algebra, coad, tm, t1).holds()) continue;
                ++built;
                const auto out = kdn_from_compatible(e.algebra, coad, tm, t1);
                t.expect(out.from_t.holds() && out.from_t1.holds(), std::string("kdn from ") + name + str(tm) + str(t1));
            }
        }
    }
    t.expect(built > 0, "compatible invertible pairs exist");
    return t;
}

// 5: Killing form, RBN/RMN round trip, r-matrix equals coadjoint Kupershmidt.
Tally forms_and_r_matrices() {
    Tally t;
    const CatalogEntry& sl2 = get_entry("sl2");
    const Matrix killing = oracle::to_matrix(oracle::killing(oracle::sl2()));
    t.expect(killing == Matrix{{8, 0, 0}, {0, 0, 4}, {0, 4, 0}}, "killing matrix");
    t.expect(check_bilinear_form(sl2.algebra, BilinearForm{killing}).holds(), "killing form");
    const BilinearForm b{killing};

    const OperatorBundle& rbn = sl2.bundle("rbn");
    const auto fwd = rbn_to_rmn(sl2.algebra, rbn.at("R"), rbn.at("N"), b);
    t.expect(fwd.verdict.holds(), "rbn_to_rmn");
    t.expect(is_r_matrix_nijenhuis(sl2.algebra, fwd.pi, fwd.n).holds(), "rmn re-verifies");
    const auto back = rmn_to_rbn(sl2.algebra, fwd.pi, fwd.n, b);
    t.expect(back.verdict.holds() && back.r == rbn.at("R") && back.n == rbn.at("N"), "round trip from rbn");
    t.expect(is_rbn_structure(sl2.algebra, back.r, back.n).holds(), "rbn re-verifies");

    std::size_t converted = 0;
    for (const auto& r : grid_search(sl2.algebra, sl2.representation("coad"), SearchKind::r_matrix, {-1, 0, 1}))
        for (const auto& nm : grid_search(sl2.algebra, sl2.representation("ad"), SearchKind::nijenhuis, {-1, 0, 1})) {
            const Bivector pi{r.at("pi_sharp")};
            if (!check_form_compatibility(sl2.algebra, nm.at("N"), b).holds()) continue;
            if (!is_r_matrix_nijenhuis(sl2.algebra, pi, nm.at("N")).holds()) continue;
            ++converted;
            const auto to_rbn = rmn_to_rbn(sl2.algebra, pi, nm.at("N"), b);
            const auto again = rbn_to_rmn(sl2.algebra, to_rbn.r, to_rbn.n, b);
            t.expect(to_rbn.verdict.holds() && again.verdict.holds() && again.pi.pi_sharp == pi.pi_sharp &&
                         again.n == nm.at("N"),
                     "round trip " + str(pi.pi_sharp) + str(nm.at("N")));
        }
    t.expect(converted > 0, "sl2 grid conversions exist");

    for (const char* name : {"aff1", "heis3"}) {
        const LieAlgebra& g = get_entry(name).algebra;
        const Representation coad = coadjoint_rep(g);
        for (const auto& p : oracle::antisymmetric_matrices(g.dim(), oracle::grid({-2, -1, 0, 1, 2}))) {
            const Matrix pm = oracle::to_matrix(p);
            t.expect(is_r_matrix(g, Bivector{pm}).holds() == is_kupershmidt(g, coad, pm).holds(),
                     std::string("r-matrix ") + name + str(pm));
        }
    }
    return t;
}

// 6: grid search equals brute-force filtering.
Tally oracle_consistency() {
    Tally t;
    const CatalogEntry& e = get_entry("aff1");
    const auto found = grid_search(e.algebra, e.representation("ad"), SearchKind::rota_baxter, {-1, 0, 1});
    std::vector<Matrix> brute;
    const auto all = grid_matrices(2, 2, {-1, 0, 1});
    t.expect(all.size() == 81, "81 candidates");
    for (const auto& m : all)
        if (is_rota_baxter(e.algebra, m).holds()) brute.push_back(m);
    std::vector<Matrix> got;
    for (const auto& r : found) got.push_back(r.at("R"));
    t.expect(got == brute, "grid search equals brute force");
    for (const Matrix& m : {Matrix::diagonal({1, 0}), Matrix::diagonal({-1, 0}), Matrix(2, 2)})
        t.expect(std::find(got.begin(), got.end(), m) != got.end(), "contains " + str(m));
    return t;
}

struct Invocation {
    int code;
    std::string out;
};

Invocation invoke(const std::string& args) {
    const std::string cmd = std::string("\"") + LIEKN_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// 7: exit codes on the fixture set and byte-stable --json output.
Tally cli_contract() {
    Tally t;
    const std::string dir = LIEKN_FIXTURES_DIR;
    const std::vector<std::pair<std::string, int>> cases{
        {"validate aff1_valid.json", 0},
        {"check nijenhuis aff1_nijenhuis_diag.json", 0},
        {"check kn aff1_kn_trivial.json", 0},
        {"check kn aff1_kn.json", 0},
        {"check kn heis3_kn_coad.json", 0},
        {"check compatible aff1_compatible_coad.json", 0},
        {"check deformation aff1_deformation.json", 0},
        {"check rmn sl2_rmn.json", 0},
        {"check bilinear_form sl2_rbn.json", 0},
        {"convert rbn-to-rmn sl2_rbn.json", 0},
        {"convert rbn-to-rmn abelian3_rbn_zero.json", 0},
        {"hierarchy aff1_hierarchy_scaled.json --kmax 5", 0},
        {"check rbn aff1_rbn_identity.json", 1},
        {"check rota_baxter aff1_rota_baxter_identity.json", 1},
        {"validate aff1_bad_representation.json", 1},
        {"validate broken_jacobi.json", 1},
        {"validate zero_denominator.json", 2},
        {"validate syntax_error.json", 2},
        {"validate unknown_key.json", 2},
        {"validate no_algebra.json", 2},
        {"check nijenhuis bad_shape.json", 2},
        {"check kn aff1_kn_missing_s.json", 2},
        {"convert rbn-to-rmn sl2_rbn_no_form.json", 2},
    };
    for (const auto& [args, code] : cases) {
        const std::size_t end = args.find(".json") + 5, space = args.rfind(' ', end - 1);
        const std::string full = args.substr(0, space + 1) + "\"" + dir + "/" + args.substr(space + 1, end - space - 1) +
                                 "\"" + args.substr(end);
        const Invocation plain = invoke(full);
        t.expect(plain.code == code, args + " exit " + std::to_string(plain.code));
        if (code == 2) continue;
        const Invocation a = invoke("--json " + full), b = invoke("--json " + full);
        t.expect(a.code == code && b.code == code, args + " --json exit");
        t.expect(!a.out.empty() && a.out == b.out, args + " --json byte-stable");
        t.expect(a.out.find(code == 0 ? "\"verdict\": true" : "\"verdict\": false") != std::string::npos,
                 args + " --json verdict");
    }
    const Invocation s1 = invoke("--json search rota_baxter --algebra aff1 --grid -1,0,1");
    const Invocation s2 = invoke("--json search rota_baxter --algebra aff1 --grid 1,0,-1,0");
    t.expect(s1.code == 0 && s1.out == s2.out, "search output independent of grid order");
    t.expect(invoke("check lie \"" + dir + "/aff1_valid.json\"").code == 2, "unknown kind exit");
    t.expect(invoke("validate \"" + dir + "/missing.json\"").code == 2, "missing file exit");
    return t;
}

struct Criterion {
    int id;
    std::string name;
    double bound_seconds;
    std::function<Tally()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "foundation: jacobi, ad/coad, semidirect", 1, foundation},
        {2, "nijenhuis pairs and trivial deformations", 30, deformations},
        {3, "kupershmidt-nijenhuis structures", 30, kn_structures},
        {4, "compatibility and hierarchies", 60, compatibility},
        {5, "bilinear forms, rbn/rmn conversion, r-matrices", 30, forms_and_r_matrices},
        {6, "grid search oracle consistency", 1, oracle_consistency},
        {7, "cli exit codes and byte-stable json", 0, cli_contract},
    };
    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Tally t;
        try {
            t = c.run();
        } catch (const std::exception& e) {
            t.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.bound_seconds <= 0 || secs < c.bound_seconds;
        const bool ok = t.failures == 0 && in_time;
        all = all && ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << t.checks
                  << " checks, " << std::fixed << std::setprecision(3) << secs << " s";
        if (c.bound_seconds > 0) std::cout << ", bound " << std::setprecision(0) << c.bound_seconds << " s";
        std::cout << ")";
        if (t.failures) std::cout << " " << t.failures << " failed, first: " << t.first_failure;
        if (!in_time) std::cout << " over time bound";
        std::cout << "\n";
    }
    return all ? 0 : 1;
}
