#pragma once

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "liekn/check_report.hpp"
#include "liekn/lie_algebra.hpp"
#include "liekn/linalg.hpp"
#include "liekn/operators.hpp"
#include "liekn/representation.hpp"

namespace liekn {

enum class StructureKind { kn, kdn, compatible_pair, hierarchy, r_matrix, rmn, rbn };

inline const char* to_string(StructureKind k) {
    switch (k) {
    case StructureKind::kn: return "kn";
    case StructureKind::kdn: return "kdn";
    case StructureKind::compatible_pair: return "compatible_pair";
    case StructureKind::hierarchy: return "hierarchy";
    case StructureKind::r_matrix: return "r_matrix";
    case StructureKind::rmn: return "rmn";
    case StructureKind::rbn: return "rbn";
    }
    return "unknown";
}

/// Derived objects a composite check compared, kept for inspection.
using Certificate = std::variant<Matrix, Bracket>;

struct StructureVerdict {
    StructureKind kind;
    CheckReport report;
    std::map<std::string, Certificate> certificates;

    bool holds() const noexcept { return report.holds(); }
};

/// pi^# : g* -> g in the dual basis; must be antisymmetric.
struct Bivector {
    Matrix pi_sharp;
};

/**
 * An ad-invariant symmetric bilinear form B on g, stored as its Gram matrix
 * gram(i,j) = B(e_i, e_j). The induced map B^# : g* -> g is the inverse of
 * the Gram matrix, so it exists only for nondegenerate forms.
 */
struct BilinearForm {
    Matrix gram;
};

namespace detail {

inline std::string describe(const CheckReport& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline void require(const CheckReport& r, const std::string& hypothesis) {
    if (!r.holds()) throw PreconditionError(hypothesis, describe(r));
}

inline void expect_equal_brackets(CheckReport& report, const std::string& condition, const Bracket& lhs,
                                  const Bracket& rhs) {
    for (std::size_t a = 0; a < lhs.dim(); ++a)
        for (std::size_t c = a + 1; c < lhs.dim(); ++c)
            report.expect_zero(condition, {a, c}, lhs.basis_bracket(a, c) - rhs.basis_bracket(a, c));
}

inline void expect_equal_columns(CheckReport& report, const std::string& condition, const Matrix& lhs,
                                 const Matrix& rhs) {
    const Matrix d = lhs - rhs;
    for (std::size_t a = 0; a < d.cols(); ++a) report.expect_zero(condition, {a}, d.column(a));
}

// N T = T S and [u,v]^{N T} = [u,v]^T_S, given the pair report.
inline StructureVerdict kn_like(StructureKind kind, const LieAlgebra& g, const Representation& rho, const Matrix& t,
                                const Matrix& smat, const Matrix& nmat, CheckReport pair) {
    StructureVerdict v{kind, CheckReport(to_string(kind)), {}};
    v.report.absorb(pair);
    const Matrix nt = nmat * t;
    expect_equal_columns(v.report, "intertwining", nt, t * smat);
    const Bracket by_nt = sub_adjacent_bracket(g, rho, nt);
    const Bracket by_s = deform_bracket_by_S(sub_adjacent_bracket(g, rho, t), smat);
    expect_equal_brackets(v.report, "bracket_compatibility", by_nt, by_s);
    v.certificates.emplace("NT", nt);
    v.certificates.emplace("bracket_NT", by_nt);
    v.certificates.emplace("bracket_T_S", by_s);
    return v;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Kupershmidt-(dual-)Nijenhuis structures
// ---------------------------------------------------------------------------

/// (T, S, N) with (N, S) a Nijenhuis pair, N T = T S and [u,v]^{NT} = [u,v]^T_S.
/// Throws PreconditionError("kupershmidt") when T is not a Kupershmidt operator.
inline StructureVerdict is_kn_structure(const LieAlgebra& g, const Representation& rho, const Matrix& t,
                                        const Matrix& smat, const Matrix& nmat) {
    detail::require(is_kupershmidt(g, rho, t), "kupershmidt");
    return detail::kn_like(StructureKind::kn, g, rho, t, smat, nmat, is_nijenhuis_pair(g, rho, nmat, smat));
}

/// As is_kn_structure with (N, S) a dual-Nijenhuis pair.
inline StructureVerdict is_kdn_structure(const LieAlgebra& g, const Representation& rho, const Matrix& t,
                                         const Matrix& smat, const Matrix& nmat) {
    detail::require(is_kupershmidt(g, rho, t), "kupershmidt");
    return detail::kn_like(StructureKind::kdn, g, rho, t, smat, nmat, is_dual_nijenhuis_pair(g, rho, nmat, smat));
}

// ---------------------------------------------------------------------------
// Compatible Kupershmidt operators
// ---------------------------------------------------------------------------

/// [T1u,T2v] + [T2u,T1v] = T1(rho(T2u)v - rho(T2v)u) + T2(rho(T1u)v - rho(T1v)u).
inline CheckReport are_compatible_kupershmidt(const LieAlgebra& g, const Representation& rho, const Matrix& t1,
                                              const Matrix& t2) {
    detail::require(is_kupershmidt(g, rho, t1), "kupershmidt_T1");
    detail::require(is_kupershmidt(g, rho, t2), "kupershmidt_T2");
    const std::size_t m = rho.module_dim();
    CheckReport report("compatible_pair");
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t c = a + 1; c < m; ++c) {
            const Vector u = Vector::unit(m, a), v = Vector::unit(m, c);
            const Vector t1u = t1.column(a), t1v = t1.column(c), t2u = t2.column(a), t2v = t2.column(c);
            Vector lhs = g(t1u, t2v) + g(t2u, t1v);
            Vector rhs = t1 * (rho(t2u) * v - rho(t2v) * u) + t2 * (rho(t1u) * v - rho(t1v) * u);
            report.expect_zero("compatibility", {a, c}, lhs - rhs);
        }
    return report;
}

/// Compatibility by definition: k1 T1 + k2 T2 is Kupershmidt for each listed (k1, k2).
inline CheckReport compatible_by_combinations(const LieAlgebra& g, const Representation& rho, const Matrix& t1,
                                              const Matrix& t2,
                                              const std::vector<std::pair<Rational, Rational>>& coefficients = {
                                                  {1, 1}, {1, -1}, {2, 3}}) {
    CheckReport report("compatible_by_combinations");
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        const auto& [k1, k2] = coefficients[k];
        const CheckReport combined = is_kupershmidt(g, rho, k1 * t1 + k2 * t2);
        for (const auto& w : combined.witnesses())
            report.add("combination_" + k1.str() + "_" + k2.str(), w.indices, w.defect);
    }
    return report;
}

/// N = T1 T2^{-1} for compatible Kupershmidt operators with T2 invertible.
inline Matrix nijenhuis_from_kupershmidt_pair(const LieAlgebra& g, const Representation& rho, const Matrix& t1,
                                              const Matrix& t2) {
    if (!t2.is_square()) throw PreconditionError("T2_invertible", "T2 is not square");
    auto inv = invert(t2);
    if (!inv) throw PreconditionError("T2_invertible", "T2 is singular");
    detail::require(are_compatible_kupershmidt(g, rho, t1, t2), "compatible");
    return t1 * *inv;
}

/// N([NTu,Tv] + [Tu,NTv]) = N(T(rho(NTu)v - rho(NTv)u) + NT(rho(Tu)v - rho(Tv)u)),
/// the condition for N T to be Kupershmidt when T is Kupershmidt and N Nijenhuis.
inline CheckReport check_nt_kupershmidt_condition(const LieAlgebra& g, const Representation& rho, const Matrix& t,
                                                  const Matrix& nmat) {
    detail::require(is_kupershmidt(g, rho, t), "kupershmidt");
    detail::require(is_nijenhuis(g, nmat), "nijenhuis");
    const std::size_t m = rho.module_dim();
    const Matrix nt = nmat * t;
    CheckReport report("nt_kupershmidt_condition");
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t c = a + 1; c < m; ++c) {
            const Vector u = Vector::unit(m, a), v = Vector::unit(m, c);
            const Vector tu = t.column(a), tv = t.column(c), ntu = nt.column(a), ntv = nt.column(c);
            Vector lhs = nmat * (g(ntu, tv) + g(tu, ntv));
            Vector rhs = nmat * (t * (rho(ntu) * v - rho(ntv) * u) + nt * (rho(tu) * v - rho(tv) * u));
            report.expect_zero("nt_condition", {a, c}, lhs - rhs);
        }
    return report;
}

// ---------------------------------------------------------------------------
// Hierarchies T_k = N^k T
// ---------------------------------------------------------------------------

struct HierarchyResult {
    StructureKind base_kind;            ///< kn or kdn, whichever held first
    std::vector<Matrix> operators;      ///< T_0 .. T_kmax
    std::vector<CheckReport> kupershmidt;
    std::vector<std::vector<bool>> compatible; ///< symmetric, (kmax+1)^2
    CheckReport report;                 ///< every internal check

    bool holds() const noexcept { return report.holds(); }
};

/**
 * Builds T_k = N^k T for k = 0..kmax from a Kupershmidt-(dual-)Nijenhuis
 * structure and verifies:
 *  - N^k T = T S^k,
 *  - every T_k is Kupershmidt and every pair (T_k, T_l) is compatible,
 *  - T_k [u,v]^T_{S^{k+i}} = [T_k u, T_k v]_{N^i} for k + i <= kmax,
 *  - [u,v]^{T_k} = [u,v]^T_{S^k} and [u,v]^{T_{k+i}} = ([u,v]^{T_k})_{S^i} for k + i <= kmax.
 */
inline HierarchyResult hierarchy(const LieAlgebra& g, const Representation& rho, const Matrix& t, const Matrix& smat,
                                 const Matrix& nmat, unsigned kmax) {
    StructureKind base = StructureKind::kn;
    if (!is_kn_structure(g, rho, t, smat, nmat).holds()) {
        base = StructureKind::kdn;
        auto kdn = is_kdn_structure(g, rho, t, smat, nmat);
        detail::require(kdn.report, "kn_or_kdn_structure");
    }

    HierarchyResult out{base, {}, {}, {}, CheckReport("hierarchy")};
    const std::size_t m = rho.module_dim();
    std::vector<Matrix> npow{Matrix::identity(g.dim())}, spow{Matrix::identity(m)};
    for (unsigned k = 1; k <= kmax; ++k) {
        npow.push_back(npow.back() * nmat);
        spow.push_back(spow.back() * smat);
    }
    // S^j may be needed up to j = kmax for the deformed brackets.
    const Bracket base_bracket = sub_adjacent_bracket(g, rho, t);
    std::vector<Bracket> deformed_by_s;
    for (unsigned j = 0; j <= kmax; ++j) deformed_by_s.push_back(deform_bracket_by_S(base_bracket, spow[j]));
    std::vector<Bracket> sub_adjacent;

    for (unsigned k = 0; k <= kmax; ++k) {
        out.operators.push_back(npow[k] * t);
        const Matrix& tk = out.operators.back();
        for (std::size_t a = 0; a < m; ++a)
            out.report.expect_zero("intertwining", {k, a}, tk.column(a) - (t * spow[k]).column(a));
        auto kup = is_kupershmidt(g, rho, tk);
        for (const auto& w : kup.witnesses()) {
            std::vector<std::size_t> idx{k};
            idx.insert(idx.end(), w.indices.begin(), w.indices.end());
            out.report.add("kupershmidt", idx, w.defect);
        }
        out.kupershmidt.push_back(std::move(kup));
        sub_adjacent.push_back(sub_adjacent_bracket(g, rho, tk));
    }

    out.compatible.assign(kmax + 1, std::vector<bool>(kmax + 1, false));
    for (unsigned k = 0; k <= kmax; ++k)
        for (unsigned l = k; l <= kmax; ++l) {
            bool ok = false;
            if (out.kupershmidt[k].holds() && out.kupershmidt[l].holds()) {
                auto c = are_compatible_kupershmidt(g, rho, out.operators[k], out.operators[l]);
                ok = c.holds();
                for (const auto& w : c.witnesses()) {
                    std::vector<std::size_t> idx{k, l};
                    idx.insert(idx.end(), w.indices.begin(), w.indices.end());
                    out.report.add("compatibility", idx, w.defect);
                }
            } else {
                out.report.add("compatibility", {k, l}, Vector{1});
            }
            out.compatible[k][l] = out.compatible[l][k] = ok;
        }

    for (unsigned k = 0; k <= kmax; ++k)
        for (unsigned i = 0; k + i <= kmax; ++i) {
            const Matrix& tk = out.operators[k];
            const Bracket deformed_g = deform_bracket(g, npow[i]);
            const Bracket& bs = deformed_by_s[k + i];
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t c = a + 1; c < m; ++c)
                    out.report.expect_zero("deformed_morphism", {k, i, a, c},
                                           tk * bs.basis_bracket(a, c) - deformed_g(tk.column(a), tk.column(c)));
        }

    for (unsigned k = 0; k <= kmax; ++k) {
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t c = a + 1; c < m; ++c)
                out.report.expect_zero("bracket_power", {k, a, c},
                                       sub_adjacent[k].basis_bracket(a, c) - deformed_by_s[k].basis_bracket(a, c));
        for (unsigned i = 0; k + i <= kmax; ++i) {
            const Bracket iterated = deform_bracket_by_S(sub_adjacent[k], spow[i]);
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t c = a + 1; c < m; ++c)
                    out.report.expect_zero("iterated_deformation", {k, i, a, c},
                                           sub_adjacent[k + i].basis_bracket(a, c) - iterated.basis_bracket(a, c));
        }
    }
    return out;
}

struct KdnFromCompatible {
    Matrix s;  ///< T^{-1} T1
    Matrix n;  ///< T1 T^{-1}
    StructureVerdict from_t;
    StructureVerdict from_t1;
};

/// (T, T^{-1} T1, T1 T^{-1}) and (T1, T^{-1} T1, T1 T^{-1}) from compatible
/// Kupershmidt operators with T invertible.
inline KdnFromCompatible kdn_from_compatible(const LieAlgebra& g, const Representation& rho, const Matrix& t,
                                             const Matrix& t1) {
    if (!t.is_square()) throw PreconditionError("T_invertible", "T is not square");
    auto inv = invert(t);
    if (!inv) throw PreconditionError("T_invertible", "T is singular");
    detail::require(are_compatible_kupershmidt(g, rho, t, t1), "compatible");
    Matrix s = *inv * t1;
    Matrix n = t1 * *inv;
    auto first = is_kdn_structure(g, rho, t, s, n);
    auto second = is_kdn_structure(g, rho, t1, s, n);
    return {std::move(s), std::move(n), std::move(first), std::move(second)};
}

// ---------------------------------------------------------------------------
// r-matrices, Rota-Baxter-Nijenhuis and r-matrix-Nijenhuis structures
// ---------------------------------------------------------------------------

/// [pi#a, pi#b] = pi#(ad*_{pi#a} b - ad*_{pi#b} a) on dual basis pairs,
/// evaluated from the bracket directly: (ad*_x b)_k = -<b, [x, e_k]>.
inline CheckReport is_r_matrix(const LieAlgebra& g, const Bivector& pi) {
    const std::size_t n = g.dim();
    detail::require_square(pi.pi_sharp, n, "pi_sharp");
    if (!pi.pi_sharp.is_antisymmetric()) throw PreconditionError("antisymmetric", "pi_sharp is not antisymmetric");
    const Matrix& p = pi.pi_sharp;
    auto coad = [&](const Vector& x, const Vector& beta) {
        Vector out(n);
        for (std::size_t k = 0; k < n; ++k) {
            const Vector xe = g(x, Vector::unit(n, k));
            Rational s;
            for (std::size_t l = 0; l < n; ++l) s += beta[l] * xe[l];
            out[k] = -s;
        }
        return out;
    };
    CheckReport report("r_matrix");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = a + 1; c < n; ++c) {
            const Vector alpha = Vector::unit(n, a), beta = Vector::unit(n, c);
            const Vector pa = p.column(a), pb = p.column(c);
            report.expect_zero("r_matrix", {a, c}, g(pa, pb) - p * (coad(pa, beta) - coad(pb, alpha)));
        }
    return report;
}

/// (pi, N): N pi# = pi# N^T and [a,b]^{N pi#} = [a,b]^{pi#}_{N^T} for ad*.
inline StructureVerdict is_r_matrix_nijenhuis(const LieAlgebra& g, const Bivector& pi, const Matrix& nmat) {
    detail::require(is_r_matrix(g, pi), "r_matrix");
    detail::require(is_nijenhuis(g, nmat), "nijenhuis");
    const Representation coad = coadjoint_rep(g);
    const Matrix& p = pi.pi_sharp;
    const Matrix nt = nmat.transpose();
    StructureVerdict v{StructureKind::rmn, CheckReport("rmn"), {}};
    detail::expect_equal_columns(v.report, "intertwining", nmat * p, p * nt);
    const Bracket by_np = sub_adjacent_bracket(g, coad, nmat * p);
    const Bracket by_nt = deform_bracket_by_S(sub_adjacent_bracket(g, coad, p), nt);
    detail::expect_equal_brackets(v.report, "bracket_compatibility", by_np, by_nt);
    v.certificates.emplace("NP", nmat * p);
    v.certificates.emplace("bracket_NP", by_np);
    v.certificates.emplace("bracket_P_NT", by_nt);
    return v;
}

/// (R, N): N R = R N and [x,y]^{N R} = [x,y]^R_N for ad.
inline StructureVerdict is_rbn_structure(const LieAlgebra& g, const Matrix& r, const Matrix& nmat) {
    detail::require(is_rota_baxter(g, r), "rota_baxter");
    detail::require(is_nijenhuis(g, nmat), "nijenhuis");
    const Representation ad = adjoint_rep(g);
    StructureVerdict v{StructureKind::rbn, CheckReport("rbn"), {}};
    detail::expect_equal_columns(v.report, "commuting", nmat * r, r * nmat);
    const Bracket by_nr = sub_adjacent_bracket(g, ad, nmat * r);
    const Bracket by_n = deform_bracket_by_S(sub_adjacent_bracket(g, ad, r), nmat);
    detail::expect_equal_brackets(v.report, "bracket_compatibility", by_nr, by_n);
    v.certificates.emplace("NR", nmat * r);
    v.certificates.emplace("bracket_NR", by_nr);
    v.certificates.emplace("bracket_R_N", by_n);
    return v;
}

/// Nondegeneracy (kernel witness) and ad-invariance B([x,y],z) + B(y,[x,z]) = 0,
/// i.e. ad_x^T G + G ad_x = 0 per basis x; equivalently B^# ad*_x = ad_x B^#.
inline CheckReport check_bilinear_form(const LieAlgebra& g, const BilinearForm& b) {
    detail::require_square(b.gram, g.dim(), "bilinear form");
    if (!b.gram.is_symmetric()) throw PreconditionError("symmetric", "bilinear form is not symmetric");
    CheckReport report("bilinear_form");
    if (auto k = kernel_vector(b.gram)) report.add("nondegenerate", {}, *k);
    const Representation ad = adjoint_rep(g);
    for (std::size_t i = 0; i < g.dim(); ++i)
        report.expect_zero("ad_invariance", {i}, ad.basis(i).transpose() * b.gram + b.gram * ad.basis(i));
    return report;
}

/// B^# = G^{-1}. Throws PreconditionError("nondegenerate") for singular G.
inline Matrix b_sharp(const BilinearForm& b) {
    auto inv = invert(b.gram);
    if (!inv) throw PreconditionError("nondegenerate", "bilinear form is degenerate");
    return *inv;
}

/// R B^# antisymmetric as a map g* -> g.
inline CheckReport is_skew_endomorphism(const LieAlgebra& g, const Matrix& r, const BilinearForm& b) {
    detail::require(check_bilinear_form(g, b), "bilinear_form");
    detail::require_square(r, g.dim(), "R");
    const Matrix rb = r * b_sharp(b);
    CheckReport report("skew_endomorphism");
    report.expect_zero("skew", {}, rb + rb.transpose());
    return report;
}

/// B^# N^T = N B^#.
inline CheckReport check_form_compatibility(const LieAlgebra& g, const Matrix& nmat, const BilinearForm& b) {
    detail::require_square(nmat, g.dim(), "N");
    const Matrix bs = b_sharp(b);
    CheckReport report("form_compatibility");
    report.expect_zero("form_compatibility", {}, bs * nmat.transpose() - nmat * bs);
    return report;
}

struct RbnToRmn {
    Bivector pi;
    Matrix n;
    StructureVerdict verdict; ///< re-verification of (pi, N)
};

struct RmnToRbn {
    Matrix r;
    Matrix n;
    StructureVerdict verdict; ///< re-verification of (R, N), including skewness of R
};

/// pi# = R B^# from a Rota-Baxter-Nijenhuis structure with R skew for B and
/// B compatible with N. Each failing hypothesis throws PreconditionError.
inline RbnToRmn rbn_to_rmn(const LieAlgebra& g, const Matrix& r, const Matrix& nmat, const BilinearForm& b) {
    detail::require(check_bilinear_form(g, b), "bilinear_form");
    detail::require(is_skew_endomorphism(g, r, b), "skew_endomorphism");
    detail::require(check_form_compatibility(g, nmat, b), "form_compatibility");
    detail::require(is_rbn_structure(g, r, nmat).report, "rbn_structure");
    Bivector pi{r * b_sharp(b)};
    auto verdict = is_r_matrix_nijenhuis(g, pi, nmat);
    return {std::move(pi), nmat, std::move(verdict)};
}

/// R = pi# (B^#)^{-1} from an r-matrix-Nijenhuis structure.
inline RmnToRbn rmn_to_rbn(const LieAlgebra& g, const Bivector& pi, const Matrix& nmat, const BilinearForm& b) {
    detail::require(check_bilinear_form(g, b), "bilinear_form");
    detail::require(check_form_compatibility(g, nmat, b), "form_compatibility");
    detail::require(is_r_matrix_nijenhuis(g, pi, nmat).report, "rmn_structure");
    Matrix r = pi.pi_sharp * b.gram;
    auto verdict = is_rbn_structure(g, r, nmat);
    verdict.report.absorb(is_skew_endomorphism(g, r, b));
    return {std::move(r), nmat, std::move(verdict)};
}

} // namespace liekn
