#pragma once

#include <cstddef>
#include <sstream>
#include <string>

#include "liekn/check_report.hpp"
#include "liekn/lie_algebra.hpp"
#include "liekn/operators.hpp"
#include "liekn/representation.hpp"

namespace liekn {

/**
 * First-order data (omega, varpi) of the family
 *   [x,y]_t = [x,y] + t omega(x,y),   rho_t(x) = rho(x) + t varpi(x).
 * The parameter t never appears; every condition is checked per coefficient.
 */
struct DeformationPair {
    Bracket omega;
    RepAction varpi;

    friend bool operator==(const DeformationPair&, const DeformationPair&) = default;
};

namespace detail {

inline void require_deformation_shapes(const LieAlgebra& g, const Representation& rho, const DeformationPair& d) {
    require_acts_on(g, rho);
    if (d.omega.dim() != g.dim()) throw DimensionError("omega has the wrong dimension");
    if (d.varpi.algebra_dim() != g.dim() || d.varpi.module_dim() != rho.module_dim())
        throw DimensionError("varpi has the wrong shape");
}

} // namespace detail

/// The four conditions making (g, [,]_t, rho_t) a deformation for all t:
/// cocycle, omega Jacobi, varpi a representation of omega, and the mixed term.
inline CheckReport check_deformation_pair(const LieAlgebra& g, const Representation& rho, const DeformationPair& d) {
    detail::require_deformation_shapes(g, rho, d);
    const std::size_t n = g.dim();
    const auto& w = d.omega;
    auto e = [n](std::size_t i) { return Vector::unit(n, i); };

    CheckReport report("deformation");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vector cocycle = g(w.basis_bracket(i, j), e(k)) + g(w.basis_bracket(k, i), e(j)) +
                                 g(w.basis_bracket(j, k), e(i));
                cocycle -= w(e(i), g.basis_bracket(j, k));
                cocycle -= w(e(k), g.basis_bracket(i, j));
                cocycle -= w(e(j), g.basis_bracket(k, i));
                report.expect_zero("cocycle", {i, j, k}, std::move(cocycle));

                Vector jac = w(w.basis_bracket(i, j), e(k)) + w(w.basis_bracket(k, i), e(j)) +
                             w(w.basis_bracket(j, k), e(i));
                report.expect_zero("omega_jacobi", {i, j, k}, std::move(jac));
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            report.expect_zero("varpi_representation", {i, j},
                               d.varpi(w.basis_bracket(i, j)) - commutator(d.varpi.basis(i), d.varpi.basis(j)));
            Matrix mixed = rho(w.basis_bracket(i, j)) + d.varpi(g.basis_bracket(i, j));
            mixed -= commutator(rho.basis(i), d.varpi.basis(j));
            mixed -= commutator(d.varpi.basis(i), rho.basis(j));
            report.expect_zero("mixed_representation", {i, j}, std::move(mixed));
        }
    return report;
}

/// The four conditions under which (Id + tN, Id + tS) identifies the
/// deformation generated by d with the undeformed (g, rho).
inline CheckReport check_trivial_equivalence(const LieAlgebra& g, const Representation& rho, const Matrix& nmat,
                                             const Matrix& smat, const DeformationPair& d) {
    detail::require_deformation_shapes(g, rho, d);
    detail::require_pair_shapes(g.dim(), rho.module_dim(), nmat, smat);
    const std::size_t n = g.dim();
    const Bracket coboundary = deformed_algebra(g, nmat);

    CheckReport report("trivial_deformation");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vector wij = d.omega.basis_bracket(i, j);
            report.expect_zero("omega_is_coboundary", {i, j}, wij - coboundary.basis_bracket(i, j));
            report.expect_zero("omega_morphism", {i, j}, nmat * wij - g(nmat.column(i), nmat.column(j)));
        }
    for (std::size_t i = 0; i < n; ++i) {
        Matrix expected = rho(nmat.column(i)) + commutator(rho.basis(i), smat);
        report.expect_zero("varpi_formula", {i}, d.varpi.basis(i) - expected);
        report.expect_zero("intertwining", {i}, rho(nmat.column(i)) * smat - smat * d.varpi.basis(i));
    }
    return report;
}

/// omega = [N-,-] + [-,N-] - N[-,-] and varpi = rho_hat(rho, N, S) built from a
/// Nijenhuis pair. Throws PreconditionError when (N, S) is not one.
inline DeformationPair trivial_deformation_from_pair(const LieAlgebra& g, const Representation& rho,
                                                     const Matrix& nmat, const Matrix& smat) {
    if (auto pair = is_nijenhuis_pair(g, rho, nmat, smat); !pair.holds()) {
        std::ostringstream os;
        os << pair;
        throw PreconditionError("nijenhuis_pair", os.str());
    }
    return {deformed_algebra(g, nmat), rho_hat(rho, nmat, smat)};
}

} // namespace liekn
