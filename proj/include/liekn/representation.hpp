#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "liekn/check_report.hpp"
#include "liekn/lie_algebra.hpp"
#include "liekn/linalg.hpp"

namespace liekn {

/**
 * A candidate action of an n-dimensional algebra on an m-dimensional module:
 * one m x m matrix per basis vector, extended linearly,
 * rho(x) = sum_i x_i R_i. No axiom is assumed.
 */
class RepAction {
public:
    RepAction() = default;
    RepAction(std::size_t module_dim, std::vector<Matrix> matrices)
        : module_dim_(module_dim), matrices_(std::move(matrices)) {
        for (const auto& m : matrices_)
            if (m.rows() != module_dim_ || m.cols() != module_dim_)
                throw DimensionError("action matrices must be " + std::to_string(module_dim_) + "x" +
                                     std::to_string(module_dim_));
    }

    static RepAction zero(std::size_t algebra_dim, std::size_t module_dim) {
        return RepAction(module_dim, std::vector<Matrix>(algebra_dim, Matrix(module_dim, module_dim)));
    }

    std::size_t algebra_dim() const noexcept { return matrices_.size(); }
    std::size_t module_dim() const noexcept { return module_dim_; }
    const std::vector<Matrix>& matrices() const noexcept { return matrices_; }
    const Matrix& basis(std::size_t i) const { return matrices_.at(i); }

    Matrix operator()(const Vector& x) const {
        if (x.dim() != algebra_dim())
            throw DimensionError("action argument must have dimension " + std::to_string(algebra_dim()));
        Matrix out(module_dim_, module_dim_);
        for (std::size_t i = 0; i < x.dim(); ++i) out.axpy(x[i], matrices_[i]);
        return out;
    }

    friend bool operator==(const RepAction&, const RepAction&) = default;

private:
    std::size_t module_dim_ = 0;
    std::vector<Matrix> matrices_;
};

/// rho([e_i,e_j]) = [rho(e_i), rho(e_j)] on all basis pairs i < j, relative to
/// any bracket (a LieAlgebra or a candidate such as a deformed bracket).
template <BracketLike B>
CheckReport check_representation(const B& b, const RepAction& action) {
    if (action.algebra_dim() != b.dim())
        throw DimensionError("action has " + std::to_string(action.algebra_dim()) + " matrices, algebra has dimension " +
                             std::to_string(b.dim()));
    CheckReport report("representation");
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = i + 1; j < b.dim(); ++j)
            report.expect_zero("representation", {i, j},
                               action(b.basis_bracket(i, j)) - commutator(action.basis(i), action.basis(j)));
    return report;
}

/// A validated representation of a Lie algebra. Holds the algebra it acts on.
class Representation {
public:
    Representation(LieAlgebra algebra, RepAction action) : algebra_(std::move(algebra)), action_(std::move(action)) {
        if (auto report = check_representation(algebra_, action_); !report.holds())
            throw ValidationError(std::move(report));
    }

    const LieAlgebra& algebra() const noexcept { return algebra_; }
    const RepAction& action() const noexcept { return action_; }
    std::size_t algebra_dim() const noexcept { return action_.algebra_dim(); }
    std::size_t module_dim() const noexcept { return action_.module_dim(); }
    const Matrix& basis(std::size_t i) const { return action_.basis(i); }
    Matrix operator()(const Vector& x) const { return action_(x); }

    friend bool operator==(const Representation&, const Representation&) = default;

private:
    LieAlgebra algebra_;
    RepAction action_;
};

/// Throws unless rho acts on g.
inline void require_acts_on(const LieAlgebra& g, const Representation& rho) {
    if (!(rho.algebra() == g)) throw DimensionError("representation is defined on a different Lie algebra");
}

/// ad(e_i) has columns [e_i, e_j].
inline Representation adjoint_rep(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    std::vector<Matrix> mats;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Vector> cols;
        for (std::size_t j = 0; j < n; ++j) cols.push_back(g.basis_bracket(i, j));
        mats.push_back(Matrix::from_columns(cols, n));
    }
    return Representation(g, RepAction(n, std::move(mats)));
}

/// Negated transposes: <rho*(x) a, v> = -<a, rho(x) v> in the dual basis.
inline RepAction dual_action(const RepAction& a) {
    std::vector<Matrix> mats;
    for (const auto& m : a.matrices()) mats.push_back(-m.transpose());
    return RepAction(a.module_dim(), std::move(mats));
}

inline Representation dual_representation(const Representation& rho) {
    return Representation(rho.algebra(), dual_action(rho.action()));
}

/// ad*, the dual of the adjoint representation.
inline Representation coadjoint_rep(const LieAlgebra& g) { return dual_representation(adjoint_rep(g)); }

namespace detail {

inline void require_pair_shapes(std::size_t n, std::size_t m, const Matrix& nmat, const Matrix& smat) {
    if (nmat.rows() != n || nmat.cols() != n)
        throw DimensionError("N must be " + std::to_string(n) + "x" + std::to_string(n));
    if (smat.rows() != m || smat.cols() != m)
        throw DimensionError("S must be " + std::to_string(m) + "x" + std::to_string(m));
}

inline RepAction twisted_action(const RepAction& a, const Matrix& nmat, const Matrix& smat, int sign) {
    detail::require_pair_shapes(a.algebra_dim(), a.module_dim(), nmat, smat);
    std::vector<Matrix> mats;
    for (std::size_t i = 0; i < a.algebra_dim(); ++i) {
        Matrix m = a(nmat.column(i));
        m.axpy(Rational(sign), commutator(a.basis(i), smat));
        mats.push_back(std::move(m));
    }
    return RepAction(a.module_dim(), std::move(mats));
}

} // namespace detail

/// Candidate x -> rho(Nx) + [rho(x), S].
inline RepAction rho_hat(const RepAction& rho, const Matrix& n, const Matrix& s) {
    return detail::twisted_action(rho, n, s, +1);
}
inline RepAction rho_hat(const Representation& rho, const Matrix& n, const Matrix& s) {
    return rho_hat(rho.action(), n, s);
}

/// Candidate x -> rho(Nx) - [rho(x), S].
inline RepAction rho_tilde(const RepAction& rho, const Matrix& n, const Matrix& s) {
    return detail::twisted_action(rho, n, s, -1);
}
inline RepAction rho_tilde(const Representation& rho, const Matrix& n, const Matrix& s) {
    return rho_tilde(rho.action(), n, s);
}

/// g x_rho V with [x+u, y+v] = [x,y] + rho(x)v - rho(y)u. Basis: g first, then V.
inline LieAlgebra semidirect_product(const LieAlgebra& g, const Representation& rho) {
    require_acts_on(g, rho);
    const std::size_t n = g.dim(), m = rho.module_dim(), d = n + m;
    Bracket b(d);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector v(d);
            const Vector gij = g.basis_bracket(i, j);
            for (std::size_t k = 0; k < n; ++k) v[k] = gij[k];
            b.set(i, j, std::move(v));
        }
        for (std::size_t a = 0; a < m; ++a) {
            Vector v(d);
            for (std::size_t k = 0; k < m; ++k) v[n + k] = rho.basis(i)(k, a);
            b.set(i, n + a, std::move(v));
        }
    }
    auto names = g.basis_names();
    for (const auto& s : default_basis_names(m, "v")) names.push_back(s);
    return LieAlgebra(std::move(b), std::move(names));
}

} // namespace liekn
