#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "liekn/check_report.hpp"
#include "liekn/lie_algebra.hpp"
#include "liekn/linalg.hpp"
#include "liekn/representation.hpp"

namespace liekn {

namespace detail {

inline void require_square(const Matrix& m, std::size_t n, const char* what) {
    if (m.rows() != n || m.cols() != n)
        throw DimensionError(std::string(what) + " must be " + std::to_string(n) + "x" + std::to_string(n));
}

inline void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what) {
    if (m.rows() != rows || m.cols() != cols)
        throw DimensionError(std::string(what) + " must be " + std::to_string(rows) + "x" + std::to_string(cols));
}

// Per basis x = e_i: the m x m matrix of the identity, split into one
// witness per module basis vector e_a whose image is nonzero.
inline void expect_zero_columns(CheckReport& report, const std::string& condition, std::size_t i,
                                const Matrix& defect) {
    for (std::size_t a = 0; a < defect.cols(); ++a) report.expect_zero(condition, {i, a}, defect.column(a));
}

} // namespace detail

// ---------------------------------------------------------------------------
// Nijenhuis and Rota-Baxter operators
// ---------------------------------------------------------------------------

/// Torsion [Nx,Ny] - N([Nx,y] + [x,Ny] - N[x,y]).
template <BracketLike B>
Vector nijenhuis_defect(const B& b, const Matrix& nmat, const Vector& x, const Vector& y) {
    detail::require_square(nmat, b.dim(), "N");
    const Vector nx = nmat * x, ny = nmat * y;
    Vector inner = b(nx, y) + b(x, ny) - nmat * b(x, y);
    return b(nx, ny) - nmat * inner;
}

template <BracketLike B>
CheckReport is_nijenhuis(const B& b, const Matrix& nmat) {
    detail::require_square(nmat, b.dim(), "N");
    const std::size_t n = b.dim();
    CheckReport report("nijenhuis");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            report.expect_zero("nijenhuis", {i, j}, nijenhuis_defect(b, nmat, Vector::unit(n, i), Vector::unit(n, j)));
    return report;
}

/// Weight-zero Rota-Baxter identity [Rx,Ry] = R([Rx,y] + [x,Ry]).
template <BracketLike B>
CheckReport is_rota_baxter(const B& b, const Matrix& r) {
    detail::require_square(r, b.dim(), "R");
    const std::size_t n = b.dim();
    CheckReport report("rota_baxter");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vector ri = r.column(i), rj = r.column(j);
            Vector defect = b(ri, rj) - r * (b(ri, Vector::unit(n, j)) + b(Vector::unit(n, i), rj));
            report.expect_zero("rota_baxter", {i, j}, std::move(defect));
        }
    return report;
}

// ---------------------------------------------------------------------------
// Kupershmidt operators T : V -> g
// ---------------------------------------------------------------------------

/// [Tu,Tv] - T(rho(Tu)v - rho(Tv)u).
template <BracketLike B>
Vector kupershmidt_defect(const B& b, const RepAction& rho, const Matrix& t, const Vector& u, const Vector& v) {
    detail::require_shape(t, b.dim(), rho.module_dim(), "T");
    const Vector tu = t * u, tv = t * v;
    return b(tu, tv) - t * (rho(tu) * v - rho(tv) * u);
}

template <BracketLike B>
CheckReport is_kupershmidt(const B& b, const RepAction& rho, const Matrix& t) {
    if (rho.algebra_dim() != b.dim()) throw DimensionError("action does not match the algebra dimension");
    detail::require_shape(t, b.dim(), rho.module_dim(), "T");
    const std::size_t m = rho.module_dim();
    CheckReport report("kupershmidt");
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t c = a + 1; c < m; ++c)
            report.expect_zero("kupershmidt", {a, c},
                               kupershmidt_defect(b, rho, t, Vector::unit(m, a), Vector::unit(m, c)));
    return report;
}

inline CheckReport is_kupershmidt(const LieAlgebra& g, const Representation& rho, const Matrix& t) {
    require_acts_on(g, rho);
    return is_kupershmidt(g, rho.action(), t);
}

// ---------------------------------------------------------------------------
// (dual-, perfect) Nijenhuis pairs (N on g, S on V)
// ---------------------------------------------------------------------------

/// For each basis x: rho(Nx)S - S rho(Nx) - S rho(x) S + S^2 rho(x).
inline Matrix nijenhuis_pair_defect(const Representation& rho, const Matrix& nmat, const Matrix& smat, std::size_t i) {
    const Matrix rnx = rho(nmat.column(i));
    const Matrix& rx = rho.basis(i);
    return rnx * smat - smat * rnx - smat * rx * smat + smat * smat * rx;
}

/// For each basis x: rho(Nx)S - S rho(Nx) - rho(x) S^2 + S rho(x) S.
inline Matrix dual_nijenhuis_pair_defect(const Representation& rho, const Matrix& nmat, const Matrix& smat,
                                         std::size_t i) {
    const Matrix rnx = rho(nmat.column(i));
    const Matrix& rx = rho.basis(i);
    return rnx * smat - smat * rnx - rx * smat * smat + smat * rx * smat;
}

inline CheckReport is_nijenhuis_pair(const LieAlgebra& g, const Representation& rho, const Matrix& nmat,
                                     const Matrix& smat) {
    require_acts_on(g, rho);
    detail::require_pair_shapes(g.dim(), rho.module_dim(), nmat, smat);
    CheckReport report("nijenhuis_pair");
    report.absorb(is_nijenhuis(g, nmat));
    for (std::size_t i = 0; i < g.dim(); ++i)
        detail::expect_zero_columns(report, "pair_condition", i, nijenhuis_pair_defect(rho, nmat, smat, i));
    return report;
}

inline CheckReport is_dual_nijenhuis_pair(const LieAlgebra& g, const Representation& rho, const Matrix& nmat,
                                          const Matrix& smat) {
    require_acts_on(g, rho);
    detail::require_pair_shapes(g.dim(), rho.module_dim(), nmat, smat);
    CheckReport report("dual_nijenhuis_pair");
    report.absorb(is_nijenhuis(g, nmat));
    for (std::size_t i = 0; i < g.dim(); ++i)
        detail::expect_zero_columns(report, "dual_pair_condition", i, dual_nijenhuis_pair_defect(rho, nmat, smat, i));
    return report;
}

/// Nijenhuis pair with S^2 rho(x) + rho(x) S^2 = 2 S rho(x) S.
inline CheckReport is_perfect_pair(const LieAlgebra& g, const Representation& rho, const Matrix& nmat,
                                   const Matrix& smat) {
    CheckReport report("perfect_pair");
    report.absorb(is_nijenhuis_pair(g, rho, nmat, smat));
    const Matrix s2 = smat * smat;
    for (std::size_t i = 0; i < g.dim(); ++i) {
        const Matrix& rx = rho.basis(i);
        Matrix defect = s2 * rx + rx * s2;
        defect.axpy(Rational(-2), smat * rx * smat);
        detail::expect_zero_columns(report, "perfect_condition", i, defect);
    }
    return report;
}

/// N + S as a Nijenhuis operator on g x_rho V; when the pair is perfect, also
/// N + S^T on g x_rho* V*. Mixed witnesses (x, v) use semidirect indices.
inline CheckReport nijenhuis_pair_semidirect_test(const LieAlgebra& g, const Representation& rho,
                                                  const Matrix& nmat, const Matrix& smat) {
    require_acts_on(g, rho);
    detail::require_pair_shapes(g.dim(), rho.module_dim(), nmat, smat);
    CheckReport report("nijenhuis_pair_semidirect");
    const LieAlgebra big = semidirect_product(g, rho);
    const CheckReport direct = is_nijenhuis(big, block_diagonal(nmat, smat));
    for (const auto& w : direct.witnesses())
        report.add("semidirect_nijenhuis", w.indices, w.defect);
    if (report.holds() && is_perfect_pair(g, rho, nmat, smat).holds()) {
        const LieAlgebra dual_big = semidirect_product(g, dual_representation(rho));
        const CheckReport dual = is_nijenhuis(dual_big, block_diagonal(nmat, smat.transpose()));
        for (const auto& w : dual.witnesses())
            report.add("dual_semidirect_nijenhuis", w.indices, w.defect);
    }
    return report;
}

// ---------------------------------------------------------------------------
// Pre-Lie product u * v = rho(Tu)v and the brackets built from T
// ---------------------------------------------------------------------------

/// A bilinear product on a coordinate space given on all ordered basis pairs.
class PreLieProduct {
public:
    PreLieProduct() = default;
    explicit PreLieProduct(std::size_t dim) : dim_(dim), table_(dim * dim, Vector(dim)) {}

    std::size_t dim() const noexcept { return dim_; }
    const Vector& basis_product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
    void set(std::size_t i, std::size_t j, Vector v) {
        if (v.dim() != dim_) throw DimensionError("product value has wrong dimension");
        table_[i * dim_ + j] = std::move(v);
    }

    Vector operator()(const Vector& x, const Vector& y) const {
        if (x.dim() != dim_ || y.dim() != dim_) throw DimensionError("product arguments have wrong dimension");
        Vector out(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j)
                if (!y[j].is_zero()) out.axpy(x[i] * y[j], table_[i * dim_ + j]);
        }
        return out;
    }

    /// x * y - y * x
    Bracket commutator_bracket() const {
        return Bracket::from_basis(dim_, [this](std::size_t i, std::size_t j) {
            return basis_product(i, j) - basis_product(j, i);
        });
    }

    friend bool operator==(const PreLieProduct&, const PreLieProduct&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Vector> table_;
};

inline PreLieProduct pre_lie_product(const RepAction& rho, const Matrix& t) {
    detail::require_shape(t, rho.algebra_dim(), rho.module_dim(), "T");
    const std::size_t m = rho.module_dim();
    PreLieProduct p(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Matrix left = rho(t.column(i));
        for (std::size_t j = 0; j < m; ++j) p.set(i, j, left.column(j));
    }
    return p;
}

inline PreLieProduct pre_lie_product(const LieAlgebra& g, const Representation& rho, const Matrix& t) {
    require_acts_on(g, rho);
    return pre_lie_product(rho.action(), t);
}

/// Associator (u*v)*w - u*(v*w) symmetric in u, v on all basis triples.
inline CheckReport check_pre_lie(const PreLieProduct& p) {
    const std::size_t m = p.dim();
    auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
        return p(p.basis_product(a, b), Vector::unit(m, c)) - p(Vector::unit(m, a), p.basis_product(b, c));
    };
    CheckReport report("pre_lie");
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c) report.expect_zero("associator_symmetry", {a, b, c}, assoc(a, b, c) - assoc(b, a, c));
    return report;
}

/// S(u)*S(v) = S(S(u)*v + u*S(v) - S(u*v)) on all ordered basis pairs.
inline CheckReport is_nijenhuis_on_product(const PreLieProduct& p, const Matrix& smat) {
    detail::require_square(smat, p.dim(), "S");
    const std::size_t m = p.dim();
    CheckReport report("product_nijenhuis");
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            const Vector su = smat.column(a), sv = smat.column(b);
            const Vector u = Vector::unit(m, a), v = Vector::unit(m, b);
            Vector inner = p(su, v) + p(u, sv) - smat * p.basis_product(a, b);
            report.expect_zero("product_nijenhuis", {a, b}, p(su, sv) - smat * inner);
        }
    return report;
}

/// {u,v} = rho(Tu)v - rho(Tv)u for any candidate action.
inline Bracket bracket_from_rep(const RepAction& rho, const Matrix& t) {
    detail::require_shape(t, rho.algebra_dim(), rho.module_dim(), "T");
    const std::size_t m = rho.module_dim();
    std::vector<Matrix> left;
    for (std::size_t a = 0; a < m; ++a) left.push_back(rho(t.column(a)));
    return Bracket::from_basis(m, [&](std::size_t a, std::size_t c) { return left[a].column(c) - left[c].column(a); });
}

/// [u,v]^T = rho(Tu)v - rho(Tv)u, the commutator of the pre-Lie product.
inline Bracket sub_adjacent_bracket(const LieAlgebra& g, const Representation& rho, const Matrix& t) {
    require_acts_on(g, rho);
    return bracket_from_rep(rho.action(), t);
}

/// [u,v]_S = [Su,v] + [u,Sv] - S[u,v].
inline Bracket deform_bracket_by_S(const Bracket& b, const Matrix& smat) { return deform_bracket(b, smat); }

} // namespace liekn
