#pragma once

#include <concepts>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "liekn/check_report.hpp"
#include "liekn/linalg.hpp"

namespace liekn {

/**
 * An antisymmetric bilinear product on a coordinate space, given by its
 * values on basis pairs e_i, e_j with i < j.
 *
 * The Jacobi identity is not assumed; a Bracket is a candidate product that
 * becomes a LieAlgebra only after validation.
 */
class Bracket {
public:
    Bracket() = default;
    explicit Bracket(std::size_t dim) : dim_(dim), table_(dim * (dim > 0 ? dim - 1 : 0) / 2, Vector(dim)) {}

    /// Builds the table from f(i, j) = [e_i, e_j] evaluated for i < j.
    template <class F>
    static Bracket from_basis(std::size_t dim, F&& f) {
        Bracket b(dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = i + 1; j < dim; ++j) b.set(i, j, f(i, j));
        return b;
    }

    std::size_t dim() const noexcept { return dim_; }

    /// Sets [e_i, e_j]; for i > j the value is stored negated, i == j is rejected.
    void set(std::size_t i, std::size_t j, Vector value) {
        if (i >= dim_ || j >= dim_) throw DimensionError("bracket index out of range");
        if (value.dim() != dim_) throw DimensionError("bracket value has wrong dimension");
        if (i == j) throw DimensionError("[e_i, e_i] is zero by convention and cannot be set");
        if (i < j)
            table_[slot(i, j)] = std::move(value);
        else
            table_[slot(j, i)] = -std::move(value);
    }

    Vector basis_bracket(std::size_t i, std::size_t j) const {
        if (i == j) return Vector(dim_);
        return i < j ? table_[slot(i, j)] : -table_[slot(j, i)];
    }

    Vector operator()(const Vector& x, const Vector& y) const {
        if (x.dim() != dim_ || y.dim() != dim_)
            throw DimensionError("bracket arguments must have dimension " + std::to_string(dim_));
        Vector out(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j) {
                Rational coeff = x[i] * y[j] - x[j] * y[i];
                if (!coeff.is_zero()) out.axpy(coeff, table_[slot(i, j)]);
            }
        return out;
    }

    Bracket scaled(const Rational& s) const {
        Bracket b = *this;
        for (auto& v : b.table_) v *= s;
        return b;
    }

    bool is_zero() const {
        for (const auto& v : table_)
            if (!v.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Bracket&, const Bracket&) = default;

private:
    std::size_t slot(std::size_t i, std::size_t j) const { return i * dim_ - i * (i + 1) / 2 + (j - i - 1); }

    std::size_t dim_ = 0;
    std::vector<Vector> table_;
};

template <class B>
concept BracketLike = requires(const B& b, const Vector& x, std::size_t i) {
    { b.dim() } -> std::convertible_to<std::size_t>;
    { b.basis_bracket(i, i) } -> std::convertible_to<Vector>;
    { b(x, x) } -> std::convertible_to<Vector>;
};

/// Jacobi identity on all basis triples i < j < k. Failures carry the
/// cyclic sum [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j].
template <BracketLike B>
CheckReport check_jacobi(const B& b) {
    CheckReport report("jacobi");
    const std::size_t n = b.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Vector ei = Vector::unit(n, i), ej = Vector::unit(n, j), ek = Vector::unit(n, k);
                Vector sum = b(b.basis_bracket(i, j), ek);
                sum += b(b.basis_bracket(j, k), ei);
                sum += b(b.basis_bracket(k, i), ej);
                report.expect_zero("jacobi", {i, j, k}, std::move(sum));
            }
    return report;
}

inline std::vector<std::string> default_basis_names(std::size_t n, const std::string& prefix = "e") {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i + 1));
    return names;
}

/// A finite-dimensional Lie algebra over the rationals. Construction
/// validates the Jacobi identity and throws ValidationError on failure.
class LieAlgebra {
public:
    explicit LieAlgebra(Bracket bracket, std::vector<std::string> basis_names = {})
        : bracket_(std::move(bracket)), names_(std::move(basis_names)) {
        if (names_.empty()) names_ = default_basis_names(bracket_.dim());
        if (names_.size() != bracket_.dim()) throw DimensionError("basis name count differs from dimension");
        if (auto report = check_jacobi(bracket_); !report.holds()) throw ValidationError(std::move(report));
    }

    static LieAlgebra abelian(std::size_t n) { return LieAlgebra(Bracket(n)); }

    std::size_t dim() const noexcept { return bracket_.dim(); }
    const Bracket& bracket() const noexcept { return bracket_; }
    const std::vector<std::string>& basis_names() const noexcept { return names_; }

    Vector basis_bracket(std::size_t i, std::size_t j) const { return bracket_.basis_bracket(i, j); }
    Vector operator()(const Vector& x, const Vector& y) const { return bracket_(x, y); }

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.bracket_ == b.bracket_; }

private:
    Bracket bracket_;
    std::vector<std::string> names_;
};

template <BracketLike B>
Vector bracket_eval(const B& b, const Vector& x, const Vector& y) {
    return b(x, y);
}

/// [u,v]_S = [Su,v] + [u,Sv] - S[u,v].
template <BracketLike B>
Bracket deform_bracket(const B& b, const Matrix& s) {
    const std::size_t n = b.dim();
    if (s.rows() != n || s.cols() != n) throw DimensionError("deforming endomorphism must be " + std::to_string(n) + "x" + std::to_string(n));
    return Bracket::from_basis(n, [&](std::size_t i, std::size_t j) {
        Vector v = b(s.column(i), Vector::unit(n, j));
        v += b(Vector::unit(n, i), s.column(j));
        v -= s * b.basis_bracket(i, j);
        return v;
    });
}

/// The bracket [x,y]_N = [Nx,y] + [x,Ny] - N[x,y] on g.
inline Bracket deformed_algebra(const LieAlgebra& g, const Matrix& n) { return deform_bracket(g, n); }

} // namespace liekn
