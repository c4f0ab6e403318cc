#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "liekn/errors.hpp"
#include "liekn/rational.hpp"

namespace liekn {

/// Coordinate vector with exact entries.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t dim) : coords_(dim) {}
    Vector(std::initializer_list<Rational> coords) : coords_(coords) {}
    explicit Vector(std::vector<Rational> coords) : coords_(std::move(coords)) {}

    static Vector unit(std::size_t dim, std::size_t i) {
        Vector v(dim);
        v[i] = 1;
        return v;
    }

    std::size_t dim() const noexcept { return coords_.size(); }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<Rational>& coords() const noexcept { return coords_; }

    bool is_zero() const {
        return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r.is_zero(); });
    }

    Vector& operator+=(const Vector& o) {
        require_same(o);
        for (std::size_t i = 0; i < dim(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }
    Vector& operator-=(const Vector& o) {
        require_same(o);
        for (std::size_t i = 0; i < dim(); ++i) coords_[i] -= o.coords_[i];
        return *this;
    }
    Vector& operator*=(const Rational& s) {
        for (auto& c : coords_) c *= s;
        return *this;
    }
    /// this += s * o
    Vector& axpy(const Rational& s, const Vector& o) {
        require_same(o);
        if (s.is_zero()) return *this;
        for (std::size_t i = 0; i < dim(); ++i)
            if (!o.coords_[i].is_zero()) coords_[i] += s * o.coords_[i];
        return *this;
    }

    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(const Rational& s, Vector a) { return a *= s; }
    friend Vector operator-(Vector a) { return a *= Rational(-1); }
    friend bool operator==(const Vector&, const Vector&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Vector& v) {
        os << '(';
        for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? ", " : "") << v[i];
        return os << ')';
    }

private:
    void require_same(const Vector& o) const {
        if (o.dim() != dim())
            throw DimensionError("vector dimension mismatch: " + std::to_string(dim()) + " vs " +
                                 std::to_string(o.dim()));
    }

    std::vector<Rational> coords_;
};

/// Dense row-major matrix with exact entries.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        entries_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionError("ragged matrix literal");
            entries_.insert(entries_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static Matrix scalar(std::size_t n, const Rational& s) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
        return m;
    }
    static Matrix diagonal(std::initializer_list<Rational> d) {
        Matrix m(d.size(), d.size());
        std::size_t i = 0;
        for (const auto& x : d) {
            m(i, i) = x;
            ++i;
        }
        return m;
    }
    static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows) {
        Matrix m(rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].dim() != rows) throw DimensionError("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    const std::vector<Rational>& entries() const noexcept { return entries_; }

    Vector column(std::size_t j) const {
        Vector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    Vector row(std::size_t i) const {
        Vector v(cols_);
        for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
        return v;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r.is_zero(); });
    }
    bool is_symmetric() const { return is_square() && *this == transpose(); }
    bool is_antisymmetric() const { return is_square() && (*this + transpose()).is_zero(); }

    Matrix& operator+=(const Matrix& o) {
        require_same(o);
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same(o);
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
        return *this;
    }
    Matrix& operator*=(const Rational& s) {
        for (auto& e : entries_) e *= s;
        return *this;
    }
    /// this += s * o
    Matrix& axpy(const Rational& s, const Matrix& o) {
        require_same(o);
        if (s.is_zero()) return *this;
        for (std::size_t k = 0; k < entries_.size(); ++k)
            if (!o.entries_[k].is_zero()) entries_[k] += s * o.entries_[k];
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
    friend Matrix operator-(Matrix a) { return a *= Rational(-1); }
    friend bool operator==(const Matrix&, const Matrix&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        os << '[';
        for (std::size_t i = 0; i < m.rows(); ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
            os << ']';
        }
        return os << ']';
    }

private:
    void require_same(const Matrix& o) const {
        if (o.rows_ != rows_ || o.cols_ != cols_)
            throw DimensionError("matrix shape mismatch: " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                 " vs " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw DimensionError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                             std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
        }
    return c;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

inline Vector operator*(const Matrix& a, const Vector& x) {
    if (a.cols() != x.dim())
        throw DimensionError("matrix-vector: " + std::to_string(a.cols()) + " columns vs vector of dim " +
                             std::to_string(x.dim()));
    Vector y(a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (x[j].is_zero()) continue;
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (!a(i, j).is_zero()) y[i] += a(i, j) * x[j];
    }
    return y;
}

/// Commutator ab - ba.
inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

inline Matrix power(const Matrix& a, unsigned k) {
    if (!a.is_square()) throw DimensionError("power: non-square matrix");
    Matrix result = Matrix::identity(a.rows());
    for (unsigned i = 0; i < k; ++i) result = result * a;
    return result;
}

inline Matrix block_diagonal(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

inline Rational trace(const Matrix& a) {
    if (!a.is_square()) throw DimensionError("trace: non-square matrix");
    Rational t;
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

namespace detail {

// Integer matrix reduced to row echelon form by Bareiss' fraction-free
// elimination. Every row of the rational input is scaled by the lcm of its
// denominators first, which does not change the row space.
struct Echelon {
    std::vector<std::vector<mpz_class>> rows;
    std::vector<std::size_t> pivot_cols;
    mpz_class row_scale_product = 1;
    int swap_sign = 1;
};

inline Echelon bareiss_echelon(const Matrix& a) {
    Echelon e;
    const std::size_t m = a.rows(), n = a.cols();
    e.rows.assign(m, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < m; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).gmp().get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) e.rows[i][j] = a(i, j).numerator() * (l / a(i, j).denominator());
        e.row_scale_product *= l;
    }

    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && e.rows[p][c] == 0) ++p;
        if (p == m) continue;
        if (p != r) {
            std::swap(e.rows[p], e.rows[r]);
            e.swap_sign = -e.swap_sign;
        }
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                e.rows[i][j] = e.rows[r][c] * e.rows[i][j] - e.rows[i][c] * e.rows[r][j];
                mpz_divexact(e.rows[i][j].get_mpz_t(), e.rows[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            e.rows[i][c] = 0;
        }
        prev = e.rows[r][c];
        e.pivot_cols.push_back(c);
        ++r;
    }
    return e;
}

// Solves the echelon system whose last `rhs_cols` columns are right-hand
// sides. Free variables are set to zero. Returns nullopt when inconsistent.
inline std::optional<Matrix> back_substitute(const Echelon& e, std::size_t unknowns, std::size_t rhs_cols) {
    const std::size_t rank = e.pivot_cols.size();
    for (std::size_t k = 0; k < rank; ++k)
        if (e.pivot_cols[k] >= unknowns) return std::nullopt;
    for (std::size_t i = rank; i < e.rows.size(); ++i)
        for (std::size_t j = unknowns; j < unknowns + rhs_cols; ++j)
            if (e.rows[i][j] != 0) return std::nullopt;

    Matrix x(unknowns, rhs_cols);
    for (std::size_t k = rank; k-- > 0;) {
        const auto& row = e.rows[k];
        const std::size_t pc = e.pivot_cols[k];
        for (std::size_t s = 0; s < rhs_cols; ++s) {
            mpq_class acc(row[unknowns + s]);
            for (std::size_t j = pc + 1; j < unknowns; ++j)
                if (row[j] != 0) acc -= mpq_class(row[j]) * x(j, s).gmp();
            acc /= mpq_class(row[pc]);
            x(pc, s) = Rational(acc);
        }
    }
    return x;
}

} // namespace detail

inline Rational determinant(const Matrix& a) {
    if (!a.is_square()) throw DimensionError("determinant: non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    auto e = detail::bareiss_echelon(a);
    if (e.pivot_cols.size() < n) return 0;
    mpq_class det(e.rows[n - 1][n - 1] * e.swap_sign, e.row_scale_product);
    return Rational(det);
}

inline std::size_t rank(const Matrix& a) { return detail::bareiss_echelon(a).pivot_cols.size(); }

/// A nonzero x with a x = 0, or nullopt when the columns are independent.
inline std::optional<Vector> kernel_vector(const Matrix& a) {
    auto e = detail::bareiss_echelon(a);
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    std::size_t free_col = n;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    if (free_col == n) return std::nullopt;
    Vector x(n);
    x[free_col] = 1;
    for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
        const auto& row = e.rows[k];
        const std::size_t pc = e.pivot_cols[k];
        mpq_class acc = 0;
        for (std::size_t j = pc + 1; j < n; ++j)
            if (row[j] != 0) acc -= mpq_class(row[j]) * x[j].gmp();
        x[pc] = Rational(mpq_class(acc / mpq_class(row[pc])));
    }
    return x;
}

/// Exact inverse, or nullopt when the matrix is singular.
inline std::optional<Matrix> invert(const Matrix& a) {
    if (!a.is_square()) throw DimensionError("invert: non-square matrix");
    const std::size_t n = a.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    auto e = detail::bareiss_echelon(aug);
    if (e.pivot_cols.size() < n || (n > 0 && e.pivot_cols[n - 1] != n - 1)) return std::nullopt;
    return detail::back_substitute(e, n, n);
}

/// Some exact solution of a x = b, or nullopt when the system is inconsistent.
inline std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    if (a.rows() != b.dim())
        throw DimensionError("solve: " + std::to_string(a.rows()) + " equations vs rhs of dim " +
                             std::to_string(b.dim()));
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto x = detail::back_substitute(detail::bareiss_echelon(aug), a.cols(), 1);
    if (!x) return std::nullopt;
    return x->column(0);
}

} // namespace liekn
