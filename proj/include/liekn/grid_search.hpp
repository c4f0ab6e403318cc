#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liekn/errors.hpp"
#include "liekn/operators.hpp"
#include "liekn/representation.hpp"
#include "liekn/structures.hpp"

namespace liekn {

/// Named operator bundle, keyed "N", "S", "T", "R", "T1", "T2", "pi_sharp".
using OperatorSet = std::map<std::string, Matrix>;

enum class SearchKind { nijenhuis, rota_baxter, kupershmidt, nijenhuis_pair, kn_structure, r_matrix, compatible_pair };

inline std::optional<SearchKind> parse_search_kind(std::string_view s) {
    static const std::map<std::string_view, SearchKind> kinds{
        {"nijenhuis", SearchKind::nijenhuis},           {"rota_baxter", SearchKind::rota_baxter},
        {"kupershmidt", SearchKind::kupershmidt},       {"nijenhuis_pair", SearchKind::nijenhuis_pair},
        {"kn_structure", SearchKind::kn_structure},     {"r_matrix", SearchKind::r_matrix},
        {"compatible_pair", SearchKind::compatible_pair}};
    auto it = kinds.find(s);
    if (it == kinds.end()) return std::nullopt;
    return it->second;
}

inline constexpr std::uint64_t default_grid_cap = 10'000'000;

namespace detail {

// |grid|^exponent, saturating at UINT64_MAX.
inline std::uint64_t saturating_power(std::uint64_t base, std::size_t exponent) {
    std::uint64_t r = 1;
    for (std::size_t k = 0; k < exponent; ++k) {
        if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
        r *= base;
    }
    return r;
}

// Visits every rows x cols matrix over the grid in lexicographic order of the
// row-major entry tuple (first entry most significant).
inline void for_each_matrix(std::size_t rows, std::size_t cols, const std::vector<Rational>& grid,
                            const std::function<void(const Matrix&)>& f) {
    const std::size_t cells = rows * cols;
    std::vector<std::size_t> digit(cells, 0);
    Matrix m(rows, cols);
    for (std::size_t k = 0; k < cells; ++k) m(k / cols, k % cols) = grid.front();
    while (true) {
        f(m);
        std::size_t k = cells;
        while (k > 0) {
            --k;
            if (++digit[k] < grid.size()) {
                m(k / cols, k % cols) = grid[digit[k]];
                break;
            }
            digit[k] = 0;
            m(k / cols, k % cols) = grid.front();
            if (k == 0) return;
        }
        if (cells == 0) return;
    }
}

inline std::vector<Matrix> collect_matrices(std::size_t rows, std::size_t cols, const std::vector<Rational>& grid,
                                            const std::function<bool(const Matrix&)>& keep) {
    std::vector<Matrix> out;
    for_each_matrix(rows, cols, grid, [&](const Matrix& m) {
        if (keep(m)) out.push_back(m);
    });
    return out;
}

} // namespace detail

/// Number of raw candidates a search enumerates before filtering.
inline std::uint64_t grid_candidate_count(SearchKind kind, std::size_t n, std::size_t m, std::size_t grid_size) {
    switch (kind) {
    case SearchKind::nijenhuis:
    case SearchKind::rota_baxter: return detail::saturating_power(grid_size, n * n);
    case SearchKind::kupershmidt: return detail::saturating_power(grid_size, n * m);
    case SearchKind::nijenhuis_pair: return detail::saturating_power(grid_size, n * n + m * m);
    case SearchKind::kn_structure: return detail::saturating_power(grid_size, n * m + m * m + n * n);
    case SearchKind::r_matrix: return detail::saturating_power(grid_size, n * (n - 1) / 2);
    case SearchKind::compatible_pair: return detail::saturating_power(grid_size, 2 * n * m);
    }
    return UINT64_MAX;
}

/**
 * Exhaustive search over all operators whose entries lie in `entries`.
 *
 * Results are every candidate passing the predicate of `kind`, in
 * lexicographic order of the concatenated row-major entry tuples, with the
 * grid sorted ascending. Multi-operator kinds concatenate in the order
 * (N, S), (T, S, N), (T1, T2); compatible pairs are unordered with T1 < T2.
 * Throws CapExceeded when the raw candidate count is above `cap`.
 */
inline std::vector<OperatorSet> grid_search(const LieAlgebra& g, const Representation& rho, SearchKind kind,
                                            std::vector<Rational> entries,
                                            std::uint64_t cap = default_grid_cap) {
    require_acts_on(g, rho);
    std::sort(entries.begin(), entries.end());
    entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
    if (entries.empty()) throw std::invalid_argument("grid_search: empty entry set");
    const std::size_t n = g.dim(), m = rho.module_dim();
    const std::uint64_t count = grid_candidate_count(kind, n, m, entries.size());
    if (count > cap)
        throw CapExceeded("grid_search: " + std::to_string(count) + " candidates exceed the cap of " +
                          std::to_string(cap));

    std::vector<OperatorSet> out;
    auto nijenhuis = [&](const Matrix& x) { return is_nijenhuis(g, x).holds(); };
    auto kupershmidt = [&](const Matrix& x) { return is_kupershmidt(g, rho, x).holds(); };

    switch (kind) {
    case SearchKind::nijenhuis:
        detail::for_each_matrix(n, n, entries, [&](const Matrix& x) {
            if (nijenhuis(x)) out.push_back({{"N", x}});
        });
        break;
    case SearchKind::rota_baxter:
        detail::for_each_matrix(n, n, entries, [&](const Matrix& x) {
            if (is_rota_baxter(g, x).holds()) out.push_back({{"R", x}});
        });
        break;
    case SearchKind::kupershmidt:
        detail::for_each_matrix(n, m, entries, [&](const Matrix& x) {
            if (kupershmidt(x)) out.push_back({{"T", x}});
        });
        break;
    case SearchKind::r_matrix: {
        // Free entries are the strict upper triangle; the rest is forced.
        std::vector<std::pair<std::size_t, std::size_t>> cells;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) cells.emplace_back(i, j);
        detail::for_each_matrix(1, cells.size(), entries, [&](const Matrix& row) {
            Matrix p(n, n);
            for (std::size_t k = 0; k < cells.size(); ++k) {
                p(cells[k].first, cells[k].second) = row(0, k);
                p(cells[k].second, cells[k].first) = -row(0, k);
            }
            if (is_r_matrix(g, Bivector{p}).holds()) out.push_back({{"pi_sharp", p}});
        });
        break;
    }
    case SearchKind::nijenhuis_pair: {
        const auto ns = detail::collect_matrices(n, n, entries, nijenhuis);
        const auto all_s = detail::collect_matrices(m, m, entries, [](const Matrix&) { return true; });
        for (const auto& nm : ns)
            for (const auto& s : all_s) {
                bool ok = true;
                for (std::size_t i = 0; i < n && ok; ++i) ok = nijenhuis_pair_defect(rho, nm, s, i).is_zero();
                if (ok) out.push_back({{"N", nm}, {"S", s}});
            }
        break;
    }
    case SearchKind::kn_structure: {
        const auto ts = detail::collect_matrices(n, m, entries, kupershmidt);
        const auto ns = detail::collect_matrices(n, n, entries, nijenhuis);
        const auto all_s = detail::collect_matrices(m, m, entries, [](const Matrix&) { return true; });
        for (const auto& t : ts)
            for (const auto& s : all_s) {
                const Matrix ts_prod = t * s;
                const Bracket deformed = deform_bracket_by_S(sub_adjacent_bracket(g, rho, t), s);
                for (const auto& nm : ns) {
                    const Matrix nt = nm * t;
                    if (nt != ts_prod) continue;
                    bool ok = true;
                    for (std::size_t i = 0; i < n && ok; ++i) ok = nijenhuis_pair_defect(rho, nm, s, i).is_zero();
                    if (ok && sub_adjacent_bracket(g, rho, nt) == deformed)
                        out.push_back({{"T", t}, {"S", s}, {"N", nm}});
                }
            }
        break;
    }
    case SearchKind::compatible_pair: {
        const auto ts = detail::collect_matrices(n, m, entries, kupershmidt);
        for (std::size_t a = 0; a < ts.size(); ++a)
            for (std::size_t b = a + 1; b < ts.size(); ++b)
                if (are_compatible_kupershmidt(g, rho, ts[a], ts[b]).holds())
                    out.push_back({{"T1", ts[a]}, {"T2", ts[b]}});
        break;
    }
    }
    return out;
}

} // namespace liekn
