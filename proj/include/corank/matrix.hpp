#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "laurent.hpp"
#include "rng.hpp"

namespace corank {

// Presentation matrix of a module over the Laurent ring: columns are labeled
// module generators, rows are relations.
template <typename C>
struct ModulePresentation {
    RingPtr ring;
    std::vector<std::string> generators;         // column labels
    std::vector<std::vector<LaurentPoly<C>>> m;  // rows x cols
    std::vector<std::string> provenance;         // human-readable build steps

    std::size_t rows() const { return m.size(); }
    std::size_t cols() const { return generators.size(); }

    void validate() const {
        for (const auto& row : m)
            require_internal(row.size() == generators.size(),
                             "module matrix row width mismatch");
    }
};

// Smallest monomial multiple that clears every negative exponent in the row.
// Returns the clearing exponent vector (all entries >= 0).
template <typename C>
inline Expo row_clearing_exponents(const std::vector<LaurentPoly<C>>& row, std::size_t nvars) {
    Expo shift(nvars, 0);
    for (const auto& p : row) {
        if (p.is_zero()) continue;
        Expo m = p.min_exponents();
        for (std::size_t i = 0; i < nvars; ++i) shift[i] = std::max(shift[i], -m[i]);
    }
    return shift;
}

// Multiply each row by the minimal positive monomial clearing negative
// exponents (a unit, so the module is unchanged).
template <typename C>
inline ModulePresentation<C> normalize_rows(const ModulePresentation<C>& mp) {
    ModulePresentation<C> out = mp;
    for (auto& row : out.m) {
        Expo shift = row_clearing_exponents(row, mp.ring->size());
        if (std::all_of(shift.begin(), shift.end(), [](int x) { return x == 0; })) continue;
        for (auto& p : row) p = p.shifted(shift);
    }
    return out;
}

// Divide an entry by the monomial of its per-variable minimum exponents
// (no sign change). Used for display comparisons only.
template <typename C>
inline LaurentPoly<C> strip_entry_monomial(const LaurentPoly<C>& p) {
    if (p.is_zero()) return p;
    Expo m = p.min_exponents();
    Expo neg(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) neg[i] = -m[i];
    return p.shifted(neg);
}

// Fraction-free Gaussian elimination (Bareiss). All divisions are exact in
// the Laurent domain; a failed exact division would signal a logic bug.
template <typename C>
inline std::size_t bareiss_rank(std::vector<std::vector<LaurentPoly<C>>> a) {
    const std::size_t rows = a.size();
    if (rows == 0) return 0;
    const std::size_t cols = a[0].size();
    // clear denominators row-wise so exponents stay polynomial-like
    for (auto& row : a) {
        Expo shift = row_clearing_exponents(row, row.empty() ? 0 : row[0].nvars());
        for (auto& p : row)
            if (!p.is_zero()) p = p.shifted(shift);
    }
    LaurentPoly<C> prev; // empty = "divide by 1" sentinel for the first step
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                LaurentPoly<C> num = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                a[i][j] = (prev.is_zero() || num.is_zero()) ? num : exact_divide(num, prev);
            }
            a[i][c] = LaurentPoly<C>::zero(a[i][c].ring());
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

namespace detail {
inline std::size_t rational_rank(std::vector<std::vector<Rat>> a) {
    const std::size_t rows = a.size();
    if (rows == 0) return 0;
    const std::size_t cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            Rat f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}
} // namespace detail

// Rank of the matrix over the fraction field of the Laurent ring, with a
// random-evaluation cross-check for exact coefficients: the rank at any
// specialized point can only drop, so an evaluation rank exceeding the
// symbolic rank proves a bug. Randomness never decides the verdict.
template <typename C>
inline std::size_t matrix_rank(const ModulePresentation<C>& mp) {
    mp.validate();
    std::size_t sym = bareiss_rank(mp.m);
    if constexpr (std::is_same_v<C, Int> || std::is_same_v<C, Rat>) {
        Rng rng(corank_seed());
        const std::size_t nv = mp.ring->size();
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<Rat> point(nv);
            for (std::size_t i = 0; i < nv; ++i) {
                Int num = rng.range(1, 40);
                Int den = rng.range(1, 40);
                point[i] = rng.coin() ? Rat(num, den) : Rat(-num, den);
            }
            std::vector<std::vector<Rat>> num_m(mp.rows(), std::vector<Rat>(mp.cols()));
            for (std::size_t i = 0; i < mp.rows(); ++i)
                for (std::size_t j = 0; j < mp.cols(); ++j)
                    num_m[i][j] = evaluate(mp.m[i][j], point);
            std::size_t er = detail::rational_rank(num_m);
            require_internal(er <= sym,
                             "evaluation rank " + std::to_string(er) +
                             " exceeds symbolic rank " + std::to_string(sym));
        }
    }
    return sym;
}

// rank of the presented module = generators - matrix rank
template <typename C>
inline std::size_t module_rank(const ModulePresentation<C>& mp) {
    std::size_t r = matrix_rank(mp);
    require_internal(r <= mp.cols(), "matrix rank exceeds column count");
    return mp.cols() - r;
}

// determinant by cofactor expansion (minor sizes here are tiny)
template <typename C>
inline LaurentPoly<C> poly_det(const std::vector<std::vector<LaurentPoly<C>>>& a,
                               const RingPtr& ring) {
    const std::size_t n = a.size();
    if (n == 0) return LaurentPoly<C>(ring); // handled by callers (empty product)
    if (n == 1) return a[0][0];
    LaurentPoly<C> det(ring);
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j].is_zero()) continue;
        std::vector<std::vector<LaurentPoly<C>>> sub(n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) sub[i - 1].push_back(a[i][k]);
        LaurentPoly<C> term = a[0][j] * poly_det(sub, ring);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

} // namespace corank
