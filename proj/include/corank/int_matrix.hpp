#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace corank {

// Dense matrix over Z with arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        require_internal(a.cols_ == b.rows_, "matrix product shape mismatch");
        IntMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return c;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

// Exact determinant by fraction-free (Bareiss) elimination.
inline Int int_det(IntMatrix m) {
    require_input(m.rows() == m.cols(), "determinant needs a square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m.at(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

// Inverse of a unimodular integer matrix (det = +-1), which is again
// integral. Gauss-Jordan over rationals followed by an integrality check.
inline IntMatrix unimodular_inverse(const IntMatrix& m) {
    require_input(m.rows() == m.cols(), "inverse needs a square matrix");
    const std::size_t n = m.rows();
    std::vector<std::vector<Rat>> w(n, std::vector<Rat>(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w[i][j] = Rat(m.at(i, j));
        w[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && w[piv][c] == 0) ++piv;
        require_premise(piv < n, "matrix is singular");
        std::swap(w[piv], w[c]);
        Rat d = w[c][c];
        for (auto& x : w[c]) x /= d;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || w[i][c] == 0) continue;
            Rat f = w[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j) w[i][j] -= f * w[c][j];
        }
    }
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rat& x = w[i][n + j];
            require_premise(boost::multiprecision::denominator(x) == 1,
                            "matrix is not unimodular: inverse is not integral");
            inv.at(i, j) = boost::multiprecision::numerator(x);
        }
    return inv;
}

// Smith normal form: unimodular U (m x m) and V (n x n) with U*A*V = D,
// D diagonal with nonnegative entries d_1 | d_2 | ... .
struct SnfResult {
    IntMatrix U, D, V;
    std::vector<Int> diagonal() const {
        std::vector<Int> d;
        for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
            d.push_back(D.at(i, i));
        return d;
    }
    std::size_t rank() const {
        std::size_t r = 0;
        for (const Int& d : diagonal())
            if (d != 0) ++r;
        return r;
    }
};

inline SnfResult smith_normal_form(const IntMatrix& A) {
    const std::size_t m = A.rows(), n = A.cols();
    SnfResult res{IntMatrix::identity(m), A, IntMatrix::identity(n)};
    IntMatrix& D = res.D;
    IntMatrix& U = res.U;
    IntMatrix& V = res.V;

    auto row_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < n; ++c) std::swap(D.at(i, c), D.at(j, c));
        for (std::size_t c = 0; c < m; ++c) std::swap(U.at(i, c), U.at(j, c));
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < m; ++r) std::swap(D.at(r, i), D.at(r, j));
        for (std::size_t r = 0; r < n; ++r) std::swap(V.at(r, i), V.at(r, j));
    };
    auto row_add = [&](std::size_t dst, std::size_t src, const Int& f) { // row dst += f*row src
        for (std::size_t c = 0; c < n; ++c) D.at(dst, c) += f * D.at(src, c);
        for (std::size_t c = 0; c < m; ++c) U.at(dst, c) += f * U.at(src, c);
    };
    auto col_add = [&](std::size_t dst, std::size_t src, const Int& f) { // col dst += f*col src
        for (std::size_t r = 0; r < m; ++r) D.at(r, dst) += f * D.at(r, src);
        for (std::size_t r = 0; r < n; ++r) V.at(r, dst) += f * V.at(r, src);
    };
    auto row_negate = [&](std::size_t i) {
        for (std::size_t c = 0; c < n; ++c) D.at(i, c) = -D.at(i, c);
        for (std::size_t c = 0; c < m; ++c) U.at(i, c) = -U.at(i, c);
    };

    const std::size_t t_max = std::min(m, n);
    for (std::size_t t = 0; t < t_max; ++t) {
        // choose the absolutely smallest nonzero entry of the trailing block as pivot
        bool found = false;
        std::size_t pi = t, pj = t;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (D.at(i, j) == 0) continue;
                Int v = D.at(i, j) < 0 ? Int(-D.at(i, j)) : D.at(i, j);
                Int best = D.at(pi, pj) < 0 ? Int(-D.at(pi, pj)) : D.at(pi, pj);
                if (!found || v < best) {
                    found = true;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        if (pi != t) row_swap(pi, t);
        if (pj != t) col_swap(pj, t);

        for (;;) {
            bool again = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D.at(i, t) == 0) continue;
                Int q = D.at(i, t) / D.at(t, t);
                row_add(i, t, -q);
                if (D.at(i, t) != 0) { // remainder became the smaller pivot
                    row_swap(i, t);
                    again = true;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D.at(t, j) == 0) continue;
                Int q = D.at(t, j) / D.at(t, t);
                col_add(j, t, -q);
                if (D.at(t, j) != 0) {
                    col_swap(j, t);
                    again = true;
                }
            }
            if (again) continue;
            // pivot must divide the whole trailing block; if not, merge the
            // offending row into row t and restart the elimination
            bool fixed = true;
            for (std::size_t i = t + 1; i < m && fixed; ++i)
                for (std::size_t j = t + 1; j < n && fixed; ++j)
                    if (D.at(i, j) % D.at(t, t) != 0) {
                        row_add(t, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (D.at(t, t) < 0) row_negate(t);
    }
    return res;
}

} // namespace corank
