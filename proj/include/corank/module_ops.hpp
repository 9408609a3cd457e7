#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "gcd.hpp"
#include "groebner.hpp"
#include "laurent.hpp"
#include "laurent_text.hpp"
#include "matrix.hpp"

namespace corank {

// One step of a matrix reduction. Indices are 0-based into the matrix as it
// stands when the move runs. Every move is an isomorphism of the presented
// module, so a script is a replayable certificate of a simplification.
struct ReductionMove {
    std::string move; // swap_rows | swap_cols | scale_row | scale_col |
                      // add_row | add_col | delete_pivot | delete_zero_row
    int i = -1;
    int j = -1;
    std::string poly; // scale unit / add multiplier, in polynomial text form
};

using ReductionScript = std::vector<ReductionMove>;

namespace reduction_detail {

template <typename C>
inline LaurentPoly<C> move_poly(const RingPtr& ring, const std::string& text);

template <>
inline LaurentPoly<Int> move_poly<Int>(const RingPtr& ring, const std::string& text) {
    return parse_poly(ring, text);
}
template <>
inline LaurentPoly<Rat> move_poly<Rat>(const RingPtr& ring, const std::string& text) {
    return parse_poly_rat(ring, text);
}

} // namespace reduction_detail

template <typename C>
inline void apply_move(ModulePresentation<C>& mp, const ReductionMove& mv) {
    const std::size_t rows = mp.rows(), cols = mp.cols();
    auto need_row = [&](int idx) -> std::size_t {
        require_input(idx >= 0 && static_cast<std::size_t>(idx) < rows,
                      "row index " + std::to_string(idx) + " out of range in move " + mv.move);
        return static_cast<std::size_t>(idx);
    };
    auto need_col = [&](int idx) -> std::size_t {
        require_input(idx >= 0 && static_cast<std::size_t>(idx) < cols,
                      "column index " + std::to_string(idx) + " out of range in move " + mv.move);
        return static_cast<std::size_t>(idx);
    };

    if (mv.move == "swap_rows") {
        std::size_t i = need_row(mv.i), j = need_row(mv.j);
        std::swap(mp.m[i], mp.m[j]);
    } else if (mv.move == "swap_cols") {
        std::size_t i = need_col(mv.i), j = need_col(mv.j);
        for (auto& row : mp.m) std::swap(row[i], row[j]);
        std::swap(mp.generators[i], mp.generators[j]);
    } else if (mv.move == "scale_row" || mv.move == "scale_col") {
        LaurentPoly<C> u = reduction_detail::move_poly<C>(mp.ring, mv.poly);
        require_premise(u.is_unit(), "scale factor \"" + mv.poly + "\" is not a unit");
        if (mv.move == "scale_row") {
            std::size_t i = need_row(mv.i);
            for (auto& p : mp.m[i]) p = p * u;
        } else {
            std::size_t j = need_col(mv.j >= 0 ? mv.j : mv.i); // column in j (i tolerated)
            for (auto& row : mp.m) row[j] = row[j] * u;
        }
    } else if (mv.move == "add_row") {
        std::size_t i = need_row(mv.i), j = need_row(mv.j);
        require_input(i != j, "add_row needs two distinct rows");
        LaurentPoly<C> f = reduction_detail::move_poly<C>(mp.ring, mv.poly);
        for (std::size_t c = 0; c < cols; ++c) mp.m[i][c] += f * mp.m[j][c];
    } else if (mv.move == "add_col") {
        std::size_t i = need_col(mv.i), j = need_col(mv.j);
        require_input(i != j, "add_col needs two distinct columns");
        LaurentPoly<C> f = reduction_detail::move_poly<C>(mp.ring, mv.poly);
        for (std::size_t r = 0; r < rows; ++r) mp.m[r][i] += f * mp.m[r][j];
    } else if (mv.move == "delete_pivot") {
        std::size_t i = need_row(mv.i), j = need_col(mv.j);
        const LaurentPoly<C> u = mp.m[i][j];
        require_premise(u.is_unit(), "delete_pivot needs a unit entry at (" +
                        std::to_string(mv.i) + "," + std::to_string(mv.j) + ")");
        LaurentPoly<C> uinv = u.pow(-1);
        // clear row i by column moves, then column j by row moves
        for (std::size_t c = 0; c < cols; ++c) {
            if (c == j || mp.m[i][c].is_zero()) continue;
            LaurentPoly<C> f = mp.m[i][c] * uinv;
            for (std::size_t r = 0; r < rows; ++r) mp.m[r][c] -= f * mp.m[r][j];
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == i || mp.m[r][j].is_zero()) continue;
            mp.m[r][j] = LaurentPoly<C>::zero(mp.ring); // row i is zero off-pivot
        }
        mp.m.erase(mp.m.begin() + static_cast<std::ptrdiff_t>(i));
        for (auto& row : mp.m) row.erase(row.begin() + static_cast<std::ptrdiff_t>(j));
        mp.generators.erase(mp.generators.begin() + static_cast<std::ptrdiff_t>(j));
    } else if (mv.move == "delete_zero_row") {
        std::size_t i = need_row(mv.i);
        for (const auto& p : mp.m[i])
            require_premise(p.is_zero(), "delete_zero_row on a nonzero row");
        mp.m.erase(mp.m.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
        throw input_error("unknown reduction move \"" + mv.move + "\"");
    }
}

template <typename C>
inline ModulePresentation<C> apply_reduction(const ModulePresentation<C>& mp,
                                             const ReductionScript& script) {
    ModulePresentation<C> out = mp;
    for (const auto& mv : script) {
        apply_move(out, mv);
        out.provenance.push_back("move " + mv.move +
                                 (mv.i >= 0 ? " i=" + std::to_string(mv.i) : "") +
                                 (mv.j >= 0 ? " j=" + std::to_string(mv.j) : "") +
                                 (mv.poly.empty() ? "" : " poly=" + mv.poly));
    }
    return out;
}

template <typename C>
struct AutoReduceResult {
    ModulePresentation<C> reduced;
    ReductionScript script;
};

// Deterministic greedy simplification: delete zero rows, split off unit
// pivots (first in row-major order), and eliminate rows that are exact
// polynomial multiples of another row. Emits the script it performed.
template <typename C>
inline AutoReduceResult<C> auto_reduce(const ModulePresentation<C>& mp) {
    AutoReduceResult<C> res{mp, {}};
    ModulePresentation<C>& cur = res.reduced;
    auto run = [&](const ReductionMove& mv) {
        apply_move(cur, mv);
        res.script.push_back(mv);
    };
    for (;;) {
        // zero rows
        bool restart = false;
        for (std::size_t i = 0; i < cur.rows(); ++i) {
            bool zero = true;
            for (const auto& p : cur.m[i]) zero = zero && p.is_zero();
            if (zero) {
                run({"delete_zero_row", static_cast<int>(i), -1, ""});
                restart = true;
                break;
            }
        }
        if (restart) continue;
        // unit pivot
        bool pivoted = false;
        for (std::size_t i = 0; i < cur.rows() && !pivoted; ++i)
            for (std::size_t j = 0; j < cur.cols() && !pivoted; ++j)
                if (cur.m[i][j].is_unit()) {
                    run({"delete_pivot", static_cast<int>(i), static_cast<int>(j), ""});
                    pivoted = true;
                }
        if (pivoted) continue;
        // proportional rows: row i = f * row j
        bool eliminated = false;
        for (std::size_t i = 0; i < cur.rows() && !eliminated; ++i) {
            for (std::size_t j = 0; j < cur.rows() && !eliminated; ++j) {
                if (i == j) continue;
                std::size_t k = 0;
                while (k < cur.cols() && cur.m[j][k].is_zero()) ++k;
                if (k == cur.cols() || cur.m[i][k].is_zero()) continue;
                LaurentPoly<C> f;
                try {
                    f = exact_divide(cur.m[i][k], cur.m[j][k]);
                } catch (const premise_error&) {
                    continue;
                }
                bool prop = true;
                for (std::size_t c = 0; c < cur.cols() && prop; ++c)
                    prop = (cur.m[i][c] == f * cur.m[j][c]);
                if (!prop) continue;
                run({"add_row", static_cast<int>(i), static_cast<int>(j),
                     poly_to_string(-f)});
                eliminated = true;
            }
        }
        if (eliminated) continue;
        break;
    }
    return res;
}

// ---- elementary ideals -----------------------------------------------------

// E_k = ideal of (n-k) x (n-k) minors, n = number of module generators
// (columns). k >= n gives the whole ring (generator 1); minor size larger
// than the row count gives the zero ideal (no generators).
template <typename C>
inline PolyIdeal<C> elementary_ideal(const ModulePresentation<C>& mp, int k) {
    mp.validate();
    require_input(k >= 0, "elementary ideal index must be >= 0");
    PolyIdeal<C> ideal{mp.ring, {}};
    const long long n = static_cast<long long>(mp.cols());
    const long long size = n - k;
    if (size <= 0) {
        C one = [&]() -> C {
            for (const auto& row : mp.m)
                for (const auto& p : row)
                    if (!p.is_zero()) return p.one_like();
            if constexpr (std::is_same_v<C, Fp>) {
                throw std::logic_error(
                    "cannot form the unit ideal of an F_p module with no nonzero entry "
                    "(modulus unknown)");
            } else {
                return C(1);
            }
        }();
        ideal.gens.push_back(LaurentPoly<C>::constant(mp.ring, one));
        return ideal;
    }
    if (size > static_cast<long long>(mp.rows())) return ideal; // zero ideal

    // all size x size minors
    std::vector<std::size_t> rsel(static_cast<std::size_t>(size)), csel = rsel;
    auto combinations = [](std::size_t n_items, std::size_t k_items) {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> c(k_items);
        for (std::size_t i = 0; i < k_items; ++i) c[i] = i;
        for (;;) {
            out.push_back(c);
            std::size_t t = k_items;
            while (t > 0 && c[t - 1] == n_items - k_items + (t - 1)) --t;
            if (t == 0) break;
            ++c[t - 1];
            for (std::size_t i = t; i < k_items; ++i) c[i] = c[i - 1] + 1;
        }
        return out;
    };
    auto row_sets = combinations(mp.rows(), static_cast<std::size_t>(size));
    auto col_sets = combinations(mp.cols(), static_cast<std::size_t>(size));
    for (const auto& rs : row_sets)
        for (const auto& cs : col_sets) {
            std::vector<std::vector<LaurentPoly<C>>> sub;
            for (std::size_t r : rs) {
                std::vector<LaurentPoly<C>> row;
                for (std::size_t c : cs) row.push_back(mp.m[r][c]);
                sub.push_back(std::move(row));
            }
            LaurentPoly<C> d = poly_det(sub, mp.ring);
            if (!d.is_zero()) ideal.gens.push_back(d);
        }
    return ideal;
}

// ---- base change -----------------------------------------------------------

inline ModulePresentation<Fp> module_mod_p(const ModulePresentation<Int>& mp,
                                           std::int64_t prime) {
    ModulePresentation<Fp> out;
    out.ring = mp.ring;
    out.generators = mp.generators;
    out.provenance = mp.provenance;
    out.provenance.push_back("coefficients reduced mod " + std::to_string(prime));
    for (const auto& row : mp.m) {
        std::vector<LaurentPoly<Fp>> r;
        for (const auto& p : row) r.push_back(reduce_mod(p, prime));
        out.m.push_back(std::move(r));
    }
    return out;
}

inline ModulePresentation<Rat> module_to_rational(const ModulePresentation<Int>& mp) {
    ModulePresentation<Rat> out;
    out.ring = mp.ring;
    out.generators = mp.generators;
    out.provenance = mp.provenance;
    out.provenance.push_back("coefficients extended to the rationals");
    for (const auto& row : mp.m) {
        std::vector<LaurentPoly<Rat>> r;
        for (const auto& p : row) r.push_back(to_rational(p));
        out.m.push_back(std::move(r));
    }
    return out;
}

// substitute ring variables (e.g. identify two variables b -> t)
inline ModulePresentation<Int> module_substitute(const ModulePresentation<Int>& mp,
                                                 const std::map<std::string, std::string>& sub) {
    VarList target_vars;
    for (const auto& v : *mp.ring) {
        auto it = sub.find(v);
        std::string name = it == sub.end() ? v : it->second;
        if (std::find(target_vars.begin(), target_vars.end(), name) == target_vars.end())
            target_vars.push_back(name);
    }
    RingPtr target = make_ring(target_vars);
    ModulePresentation<Int> out;
    out.ring = target;
    out.generators = mp.generators;
    out.provenance = mp.provenance;
    std::string desc = "variables substituted:";
    for (const auto& [k, v] : sub) desc += " " + k + "->" + v;
    out.provenance.push_back(desc);
    for (const auto& row : mp.m) {
        std::vector<LaurentPoly<Int>> r;
        for (const auto& p : row) r.push_back(substitute_variables(p, sub, target));
        out.m.push_back(std::move(r));
    }
    return out;
}

// ---- verdicts ---------------------------------------------------------------

// Torsion test for a module presented by a single row (cyclically presented
// after reduction). Some pair of entries with unit gcd certifies a
// torsion-free module; a common non-unit divisor of all entries certifies
// torsion; anything else is inconclusive (for two entries the test is
// exhaustive). A single-entry row is its own overall gcd. The all-zero row
// is rejected: it presents a free module and needs no torsion test.
struct TorsionVerdict {
    enum Kind { torsion_free, has_torsion, inconclusive } kind = inconclusive;
    int witness_i = -1, witness_j = -1;  // entry pair with unit gcd
    LaurentPoly<Int> common_factor;      // non-unit divisor of every entry
};

inline TorsionVerdict torsion_verdict(const ModulePresentation<Int>& mp) {
    require_premise(mp.rows() == 1,
                    "torsion test needs a single-row presentation (reduce first), got " +
                    std::to_string(mp.rows()) + " rows");
    const auto& row = mp.m[0];
    bool all_zero = true;
    for (const auto& p : row) all_zero = all_zero && p.is_zero();
    require_premise(!all_zero, "torsion test on an all-zero row (the module is free)");

    TorsionVerdict v;
    if (row.size() == 1) {
        if (row[0].is_unit()) {
            v.kind = TorsionVerdict::torsion_free; // the module is trivial
            v.witness_i = v.witness_j = 0;
        } else {
            v.kind = TorsionVerdict::has_torsion;
            v.common_factor = unit_normalize(row[0]).primitive;
        }
        return v;
    }
    for (std::size_t i = 0; i < row.size(); ++i)
        for (std::size_t j = i + 1; j < row.size(); ++j)
            if (laurent_gcd(row[i], row[j]).is_unit()) {
                v.kind = TorsionVerdict::torsion_free;
                v.witness_i = static_cast<int>(i);
                v.witness_j = static_cast<int>(j);
                return v;
            }
    LaurentPoly<Int> g = laurent_gcd(row);
    if (!g.is_unit()) {
        v.kind = TorsionVerdict::has_torsion;
        v.common_factor = g;
        return v;
    }
    v.kind = TorsionVerdict::inconclusive;
    return v;
}

// Freeness obstruction: if the module were free of rank r, its r-th
// elementary ideal would be the whole ring, and that persists under any base
// change. A proper E_r after reduction mod p therefore certifies "not free
// of rank r". Exhausting the prime list proves nothing (one-sided test).
struct FreenessVerdict {
    enum Kind { not_free, free_unknown } kind = free_unknown;
    std::int64_t prime = 0;        // witness prime when not_free
    PolyIdeal<Fp> witness_ideal;   // the proper E_rank mod prime
};

inline FreenessVerdict freeness_verdict(const ModulePresentation<Int>& mp,
                                        std::size_t rank,
                                        const std::vector<std::int64_t>& primes) {
    require_input(!primes.empty(), "freeness test needs at least one prime");
    std::size_t actual = module_rank(mp);
    require_premise(actual == rank,
                    "freeness test at rank " + std::to_string(rank) +
                    " but the module has rank " + std::to_string(actual));
    FreenessVerdict v;
    for (std::int64_t p : primes) {
        require_input(p >= 2, "freeness test primes must be >= 2");
        ModulePresentation<Fp> red = module_mod_p(mp, p);
        // the zero ideal (no generators) is proper and certifies just as well
        PolyIdeal<Fp> ek = elementary_ideal(red, static_cast<int>(rank));
        if (!ideal_is_proper(ek)) continue;
        v.kind = FreenessVerdict::not_free;
        v.prime = p;
        v.witness_ideal = ek;
        return v;
    }
    return v;
}

} // namespace corank
