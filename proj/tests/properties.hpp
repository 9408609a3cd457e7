#pragma once
// Randomized property suites shared by the unit tests and the acceptance
// runner. Every suite draws from a deterministic seed (override with
// CORANK_SEED) and throws std::runtime_error on the first violation, with a
// message precise enough to replay the failing case.

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "corank/corank.hpp"

namespace props {

using namespace corank;

[[noreturn]] inline void fail(const std::string& suite, std::size_t case_no,
                              const std::string& what) {
    throw std::runtime_error(suite + " violated at case " + std::to_string(case_no) + ": " +
                             what);
}

inline RingPtr test_ring(int nvars) {
    VarList vars;
    for (int i = 0; i < nvars; ++i) vars.push_back(std::string(1, char('x' + i)));
    return make_ring(std::move(vars));
}

inline LaurentPoly<Int> random_poly(Rng& rng, const RingPtr& ring, int max_terms, int max_exp,
                                    int max_coef, bool nonzero) {
    LaurentPoly<Int> p(ring);
    int t = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms)));
    for (int i = 0; i < t; ++i) {
        Expo e(ring->size());
        for (auto& x : e) x = static_cast<int>(rng.range(-max_exp, max_exp));
        p.add_term(e, Int(rng.range(-max_coef, max_coef)));
    }
    if (nonzero && p.is_zero()) p.add_term(Expo(ring->size(), 0), Int(1 + rng.below(3)));
    return p;
}

// ---- Fox derivative: sum_g (dw/dg)(t^im(g) - 1) = t^im(w) - 1 -----------------

inline void fox_fundamental_identity(std::size_t cases = 500) {
    Rng rng(corank_seed() ^ 0x10f0cafeULL);
    const std::vector<std::string> gens = {"a", "b", "c", "d"};
    for (std::size_t n = 0; n < cases; ++n) {
        int rank = 1 + static_cast<int>(rng.below(3));
        VarList vars;
        for (int i = 0; i < rank; ++i) vars.push_back("t" + std::to_string(i + 1));
        RingPtr ring = make_ring(vars);
        AbelianizationMap ab;
        ab.rank = rank;
        ab.basis = vars;
        for (const auto& g : gens) {
            std::vector<Int> v;
            for (int i = 0; i < rank; ++i) v.push_back(Int(rng.range(-2, 2)));
            ab.images[g] = v;
        }
        Word w;
        std::size_t len = rng.below(13);
        for (std::size_t i = 0; i < len; ++i)
            w.push_back(Letter(gens[rng.below(gens.size())], rng.coin() ? 1 : -1));

        LaurentPoly<Int> one = LaurentPoly<Int>::constant(ring, Int(1));
        LaurentPoly<Int> lhs(ring);
        for (const auto& g : gens) {
            LaurentPoly<Int> tg =
                LaurentPoly<Int>::monomial(ring, foxdetail::image_expo(ab, g), Int(1));
            lhs = lhs + fox_derivative(ring, ab, w, g) * (tg - one);
        }
        LaurentPoly<Int> rhs = word_monomial(ring, ab, w) - one;
        if (!(lhs == rhs))
            fail("Fox fundamental identity", n,
                 "word " + word_to_string(w) + ": sum dw/dg (t^g - 1) = " +
                     poly_to_string(lhs) + " but t^w - 1 = " + poly_to_string(rhs));
    }
}

// ---- Smith normal form: U A V = D, unimodular transforms, divisor chain ------

inline void snf_invariants(std::size_t cases = 500) {
    Rng rng(corank_seed() ^ 0x5af51235ULL);
    for (std::size_t n = 0; n < cases; ++n) {
        std::size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
        IntMatrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                a.at(i, j) = rng.below(5) == 0 ? Int(0) : Int(rng.range(-30, 30));
        SnfResult s = smith_normal_form(a);
        if (!(s.U * a * s.V == s.D)) fail("SNF", n, "U*A*V differs from D");
        Int du = int_det(s.U), dv = int_det(s.V);
        if (!(du == 1 || du == -1) || !(dv == 1 || dv == -1))
            fail("SNF", n, "transforms are not unimodular");
        std::vector<Int> d = s.diagonal();
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (d[i] < 0) fail("SNF", n, "negative diagonal entry");
            if (i + 1 < d.size()) {
                if (d[i] == 0 && d[i + 1] != 0) fail("SNF", n, "zero before nonzero");
                if (d[i] != 0 && d[i + 1] % d[i] != 0)
                    fail("SNF", n, "divisibility chain broken");
            }
        }
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j && s.D.at(i, j) != 0) fail("SNF", n, "D is not diagonal");
    }
}

// ---- gcd: divides both inputs, contains common factor, coprime cofactors ------

inline void gcd_cofactors(std::size_t cases = 500) {
    Rng rng(corank_seed() ^ 0x9cd9cd91ULL);
    for (std::size_t n = 0; n < cases; ++n) {
        RingPtr ring = test_ring(1 + static_cast<int>(rng.below(2)));
        LaurentPoly<Int> f = random_poly(rng, ring, 3, 2, 4, true);
        LaurentPoly<Int> g = random_poly(rng, ring, 3, 2, 4, true);
        LaurentPoly<Int> h = random_poly(rng, ring, 2, 2, 3, true);
        LaurentPoly<Int> fh = f * h, gh = g * h;
        LaurentPoly<Int> d = laurent_gcd(fh, gh);
        if (!divides(d, fh) || !divides(d, gh))
            fail("gcd", n, "gcd does not divide an input");
        if (!divides(h, d))
            fail("gcd", n, "common factor " + poly_to_string(h) + " missing from gcd " +
                               poly_to_string(d));
        if (!laurent_gcd(exact_divide(fh, d), exact_divide(gh, d)).is_unit())
            fail("gcd", n, "cofactors of " + poly_to_string(d) + " are not coprime");
    }
}

// ---- rank: invariant under unit row/column scaling and permutations -----------

inline void rank_invariance(std::size_t cases = 500) {
    Rng rng(corank_seed() ^ 0x4a2b4a2bULL);
    for (std::size_t n = 0; n < cases; ++n) {
        RingPtr ring = test_ring(2);
        std::size_t r = 2 + rng.below(3), c = 2 + rng.below(4);
        ModulePresentation<Int> mp;
        mp.ring = ring;
        for (std::size_t j = 0; j < c; ++j) mp.generators.push_back("m" + std::to_string(j));
        mp.m.assign(r, std::vector<LaurentPoly<Int>>(c, LaurentPoly<Int>(ring)));
        for (auto& row : mp.m)
            for (auto& e : row)
                if (rng.below(10) < 7) e = random_poly(rng, ring, 2, 2, 3, false);
        std::size_t r0 = matrix_rank(mp);

        ModulePresentation<Int> mq = mp;
        int moves = 2 + static_cast<int>(rng.below(5));
        for (int k = 0; k < moves; ++k) {
            ReductionMove mv;
            Expo e(ring->size());
            for (auto& x : e) x = static_cast<int>(rng.range(-1, 1));
            LaurentPoly<Int> unit =
                LaurentPoly<Int>::monomial(ring, e, Int(rng.coin() ? 1 : -1));
            switch (rng.below(4)) {
            case 0:
                mv.move = "swap_rows";
                mv.i = static_cast<int>(rng.below(r));
                mv.j = static_cast<int>(rng.below(r));
                if (mv.i == mv.j) continue;
                break;
            case 1:
                mv.move = "swap_cols";
                mv.i = static_cast<int>(rng.below(c));
                mv.j = static_cast<int>(rng.below(c));
                if (mv.i == mv.j) continue;
                break;
            case 2:
                mv.move = "scale_row";
                mv.i = static_cast<int>(rng.below(r));
                mv.poly = poly_to_string(unit);
                break;
            default:
                mv.move = "scale_col";
                mv.j = static_cast<int>(rng.below(c));
                mv.poly = poly_to_string(unit);
                break;
            }
            apply_move(mq, mv);
        }
        if (matrix_rank(mq) != r0)
            fail("rank invariance", n,
                 "rank changed from " + std::to_string(r0) + " under unit operations");
    }
}

// ---- Groebner bases: all S-polynomials reduce to zero via a reducer written
// independently of the library's normal_form; inputs lie in the ideal ---------

inline LaurentPoly<Fp> naive_reduce(LaurentPoly<Fp> f,
                                    const std::vector<LaurentPoly<Fp>>& basis) {
    bool progress = true;
    while (progress && !f.is_zero()) {
        progress = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            for (const auto& [e, c] : f.terms()) {
                if (!expo_geq(e, g.leading_expo())) continue;
                Fp factor = c / g.leading_coef();
                f = f - g.shifted(expo_sub(e, g.leading_expo())).scaled(factor);
                progress = true;
                break;
            }
            if (progress) break;
        }
    }
    return f;
}

inline LaurentPoly<Fp> random_poly_mod(Rng& rng, const RingPtr& ring, std::int64_t p,
                                       int max_terms, int max_deg) {
    LaurentPoly<Fp> out(ring);
    int t = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms)));
    for (int i = 0; i < t; ++i) {
        Expo e(ring->size());
        for (auto& x : e) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg + 1)));
        out.add_term(e, Fp(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(p))), p));
    }
    return out;
}

inline void groebner_postconditions(std::size_t cases = 500) {
    Rng rng(corank_seed() ^ 0x6b0b6b0bULL);
    const std::int64_t p = 5;
    for (std::size_t n = 0; n < cases; ++n) {
        RingPtr ring = test_ring(2);
        std::vector<LaurentPoly<Fp>> gens;
        std::size_t k = 1 + rng.below(3);
        for (std::size_t i = 0; i < k; ++i) {
            LaurentPoly<Fp> g = random_poly_mod(rng, ring, p, 3, 2);
            if (!g.is_zero()) gens.push_back(g);
        }
        std::vector<LaurentPoly<Fp>> basis = gb::buchberger(gens);
        for (const auto& b : basis)
            if (b.is_zero() || !(b.leading_coef() == Fp(1, p)))
                fail("Groebner", n, "basis element not monic");
        for (const auto& g : gens)
            if (!naive_reduce(g, basis).is_zero())
                fail("Groebner", n, "input " + poly_to_string(g) +
                                        " does not reduce to zero against the basis");
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i + 1; j < basis.size(); ++j) {
                Expo l = gb::expo_lcm(basis[i].leading_expo(), basis[j].leading_expo());
                LaurentPoly<Fp> s =
                    basis[i].shifted(expo_sub(l, basis[i].leading_expo())) -
                    basis[j].shifted(expo_sub(l, basis[j].leading_expo()));
                if (!naive_reduce(s, basis).is_zero())
                    fail("Groebner", n, "S-polynomial of basis elements " + std::to_string(i) +
                                            ", " + std::to_string(j) +
                                            " does not reduce to zero");
            }
    }
}

// ---- Fitting ideals: invariant under reduction scripts, compared mod 5 --------

inline void fitting_invariance(std::size_t scripts = 100) {
    Rng rng(corank_seed() ^ 0x71771777ULL);
    const std::int64_t p = 5;
    for (std::size_t n = 0; n < scripts; ++n) {
        RingPtr ring = test_ring(2);
        std::size_t r = 2, c = 3;
        ModulePresentation<Int> mp;
        mp.ring = ring;
        for (std::size_t j = 0; j < c; ++j) mp.generators.push_back("m" + std::to_string(j));
        mp.m.assign(r, std::vector<LaurentPoly<Int>>(c, LaurentPoly<Int>(ring)));
        for (auto& row : mp.m)
            for (auto& e : row)
                if (rng.below(10) < 8) e = random_poly(rng, ring, 2, 1, 3, false);

        ModulePresentation<Int> mq = mp;
        int moves = 1 + static_cast<int>(rng.below(4));
        for (int k = 0; k < moves; ++k) {
            ReductionMove mv;
            Expo e(ring->size());
            for (auto& x : e) x = static_cast<int>(rng.range(-1, 1));
            LaurentPoly<Int> unit =
                LaurentPoly<Int>::monomial(ring, e, Int(rng.coin() ? 1 : -1));
            std::size_t rows = mq.rows(), cols = mq.cols();
            switch (rng.below(6)) {
            case 0:
                if (rows < 2) continue;
                mv.move = "swap_rows";
                mv.i = static_cast<int>(rng.below(rows));
                mv.j = static_cast<int>(rng.below(rows));
                if (mv.i == mv.j) continue;
                break;
            case 1:
                mv.move = "swap_cols";
                mv.i = static_cast<int>(rng.below(cols));
                mv.j = static_cast<int>(rng.below(cols));
                if (mv.i == mv.j) continue;
                break;
            case 2:
                mv.move = "scale_row";
                mv.i = static_cast<int>(rng.below(rows));
                mv.poly = poly_to_string(unit);
                break;
            case 3:
                mv.move = "scale_col";
                mv.j = static_cast<int>(rng.below(cols));
                mv.poly = poly_to_string(unit);
                break;
            case 4:
                if (rows < 2) continue;
                mv.move = "add_row";
                mv.i = static_cast<int>(rng.below(rows));
                mv.j = static_cast<int>(rng.below(rows));
                if (mv.i == mv.j) continue;
                mv.poly = poly_to_string(random_poly(rng, ring, 2, 1, 2, true));
                break;
            default:
                mv.move = "add_col";
                mv.i = static_cast<int>(rng.below(cols));
                mv.j = static_cast<int>(rng.below(cols));
                if (mv.i == mv.j) continue;
                mv.poly = poly_to_string(random_poly(rng, ring, 2, 1, 2, true));
                break;
            }
            apply_move(mq, mv);
        }
        // additionally push through the automatic reducer, which may delete
        // unit pivots and zero rows (shrinking the generator count)
        mq = auto_reduce(mq).reduced;

        for (int k = 0; k < static_cast<int>(c); ++k) {
            PolyIdeal<Fp> a = elementary_ideal(module_mod_p(mp, p), k);
            if (k < static_cast<int>(mq.cols())) {
                PolyIdeal<Fp> b = elementary_ideal(module_mod_p(mq, p), k);
                if (!ideal_equal(a, b))
                    fail("Fitting invariance", n,
                         "E_" + std::to_string(k) + " changed under a reduction script");
            } else if (ideal_is_proper(a)) {
                // the reduced presentation has at most k generators, so E_k of
                // the module is the whole ring; the original must agree
                fail("Fitting invariance", n,
                     "E_" + std::to_string(k) + " proper but the reduction deleted pivots");
            }
        }
    }
}

} // namespace props
