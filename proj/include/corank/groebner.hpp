#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "laurent.hpp"

namespace corank {

// Ideal of the Laurent ring, given by generators. Questions about Laurent
// ideals (properness, equality, membership) are answered in the polynomial
// subring after adjoining one Rabinowitsch variable u with 1 - u*(product of
// all variables): a polynomial lies in the Laurent ideal iff it lies in the
// extended polynomial ideal, since inverting the product inverts every
// variable.
template <typename C>
struct PolyIdeal {
    RingPtr ring;
    std::vector<LaurentPoly<C>> gens;
};

namespace gb {

inline Expo expo_lcm(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

template <typename C>
inline void require_polynomial(const LaurentPoly<C>& p) {
    for (const auto& [e, c] : p.terms())
        for (int x : e)
            require_internal(x >= 0, "Groebner arithmetic needs nonnegative exponents");
}

// full reduction: every term of the result is divisible by no leading term
template <typename C>
inline LaurentPoly<C> normal_form(const LaurentPoly<C>& f,
                                  const std::vector<LaurentPoly<C>>& basis) {
    static_assert(coef_traits<C>::is_field, "Groebner reduction needs field coefficients");
    LaurentPoly<C> r = f, out(f.ring());
    while (!r.is_zero()) {
        bool reduced = false;
        for (const auto& b : basis) {
            if (b.is_zero()) continue;
            if (!expo_geq(r.leading_expo(), b.leading_expo())) continue;
            Expo q = expo_sub(r.leading_expo(), b.leading_expo());
            C qc = r.leading_coef() / b.leading_coef();
            r = r - LaurentPoly<C>::monomial(f.ring(), q, qc) * b;
            reduced = true;
            break;
        }
        if (!reduced) {
            out.add_term(r.leading_expo(), r.leading_coef());
            r = r - LaurentPoly<C>::monomial(f.ring(), r.leading_expo(), r.leading_coef());
        }
    }
    return out;
}

// Buchberger with normal pair selection (lowest lcm degree first) and the
// coprime-leading-term skip; returns the reduced basis, leading
// coefficients 1, sorted by leading monomial.
template <typename C>
inline std::vector<LaurentPoly<C>> buchberger(std::vector<LaurentPoly<C>> basis) {
    static_assert(coef_traits<C>::is_field, "Groebner basis needs field coefficients");
    basis.erase(std::remove_if(basis.begin(), basis.end(),
                               [](const LaurentPoly<C>& p) { return p.is_zero(); }),
                basis.end());
    for (const auto& p : basis) require_polynomial(p);
    if (basis.empty()) return basis;
    for (auto& p : basis) p = p.scaled(p.one_like() / p.leading_coef());

    using Pair = std::pair<std::size_t, std::size_t>;
    std::set<Pair> pending;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pending.insert({i, j});

    while (!pending.empty()) {
        // normal selection: minimal total degree of the leading-term lcm
        auto best = pending.begin();
        int best_deg = 0;
        bool first = true;
        for (auto it = pending.begin(); it != pending.end(); ++it) {
            int d = total_degree(expo_lcm(basis[it->first].leading_expo(),
                                          basis[it->second].leading_expo()));
            if (first || d < best_deg) {
                best = it;
                best_deg = d;
                first = false;
            }
        }
        auto [i, j] = *best;
        pending.erase(best);

        const Expo &ei = basis[i].leading_expo(), &ej = basis[j].leading_expo();
        Expo l = expo_lcm(ei, ej);
        if (l == expo_add(ei, ej)) continue; // coprime leading terms
        C one = basis[i].one_like();
        LaurentPoly<C> s =
            LaurentPoly<C>::monomial(basis[i].ring(), expo_sub(l, ei), one) * basis[i] -
            LaurentPoly<C>::monomial(basis[j].ring(), expo_sub(l, ej), one) * basis[j];
        LaurentPoly<C> r = normal_form(s, basis);
        if (r.is_zero()) continue;
        r = r.scaled(one / r.leading_coef());
        basis.push_back(r);
        for (std::size_t k = 0; k + 1 < basis.size(); ++k)
            pending.insert({k, basis.size() - 1});
    }

    // inter-reduce to the unique reduced basis
    for (;;) {
        bool changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            std::vector<LaurentPoly<C>> others;
            for (std::size_t k = 0; k < basis.size(); ++k)
                if (k != i) others.push_back(basis[k]);
            LaurentPoly<C> r = normal_form(basis[i], others);
            if (r != basis[i]) {
                changed = true;
                if (r.is_zero()) {
                    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
                    break;
                }
                basis[i] = r.scaled(r.one_like() / r.leading_coef());
            }
        }
        if (!changed) break;
    }
    std::sort(basis.begin(), basis.end(),
              [](const LaurentPoly<C>& a, const LaurentPoly<C>& b) {
                  return compare_monomials(a.leading_expo(), b.leading_expo()) < 0;
              });
    return basis;
}

} // namespace gb

// Groebner basis of the saturation ideal (I, 1 - u * prod vars) in the
// polynomial ring with one extra variable. Generators are unit-normalized
// into the polynomial range first (units do not change a Laurent ideal).
template <typename C>
struct SaturationBasis {
    RingPtr ext_ring; // Laurent variables plus the auxiliary one, declared last
    std::vector<LaurentPoly<C>> basis;
};

template <typename C>
inline SaturationBasis<C> laurent_saturation_basis(const PolyIdeal<C>& ideal) {
    VarList vars = *ideal.ring;
    std::string aux = "_sat";
    while (std::find(vars.begin(), vars.end(), aux) != vars.end()) aux += "_";
    vars.push_back(aux);
    RingPtr ext = make_ring(vars);

    std::vector<LaurentPoly<C>> gens;
    C one{};
    bool have_one = false;
    for (const auto& g : ideal.gens) {
        if (g.is_zero()) continue;
        LaurentPoly<C> prim = unit_normalize(g).primitive;
        LaurentPoly<C> lifted(ext);
        for (const auto& [e, c] : prim.terms()) {
            Expo e2 = e;
            e2.push_back(0);
            lifted.add_term(e2, c);
        }
        gens.push_back(lifted);
        one = lifted.one_like();
        have_one = true;
    }
    if (!have_one) return {ext, {}}; // the zero ideal saturates to itself

    Expo all_ones(vars.size(), 1); // u * (product of the Laurent variables)
    LaurentPoly<C> rab = LaurentPoly<C>::monomial(ext, Expo(vars.size(), 0), one) -
                         LaurentPoly<C>::monomial(ext, all_ones, one);
    gens.push_back(rab);
    return {ext, gb::buchberger(std::move(gens))};
}

// Membership of a Laurent polynomial in the Laurent ideal.
template <typename C>
inline bool saturation_contains(const SaturationBasis<C>& sat, const LaurentPoly<C>& f) {
    if (f.is_zero()) return true;
    if (sat.basis.empty()) return false;
    LaurentPoly<C> prim = unit_normalize(f).primitive;
    LaurentPoly<C> lifted(sat.ext_ring);
    for (const auto& [e, c] : prim.terms()) {
        Expo e2 = e;
        e2.push_back(0);
        lifted.add_term(e2, c);
    }
    return gb::normal_form(lifted, sat.basis).is_zero();
}

// Is the ideal proper as an ideal of the Laurent ring? The zero ideal is
// proper; the ideal is improper exactly when the saturation basis contains a
// (nonzero) constant.
template <typename C>
inline bool ideal_is_proper(const PolyIdeal<C>& ideal) {
    SaturationBasis<C> sat = laurent_saturation_basis(ideal);
    for (const auto& g : sat.basis)
        if (g.is_constant() && !g.is_zero()) return false;
    return true;
}

// Equality of two Laurent ideals over the same variables via mutual membership.
template <typename C>
inline bool ideal_equal(const PolyIdeal<C>& a, const PolyIdeal<C>& b) {
    require_input(*a.ring == *b.ring, "ideal comparison needs a common ring");
    SaturationBasis<C> sa = laurent_saturation_basis(a);
    SaturationBasis<C> sb = laurent_saturation_basis(b);
    for (const auto& g : b.gens)
        if (!saturation_contains(sa, g)) return false;
    for (const auto& g : a.gens)
        if (!saturation_contains(sb, g)) return false;
    return true;
}

} // namespace corank
