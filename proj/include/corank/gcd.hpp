#pragma once

#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "laurent.hpp"

namespace corank {

// Multivariate gcd over Z[t1^{+-1}, ..., tk^{+-1}], canonicalized to the
// primitive representative: minimum exponent 0 in every variable, positive
// leading coefficient, positive integer content. Units are stripped first
// (a Laurent gcd is only defined up to +- monomials), then the classical
// content/primitive recursion with a subresultant PRS does the work.

namespace gcddetail {

using P = LaurentPoly<Int>;

inline int deg_in(const P& p, std::size_t v) {
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (first || e[v] > d) d = e[v];
        first = false;
    }
    return d;
}

// coefficient of var^k, a polynomial with exponent 0 in position v
inline P coeff_of(const P& p, std::size_t v, int k) {
    P r(p.ring());
    for (const auto& [e, c] : p.terms())
        if (e[v] == k) {
            Expo e2 = e;
            e2[v] = 0;
            r.add_term(e2, c);
        }
    return r;
}

inline P times_var_pow(const P& p, std::size_t v, int k) {
    Expo shift(p.nvars(), 0);
    shift[static_cast<int>(v)] = k;
    return p.shifted(shift);
}

inline P poly_gcd(const P& a, const P& b); // forward

// gcd of the var^k coefficients of p (its content with respect to v)
inline P content_in(const P& p, std::size_t v) {
    P c(p.ring());
    for (int k = 0; k <= deg_in(p, v); ++k) {
        P ck = coeff_of(p, v, k);
        if (!ck.is_zero()) c = c.is_zero() ? unit_normalize(ck).primitive : poly_gcd(c, ck);
        if (c.is_one()) break;
    }
    return c;
}

// pseudo-remainder of a by b in variable v: lc(b)^(da-db+1) * a = q*b + rem
inline P pseudo_rem(const P& a, const P& b, std::size_t v) {
    const int db = deg_in(b, v);
    P lead_b = coeff_of(b, v, db);
    P r = a;
    int e = deg_in(a, v) - db + 1;
    while (!r.is_zero() && deg_in(r, v) >= db) {
        int dr = deg_in(r, v);
        P lead_r = coeff_of(r, v, dr);
        r = lead_b * r - times_var_pow(lead_r * b, v, dr - db);
        --e;
    }
    for (; e > 0; --e) r = lead_b * r;
    return r;
}

inline P poly_gcd(const P& a, const P& b) {
    if (a.is_zero()) return b.is_zero() ? b : unit_normalize(b).primitive;
    if (b.is_zero()) return unit_normalize(a).primitive;
    P pa = unit_normalize(a).primitive;
    P pb = unit_normalize(b).primitive;

    // main variable: the last one occurring in either operand
    std::size_t nv = pa.nvars();
    std::size_t v = nv;
    for (std::size_t i = nv; i-- > 0;)
        if (deg_in(pa, i) > 0 || deg_in(pb, i) > 0) {
            v = i;
            break;
        }
    if (v == nv) { // both are integer constants
        Int g = int_gcd(pa.leading_coef(), pb.leading_coef());
        return P::constant(pa.ring(), g);
    }

    P A = pa, B = pb;
    if (deg_in(A, v) < deg_in(B, v)) std::swap(A, B);
    P cont_a = content_in(A, v), cont_b = content_in(B, v);
    P d = poly_gcd(cont_a, cont_b);
    A = exact_divide(A, cont_a);
    B = exact_divide(B, cont_b);

    // subresultant polynomial remainder sequence
    P g = P::constant(pa.ring(), 1);
    P h = g;
    for (;;) {
        int delta = deg_in(A, v) - deg_in(B, v);
        P r = pseudo_rem(A, B, v);
        if (r.is_zero()) break;
        if (deg_in(r, v) == 0) { // nontrivial gcd impossible beyond the content
            B = P::constant(pa.ring(), 1);
            break;
        }
        P divisor = g;
        for (int i = 0; i < delta; ++i) divisor = divisor * h;
        A = B;
        B = exact_divide(r, divisor);
        g = coeff_of(A, v, deg_in(A, v));
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            P num = g;
            for (int i = 1; i < delta; ++i) num = num * g;
            P den = h;
            for (int i = 2; i < delta; ++i) den = den * h;
            h = exact_divide(num, den);
        }
    }
    P pp = exact_divide(B, content_in(B, v));
    return unit_normalize(d * pp).primitive;
}

} // namespace gcddetail

inline LaurentPoly<Int> laurent_gcd(const LaurentPoly<Int>& a, const LaurentPoly<Int>& b) {
    return gcddetail::poly_gcd(a, b);
}

inline LaurentPoly<Int> laurent_gcd(const std::vector<LaurentPoly<Int>>& ps) {
    require_input(!ps.empty(), "gcd of an empty list");
    LaurentPoly<Int> g = ps.front().is_zero() ? ps.front() : unit_normalize(ps.front()).primitive;
    for (std::size_t i = 1; i < ps.size(); ++i) {
        if (g.is_one()) break;
        g = laurent_gcd(g, ps[i]);
    }
    return g;
}

inline bool coprime(const LaurentPoly<Int>& a, const LaurentPoly<Int>& b) {
    return laurent_gcd(a, b).is_unit();
}

} // namespace corank
