#pragma once

#include <cctype>
#include <string>

#include "errors.hpp"
#include "laurent.hpp"

namespace corank {

// Text form of a polynomial: sum of terms like `-2*a^2*c`, `a^-1*c`, `7`.
// Factors are joined with `*`; exponent 1 is implicit; terms print in
// descending monomial order. The empty sum prints as `0`.

template <typename C>
inline std::string poly_to_string(const LaurentPoly<C>& p) {
    if (p.is_zero()) return "0";
    const VarList& vars = *p.ring();
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        std::string cs = coef_traits<C>::to_string(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[i];
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += cs;
        } else {
            if (cs != "1") out += cs + "*";
            out += mono;
        }
    }
    return out;
}

// Parse an integer-coefficient polynomial over the given ring.
inline LaurentPoly<Int> parse_poly(const RingPtr& ring, const std::string& text) {
    LaurentPoly<Int> p(ring);
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](const std::string& msg) -> void {
        throw input_error("polynomial \"" + text + "\": " + msg + " at position " +
                          std::to_string(i + 1));
    };
    auto parse_int = [&]() -> Int {
        std::size_t s = i;
        if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == s || (i == s + 1 && !std::isdigit(static_cast<unsigned char>(text[s]))))
            fail("expected an integer");
        return Int(text.substr(s, i - s));
    };

    skip_ws();
    if (i == n) fail("empty polynomial");
    bool any = false;
    while (i < n) {
        // term sign
        int sign = 1;
        skip_ws();
        if (any) {
            if (text[i] == '+') sign = 1;
            else if (text[i] == '-') sign = -1;
            else fail("expected '+' or '-' between terms");
            ++i;
            skip_ws();
        } else if (text[i] == '-') {
            sign = -1;
            ++i;
            skip_ws();
        } else if (text[i] == '+') {
            ++i;
            skip_ws();
        }
        // coefficient and/or variable factors
        Int coef = 1;
        Expo e(ring->size(), 0);
        bool saw_factor = false;
        for (;;) {
            skip_ws();
            if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
                coef *= parse_int();
                saw_factor = true;
            } else if (i < n && (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                std::size_t s = i;
                while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                    ++i;
                std::string name = text.substr(s, i - s);
                auto it = std::find(ring->begin(), ring->end(), name);
                if (it == ring->end()) {
                    i = s; // report the position of the name itself
                    fail("unknown variable \"" + name + "\"");
                }
                long long k = 1;
                if (i < n && text[i] == '^') {
                    ++i;
                    Int kk = parse_int();
                    k = static_cast<long long>(kk);
                }
                e[static_cast<std::size_t>(it - ring->begin())] += static_cast<int>(k);
                saw_factor = true;
            } else {
                fail("expected a coefficient or variable");
            }
            skip_ws();
            if (i < n && text[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!saw_factor) fail("empty term");
        p.add_term(e, sign < 0 ? Int(-coef) : coef);
        any = true;
        skip_ws();
    }
    return p;
}

inline LaurentPoly<Rat> parse_poly_rat(const RingPtr& ring, const std::string& text) {
    return to_rational(parse_poly(ring, text));
}
inline LaurentPoly<Fp> parse_poly_mod(const RingPtr& ring, const std::string& text,
                                      std::int64_t prime) {
    return reduce_mod(parse_poly(ring, text), prime);
}

} // namespace corank
