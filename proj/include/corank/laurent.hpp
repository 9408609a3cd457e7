#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace corank {

// Variables of a Laurent ring, in declaration order. Shared by every
// polynomial of the ring; compared by value so reloaded rings interoperate.
using VarList = std::vector<std::string>;
using RingPtr = std::shared_ptr<const VarList>;
using Expo = std::vector<int>; // exponent vector aligned with the VarList

inline RingPtr make_ring(VarList vars) {
    return std::make_shared<const VarList>(std::move(vars));
}

inline int total_degree(const Expo& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

// Graded reverse lexicographic order: higher total degree wins; on ties the
// exponent difference decides at its leftmost nonzero entry, negative meaning
// greater (so later-declared variables are the more significant ones).
// Example over (a, c): c > a, and a^-1*c > 1.
inline int compare_monomials(const Expo& a, const Expo& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int d = a[i] - b[i];
        if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
}

struct MonoGreater {
    bool operator()(const Expo& a, const Expo& b) const {
        return compare_monomials(a, b) > 0;
    }
};

inline Expo expo_add(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline Expo expo_sub(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline bool expo_geq(const Expo& a, const Expo& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

// Multivariate Laurent polynomial with coefficients in C (Int, Rat or Fp).
// Terms live in a map ordered with the leading monomial first; zero
// coefficients are never stored.
template <typename C>
class LaurentPoly {
public:
    using TermMap = std::map<Expo, C, MonoGreater>;

    LaurentPoly() = default;
    explicit LaurentPoly(RingPtr ring) : ring_(std::move(ring)) {}

    static LaurentPoly zero(RingPtr ring) { return LaurentPoly(std::move(ring)); }

    static LaurentPoly constant(RingPtr ring, C c) {
        LaurentPoly p(std::move(ring));
        if (!coef_traits<C>::is_zero(c))
            p.t_.emplace(Expo(p.nvars(), 0), std::move(c));
        return p;
    }

    static LaurentPoly monomial(RingPtr ring, Expo e, C c) {
        LaurentPoly p(std::move(ring));
        require_internal(e.size() == p.nvars(), "exponent vector has wrong length");
        if (!coef_traits<C>::is_zero(c)) p.t_.emplace(std::move(e), std::move(c));
        return p;
    }

    static LaurentPoly variable(RingPtr ring, const std::string& name, int exp, C one) {
        auto it = std::find(ring->begin(), ring->end(), name);
        require_input(it != ring->end(), "unknown ring variable \"" + name + "\"");
        Expo e(ring->size(), 0);
        e[static_cast<std::size_t>(it - ring->begin())] = exp;
        return monomial(std::move(ring), std::move(e), std::move(one));
    }

    const RingPtr& ring() const { return ring_; }
    std::size_t nvars() const { return ring_ ? ring_->size() : 0; }
    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t num_terms() const { return t_.size(); }

    bool is_constant() const {
        return t_.empty() || (t_.size() == 1 && total_is_zero(t_.begin()->first));
    }
    // Units of the Laurent ring: u * (single monomial) with u a unit of C.
    bool is_unit() const {
        return t_.size() == 1 && coef_traits<C>::is_unit(t_.begin()->second);
    }
    bool is_one() const {
        return t_.size() == 1 && total_is_zero(t_.begin()->first) &&
               t_.begin()->second == one_like();
    }

    const Expo& leading_expo() const {
        require_internal(!t_.empty(), "leading term of the zero polynomial");
        return t_.begin()->first;
    }
    const C& leading_coef() const {
        require_internal(!t_.empty(), "leading term of the zero polynomial");
        return t_.begin()->second;
    }

    // per-variable minimum exponent over all terms (0 for the zero poly)
    Expo min_exponents() const {
        Expo m(nvars(), 0);
        bool first = true;
        for (const auto& [e, c] : t_) {
            if (first) { m = e; first = false; continue; }
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
        }
        return m;
    }

    void add_term(const Expo& e, const C& c) {
        if (coef_traits<C>::is_zero(c)) return;
        auto [it, inserted] = t_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (coef_traits<C>::is_zero(it->second)) t_.erase(it);
        }
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        a.match(b);
        LaurentPoly r = a;
        for (const auto& [e, c] : b.t_) r.add_term(e, c);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        return a + (-b);
    }
    LaurentPoly operator-() const {
        LaurentPoly r(*this);
        for (auto& [e, c] : r.t_) c = -c;
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.match(b);
        LaurentPoly r(a.ring_ ? a.ring_ : b.ring_);
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) r.add_term(expo_add(ea, eb), ca * cb);
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const C& c) const {
        LaurentPoly r(ring_);
        for (const auto& [e, k] : t_) r.add_term(e, k * c);
        return r;
    }
    LaurentPoly shifted(const Expo& by) const { // multiply by the monomial t^by
        LaurentPoly r(ring_);
        for (const auto& [e, c] : t_) r.t_.emplace(expo_add(e, by), c);
        return r;
    }

    // integer power; negative powers require a unit
    LaurentPoly pow(long long k) const {
        require_internal(ring_ != nullptr, "pow on a ring-less polynomial");
        if (k == 0) return constant(ring_, one_like());
        LaurentPoly base = *this;
        if (k < 0) {
            require_premise(is_unit(), "negative power of a non-unit");
            const auto& [e, c] = *t_.begin();
            Expo ie(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) ie[i] = -e[i];
            C inv = coef_traits<C>::is_field ? (one_like() / c) : c; // +-1 self-inverse over Z
            base = monomial(ring_, ie, inv);
            k = -k;
        }
        LaurentPoly acc = constant(ring_, one_like());
        while (k > 0) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.t_.size() != b.t_.size()) return false;
        auto ita = a.t_.begin();
        auto itb = b.t_.begin();
        for (; ita != a.t_.end(); ++ita, ++itb)
            if (ita->first != itb->first || !(ita->second == itb->second)) return false;
        return true;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // a unit 1 of the coefficient ring, with the right modulus for Fp
    C one_like() const {
        if constexpr (std::is_same_v<C, Fp>) {
            require_internal(!t_.empty(), "cannot infer modulus from an empty F_p polynomial");
            return Fp(1, t_.begin()->second.modulus());
        } else {
            return C(1);
        }
    }

private:
    static bool total_is_zero(const Expo& e) {
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }
    void match(const LaurentPoly& o) const {
        require_internal(!ring_ || !o.ring_ || ring_ == o.ring_ || *ring_ == *o.ring_,
                         "polynomials from different rings");
    }

    RingPtr ring_;
    TermMap t_;
};

// unit * primitive factorization: the unit is sign * (monomial of minimum
// exponents) chosen so the primitive part has positive leading coefficient
// under the monomial order; integer content stays in the primitive part.
template <typename C>
struct UnitNormal {
    LaurentPoly<C> unit;      // +- a single monomial
    LaurentPoly<C> primitive; // min exponent 0 in every variable
};

namespace detail {
template <typename C> inline bool coef_negative(const C& c) { return c < 0; }
inline bool coef_negative(const Fp&) { return false; } // F_p carries no sign
} // namespace detail

template <typename C>
inline UnitNormal<C> unit_normalize(const LaurentPoly<C>& p) {
    require_premise(!p.is_zero(), "unit_normalize of the zero polynomial");
    Expo m = p.min_exponents();
    Expo neg(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) neg[i] = -m[i];
    LaurentPoly<C> prim = p.shifted(neg);
    C s = prim.one_like();
    if (detail::coef_negative(prim.leading_coef())) {
        prim = -prim;
        s = -s;
    }
    return {LaurentPoly<C>::monomial(p.ring(), m, s), prim};
}

// equality up to multiplication by a unit of the Laurent ring
template <typename C>
inline bool equal_up_to_unit(const LaurentPoly<C>& a, const LaurentPoly<C>& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    UnitNormal<C> na = unit_normalize(a), nb = unit_normalize(b);
    if (na.primitive == nb.primitive) return true;
    if constexpr (std::is_same_v<C, Fp>) {
        // over a field every scalar is a unit: compare after making LC = 1
        LaurentPoly<C> pa = na.primitive.scaled(a.one_like() / na.primitive.leading_coef());
        LaurentPoly<C> pb = nb.primitive.scaled(b.one_like() / nb.primitive.leading_coef());
        return pa == pb;
    } else if constexpr (std::is_same_v<C, Rat>) {
        LaurentPoly<C> pa = na.primitive.scaled(Rat(1) / na.primitive.leading_coef());
        LaurentPoly<C> pb = nb.primitive.scaled(Rat(1) / nb.primitive.leading_coef());
        return pa == pb;
    } else {
        return false; // over Z the only remaining unit is -1, already fixed
    }
}

// Exact division in the Laurent ring; throws premise_error when the division
// is not exact. Monomial units are split off first, leaving ordinary
// polynomials with per-variable minimum exponent 0; their quotient, when it
// exists, again has minimum exponent 0 in every variable (lowest terms
// multiply, so per-variable minimum degrees add). Each computed term is then
// a genuine term of the quotient, its exponent vector is nonnegative, and
// the leading term strictly decreases inside a well-ordered monomial set —
// so the loop terminates, and a componentwise exponent failure (or an
// integer-coefficient failure) certifies non-divisibility.
template <typename C>
inline LaurentPoly<C> exact_divide(const LaurentPoly<C>& p, const LaurentPoly<C>& d) {
    require_premise(!d.is_zero(), "division by zero polynomial");
    if (p.is_zero()) return p;
    UnitNormal<C> np = unit_normalize(p), nd = unit_normalize(d);
    LaurentPoly<C> r = np.primitive;
    LaurentPoly<C> q(p.ring());
    const Expo& de = nd.primitive.leading_expo();
    while (!r.is_zero()) {
        const Expo re = r.leading_expo();
        require_premise(expo_geq(re, de), "not divisible: leading exponent obstruction");
        Expo qe = expo_sub(re, de);
        C qc = r.leading_coef();
        if constexpr (std::is_same_v<C, Int>) {
            require_premise(qc % nd.primitive.leading_coef() == 0,
                            "not divisible: leading coefficient obstruction");
            qc = qc / nd.primitive.leading_coef();
        } else {
            qc = qc / nd.primitive.leading_coef();
        }
        LaurentPoly<C> t = LaurentPoly<C>::monomial(p.ring(), qe, qc);
        LaurentPoly<C> nr = r - t * nd.primitive;
        require_internal(nr.is_zero() || compare_monomials(nr.leading_expo(), re) < 0,
                         "leading-term division made no progress");
        q += t;
        r = nr;
    }
    return np.unit * nd.unit.pow(-1) * q;
}

template <typename C>
inline bool divides(const LaurentPoly<C>& d, const LaurentPoly<C>& p) {
    if (p.is_zero()) return true;
    if (d.is_zero()) return false;
    try {
        (void)exact_divide(p, d);
        return true;
    } catch (const premise_error&) {
        return false;
    }
}

// ---- coefficient base change ----------------------------------------------

inline LaurentPoly<Rat> to_rational(const LaurentPoly<Int>& p) {
    LaurentPoly<Rat> r(p.ring());
    for (const auto& [e, c] : p.terms()) r.add_term(e, Rat(c));
    return r;
}

inline LaurentPoly<Fp> reduce_mod(const LaurentPoly<Int>& p, std::int64_t prime) {
    require_input(prime >= 2, "modulus must be a prime >= 2");
    LaurentPoly<Fp> r(p.ring());
    for (const auto& [e, c] : p.terms()) r.add_term(e, Fp::from_int(c, prime));
    return r;
}

// Substitute variables by variables of a (possibly smaller) target ring;
// exponents merge additively, e.g. b -> t turns b^i t^j into t^{i+j}.
template <typename C>
inline LaurentPoly<C> substitute_variables(const LaurentPoly<C>& p,
                                           const std::map<std::string, std::string>& sub,
                                           const RingPtr& target) {
    std::vector<std::size_t> where(p.nvars());
    for (std::size_t i = 0; i < p.nvars(); ++i) {
        std::string name = (*p.ring())[i];
        auto it = sub.find(name);
        if (it != sub.end()) name = it->second;
        auto pos = std::find(target->begin(), target->end(), name);
        require_input(pos != target->end(),
                      "substitution target ring lacks variable \"" + name + "\"");
        where[i] = static_cast<std::size_t>(pos - target->begin());
    }
    LaurentPoly<C> r(target);
    for (const auto& [e, c] : p.terms()) {
        Expo ne(target->size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[where[i]] += e[i];
        r.add_term(ne, c);
    }
    return r;
}

// evaluation at rational points (used only for cross-checks)
template <typename C>
inline Rat evaluate(const LaurentPoly<C>& p, const std::vector<Rat>& point) {
    static_assert(std::is_same_v<C, Int> || std::is_same_v<C, Rat>,
                  "evaluation is defined over Z and Q");
    require_internal(point.size() == p.nvars(), "evaluation point has wrong arity");
    auto rat_pow = [](const Rat& x, int k) {
        require_internal(k >= 0 || x != 0, "zero raised to a negative power");
        Rat acc(1), b = k < 0 ? Rat(1) / x : x;
        for (int i = std::abs(k); i > 0; --i) acc *= b;
        return acc;
    };
    Rat sum(0);
    for (const auto& [e, c] : p.terms()) {
        Rat t(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t *= rat_pow(point[i], e[i]);
        sum += t;
    }
    return sum;
}

} // namespace corank
