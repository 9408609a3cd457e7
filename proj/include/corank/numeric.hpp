#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace corank {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// g = gcd(a,b) >= 0 together with x, y such that a*x + b*y = g.
struct ExtGcd {
    Int g, x, y;
};

inline ExtGcd ext_gcd(const Int& a, const Int& b) {
    Int old_r = a, r = b;
    Int old_x = 1, x = 0;
    Int old_y = 0, y = 1;
    while (r != 0) {
        Int q = old_r / r; // truncated division is fine: invariants hold over Z
        Int t;
        t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * x; old_x = x; x = t;
        t = old_y - q * y; old_y = y; y = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    return {old_r, old_x, old_y};
}

// Element of the prime field F_p with runtime modulus. The modulus travels
// with the value; mixing moduli is an internal error.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(std::int64_t value, std::int64_t p) : p_(p) {
        require_internal(p >= 2, "Fp modulus must be >= 2");
        v_ = value % p;
        if (v_ < 0) v_ += p;
    }
    static Fp from_int(const Int& value, std::int64_t p) {
        Int r = value % p;
        if (r < 0) r += p;
        return Fp(static_cast<std::int64_t>(r), p);
    }

    std::int64_t value() const { return v_; }
    std::int64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        a.match(b);
        return Fp(a.v_ + b.v_, a.p_);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        a.match(b);
        return Fp(a.v_ - b.v_, a.p_);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        a.match(b);
        return Fp(a.v_ * b.v_, a.p_);
    }
    Fp operator-() const { return p_ ? Fp(-v_, p_) : Fp(); }
    Fp inverse() const {
        require_internal(v_ != 0, "division by zero in F_p");
        ExtGcd e = ext_gcd(Int(v_), Int(p_));
        require_internal(e.g == 1, "non-invertible element in F_p");
        return Fp::from_int(e.x, p_);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

    Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
    Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
    Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }

    friend bool operator==(const Fp& a, const Fp& b) {
        if (a.v_ == 0 && b.v_ == 0) return true;
        a.match(b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

private:
    void match(const Fp& o) const {
        // A default-constructed zero acts as the zero of any modulus.
        require_internal(p_ == o.p_ || v_ == 0 || o.v_ == 0,
                         "mixed moduli in F_p arithmetic");
    }
    std::int64_t v_;
    std::int64_t p_;
};

// --- coefficient-ring traits used by the Laurent polynomial templates ---

template <typename C> struct coef_traits;

template <> struct coef_traits<Int> {
    static constexpr bool is_field = false;
    static Int zero(const Int&) { return Int(0); }
    static bool is_zero(const Int& c) { return c == 0; }
    static bool is_unit(const Int& c) { return c == 1 || c == -1; }
    static std::string to_string(const Int& c) { return c.str(); }
};

template <> struct coef_traits<Rat> {
    static constexpr bool is_field = true;
    static Rat zero(const Rat&) { return Rat(0); }
    static bool is_zero(const Rat& c) { return c == 0; }
    static bool is_unit(const Rat& c) { return c != 0; }
    static std::string to_string(const Rat& c) {
        if (boost::multiprecision::denominator(c) == 1)
            return boost::multiprecision::numerator(c).str();
        return boost::multiprecision::numerator(c).str() + "/" +
               boost::multiprecision::denominator(c).str();
    }
};

template <> struct coef_traits<Fp> {
    static constexpr bool is_field = true;
    // Zero must carry the modulus of its ring; derive it from a sibling value.
    static Fp zero(const Fp& like) {
        return like.modulus() ? Fp(0, like.modulus()) : Fp();
    }
    static bool is_zero(const Fp& c) { return c.is_zero(); }
    static bool is_unit(const Fp& c) { return !c.is_zero(); }
    static std::string to_string(const Fp& c) { return std::to_string(c.value()); }
};

} // namespace corank
