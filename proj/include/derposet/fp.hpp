#pragma once

#include <cstdint>
#include "derposet/errors.hpp"

namespace derposet {

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline void require_prime(long long p) {
    if (!is_prime(p)) throw NotPrime("not a prime: " + std::to_string(p));
}

/// Element of the prime field F_p. Each value carries its modulus so that
/// generic code can recover the field from any element, including zero.
class Fp {
public:
    Fp() : v_(0), p_(2) {}
    Fp(long long v, long long p) : p_(p) {
        v_ = v % p;
        if (v_ < 0) v_ += p;
    }

    long long value() const { return v_; }
    long long prime() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(const Fp& a, const Fp& b) { a.match(b); return Fp(a.v_ + b.v_, a.p_); }
    friend Fp operator-(const Fp& a, const Fp& b) { a.match(b); return Fp(a.v_ - b.v_, a.p_); }
    friend Fp operator*(const Fp& a, const Fp& b) { a.match(b); return Fp(a.v_ * b.v_, a.p_); }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
    Fp operator-() const { return Fp(-v_, p_); }
    Fp& operator+=(const Fp& b) { return *this = *this + b; }
    Fp& operator-=(const Fp& b) { return *this = *this - b; }
    Fp& operator*=(const Fp& b) { return *this = *this * b; }
    Fp& operator/=(const Fp& b) { return *this = *this / b; }
    friend bool operator==(const Fp& a, const Fp& b) { a.match(b); return a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    Fp inverse() const {
        if (v_ == 0) throw Error("division by zero in F_p");
        // extended Euclid
        long long a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            long long q = a / b;
            long long t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        return Fp(x0, p_);
    }

private:
    void match(const Fp& b) const {
        if (p_ != b.p_) throw FieldMismatch("mixed moduli in F_p arithmetic");
    }

    long long v_;
    long long p_;
};

} // namespace derposet
