#pragma once

#include <gmpxx.h>
#include <string>
#include "derposet/fp.hpp"

namespace derposet {

// Exemplar-based field access: generic code recovers 0 and 1 of the
// coefficient field from any value at hand (Fp values carry their modulus).
inline mpq_class field_one(const mpq_class&) { return mpq_class(1); }
inline mpq_class field_zero(const mpq_class&) { return mpq_class(0); }
inline bool field_is_zero(const mpq_class& x) { return x == 0; }

inline Fp field_one(const Fp& x) { return Fp(1, x.prime()); }
inline Fp field_zero(const Fp& x) { return Fp(0, x.prime()); }
inline bool field_is_zero(const Fp& x) { return x.is_zero(); }

inline std::string scalar_str(const mpq_class& x) {
    mpq_class c(x);
    c.canonicalize();
    return c.get_str();
}
inline std::string scalar_str(const mpz_class& x) { return x.get_str(); }
inline std::string scalar_str(const Fp& x) { return std::to_string(x.value()); }

/// Runtime tag for the coefficient field: p == 0 means Q, otherwise F_p.
struct FieldTag {
    long long p = 0;
    bool is_rational() const { return p == 0; }
    std::string name() const { return p == 0 ? "Q" : "F_" + std::to_string(p); }
    friend bool operator==(const FieldTag& a, const FieldTag& b) { return a.p == b.p; }
    friend bool operator<(const FieldTag& a, const FieldTag& b) { return a.p < b.p; }
};

inline FieldTag rational_field() { return FieldTag{0}; }
inline FieldTag prime_field(long long p) {
    require_prime(p);
    return FieldTag{p};
}

} // namespace derposet
