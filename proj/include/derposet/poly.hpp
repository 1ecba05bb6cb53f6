#pragma once

#include <string>
#include <utility>
#include <vector>
#include "derposet/field.hpp"

namespace derposet {

/// Univariate polynomial over a field F (F = mpq_class or Fp).
/// Coefficients are stored ascending; the zero polynomial has no
/// coefficients, so every Poly keeps an exemplar of 1 in F.
template <typename F>
class Poly {
public:
    explicit Poly(F one) : one_(std::move(one)) {}
    Poly(std::vector<F> coeffs, F one) : c_(std::move(coeffs)), one_(std::move(one)) {
        normalize();
    }

    static Poly constant(F v) {
        F one = field_one(v);
        return Poly({std::move(v)}, one);
    }
    static Poly x(const F& one) { return Poly({field_zero(one), one}, one); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const F& one() const { return one_; }
    F coeff(int i) const {
        if (i < 0 || i > degree()) return field_zero(one_);
        return c_[static_cast<size_t>(i)];
    }
    F leading() const { return c_.back(); }
    const std::vector<F>& coeffs() const { return c_; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<F> r;
        size_t n = std::max(a.c_.size(), b.c_.size());
        r.reserve(n);
        for (size_t i = 0; i < n; ++i) r.push_back(a.coeff((int)i) + b.coeff((int)i));
        return Poly(std::move(r), a.one_);
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<F> r;
        size_t n = std::max(a.c_.size(), b.c_.size());
        r.reserve(n);
        for (size_t i = 0; i < n; ++i) r.push_back(a.coeff((int)i) - b.coeff((int)i));
        return Poly(std::move(r), a.one_);
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly(a.one_);
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, field_zero(a.one_));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r), a.one_);
    }
    Poly operator*(const F& s) const {
        std::vector<F> r = c_;
        for (auto& v : r) v *= s;
        return Poly(std::move(r), one_);
    }
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.degree() != b.degree()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw Error("polynomial division by zero");
        Poly q(a.one_), r = a;
        F lead_inv = field_one(a.one_) / b.leading();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int shift = r.degree() - b.degree();
            F factor = r.leading() * lead_inv;
            std::vector<F> qc(static_cast<size_t>(shift) + 1, field_zero(a.one_));
            qc.back() = factor;
            Poly term(std::move(qc), a.one_);
            q += term;
            r -= term * b;
        }
        return {q, r};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * (field_one(one_) / leading());
    }

    /// Rendered with descending powers, e.g. "x^2 - x + 1".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            F c = coeff(i);
            if (field_is_zero(c)) continue;
            std::string cs = scalar_str(c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs = cs.substr(1);
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            if (i == 0) {
                out += cs;
            } else {
                if (cs != "1") out += cs + "*";
                out += (i == 1) ? "x" : "x^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void normalize() {
        while (!c_.empty() && field_is_zero(c_.back())) c_.pop_back();
    }

    std::vector<F> c_;
    F one_;
};

template <typename F>
inline Poly<F> field_one(const Poly<F>& q) { return Poly<F>::constant(field_one(q.one())); }
template <typename F>
inline Poly<F> field_zero(const Poly<F>& q) { return Poly<F>(q.one()); }
template <typename F>
inline bool field_is_zero(const Poly<F>& q) { return q.is_zero(); }

} // namespace derposet
