#pragma once

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "ring_traits.hpp"
#include "unipoly.hpp"

namespace henselize {

using QPoly = UniPoly<Rational>;

inline Rational rational_inverse(const Rational& x) {
    if (x == 0) throw precondition_error("division by zero");
    return Rational(1) / x;
}

inline QPoly monic_part(const QPoly& p) {
    if (p.is_zero()) return p;
    return rational_inverse(p.leading()) * p;
}

namespace detail {

/// Integer multiple of p with coprime coefficients.
inline std::vector<Integer> primitive_integer(const QPoly& p) {
    Integer l = 1;
    for (const Rational& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> out;
    Integer g = 0;
    for (const Rational& c : p.coeffs()) {
        out.push_back(c.get_num() * (l / c.get_den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
    }
    if (g != 0 && g != 1)
        for (Integer& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return out;
}

/// lc(b)^k a mod b over Z, made primitive; a must have degree >= deg b.
inline std::vector<Integer> primitive_pseudo_remainder(std::vector<Integer> a, const std::vector<Integer>& b) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const Integer la = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (Integer& c : a) c *= b.back();
        for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    Integer g = 0;
    for (const Integer& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (Integer& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return a;
}

} // namespace detail

/// Monic gcd over Q via the primitive remainder sequence over Z.
inline QPoly gcd(const QPoly& p, const QPoly& q) {
    if (p.is_zero()) return monic_part(q);
    if (q.is_zero()) return monic_part(p);
    if (p.degree() == 0 || q.degree() == 0) return QPoly::constant(Rational(1));
    std::vector<Integer> a = detail::primitive_integer(p), b = detail::primitive_integer(q);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        std::vector<Integer> r = detail::primitive_pseudo_remainder(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    std::vector<Rational> c;
    for (const Integer& x : a) c.emplace_back(x);
    return monic_part(QPoly(std::move(c)));
}

/// Element of Q(t) kept in lowest terms with a monic denominator.
class RatFunc {
public:
    RatFunc() : num_(), den_(QPoly::constant(Rational(1))) {}
    RatFunc(int c) : RatFunc(Rational(c)) {}
    explicit RatFunc(const Rational& c) : num_(QPoly::constant(c)), den_(QPoly::constant(Rational(1))) {}
    explicit RatFunc(QPoly num) : num_(std::move(num)), den_(QPoly::constant(Rational(1))) {}
    RatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFunc t() { return RatFunc(QPoly::x()); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        if (a.is_polynomial() || b.is_polynomial())
            return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
        const QPoly g = gcd(a.den_, b.den_);
        const QPoly ca = divrem_field(b.den_, g, rational_inverse).quotient;
        const QPoly cb = divrem_field(a.den_, g, rational_inverse).quotient;
        return RatFunc(a.num_ * ca + b.num_ * cb, a.den_ * ca);
    }
    friend RatFunc operator-(const RatFunc& a) {
        RatFunc r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_);
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    RatFunc inverse() const {
        if (is_zero()) throw precondition_error("inverse of zero in Q(t)");
        return RatFunc(den_, num_);
    }

    /// Value at t = 0; requires a denominator not divisible by t.
    Rational at_zero() const {
        Rational d = den_.coeff(0);
        if (d == 0) throw precondition_error("rational function has a pole at 0");
        return num_.coeff(0) / d;
    }

    std::string to_string(const std::string& var = "t") const {
        std::string n = henselize::to_string(num_, var);
        if (is_polynomial()) return n;
        return "(" + n + ")/(" + henselize::to_string(den_, var) + ")";
    }

private:
    void normalize() {
        if (den_.is_zero()) throw precondition_error("zero denominator in Q(t)");
        if (num_.is_zero()) {
            den_ = QPoly::constant(Rational(1));
            return;
        }
        QPoly g = den_.degree() > 0 && num_.degree() > 0 ? gcd(num_, den_) : QPoly::constant(Rational(1));
        if (g.degree() > 0) {
            num_ = divrem_field(num_, g, rational_inverse).quotient;
            den_ = divrem_field(den_, g, rational_inverse).quotient;
        }
        Rational lc = den_.leading();
        if (lc != 1) {
            Rational inv = rational_inverse(lc);
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    QPoly num_;
    QPoly den_;
};

template <>
struct ring_traits<RatFunc> {
    static bool is_zero(const RatFunc& x) { return x.is_zero(); }
    static std::string to_string(const RatFunc& x) { return x.to_string(); }
};

} // namespace henselize
