#pragma once

// Coefficient rings built on Q[u, w]: the polynomial ring itself, its
// quotients by the monomial ideals (uw) and (u^2, uw), localizations at the
// maximal ideal (u, w), and the fraction field Q(u, w).

#include <algorithm>
#include <map>
#include <type_traits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "ring_traits.hpp"
#include "unipoly.hpp"

namespace henselize {

/// Exponent pair (deg_u, deg_w).
using Exponent = std::pair<unsigned, unsigned>;

class MultiPoly {
public:
    using term_map = std::map<Exponent, Rational>;

    MultiPoly() = default;
    MultiPoly(int c) : MultiPoly(Rational(c)) {}
    explicit MultiPoly(const Rational& c) {
        if (c != 0) terms_[{0, 0}] = c;
    }
    explicit MultiPoly(term_map terms) : terms_(std::move(terms)) { prune(); }

    static MultiPoly u() { return monomial(1, 1, 0); }
    static MultiPoly w() { return monomial(1, 0, 1); }
    static MultiPoly monomial(const Rational& c, unsigned eu, unsigned ew) {
        term_map t;
        t[{eu, ew}] = c;
        return MultiPoly(std::move(t));
    }

    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(unsigned eu, unsigned ew) const {
        auto it = terms_.find({eu, ew});
        return it == terms_.end() ? Rational(0) : it->second;
    }
    /// Value at the origin u = w = 0.
    Rational constant_term() const { return coeff(0, 0); }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) {
        for (const auto& [e, c] : b.terms_) a.terms_[e] += c;
        a.prune();
        return a;
    }
    friend MultiPoly operator-(const MultiPoly& a) {
        MultiPoly r = a;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        term_map t;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) t[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
        return MultiPoly(std::move(t));
    }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    /// Drops every monomial for which `kill(eu, ew)` holds.
    template <class Pred>
    MultiPoly reduced(Pred&& kill) const {
        term_map t;
        for (const auto& [e, c] : terms_)
            if (!kill(e.first, e.second)) t.emplace(e, c);
        return MultiPoly(std::move(t));
    }

    /// Substitutes u = 0 and returns the result as a polynomial in w.
    UniPoly<Rational> at_u_zero() const {
        std::vector<Rational> c;
        for (const auto& [e, v] : terms_) {
            if (e.first != 0) continue;
            if (c.size() <= e.second) c.resize(e.second + 1);
            c[e.second] = v;
        }
        return UniPoly<Rational>(std::move(c));
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Exponent, Rational>> order(terms_.begin(), terms_.end());
        std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
            unsigned da = a.first.first + a.first.second, db = b.first.first + b.first.second;
            if (da != db) return da > db;
            return a.first.first > b.first.first;
        });
        std::string out;
        for (const auto& [e, c] : order) {
            bool neg = c < 0;
            Rational mag = abs(c);
            std::string mono;
            auto add_var = [&](const char* v, unsigned k) {
                if (k == 0) return;
                if (!mono.empty()) mono += "*";
                mono += v;
                if (k > 1) mono += "^" + std::to_string(k);
            };
            add_var("u", e.first);
            add_var("w", e.second);
            std::string term;
            if (mono.empty()) term = mag.get_str();
            else if (mag == 1) term = mono;
            else term = mag.get_str() + "*" + mono;
            if (out.empty()) out = neg ? "-" + term : term;
            else out += neg ? " - " + term : " + " + term;
        }
        return out;
    }

private:
    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->second == 0 ? terms_.erase(it) : std::next(it);
    }

    term_map terms_;
};

template <>
struct ring_traits<MultiPoly> {
    static bool is_zero(const MultiPoly& x) { return x.is_zero(); }
    static std::string to_string(const MultiPoly& x) { return x.to_string(); }
};

/// a / b when b divides a in Q[u, w], by lex-leading-term division.
inline std::optional<MultiPoly> exact_quotient(MultiPoly a, const MultiPoly& b) {
    if (b.is_zero()) throw precondition_error("division by zero in Q[u, w]");
    const auto& [lb, cb] = *b.terms().rbegin();
    MultiPoly::term_map q;
    while (!a.is_zero()) {
        const auto& [la, ca] = *a.terms().rbegin();
        if (la.first < lb.first || la.second < lb.second) return std::nullopt;
        const MultiPoly t = MultiPoly::monomial(ca / cb, la.first - lb.first, la.second - lb.second);
        q[{la.first - lb.first, la.second - lb.second}] = ca / cb;
        a = a - t * b;
    }
    return MultiPoly(std::move(q));
}

// ---------------------------------------------------------------------------
// Quotient specifications. Each relation set is monomial, so dropping the
// killed monomials yields a unique normal form.

struct NoRelation {
    static constexpr const char* name = "none";
    static constexpr bool kills(unsigned, unsigned) { return false; }
};
struct UWZero {
    static constexpr const char* name = "uw=0";
    static constexpr bool kills(unsigned eu, unsigned ew) { return eu >= 1 && ew >= 1; }
};
struct USquareUWZero {
    static constexpr const char* name = "u^2=0,uw=0";
    static constexpr bool kills(unsigned eu, unsigned ew) { return eu >= 2 || (eu >= 1 && ew >= 1); }
};

template <class Spec>
MultiPoly normal_form(const MultiPoly& p) {
    return p.reduced([](unsigned eu, unsigned ew) { return Spec::kills(eu, ew); });
}

/// Element num/den of (Q[u,w]/I) localized at (u, w). The denominator's value
/// at the origin is nonzero and is scaled to 1. Fractions are not reduced.
template <class Spec>
class LocalElement {
public:
    LocalElement() : num_(), den_(1) {}
    LocalElement(int c) : num_(c), den_(1) {}
    explicit LocalElement(const Rational& c) : num_(c), den_(1) {}
    explicit LocalElement(const MultiPoly& num) : num_(normal_form<Spec>(num)), den_(1) {}
    LocalElement(const MultiPoly& num, const MultiPoly& den) : num_(normal_form<Spec>(num)), den_(normal_form<Spec>(den)) {
        Rational d0 = den_.constant_term();
        if (d0 == 0) throw precondition_error("denominator vanishes at the origin: " + den.to_string());
        if (d0 != 1) {
            MultiPoly s(Rational(1 / d0));
            num_ = num_ * s;
            den_ = den_ * s;
        }
    }

    static LocalElement u() { return LocalElement(MultiPoly::u()); }
    static LocalElement w() { return LocalElement(MultiPoly::w()); }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    friend LocalElement operator+(const LocalElement& a, const LocalElement& b) {
        if (a.den_ == b.den_) return LocalElement(a.num_ + b.num_, a.den_, raw_tag{});
        if (auto q = exact_quotient(a.den_, b.den_))
            return LocalElement(normal_form<Spec>(a.num_ + b.num_ * *q), a.den_, raw_tag{});
        if (auto q = exact_quotient(b.den_, a.den_))
            return LocalElement(normal_form<Spec>(a.num_ * *q + b.num_), b.den_, raw_tag{});
        return LocalElement(normal_form<Spec>(a.num_ * b.den_ + b.num_ * a.den_),
                            normal_form<Spec>(a.den_ * b.den_), raw_tag{});
    }
    friend LocalElement operator-(const LocalElement& a) { return LocalElement(-a.num_, a.den_, raw_tag{}); }
    friend LocalElement operator-(const LocalElement& a, const LocalElement& b) { return a + (-b); }
    friend LocalElement operator*(const LocalElement& a, const LocalElement& b) {
        MultiPoly d = a.den_ == MultiPoly(1) ? b.den_ : b.den_ == MultiPoly(1) ? a.den_ : normal_form<Spec>(a.den_ * b.den_);
        MultiPoly n = normal_form<Spec>(a.num_ * b.num_);
        if (!(d == MultiPoly(1)))
            if (auto q = exact_quotient(n, d)) return LocalElement(normal_form<Spec>(*q), MultiPoly(1), raw_tag{});
        return LocalElement(std::move(n), std::move(d), raw_tag{});
    }
    LocalElement& operator+=(const LocalElement& o) { return *this = *this + o; }
    LocalElement& operator*=(const LocalElement& o) { return *this = *this * o; }

    /// Semantic equality: cross-multiplied difference vanishes in the quotient.
    friend bool operator==(const LocalElement& a, const LocalElement& b) { return is_zero(a - b); }

    friend bool is_zero(const LocalElement& x) { return x.num_.is_zero(); }

    std::string to_string() const {
        if (den_ == MultiPoly(1)) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    struct raw_tag {};
    LocalElement(MultiPoly num, MultiPoly den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {}

    MultiPoly num_;
    MultiPoly den_;
};

// In a localization at the origin of a monomial quotient, s*p = 0 with
// s(0,0) != 0 forces p = 0 (compare lowest-degree terms), so the normal form
// of the numerator decides zero.
template <class Spec>
struct ring_traits<LocalElement<Spec>> {
    static bool is_zero(const LocalElement<Spec>& x) { return x.num().is_zero(); }
    static std::string to_string(const LocalElement<Spec>& x) { return x.to_string(); }
};

/// x is a unit iff its numerator does not vanish at the origin.
template <class Spec>
bool is_unit(const LocalElement<Spec>& x) {
    return x.num().constant_term() != 0;
}

template <class Spec>
std::optional<LocalElement<Spec>> try_invert(const LocalElement<Spec>& x) {
    if (!is_unit(x)) return std::nullopt;
    return LocalElement<Spec>(x.den(), x.num());
}

template <class Spec>
LocalElement<Spec> pow(const LocalElement<Spec>& x, unsigned n) {
    LocalElement<Spec> r(1);
    for (unsigned i = 0; i < n; ++i) r *= x;
    return r;
}

/// Smallest N with x^N = 0, or nothing when x is not nilpotent.
///
/// The quotients by (uw) and by nothing are reduced. Modulo (u^2, uw) the
/// normal form is p(w) + c*u, which is nilpotent exactly when p = 0, and then
/// x^2 = 0.
template <class Spec>
std::optional<unsigned> nilpotency_index(const LocalElement<Spec>& x) {
    if (is_zero(x)) return 1u;
    if constexpr (std::is_same_v<Spec, USquareUWZero>) {
        for (const auto& [e, c] : x.num().terms())
            if (e.first == 0) return std::nullopt;
        return 2u;
    } else {
        return std::nullopt;
    }
}

template <class Spec>
Rational eval_at_origin(const LocalElement<Spec>& x) {
    return x.num().constant_term() / x.den().constant_term();
}

// ---------------------------------------------------------------------------

/// Element of Q(u, w) as an unreduced fraction; zero iff the numerator is.
class MultiFrac {
public:
    MultiFrac() : num_(), den_(1) {}
    MultiFrac(int c) : num_(c), den_(1) {}
    explicit MultiFrac(const Rational& c) : num_(c), den_(1) {}
    explicit MultiFrac(MultiPoly num) : num_(std::move(num)), den_(1) {}
    MultiFrac(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw precondition_error("zero denominator in Q(u,w)");
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    friend MultiFrac operator+(const MultiFrac& a, const MultiFrac& b) {
        if (a.den_ == b.den_) return MultiFrac(a.num_ + b.num_, a.den_);
        if (auto q = exact_quotient(a.den_, b.den_)) return MultiFrac(a.num_ + b.num_ * *q, a.den_);
        if (auto q = exact_quotient(b.den_, a.den_)) return MultiFrac(a.num_ * *q + b.num_, b.den_);
        return MultiFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend MultiFrac operator-(const MultiFrac& a) { return MultiFrac(-a.num_, a.den_); }
    friend MultiFrac operator-(const MultiFrac& a, const MultiFrac& b) { return a + (-b); }
    friend MultiFrac operator*(const MultiFrac& a, const MultiFrac& b) {
        if (a.num_.is_zero() || b.num_.is_zero()) return MultiFrac();
        MultiPoly d = a.den_ == MultiPoly(1) ? b.den_ : b.den_ == MultiPoly(1) ? a.den_ : a.den_ * b.den_;
        MultiPoly n = a.num_ * b.num_;
        if (!(d == MultiPoly(1)))
            if (auto q = exact_quotient(n, d)) return MultiFrac(std::move(*q));
        return MultiFrac(std::move(n), std::move(d));
    }
    friend bool operator==(const MultiFrac& a, const MultiFrac& b) { return (a - b).num_.is_zero(); }

    MultiFrac inverse() const {
        if (num_.is_zero()) throw precondition_error("inverse of zero in Q(u,w)");
        return MultiFrac(den_, num_);
    }

    std::string to_string() const {
        if (den_ == MultiPoly(1)) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    MultiPoly num_;
    MultiPoly den_;
};

template <>
struct ring_traits<MultiFrac> {
    static bool is_zero(const MultiFrac& x) { return x.num().is_zero(); }
    static std::string to_string(const MultiFrac& x) { return x.to_string(); }
};

} // namespace henselize
