#pragma once

// Concrete valued fields (K, v) and the local rings (A, v) they dominate or
// receive through theta.
//
// A valued field type F provides:
//   element_type, rank(), valuation(x), is_zero(x), inverse(x), format(x)
// and, for the base fields, residue(x) and residue_field().
//
// A ring preset B (a "minimally valued" local ring) provides:
//   element_type, field_type, field(), theta(a), valuation(a), is_unit(a),
//   is_zero(a), residue(a), residue_field(), witness(a), nilpotency_index(a),
//   contains(a), is_reduced(), is_domain(), format(a), name().

#include <concepts>
#include <optional>
#include <string>

#include "basering.hpp"
#include "errors.hpp"
#include "ratfunc.hpp"
#include "valgroup.hpp"

namespace henselize {

template <class F>
concept valued_field = requires(const F& k, const typename F::element_type& x) {
    typename F::element_type;
    { k.rank() } -> std::convertible_to<std::size_t>;
    { k.valuation(x) } -> std::same_as<ExtendedValue>;
    { k.is_zero(x) } -> std::same_as<bool>;
    { k.inverse(x) } -> std::convertible_to<typename F::element_type>;
    { k.format(x) } -> std::convertible_to<std::string>;
};

/// kappa: either F_p or Q. Elements are Rationals; F_p values are kept in [0, p).
struct ResidueField {
    std::optional<unsigned long> characteristic;

    Rational normalize(const Rational& x) const {
        if (!characteristic) return x;
        Integer p(*characteristic);
        if (mpz_divisible_p(x.get_den().get_mpz_t(), p.get_mpz_t()))
            throw precondition_error("residue of a non-integral element");
        Integer r = mod_floor(x.get_num() * mod_inverse(x.get_den(), p), p);
        return Rational(r);
    }
    Rational mul(const Rational& a, const Rational& b) const { return normalize(a * b); }
    Rational inverse(const Rational& a) const {
        Rational n = normalize(a);
        if (n == 0) throw precondition_error("inverse of zero in the residue field");
        if (!characteristic) return Rational(1) / n;
        Integer p(*characteristic);
        return Rational(mod_inverse(n.get_num(), p));
    }
    bool equal(const Rational& a, const Rational& b) const { return normalize(a - b) == 0; }
    std::string name() const { return characteristic ? "F_" + std::to_string(*characteristic) : "Q"; }
};

// ---------------------------------------------------------------------------
// Valued fields

/// (Q, v_p).
class PadicField {
public:
    using element_type = Rational;

    explicit PadicField(unsigned long p) : p_(p) {
        if (!is_probable_prime(p) || p > 97) throw precondition_error("p must be a prime <= 97");
    }

    unsigned long prime() const { return p_; }
    std::size_t rank() const { return 1; }

    ExtendedValue valuation(const Rational& x) const {
        if (x == 0) return ExtendedValue::infinity();
        return ValueVector({padic_order(x, p_)});
    }
    bool is_zero(const Rational& x) const { return x == 0; }
    Rational inverse(const Rational& x) const { return rational_inverse(x); }

    Rational residue(const Rational& x) const {
        if (!valuation(x).is_zero()) throw precondition_error("residue requires valuation 0");
        return residue_field().normalize(x);
    }
    ResidueField residue_field() const { return {p_}; }

    std::string format(const Rational& x) const { return x.get_str(); }
    std::string name() const { return "(Q, v_" + std::to_string(p_) + ")"; }

private:
    unsigned long p_;
};

/// (Q(t), order at t). The variable name is cosmetic ("w" for the theta targets).
class TadicField {
public:
    using element_type = RatFunc;

    explicit TadicField(std::string var = "t") : var_(std::move(var)) {}

    const std::string& var() const { return var_; }
    std::size_t rank() const { return 1; }

    ExtendedValue valuation(const RatFunc& x) const {
        if (x.is_zero()) return ExtendedValue::infinity();
        long k = static_cast<long>(x.num().trailing_zero_count()) - static_cast<long>(x.den().trailing_zero_count());
        return ValueVector({k});
    }
    bool is_zero(const RatFunc& x) const { return x.is_zero(); }
    RatFunc inverse(const RatFunc& x) const { return x.inverse(); }

    Rational residue(const RatFunc& x) const {
        if (!valuation(x).is_zero()) throw precondition_error("residue requires valuation 0");
        return x.at_zero();
    }
    ResidueField residue_field() const { return {}; }

    std::string format(const RatFunc& x) const { return x.to_string(var_); }
    std::string name() const { return "(Q(" + var_ + "), v_" + var_ + ")"; }

private:
    std::string var_;
};

/// Monomial valuation on a polynomial: lexicographically least exponent,
/// with v(u) = [1, 0] and v(w) = [0, 1].
inline ExtendedValue monomial_valuation(const MultiPoly& p) {
    if (p.is_zero()) return ExtendedValue::infinity();
    std::optional<Exponent> best;
    for (const auto& [e, c] : p.terms())
        if (!best || e < *best) best = e;
    return ValueVector({static_cast<long>(best->first), static_cast<long>(best->second)});
}

inline Rational initial_coefficient(const MultiPoly& p) {
    return p.terms().begin()->second;  // std::map orders exponents lexicographically
}

/// (Q(u, w), monomial valuation with values in Z^2 lex).
class MonomialField {
public:
    using element_type = MultiFrac;

    std::size_t rank() const { return 2; }

    ExtendedValue valuation(const MultiFrac& x) const {
        if (x.num().is_zero()) return ExtendedValue::infinity();
        return ExtendedValue(monomial_valuation(x.num()).value() - monomial_valuation(x.den()).value());
    }
    bool is_zero(const MultiFrac& x) const { return x.num().is_zero(); }
    MultiFrac inverse(const MultiFrac& x) const { return x.inverse(); }

    // Every monomial has its own value, so the initial form of a value-0
    // element is a ratio of single terms with equal exponents.
    Rational residue(const MultiFrac& x) const {
        if (!valuation(x).is_zero()) throw precondition_error("residue requires valuation 0");
        return initial_coefficient(x.num()) / initial_coefficient(x.den());
    }
    ResidueField residue_field() const { return {}; }

    std::string format(const MultiFrac& x) const { return x.to_string(); }
    std::string name() const { return "(Q(u,w), monomial lex)"; }
};

// ---------------------------------------------------------------------------
// Ring presets

/// Z localized at p, dominated by itself: A = V and theta is the inclusion.
class PadicDomain {
public:
    using element_type = Rational;
    using field_type = PadicField;

    explicit PadicDomain(unsigned long p) : field_(p) {}

    const PadicField& field() const { return field_; }
    bool contains(const Rational& a) const { return field_.valuation(a).is_nonnegative(); }
    Rational theta(const Rational& a) const { return a; }
    ExtendedValue valuation(const Rational& a) const { return field_.valuation(a); }
    bool is_zero(const Rational& a) const { return a == 0; }
    bool is_unit(const Rational& a) const { return valuation(a).is_zero(); }
    Rational residue(const Rational& a) const { return is_unit(a) ? field_.residue(a) : Rational(0); }
    ResidueField residue_field() const { return field_.residue_field(); }
    std::optional<unsigned> nilpotency_index(const Rational& a) const {
        return a == 0 ? std::optional<unsigned>(1) : std::nullopt;
    }
    Rational witness(const Rational& a) const {
        if (a != 0) throw precondition_error("minimality witness requested for an element of finite valuation");
        return Rational(1);
    }
    bool is_reduced() const { return true; }
    bool is_domain() const { return true; }
    std::string format(const Rational& a) const { return a.get_str(); }
    std::string name() const { return "padic"; }

private:
    PadicField field_;
};

/// Q[t] localized at (t) inside (Q(t), v_t): again A = V.
class TadicDomain {
public:
    using element_type = RatFunc;
    using field_type = TadicField;

    const TadicField& field() const { return field_; }
    bool contains(const RatFunc& a) const { return field_.valuation(a).is_nonnegative(); }
    RatFunc theta(const RatFunc& a) const { return a; }
    ExtendedValue valuation(const RatFunc& a) const { return field_.valuation(a); }
    bool is_zero(const RatFunc& a) const { return a.is_zero(); }
    bool is_unit(const RatFunc& a) const { return valuation(a).is_zero(); }
    Rational residue(const RatFunc& a) const { return is_unit(a) ? field_.residue(a) : Rational(0); }
    ResidueField residue_field() const { return {}; }
    std::optional<unsigned> nilpotency_index(const RatFunc& a) const {
        return a.is_zero() ? std::optional<unsigned>(1) : std::nullopt;
    }
    RatFunc witness(const RatFunc& a) const {
        if (!a.is_zero()) throw precondition_error("minimality witness requested for an element of finite valuation");
        return RatFunc(1);
    }
    bool is_reduced() const { return true; }
    bool is_domain() const { return true; }
    std::string format(const RatFunc& a) const { return a.to_string("t"); }
    std::string name() const { return "tadic"; }

private:
    TadicField field_{"t"};
};

/// Q[u, w] localized at (u, w), dominated by the monomial valuation ring.
class MonomialDomain {
public:
    using element_type = LocalElement<NoRelation>;
    using field_type = MonomialField;

    const MonomialField& field() const { return field_; }
    bool contains(const element_type&) const { return true; }
    MultiFrac theta(const element_type& a) const { return MultiFrac(a.num(), a.den()); }
    ExtendedValue valuation(const element_type& a) const { return field_.valuation(theta(a)); }
    bool is_zero(const element_type& a) const { return a.num().is_zero(); }
    bool is_unit(const element_type& a) const { return henselize::is_unit(a); }
    Rational residue(const element_type& a) const { return eval_at_origin(a); }
    ResidueField residue_field() const { return {}; }
    std::optional<unsigned> nilpotency_index(const element_type& a) const { return henselize::nilpotency_index(a); }
    element_type witness(const element_type& a) const {
        if (!is_zero(a)) throw precondition_error("minimality witness requested for an element of finite valuation");
        return element_type(1);
    }
    bool is_reduced() const { return true; }
    bool is_domain() const { return true; }
    std::string format(const element_type& a) const { return a.to_string(); }
    std::string name() const { return "monomial"; }

private:
    MonomialField field_;
};

/// (Q[u,w]/I) localized at (u, w) with I = (uw) or (u^2, uw). The minimal
/// prime is generated by u; theta sets u = 0 and lands in (Q(w), v_w).
template <class Spec>
class QuotientPreset {
public:
    using element_type = LocalElement<Spec>;
    using field_type = TadicField;

    const TadicField& field() const { return field_; }
    bool contains(const element_type&) const { return true; }
    RatFunc theta(const element_type& a) const { return RatFunc(a.num().at_u_zero(), a.den().at_u_zero()); }
    ExtendedValue valuation(const element_type& a) const { return field_.valuation(theta(a)); }
    bool is_zero(const element_type& a) const { return a.num().is_zero(); }
    bool is_unit(const element_type& a) const { return henselize::is_unit(a); }
    Rational residue(const element_type& a) const { return eval_at_origin(a); }
    ResidueField residue_field() const { return {}; }
    std::optional<unsigned> nilpotency_index(const element_type& a) const { return henselize::nilpotency_index(a); }

    /// For theta(a) = 0: b = 1 if a is nilpotent, otherwise b = w (a is then
    /// a multiple of u, and uw = 0).
    element_type witness(const element_type& a) const {
        if (!theta(a).is_zero())
            throw precondition_error("minimality witness requested for an element of finite valuation");
        if (nilpotency_index(a)) return element_type(1);
        element_type b = element_type::w();
        if (!is_zero(b * a)) throw hard_fault("w does not annihilate an element of the minimal prime");
        return b;
    }
    bool is_reduced() const { return !std::is_same_v<Spec, USquareUWZero>; }
    bool is_domain() const { return false; }
    std::string format(const element_type& a) const { return a.to_string(); }
    std::string name() const { return std::is_same_v<Spec, UWZero> ? "uwzero" : "usquare"; }

private:
    TadicField field_{"w"};
};

using UWZeroPreset = QuotientPreset<UWZero>;
using USquarePreset = QuotientPreset<USquareUWZero>;

} // namespace henselize
