#pragma once

// Hensel codes, Nagata and special polynomials, and the chain that turns an
// isolated slope of p into a special polynomial whose special zero generates
// the same extension as the root pinned by that slope.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "newton.hpp"
#include "unipoly.hpp"

namespace henselize {

/// Membership tests for the local ring whose coefficients are being checked:
/// either the valuation ring of a field or a local ring with a unit test.
template <class E>
struct LocalPredicates {
    std::function<bool(const E&)> in_ring;
    std::function<bool(const E&)> is_unit;
    std::function<std::string(const E&)> show;

    bool in_max(const E& x) const { return !is_unit(x); }
};

template <class Field>
LocalPredicates<typename Field::element_type> valuation_ring_predicates(const Field& field) {
    using E = typename Field::element_type;
    return {[field](const E& x) { return field.valuation(x).is_nonnegative(); },
            [field](const E& x) { return field.valuation(x).is_zero(); },
            [field](const E& x) { return field.format(x); }};
}

/// Predicates for a local ring B (a ring preset or a stage ring).
template <class Ring>
LocalPredicates<typename Ring::element_type> local_ring_predicates(const Ring& ring) {
    using E = typename Ring::element_type;
    return {[ring](const E& x) { return ring.contains(x); }, [ring](const E& x) { return ring.is_unit(x); },
            [ring](const E& x) { return ring.format(x); }};
}

struct CheckResult {
    bool ok = true;
    std::vector<std::string> diagnostics;

    void fail(std::string why) {
        ok = false;
        diagnostics.push_back(std::move(why));
    }
};

namespace detail {

template <class E>
void require_coefficients_in_ring(const UniPoly<E>& f, const LocalPredicates<E>& lp) {
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!lp.in_ring(f.coeffs()[i]))
            throw precondition_error("coefficient of X^" + std::to_string(i) + " lies outside the valuation ring: " +
                                     lp.show(f.coeffs()[i]));
}

} // namespace detail

/// (f, a) with f(a) in m and f'(a) a unit.
template <class E>
CheckResult check_code(const UniPoly<E>& f, const E& a, const LocalPredicates<E>& lp) {
    detail::require_coefficients_in_ring(f, lp);
    if (!lp.in_ring(a)) throw precondition_error("code point lies outside the valuation ring");
    CheckResult r;
    E fa = eval(f, a);
    E dfa = eval(derivative(f), a);
    if (!lp.in_max(fa)) r.fail("f(a) = " + lp.show(fa) + " is a unit");
    if (!lp.is_unit(dfa)) r.fail("f'(a) = " + lp.show(dfa) + " is not a unit");
    return r;
}

/// The (f, 0) code condition: f(0) in m, f'(0) a unit.
template <class E>
CheckResult check_nagata(const UniPoly<E>& f, const LocalPredicates<E>& lp) {
    return check_code(f, E(0), lp);
}

/// X^d - X^{d-1} + t_{d-2} X^{d-2} + ... + t_0 with every t_i in m.
template <class E>
CheckResult check_special(const UniPoly<E>& t, const LocalPredicates<E>& lp) {
    detail::require_coefficients_in_ring(t, lp);
    CheckResult r;
    if (t.degree() < 1) {
        r.fail("degree below 1");
        return r;
    }
    if (!t.is_monic()) r.fail("not monic");
    const std::size_t d = static_cast<std::size_t>(t.degree());
    if (!is_zero_rep(E(t.coeff(d - 1) + E(1)))) r.fail("coefficient of X^" + std::to_string(d - 1) + " is not -1");
    for (std::size_t i = 0; i + 2 <= d; ++i)
        if (!lp.in_max(t.coeff(i))) r.fail("t_" + std::to_string(i) + " = " + lp.show(t.coeff(i)) + " is a unit");
    return r;
}

// ---------------------------------------------------------------------------

template <class Field>
struct SlopeNormalization {
    using E = typename Field::element_type;
    UniPoly<E> q;     ///< q(Y) = p_{k+1}^k / p_k^{k+1} * p(c Y)
    E c;              ///< c = -p_k / p_{k+1}; the pinned root of p is c * nu
    ExtendedValue root_valuation;  ///< v(c) = v(p_k) - v(p_{k+1})
};

/// Rescales p around the isolated slope starting at k so that the pinned
/// root becomes the Hensel zero of q near 1.
template <class Field>
SlopeNormalization<Field> nagata_from_slope(const UniPoly<typename Field::element_type>& p, std::size_t k,
                                            const Field& field) {
    using E = typename Field::element_type;
    auto ks = isolated_slopes(p, field);
    if (std::find(ks.begin(), ks.end(), k) == ks.end())
        throw precondition_error("k = " + std::to_string(k) + " is not an isolated slope");
    const E pk = p.coeff(k), pk1 = p.coeff(k + 1);
    const E c = E(-(pk * field.inverse(pk1)));
    E scale(1);
    for (std::size_t i = 0; i < k; ++i) scale = E(scale * pk1 * field.inverse(pk));
    scale = E(scale * field.inverse(pk));
    std::vector<E> coeffs(p.size());
    E cpow(1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        coeffs[i] = E(p.coeffs()[i] * cpow * scale);
        cpow = E(cpow * c);
    }
    SlopeNormalization<Field> out{UniPoly<E>(std::move(coeffs)), c, field.valuation(c)};
    CheckResult chk = check_code(out.q, E(1), valuation_ring_predicates(field));
    if (!chk.ok) throw hard_fault("rescaled polynomial is not coded by 1: " + chk.diagnostics.front());
    return out;
}

/// Constants of x = (a*beta + b) / (c*beta + d).
template <class E>
struct Mobius {
    E a, b, c, d;
};

template <class Field>
struct Specialization {
    using E = typename Field::element_type;
    UniPoly<E> r;                   ///< q(1 + X)
    std::optional<UniPoly<E>> s;    ///< (1/r_0) r(-r_0 X / r_1)
    std::optional<UniPoly<E>> t;    ///< X^d s(1/X), special
    bool exact_root = false;        ///< r_0 = 0: the zero of q is exactly 1
    std::optional<Mobius<E>> nu;    ///< nu = (r_1 beta - r_0) / (r_1 beta)
};

template <class Field>
Specialization<Field> specialize(const UniPoly<typename Field::element_type>& q, const Field& field) {
    using E = typename Field::element_type;
    const auto lp = valuation_ring_predicates(field);
    CheckResult code = check_code(q, E(1), lp);
    if (!code.ok) throw precondition_error("(q, 1) is not a Hensel code: " + code.diagnostics.front());

    Specialization<Field> out;
    out.r = compose(q, UniPoly<E>{E(1), E(1)});
    const E r0 = out.r.coeff(0), r1 = out.r.coeff(1);
    if (field.is_zero(r0)) {
        out.exact_root = true;
        return out;
    }
    const E ratio = E(-(r0 * field.inverse(r1)));
    const E inv_r0 = field.inverse(r0);
    std::vector<E> sc(out.r.size());
    E pw(1);
    for (std::size_t i = 0; i < sc.size(); ++i) {
        sc[i] = E(out.r.coeffs()[i] * pw * inv_r0);
        pw = E(pw * ratio);
    }
    UniPoly<E> s(std::move(sc));
    if (field.is_zero(E(s.coeff(0) - E(1)))) {
        out.t = reversed(s, static_cast<std::size_t>(s.degree()));
    } else {
        throw hard_fault("s(0) differs from 1");
    }
    out.s = std::move(s);
    CheckResult sp = check_special(*out.t, lp);
    if (!sp.ok) throw hard_fault("constructed t is not special: " + sp.diagnostics.front());
    out.nu = Mobius<E>{r1, E(-r0), r1, E(0)};
    return out;
}

/// f(X) = t(X + 1); its Hensel zero is the special zero of t minus 1.
template <class E>
UniPoly<E> special_to_nagata(const UniPoly<E>& t, const LocalPredicates<E>& lp) {
    CheckResult sp = check_special(t, lp);
    if (!sp.ok) throw precondition_error("not a special polynomial: " + sp.diagnostics.front());
    UniPoly<E> f = compose(t, UniPoly<E>{E(1), E(1)});
    CheckResult ng = check_nagata(f, lp);
    if (!ng.ok) throw hard_fault("t(X + 1) is not Nagata: " + ng.diagnostics.front());
    return f;
}

template <class Field>
struct IsolatedRoot {
    using E = typename Field::element_type;
    SlopeNormalization<Field> normalization;
    Specialization<Field> specialization;
    /// alpha = (a beta + b)/(c beta + d) with a, b, c, d in V; absent when the
    /// root is exactly c in K.
    std::optional<Mobius<E>> alpha;
};

/// Full chain p -> q -> r -> s -> t for the isolated slope at k. The Mobius
/// constants for alpha = c * nu are scaled so that all four lie in V: the
/// factor c multiplies the numerator when v(c) >= 0, otherwise 1/c
/// multiplies the denominator.
template <class Field>
IsolatedRoot<Field> isolate_root(const UniPoly<typename Field::element_type>& p, std::size_t k, const Field& field) {
    using E = typename Field::element_type;
    IsolatedRoot<Field> out{nagata_from_slope(p, k, field), {}, std::nullopt};
    out.specialization = specialize(out.normalization.q, field);
    if (out.specialization.nu) {
        const Mobius<E>& m = *out.specialization.nu;
        const E& c = out.normalization.c;
        if (field.valuation(c).is_nonnegative())
            out.alpha = Mobius<E>{E(c * m.a), E(c * m.b), m.c, m.d};
        else
            out.alpha = Mobius<E>{m.a, m.b, E(m.c * field.inverse(c)), E(m.d * field.inverse(c))};
    }
    return out;
}

} // namespace henselize
