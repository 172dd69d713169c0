#pragma once

// Decides, for gamma = q(alpha) in A_f, whether theta_f(gamma) != 0 or gamma
// is annihilated by an element outside the kernel. In the second case the
// answer carries a certificate that is an identity in A[x]:
//
//     g(T) = a(T) + T^k h(T),  deg a < k,  theta(a_j) = 0,
//     b = product of witnesses for the a_j,  (b a(T))^N = 0,
//     b^N h(y)^N y^{N k} = 0  where y = q(x),
//
// with theta(b) != 0 and theta(h)(0) != 0, so that b^N h(gamma)^N lies
// outside the kernel and kills a power of gamma.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "henselstage.hpp"
#include "unipoly.hpp"

namespace henselize {

struct InSf {
    ExtendedValue delta_valuation;
};

template <class A>
struct Annihilator {
    A b;
    UniPoly<A> h;
    std::size_t k = 0;
    unsigned N = 0;
    bool identity_checked = false;
    /// b h(y) y^k = 0 already holds in A[x] (the reduced-case corollary).
    bool reduced_identity = false;
};

template <class A>
using KernelDecision = std::variant<InSf, Annihilator<A>>;

inline constexpr unsigned kernel_nilpotency_cap = 16;

namespace detail {

/// Lowest index whose coefficient is nonzero in the field (semantic test).
template <class Field>
std::size_t semantic_order(const UniPoly<typename Field::element_type>& p, const Field& field) {
    std::size_t k = 0;
    while (k < p.size() && field.is_zero(p.coeffs()[k])) ++k;
    return k;
}

template <class A>
bool poly_is_zero(const UniPoly<A>& p) {
    for (const auto& c : p.coeffs())
        if (!is_zero_rep(c)) return false;
    return true;
}

template <class Base>
bool identity_holds(const StageContext<Base>& ctx, const typename Base::element_type& b, const UniPoly<typename Base::element_type>& h,
                    const UniPoly<typename Base::element_type>& y, std::size_t k, unsigned N) {
    using A = typename Base::element_type;
    const ModElement<A> Y = ctx.poly(y);
    const ModElement<A> hy = eval(h.map([](const A& c) { return ModElement<A>(c); }), Y);
    ModElement<A> lhs = pow(ModElement<A>(b), N) * pow(hy, N) * pow(Y, static_cast<unsigned>(N * k));
    return poly_is_zero(lhs.rep());
}

} // namespace detail

template <class Base>
KernelDecision<typename Base::element_type> decide_kernel(const StageContext<Base>& ctx,
                                                          const UniPoly<typename Base::element_type>& q) {
    using A = typename Base::element_type;
    const Base& base = ctx.base();
    const auto& field = ctx.beta().field();

    const UniPoly<A> y = mod_monic(q, ctx.f());
    const UniPoly<A> g = char_poly_mod(ctx.f(), y);
    const auto g1 = ctx.theta_poly(g);
    const auto delta = ctx.beta().analyze(ctx.theta_poly(y));

    if (!field.is_zero(g1.coeff(0))) {
        if (delta.zero) throw hard_fault("g1(0) != 0 but delta = 0");
        return InSf{delta.value};
    }
    if (!delta.zero) return InSf{delta.value};

    const std::size_t k = detail::semantic_order(g1, field);
    if (k >= g1.size()) throw hard_fault("characteristic polynomial maps to zero");
    Annihilator<A> cert;
    cert.k = k;
    cert.h = g.unshifted(k);
    const UniPoly<A> a = g.truncated(k);

    A b(1);
    for (std::size_t j = 0; j < k; ++j) b = A(b * base.witness(a.coeff(j)));
    cert.b = b;

    const UniPoly<A> ba = UniPoly<A>::constant(b) * a;
    UniPoly<A> power = ba;
    for (unsigned n = 1; n <= kernel_nilpotency_cap; ++n) {
        if (detail::poly_is_zero(power)) {
            cert.N = n;
            break;
        }
        power = power * ba;
    }
    if (cert.N == 0)
        throw hard_fault("(b a(T))^N is nonzero for every N <= " + std::to_string(kernel_nilpotency_cap));
    if (!detail::identity_holds(ctx, cert.b, cert.h, y, k, cert.N))
        throw hard_fault("annihilation identity fails in A[x]");
    cert.identity_checked = true;
    cert.reduced_identity = detail::identity_holds(ctx, cert.b, cert.h, y, k, 1);
    if (field.is_zero(typename Base::field_type::element_type(base.theta(cert.b))))
        throw hard_fault("witness product lies in the kernel");
    return cert;
}

/// Independent replay of a decision for (ctx, q).
template <class Base>
bool verify_certificate(const StageContext<Base>& ctx, const UniPoly<typename Base::element_type>& q,
                        const KernelDecision<typename Base::element_type>& decision) {
    using A = typename Base::element_type;
    using E = typename Base::field_type::element_type;
    const auto& field = ctx.beta().field();
    const UniPoly<A> y = mod_monic(q, ctx.f());
    try {
        if (const auto* in = std::get_if<InSf>(&decision)) {
            const auto zt = ctx.beta().analyze(ctx.theta_poly(y));
            return !zt.zero && zt.value == in->delta_valuation;
        }
        const auto& cert = std::get<Annihilator<A>>(decision);
        if (cert.N == 0 || cert.k == 0) return false;
        const UniPoly<A> g = char_poly_mod(ctx.f(), y);
        if (cert.k > static_cast<std::size_t>(g.degree())) return false;
        if (!detail::poly_is_zero(UniPoly<A>(g.unshifted(cert.k) - cert.h))) return false;
        const UniPoly<A> a = g.truncated(cert.k);
        for (std::size_t j = 0; j < cert.k; ++j)
            if (!field.is_zero(E(ctx.base().theta(a.coeff(j))))) return false;
        if (field.is_zero(E(ctx.base().theta(cert.b)))) return false;
        if (field.is_zero(E(ctx.base().theta(cert.h.coeff(0))))) return false;
        if (!detail::poly_is_zero(pow(UniPoly<A>::constant(cert.b) * a, cert.N))) return false;
        return detail::identity_holds(ctx, cert.b, cert.h, y, cert.k, cert.N);
    } catch (const precondition_error&) {
        return false;
    }
}

struct MinimalityReport {
    std::size_t samples = 0;
    std::size_t in_sf = 0;
    std::size_t annihilated = 0;
    std::size_t verified = 0;
    std::vector<std::string> faults;
};

template <class Base>
MinimalityReport minimality_report(const StageContext<Base>& ctx,
                                   const std::vector<UniPoly<typename Base::element_type>>& samples) {
    if (samples.empty()) throw precondition_error("minimality_report needs at least one sample");
    MinimalityReport rep;
    for (const auto& q : samples) {
        ++rep.samples;
        try {
            auto d = decide_kernel(ctx, q);
            if (std::holds_alternative<InSf>(d)) ++rep.in_sf;
            else ++rep.annihilated;
            if (verify_certificate(ctx, q, d)) ++rep.verified;
            else rep.faults.push_back("certificate rejected on replay");
        } catch (const hard_fault& e) {
            rep.faults.push_back(e.what());
        }
    }
    return rep;
}

} // namespace henselize
