#pragma once

// Seeded random elements of the shipped rings, for property runs.

#include <cstddef>
#include <random>
#include <vector>

#include "basering.hpp"
#include "ratfunc.hpp"
#include "rational.hpp"
#include "unipoly.hpp"
#include "valuedfield.hpp"

namespace henselize {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline Rational random_rational(Rng& rng, long num_bound, long den_bound) {
    return make_rational(uniform(rng, -num_bound, num_bound), uniform(rng, 1, den_bound));
}

inline QPoly random_qpoly(Rng& rng, int degree, long bound) {
    std::vector<Rational> c;
    for (int i = 0; i <= degree; ++i) c.emplace_back(uniform(rng, -bound, bound));
    return QPoly(std::move(c));
}

inline MultiPoly random_multipoly(Rng& rng, unsigned degree, long bound, bool constant_term = true) {
    MultiPoly p;
    for (unsigned eu = 0; eu <= degree; ++eu)
        for (unsigned ew = 0; eu + ew <= degree; ++ew) {
            if (!constant_term && eu + ew == 0) continue;
            if (coin(rng, 0.6)) p = p + MultiPoly::monomial(Rational(uniform(rng, -bound, bound)), eu, ew);
        }
    return p;
}

/// Random elements of a ring preset: arbitrary, in the maximal ideal, units.
template <class Preset>
struct Sampler;

template <>
struct Sampler<PadicDomain> {
    unsigned long p;

    explicit Sampler(const PadicDomain& d) : p(d.field().prime()) {}

    Rational unit_denominator(Rng& rng) const {
        long d;
        do d = uniform(rng, 1, 9);
        while (d % static_cast<long>(p) == 0);
        return Rational(d);
    }
    Rational element(Rng& rng) const { return Rational(uniform(rng, -30, 30)) / unit_denominator(rng); }
    Rational maximal(Rng& rng) const { return Rational(static_cast<long>(p)) * element(rng); }
    Rational unit(Rng& rng) const {
        Rational x;
        do x = element(rng);
        while (x == 0 || padic_order(x, p) != 0);
        return x;
    }
    /// Element of K, possibly outside V.
    Rational field_element(Rng& rng) const {
        Rational x = element(rng);
        if (coin(rng, 0.3)) x /= Rational(static_cast<long>(p));
        return x;
    }
};

template <>
struct Sampler<TadicDomain> {
    explicit Sampler(const TadicDomain&) {}

    RatFunc element(Rng& rng) const {
        QPoly num = random_qpoly(rng, static_cast<int>(uniform(rng, 0, 2)), 4);
        QPoly den{Rational(1), Rational(uniform(rng, -2, 2))};
        return RatFunc(num, den);
    }
    RatFunc maximal(Rng& rng) const { return RatFunc::t() * element(rng); }
    RatFunc unit(Rng& rng) const {
        RatFunc x;
        do x = element(rng);
        while (x.is_zero() || x.num().coeff(0) == 0);
        return x;
    }
    RatFunc field_element(Rng& rng) const {
        RatFunc x = element(rng);
        if (coin(rng, 0.3)) x = x * RatFunc::t().inverse();
        return x;
    }
};

template <class Spec>
struct LocalSampler {
    using L = LocalElement<Spec>;

    L element(Rng& rng) const {
        MultiPoly num = random_multipoly(rng, 2, 3);
        if (coin(rng, 0.25)) return L(num, MultiPoly(1) + random_multipoly(rng, 1, 2, false));
        return L(num);
    }
    L maximal(Rng& rng) const { return L(random_multipoly(rng, 2, 3, false)); }
    L unit(Rng& rng) const {
        long c;
        do c = uniform(rng, -3, 3);
        while (c == 0);
        return L(MultiPoly(c) + random_multipoly(rng, 2, 3, false));
    }
};

template <>
struct Sampler<MonomialDomain> : LocalSampler<NoRelation> {
    explicit Sampler(const MonomialDomain&) {}

    MultiFrac field_element(Rng& rng) const {
        MultiPoly num = random_multipoly(rng, 2, 3);
        if (coin(rng, 0.3)) return MultiFrac(num, MultiPoly(coin(rng) ? MultiPoly::u() : MultiPoly::w()));
        return MultiFrac(num);
    }
};

template <class Spec>
struct Sampler<QuotientPreset<Spec>> : LocalSampler<Spec> {
    explicit Sampler(const QuotientPreset<Spec>&) {}

    RatFunc field_element(Rng& rng) const {
        QPoly num = random_qpoly(rng, static_cast<int>(uniform(rng, 0, 2)), 4);
        if (coin(rng, 0.3)) return RatFunc(num, QPoly::x());
        return RatFunc(num);
    }
};

/// Monic f = X^n + ... + a_1 X + a_0 over A with a_1 a unit and a_0 in m.
template <class Preset>
UniPoly<typename Preset::element_type> random_nagata(Rng& rng, const Sampler<Preset>& s, int degree) {
    using A = typename Preset::element_type;
    std::vector<A> c(static_cast<std::size_t>(degree) + 1);
    c[0] = s.maximal(rng);
    c[1] = s.unit(rng);
    for (int i = 2; i < degree; ++i) c[static_cast<std::size_t>(i)] = s.element(rng);
    c[static_cast<std::size_t>(degree)] = A(1);
    if (degree == 1) c[1] = A(1);
    return UniPoly<A>(std::move(c));
}

template <class T, class Gen>
UniPoly<T> random_poly(Rng& rng, int degree, Gen&& gen) {
    std::vector<T> c;
    for (int i = 0; i <= degree; ++i) c.push_back(coin(rng, 0.8) ? gen(rng) : T(0));
    return UniPoly<T>(std::move(c));
}

} // namespace henselize
