#pragma once

// Truncated completions Z_p / p^N and Q[[t]] / t^N, and quadratic Newton
// lifting of Hensel zeros in them.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "ratfunc.hpp"
#include "rational.hpp"
#include "unipoly.hpp"
#include "valuedfield.hpp"

namespace henselize {

/// Z_p modulo p^N; residues are kept in [0, p^N).
class PadicCompletion {
public:
    using value_type = Integer;
    using source_type = Rational;

    PadicCompletion(unsigned long p, unsigned precision) : p_(p), n_(precision), modulus_(ipow(Integer(p), precision)) {
        if (!is_probable_prime(p)) throw precondition_error("completion prime must be prime");
        if (precision == 0) throw precondition_error("completion precision must be positive");
    }

    unsigned long prime() const { return p_; }
    unsigned precision() const { return n_; }
    const Integer& modulus() const { return modulus_; }

    Integer reduce(const Integer& x) const { return mod_floor(x, modulus_); }
    /// Image of a p-integral rational.
    Integer from(const Rational& x) const {
        if (mpz_divisible_ui_p(x.get_den().get_mpz_t(), p_))
            throw precondition_error("rational " + x.get_str() + " is not p-integral");
        return reduce(x.get_num() * mod_inverse(x.get_den(), modulus_));
    }
    Integer add(const Integer& a, const Integer& b) const { return reduce(a + b); }
    Integer sub(const Integer& a, const Integer& b) const { return reduce(a - b); }
    Integer mul(const Integer& a, const Integer& b) const { return reduce(a * b); }
    Integer inverse(const Integer& a) const { return mod_inverse(a, modulus_); }
    bool is_zero(const Integer& a) const { return reduce(a) == 0; }

    /// Valuation, or nothing when the residue is 0 (value at least N).
    std::optional<long> valuation(const Integer& a) const {
        Integer r = reduce(a);
        if (r == 0) return std::nullopt;
        return padic_order(r, p_);
    }
    /// Residue modulo p^k (k <= N), as a representative in [0, p^k).
    Integer truncate(const Integer& a, unsigned k) const { return mod_floor(a, ipow(Integer(p_), k)); }

    std::string format(const Integer& a) const { return reduce(a).get_str(); }

private:
    unsigned long p_;
    unsigned n_;
    Integer modulus_;
};

/// Q[[t]] modulo t^N; elements are coefficient vectors of length N.
class SeriesCompletion {
public:
    using value_type = std::vector<Rational>;
    using source_type = RatFunc;

    explicit SeriesCompletion(unsigned precision) : n_(precision) {
        if (precision == 0) throw precondition_error("completion precision must be positive");
    }

    unsigned precision() const { return n_; }

    value_type from_poly(const QPoly& p) const {
        value_type r(n_);
        for (std::size_t i = 0; i < n_ && i < p.size(); ++i) r[i] = p.coeffs()[i];
        return r;
    }
    /// Expansion of a rational function without pole at 0.
    value_type from(const RatFunc& x) const {
        if (x.den().coeff(0) == 0) throw precondition_error("rational function has a pole at t = 0");
        return mul(from_poly(x.num()), inverse(from_poly(x.den())));
    }
    value_type add(const value_type& a, const value_type& b) const {
        value_type r(n_);
        for (std::size_t i = 0; i < n_; ++i) r[i] = a[i] + b[i];
        return r;
    }
    value_type sub(const value_type& a, const value_type& b) const {
        value_type r(n_);
        for (std::size_t i = 0; i < n_; ++i) r[i] = a[i] - b[i];
        return r;
    }
    value_type mul(const value_type& a, const value_type& b) const {
        value_type r(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; i + j < n_; ++j) r[i + j] += a[i] * b[j];
        }
        return r;
    }
    value_type inverse(const value_type& a) const {
        if (a[0] == 0) throw precondition_error("series with zero constant term is not invertible");
        value_type r(n_);
        r[0] = 1 / a[0];
        for (std::size_t i = 1; i < n_; ++i) {
            Rational acc = 0;
            for (std::size_t j = 1; j <= i; ++j) acc += a[j] * r[i - j];
            r[i] = -acc * r[0];
        }
        return r;
    }
    bool is_zero(const value_type& a) const {
        for (const auto& c : a)
            if (c != 0) return false;
        return true;
    }
    std::optional<long> valuation(const value_type& a) const {
        for (std::size_t i = 0; i < n_; ++i)
            if (a[i] != 0) return static_cast<long>(i);
        return std::nullopt;
    }
    QPoly truncate(const value_type& a, unsigned k) const {
        return QPoly(std::vector<Rational>(a.begin(), a.begin() + std::min<std::size_t>(k, n_)));
    }

    std::string format(const value_type& a) const {
        return henselize::to_string(QPoly(a), "t") + " + O(t^" + std::to_string(n_) + ")";
    }

private:
    unsigned n_;
};

template <class Completion>
typename Completion::value_type eval_in(const Completion& comp, const UniPoly<typename Completion::source_type>& f,
                                        const typename Completion::value_type& x) {
    typename Completion::value_type acc = comp.from(typename Completion::source_type(0));
    for (std::size_t i = f.size(); i-- > 0;) acc = comp.add(comp.mul(acc, x), comp.from(f.coeffs()[i]));
    return acc;
}

/// Newton iteration x <- x - f(x)/f'(x) from a code point a0, where f(a0) is
/// in the maximal ideal and f'(a0) is a unit. Each step doubles the number of
/// correct digits, so ceil(log2 N) + 2 steps always suffice.
template <class Completion>
typename Completion::value_type lift_code_zero(const UniPoly<typename Completion::source_type>& f,
                                               const typename Completion::source_type& a0, const Completion& comp) {
    const auto df = derivative(f);
    auto x = comp.from(a0);
    unsigned budget = 2;
    for (unsigned n = 1; n < comp.precision(); n *= 2) ++budget;
    for (unsigned it = 0; it <= budget; ++it) {
        auto fx = eval_in(comp, f, x);
        if (comp.is_zero(fx)) return x;
        auto dfx = eval_in(comp, df, x);
        x = comp.sub(x, comp.mul(fx, comp.inverse(dfx)));
    }
    throw hard_fault("Newton lifting did not converge within " + std::to_string(budget) + " steps");
}

/// Hensel zero of a Nagata polynomial: the lift starting from 0.
template <class Completion>
typename Completion::value_type lift_hensel_zero(const UniPoly<typename Completion::source_type>& f,
                                                 const Completion& comp) {
    return lift_code_zero(f, typename Completion::source_type(0), comp);
}

} // namespace henselize
