#pragma once

// One elementary henselization stage A_f = U_f^{-1} A[X]/<f> for a Nagata
// polynomial f over a local ring A, and the morphism theta_f : A_f -> K[beta]
// sending the Hensel zero alpha = x to beta.

#include <functional>
#include <memory>
#include <string>

#include "errors.hpp"
#include "hensel.hpp"
#include "kbeta.hpp"
#include "unipoly.hpp"
#include "valuedfield.hpp"

namespace henselize {

/// num/den with num, den in A[x] and den(0) a unit of A. Equality of these
/// fractions is only decided at the representative level (see rep_equal).
template <class A>
class AfElement {
public:
    using poly_element = ModElement<A>;

    AfElement() : num_(0), den_(1) {}
    AfElement(int c) : num_(c), den_(1) {}
    explicit AfElement(poly_element num) : num_(std::move(num)), den_(1) {}
    AfElement(poly_element num, poly_element den) : num_(std::move(num)), den_(std::move(den)) {}

    const poly_element& num() const { return num_; }
    const poly_element& den() const { return den_; }
    bool has_unit_denominator() const { return den_.rep().degree() == 0 && is_zero_rep(A(den_.rep().coeff(0) - A(1))); }

    friend AfElement operator+(const AfElement& a, const AfElement& b) {
        if (a.has_unit_denominator() && b.has_unit_denominator()) return AfElement(a.num_ + b.num_);
        return AfElement(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend AfElement operator-(const AfElement& a) { return AfElement(-a.num_, a.den_); }
    friend AfElement operator-(const AfElement& a, const AfElement& b) { return a + (-b); }
    friend AfElement operator*(const AfElement& a, const AfElement& b) {
        if (a.has_unit_denominator() && b.has_unit_denominator()) return AfElement(a.num_ * b.num_);
        return AfElement(a.num_ * b.num_, a.den_ * b.den_);
    }
    AfElement& operator+=(const AfElement& o) { return *this = *this + o; }
    AfElement& operator*=(const AfElement& o) { return *this = *this * o; }

private:
    poly_element num_;
    poly_element den_;
};

// Representative-level zero: the numerator vanishes in A[x]. Sound, not
// complete, for the localization.
template <class A>
struct ring_traits<AfElement<A>> {
    static bool is_zero(const AfElement<A>& x) { return x.num().rep().is_zero(); }
    static std::string to_string(const AfElement<A>& x) {
        std::string n = henselize::format(x.num());
        if (x.has_unit_denominator()) return n;
        return "(" + n + ")/(" + henselize::format(x.den()) + ")";
    }
};

template <class A>
AfElement<A> pow(const AfElement<A>& x, unsigned n) {
    AfElement<A> r(1);
    for (unsigned i = 0; i < n; ++i) r *= x;
    return r;
}

template <class Field>
struct ThetaImage {
    using element = ModElement<typename Field::element_type>;
    element num;
    element den;
    element value;  ///< num * den^{-1} in K[beta]
};

template <class Base>
class StageContext {
public:
    using base_type = Base;
    using A = typename Base::element_type;
    using field_type = typename Base::field_type;
    using E = typename field_type::element_type;
    using element = AfElement<A>;
    using beta_context = BetaContext<field_type>;

    /// var names the class of X (x1, x2, ... in towers); depth counts stages.
    StageContext(Base base, UniPoly<A> f, std::string var = "x", unsigned depth = 1)
        : base_(std::move(base)), f_(std::move(f)), depth_(depth) {
        if (f_.degree() < 1 || !f_.is_monic()) throw precondition_error("stage polynomial must be monic of degree >= 1");
        for (const auto& c : f_.coeffs())
            if (!base_.contains(c)) throw precondition_error("coefficient outside A: " + base_.format(c));
        CheckResult ng = check_nagata(f_, local_ring_predicates(base_));
        if (!ng.ok) throw precondition_error("f is not a Nagata polynomial over A: " + ng.diagnostics.front());
        mod_ = ModElement<A>::make_modulus(f_, var);
        beta_ = std::make_shared<const beta_context>(base_.field(), theta_poly(f_), "b" + var.substr(1));
    }

    const Base& base() const { return base_; }
    const UniPoly<A>& f() const { return f_; }
    std::size_t degree() const { return static_cast<std::size_t>(f_.degree()); }
    unsigned depth() const { return depth_; }
    const std::string& var() const { return mod_->var; }
    const typename ModElement<A>::modulus_ptr& modulus() const { return mod_; }
    const beta_context& beta() const { return *beta_; }
    const std::shared_ptr<const beta_context>& beta_ptr() const { return beta_; }

    UniPoly<E> theta_poly(const UniPoly<A>& p) const {
        return p.map([this](const A& a) { return E(base_.theta(a)); });
    }

    ModElement<A> poly(const UniPoly<A>& p) const { return ModElement<A>(p, mod_); }
    element constant(const A& a) const { return element(ModElement<A>(a)); }
    element alpha() const { return element(ModElement<A>::generator(mod_)); }
    element make(const UniPoly<A>& num) const { return element(poly(num)); }
    element make(const UniPoly<A>& num, const UniPoly<A>& den) const {
        ModElement<A> d = poly(den);
        if (!in_Uf(d)) throw precondition_error("denominator is not in U_f");
        return element(poly(num), d);
    }

    /// Constant coefficient of the canonical representative is a unit of A.
    bool in_Uf(const ModElement<A>& g) const { return base_.is_unit(g.constant_term()); }

    bool is_unit(const element& x) const { return in_Uf(x.num()); }

    /// Image in kappa_A: num(0) den(0)^{-1}.
    Rational residue(const element& x) const {
        const ResidueField k = base_.residue_field();
        const Rational n = base_.residue(x.num().constant_term());
        const Rational d = base_.residue(x.den().constant_term());
        return k.mul(n, k.inverse(d));
    }

    /// Cross-multiplied representatives agree in A[x].
    bool rep_equal(const element& x, const element& y) const {
        return (x.num() * y.den() - y.num() * x.den()).rep().is_zero();
    }

    ThetaImage<field_type> theta_f(const element& x) const {
        ThetaImage<field_type> img{beta_->make(theta_poly(x.num().rep())), beta_->make(theta_poly(x.den().rep())), {}};
        if (!beta_->valuation(img.den).is_zero())
            throw hard_fault("theta_f of a denominator in U_f is not a unit of V[beta]");
        img.value = img.num * beta_->invert(img.den);
        return img;
    }

    std::string format(const element& x) const {
        auto show = [this](const ModElement<A>& m) {
            return henselize::to_string(m.rep(), mod_->var, std::function<std::string(const A&)>(
                                                                   [this](const A& a) { return base_.format(a); }));
        };
        if (x.has_unit_denominator()) return show(x.num());
        return "(" + show(x.num()) + ")/(" + show(x.den()) + ")";
    }

private:
    Base base_;
    UniPoly<A> f_;
    unsigned depth_;
    typename ModElement<A>::modulus_ptr mod_;
    std::shared_ptr<const beta_context> beta_;
};

/// The local morphism A_f -> C determined by a zero c of f in C with residue 0:
/// num/den maps to num(c) den(c)^{-1}.
template <class A, class T>
struct LocalMorphism {
    std::function<T(const A&)> coefficient;
    T zero;
    std::function<bool(const T&)> is_unit;
    std::function<T(const T&)> inverse;

    T evaluate(const ModElement<A>& p) const {
        T acc(0);
        const auto& c = p.rep().coeffs();
        for (std::size_t i = c.size(); i-- > 0;) acc = T(acc * zero + coefficient(c[i]));
        return acc;
    }
    T operator()(const AfElement<A>& x) const {
        T d = evaluate(x.den());
        if (!is_unit(d)) throw precondition_error("denominator image is not a unit of the target");
        return T(evaluate(x.num()) * inverse(d));
    }
};

/// The factorization through K[beta] with zero beta; agrees with theta_f.
template <class Base>
LocalMorphism<typename Base::element_type, ModElement<typename Base::field_type::element_type>>
factor_through_beta(const StageContext<Base>& ctx) {
    using A = typename Base::element_type;
    using T = ModElement<typename Base::field_type::element_type>;
    using E = typename Base::field_type::element_type;
    auto beta = ctx.beta_ptr();
    Base base = ctx.base();
    return {[base](const A& a) { return T(E(base.theta(a))); }, beta->beta(),
            [beta](const T& t) { return beta->valuation(t).is_zero(); },
            [beta](const T& t) { return beta->invert(t); }};
}

/// The factorization through A_f itself with zero alpha: the identity.
template <class Base>
LocalMorphism<typename Base::element_type, AfElement<typename Base::element_type>>
factor_through_self(const StageContext<Base>& ctx) {
    using A = typename Base::element_type;
    using T = AfElement<A>;
    auto self = std::make_shared<const StageContext<Base>>(ctx);
    return {[self](const A& a) { return self->constant(a); }, self->alpha(),
            [self](const T& t) { return self->is_unit(t); },
            [](const T& t) { return T(t.den(), t.num()); }};
}

} // namespace henselize
