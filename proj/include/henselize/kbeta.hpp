#pragma once

// The extension K[beta], beta the Hensel zero of a Nagata polynomial f over V.
// Elements are classes q(x) in K[X]/<f>; zero test and valuation of q(beta)
// compare the root valuations of the characteristic polynomials of q(x) and
// x*q(x). The conjugates of beta other than beta itself have valuation 0, so
// multiplying by x raises exactly one finite root valuation, the one
// belonging to q(beta), by w_n = v(f(0)); nothing moves iff q(beta) = 0.

#include <algorithm>
#include <iterator>
#include <memory>
#include <string>
#include <type_traits>
#include <vector>

#include "completion.hpp"
#include "errors.hpp"
#include "hensel.hpp"
#include "newton.hpp"
#include "unipoly.hpp"
#include "valgroup.hpp"
#include "valuedfield.hpp"

namespace henselize {

template <class Field>
struct ZeroTest {
    using E = typename Field::element_type;
    UniPoly<E> g;                         ///< char poly of q(x)
    UniPoly<E> g1;                        ///< char poly of x q(x)
    std::vector<ExtendedValue> before;    ///< root valuations of g
    std::vector<ExtendedValue> after;     ///< root valuations of g1
    bool zero = false;
    ExtendedValue value;                  ///< v(q(beta))
};

template <class Field>
struct ImmediateDescription {
    typename Field::element_type a;
    ExtendedValue gap;  ///< exact v(q(beta) - a)
};

inline long rank_one_integer(const ValueVector& v) {
    if (v.rank() != 1 || !v.is_integral()) throw hard_fault("expected an integral rank-1 value, got " + v.to_string());
    return v[0].get_num().get_si();
}

template <class Field>
class BetaContext {
public:
    using field_type = Field;
    using E = typename Field::element_type;
    using element = ModElement<E>;

    BetaContext(Field field, UniPoly<E> f, std::string var = "x") : field_(std::move(field)), f_(std::move(f)) {
        if (f_.degree() < 1 || !field_.is_zero(E(f_.leading() - E(1))))
            throw precondition_error("f must be monic of degree >= 1");
        CheckResult ng = check_nagata(f_, valuation_ring_predicates(field_));
        if (!ng.ok) throw precondition_error("f is not a Nagata polynomial over V: " + ng.diagnostics.front());
        w_n_ = field_.valuation(f_.coeff(0));
        mod_ = element::make_modulus(f_, std::move(var));
    }

    const Field& field() const { return field_; }
    const UniPoly<E>& f() const { return f_; }
    std::size_t degree() const { return static_cast<std::size_t>(f_.degree()); }
    const ExtendedValue& w_n() const { return w_n_; }
    const typename element::modulus_ptr& modulus() const { return mod_; }

    element make(const UniPoly<E>& q) const { return element(q, mod_); }
    element beta() const { return element::generator(mod_); }

    ZeroTest<Field> analyze(const UniPoly<E>& q) const {
        ZeroTest<Field> zt;
        const UniPoly<E> y = mod_monic(q, f_);
        zt.g = char_poly_mod(f_, y);
        zt.g1 = char_poly_mod(f_, mod_monic(y.shifted(1), f_));
        zt.before = root_valuations(zt.g, field_);
        zt.after = root_valuations(zt.g1, field_);
        std::vector<ExtendedValue> lost, gained;
        std::set_difference(zt.before.begin(), zt.before.end(), zt.after.begin(), zt.after.end(),
                            std::back_inserter(lost));
        std::set_difference(zt.after.begin(), zt.after.end(), zt.before.begin(), zt.before.end(),
                            std::back_inserter(gained));
        if (lost.empty() && gained.empty()) {
            zt.zero = true;
            zt.value = ExtendedValue::infinity();
            return zt;
        }
        if (lost.size() == 1 && gained.size() == 1 && lost[0].is_finite() && gained[0] == lost[0] + w_n_) {
            zt.value = lost[0];
            return zt;
        }
        throw hard_fault("root valuation multisets " + to_string(zt.before) + " and " + to_string(zt.after) +
                         " differ by more than one shift of w_n = " + w_n_.to_string());
    }

    bool is_zero(const UniPoly<E>& q) const { return analyze(q).zero; }
    bool is_zero(const element& e) const { return is_zero(e.rep()); }
    ExtendedValue valuation(const UniPoly<E>& q) const { return analyze(q).value; }
    ExtendedValue valuation(const element& e) const { return valuation(e.rep()); }
    bool equal(const element& a, const element& b) const { return is_zero(a - b); }

    /// g(T) = T^k h(T) with h(0) != 0; h(delta) = 0 in the field K[beta], hence
    /// delta^{-1} = -(h_1 + h_2 delta + ... + h_m delta^{m-1}) / h_0.
    element invert(const element& e) const {
        if (is_zero(e)) throw precondition_error("inverse of zero in K[beta]");
        const UniPoly<E> g = char_poly_mod(f_, e.rep());
        std::size_t k = 0;
        while (field_.is_zero(g.coeff(k))) ++k;
        const UniPoly<E> h = g.unshifted(k);
        const E scale = E(-field_.inverse(h.coeff(0)));
        element acc(0);
        for (std::size_t i = h.size(); i-- > 1;) acc = acc * e + element(h.coeffs()[i]);
        return element(E(scale)) * acc;
    }
    element invert(const UniPoly<E>& q) const { return invert(make(q)); }

    /// a in K with v(q(beta) - a) >= v(q(beta)) + depth, read off a lift of
    /// beta in the completion; the returned gap is recomputed exactly.
    ImmediateDescription<Field> immediate_description(const UniPoly<E>& q, unsigned depth) const {
        if (depth == 0) throw precondition_error("depth must be positive");
        const UniPoly<E> y = mod_monic(q, f_);
        if (y.degree() <= 0) return {y.coeff(0), ExtendedValue::infinity()};
        const ExtendedValue ve = valuation(y);
        if (ve.is_infinite()) throw precondition_error("immediate description of zero");
        const long v = rank_one_integer(ve.value());

        ImmediateDescription<Field> out;
        if constexpr (std::is_same_v<Field, PadicField>) {
            const unsigned long p = field_.prime();
            long s = 0;
            for (const auto& c : y.coeffs())
                if (c != 0) s = std::max(s, -padic_order(c, p));
            const Rational ps = Rational(ipow(Integer(p), static_cast<unsigned long>(s)));
            const long m = v + s + static_cast<long>(depth);
            if (m <= 0) throw hard_fault("scaled element has negative valuation");
            PadicCompletion comp(p, static_cast<unsigned>(m));
            const Integer b = lift_hensel_zero(f_, comp);
            const Integer e = eval_in(comp, Rational(ps) * y, b);
            out.a = Rational(comp.truncate(e, static_cast<unsigned>(m))) / ps;
        } else if constexpr (std::is_same_v<Field, TadicField>) {
            long s = 0;
            for (const auto& c : y.coeffs())
                if (!c.is_zero()) s = std::max(s, -rank_one_integer(field_.valuation(c).value()));
            const RatFunc ts(QPoly::monomial(Rational(1), static_cast<std::size_t>(s)));
            const long m = v + s + static_cast<long>(depth);
            if (m <= 0) throw hard_fault("scaled element has negative valuation");
            SeriesCompletion comp(static_cast<unsigned>(m));
            const auto b = lift_hensel_zero(f_, comp);
            const auto e = eval_in(comp, ts * y, b);
            out.a = RatFunc(comp.truncate(e, static_cast<unsigned>(m)), ts.num());
        } else {
            throw precondition_error("immediate descriptions are only available over rank-1 base fields");
        }
        out.gap = valuation(y - UniPoly<E>::constant(out.a));
        if (out.gap < ExtendedValue(ve.value() + ValueVector({static_cast<long>(depth)})))
            throw hard_fault("immediate description gap below the requested depth");
        return out;
    }

    std::string format(const element& e) const { return henselize::to_string(e.rep(), mod_->var, formatter()); }
    std::function<std::string(const E&)> formatter() const {
        return [field = field_](const E& c) { return field.format(c); };
    }

private:
    Field field_;
    UniPoly<E> f_;
    ExtendedValue w_n_;
    typename element::modulus_ptr mod_;
};

/// K[beta] presented as a valued field, so that it can carry a further stage.
template <class Field>
class BetaField {
public:
    using element_type = ModElement<typename Field::element_type>;
    using context_type = BetaContext<Field>;

    explicit BetaField(std::shared_ptr<const context_type> ctx) : ctx_(std::move(ctx)) {}

    const context_type& context() const { return *ctx_; }
    const std::shared_ptr<const context_type>& context_ptr() const { return ctx_; }

    std::size_t rank() const { return ctx_->field().rank(); }
    ExtendedValue valuation(const element_type& x) const { return ctx_->valuation(x); }
    bool is_zero(const element_type& x) const { return ctx_->is_zero(x); }
    element_type inverse(const element_type& x) const { return ctx_->invert(x); }
    std::string format(const element_type& x) const { return ctx_->format(x); }
    std::string name() const { return ctx_->field().name() + "[" + ctx_->modulus()->var + "]"; }

private:
    std::shared_ptr<const context_type> ctx_;
};

} // namespace henselize
