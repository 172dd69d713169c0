#pragma once

// Finite towers (...(A_{f1})_{f2}...)_{fm}. A stage A_f is itself a local ring
// carrying the valuation v o theta_f into K[beta], so it can serve as the base
// of the next stage. Its minimality witnesses come from the kernel
// certificates of the stage below: if b^N h(y)^N y^{Nk} = 0 in A[x] then
// b' = b^N h(y)^N lies outside the kernel and b' y is nilpotent.

#include <memory>
#include <optional>
#include <string>

#include "errors.hpp"
#include "hensel.hpp"
#include "henselstage.hpp"
#include "kernel.hpp"
#include "kbeta.hpp"

namespace henselize {

inline constexpr unsigned default_tower_depth = 3;

template <class Base>
class StageRing {
public:
    using stage_type = StageContext<Base>;
    using base_element = typename Base::element_type;
    using element_type = AfElement<base_element>;
    using field_type = BetaField<typename Base::field_type>;

    explicit StageRing(std::shared_ptr<const stage_type> stage) : stage_(std::move(stage)), field_(stage_->beta_ptr()) {}

    const stage_type& stage() const { return *stage_; }
    const field_type& field() const { return field_; }

    bool contains(const element_type&) const { return true; }
    typename field_type::element_type theta(const element_type& x) const { return stage_->theta_f(x).value; }
    ExtendedValue valuation(const element_type& x) const { return field_.valuation(theta(x)); }
    bool is_zero(const element_type& x) const { return is_zero_rep(x); }
    bool is_unit(const element_type& x) const { return stage_->is_unit(x); }
    Rational residue(const element_type& x) const { return stage_->residue(x); }
    ResidueField residue_field() const { return stage_->base().residue_field(); }

    std::optional<unsigned> nilpotency_index(const element_type& x) const {
        element_type p = x;
        for (unsigned n = 1; n <= kernel_nilpotency_cap; ++n) {
            if (is_zero_rep(p)) return n;
            p = p * x;
        }
        return std::nullopt;
    }

    /// For theta_f(a) = 0: decide the kernel at the stage below for the
    /// numerator of a (its denominator is a unit) and push the certificate up.
    element_type witness(const element_type& a) const {
        if (!field_.is_zero(theta(a)))
            throw precondition_error("minimality witness requested for an element of finite valuation");
        if (is_zero_rep(a)) return element_type(1);
        const auto y = a.num().rep();
        const auto decision = decide_kernel(*stage_, y);
        const auto* cert = std::get_if<Annihilator<base_element>>(&decision);
        if (!cert) throw hard_fault("element of the kernel was decided outside it");
        const ModElement<base_element> Y = stage_->poly(y);
        const ModElement<base_element> hy =
            eval(cert->h.map([](const base_element& c) { return ModElement<base_element>(c); }), Y);
        const element_type b(pow(ModElement<base_element>(cert->b), cert->N) * pow(hy, cert->N));
        const unsigned m = cert->N * static_cast<unsigned>(cert->k);
        if (!is_zero_rep(pow(b * a, m))) throw hard_fault("pushed-up witness does not make b a nilpotent");
        return b;
    }

    bool is_reduced() const { return stage_->base().is_reduced(); }
    bool is_domain() const { return false; }
    std::string format(const element_type& x) const { return stage_->format(x); }
    std::string name() const { return stage_->base().name() + "_f" + std::to_string(stage_->depth()); }

private:
    std::shared_ptr<const stage_type> stage_;
    field_type field_;
};

/// Next stage for a special polynomial t over the current stage:
/// f = t(X + 1), with the class of X named x{depth}.
template <class Base>
StageContext<StageRing<Base>> tower_extend(std::shared_ptr<const StageContext<Base>> stage,
                                           const UniPoly<AfElement<typename Base::element_type>>& t,
                                           unsigned max_depth = default_tower_depth) {
    const unsigned depth = stage->depth() + 1;
    if (depth > max_depth)
        throw precondition_error("tower depth " + std::to_string(depth) + " exceeds the bound " +
                                 std::to_string(max_depth));
    StageRing<Base> ring(stage);
    auto f = special_to_nagata(t, local_ring_predicates(ring));
    return StageContext<StageRing<Base>>(std::move(ring), std::move(f), "x" + std::to_string(depth), depth);
}

} // namespace henselize
