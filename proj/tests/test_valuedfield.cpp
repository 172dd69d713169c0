#include <gtest/gtest.h>

#include "support.hpp"

using namespace henselize;
using henselize::fixtures::Q;

TEST(PadicField, ValuationAndResidue) {
    PadicField F(3);
    EXPECT_EQ(F.valuation(Q(18, 5)).to_string(), "[2]");
    EXPECT_EQ(F.valuation(Q(5, 27)).to_string(), "[-3]");
    EXPECT_TRUE(F.valuation(Q(0)).is_infinite());
    EXPECT_EQ(F.residue(Q(5, 7)), 2);  // 5 * 7^-1 = 2 * 1 mod 3
    EXPECT_THROW(F.residue(Q(3)), precondition_error);
    EXPECT_THROW(PadicField(4), precondition_error);
    EXPECT_THROW(PadicField(101), precondition_error);
}

TEST(TadicField, ValuationAndResidue) {
    TadicField F;
    RatFunc x(QPoly{Q(0), Q(0), Q(3), Q(1)}, QPoly{Q(2), Q(1)});
    EXPECT_EQ(F.valuation(x).to_string(), "[2]");
    EXPECT_EQ(F.valuation(RatFunc::t().inverse()).to_string(), "[-1]");
    EXPECT_EQ(F.residue(RatFunc(QPoly{Q(4), Q(1)}, QPoly{Q(2), Q(1)})), 2);
}

TEST(MonomialField, LexicographicValues) {
    MonomialField F;
    MultiFrac x(MultiPoly::u() + MultiPoly::w() * MultiPoly::w() * MultiPoly::w());
    EXPECT_EQ(F.valuation(x).to_string(), "[0, 3]");
    EXPECT_EQ(F.valuation(MultiFrac(MultiPoly::w(), MultiPoly::u())).to_string(), "[-1, 1]");
    EXPECT_EQ(F.residue(MultiFrac(MultiPoly(3) + MultiPoly::u(), MultiPoly(2))), Q(3, 2));
}

template <class Field, class Gen>
void check_valuation_axioms(const Field& F, Gen&& gen, int samples) {
    using E = typename Field::element_type;
    for (int i = 0; i < samples; ++i) {
        E a = gen(), b = gen();
        const ExtendedValue va = F.valuation(a), vb = F.valuation(b);
        EXPECT_EQ(F.valuation(E(a * b)), va + vb);
        const ExtendedValue vs = F.valuation(E(a + b));
        EXPECT_GE(vs, std::min(va, vb));
        if (va != vb) EXPECT_EQ(vs, std::min(va, vb));
        if (!F.is_zero(a)) EXPECT_EQ(F.valuation(F.inverse(a)) + va, ExtendedValue(ValueVector::zero(F.rank())));
    }
}

TEST(ValuationProperty, PadicAxioms) {
    Rng rng(31);
    Sampler<PadicDomain> s(PadicDomain(2));
    check_valuation_axioms(PadicField(2), [&] { return s.field_element(rng); }, 300);
}

TEST(ValuationProperty, TadicAxioms) {
    Rng rng(32);
    Sampler<TadicDomain> s{TadicDomain()};
    check_valuation_axioms(TadicField(), [&] { return s.field_element(rng); }, 300);
}

TEST(ValuationProperty, MonomialAxioms) {
    Rng rng(33);
    Sampler<MonomialDomain> s{MonomialDomain()};
    check_valuation_axioms(MonomialField(), [&] { return s.field_element(rng); }, 300);
}

// Domination: units of A are exactly the elements of value 0, and the
// residue map agrees with the field's residue map.
template <class Preset>
void check_domination(const Preset& ring, std::uint64_t seed) {
    Rng rng(seed);
    Sampler<Preset> s(ring);
    const auto& F = ring.field();
    for (int i = 0; i < 300; ++i) {
        auto a = s.element(rng);
        ASSERT_TRUE(ring.contains(a));
        const ExtendedValue v = F.valuation(ring.theta(a));
        EXPECT_TRUE(v.is_nonnegative());
        EXPECT_EQ(ring.is_unit(a), v.is_zero()) << ring.format(a);
        if (ring.is_unit(a)) EXPECT_EQ(ring.residue(a), F.residue(ring.theta(a)));
        auto m = s.maximal(rng);
        EXPECT_FALSE(ring.is_unit(m));
    }
}

TEST(PresetProperty, DominationHolds) {
    check_domination(PadicDomain(2), 41);
    check_domination(PadicDomain(5), 42);
    check_domination(TadicDomain(), 43);
    check_domination(MonomialDomain(), 44);
    check_domination(UWZeroPreset(), 45);
    check_domination(USquarePreset(), 46);
}

template <class Preset>
void check_witnesses(const Preset& ring, std::uint64_t seed) {
    Rng rng(seed);
    Sampler<Preset> s(ring);
    using A = typename Preset::element_type;
    int seen = 0;
    for (int i = 0; i < 400; ++i) {
        A a = s.maximal(rng);
        if (!ring.field().is_zero(ring.theta(a))) {
            EXPECT_THROW(ring.witness(a), precondition_error);
            continue;
        }
        ++seen;
        A b = ring.witness(a);
        EXPECT_FALSE(ring.field().is_zero(ring.theta(b)));
        bool nilpotent = false;
        for (unsigned n = 1; n <= 4 && !nilpotent; ++n) nilpotent = ring.is_zero(pow(A(b * a), n));
        EXPECT_TRUE(nilpotent) << ring.format(a);
    }
    EXPECT_GT(seen, 20);
}

TEST(PresetProperty, WitnessesMakeKernelElementsNilpotent) {
    check_witnesses(UWZeroPreset(), 51);
    check_witnesses(USquarePreset(), 52);
}

TEST(Presets, NamesAndReducedness) {
    EXPECT_EQ(PadicDomain(2).name(), "padic");
    EXPECT_EQ(TadicDomain().name(), "tadic");
    EXPECT_EQ(MonomialDomain().name(), "monomial");
    EXPECT_EQ(UWZeroPreset().name(), "uwzero");
    EXPECT_EQ(USquarePreset().name(), "usquare");
    EXPECT_TRUE(UWZeroPreset().is_reduced());
    EXPECT_FALSE(USquarePreset().is_reduced());
    EXPECT_TRUE(MonomialDomain().is_domain());
}
