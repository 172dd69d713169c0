#include <gtest/gtest.h>

#include "support.hpp"

using namespace henselize;
using henselize::fixtures::Q;

TEST(Kernel, DomainCertificate) {
    StageContext<PadicDomain> ctx(PadicDomain(2), QPoly{Q(2), Q(3), Q(1)});
    const QPoly q{Q(2), Q(1)};
    auto d = decide_kernel(ctx, q);
    const auto* c = std::get_if<Annihilator<Rational>>(&d);
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->b, 1);
    EXPECT_EQ(c->h, (QPoly{Q(-1), Q(1)}));
    EXPECT_EQ(c->k, 1u);
    EXPECT_EQ(c->N, 1u);
    EXPECT_TRUE(c->identity_checked);
    EXPECT_TRUE(verify_certificate(ctx, q, d));
}

TEST(Kernel, ReducedQuotientCertificate) {
    using L = LocalElement<UWZero>;
    StageContext<UWZeroPreset> ctx(UWZeroPreset(), UniPoly<L>{L::w(), L(1), L(1)});
    auto d = decide_kernel(ctx, UniPoly<L>{L::u()});
    const auto* c = std::get_if<Annihilator<L>>(&d);
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->b.to_string(), "w^2");
    EXPECT_EQ(c->h, UniPoly<L>{L(1)});
    EXPECT_EQ(c->k, 2u);
    EXPECT_EQ(c->N, 1u);
    EXPECT_TRUE(c->reduced_identity);
}

TEST(Kernel, NonReducedCertificate) {
    using L = LocalElement<USquareUWZero>;
    StageContext<USquarePreset> ctx(USquarePreset(), UniPoly<L>{L::w(), L(1), L(1)});
    auto d = decide_kernel(ctx, UniPoly<L>{L::u()});
    const auto* c = std::get_if<Annihilator<L>>(&d);
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->b.to_string(), "1");
    EXPECT_EQ(c->h, UniPoly<L>{L(1)});
    EXPECT_EQ(c->k, 2u);
    EXPECT_EQ(c->N, 2u);
    EXPECT_TRUE(verify_certificate(ctx, UniPoly<L>{L::u()}, d));
}

TEST(Kernel, NonzeroImageIsInSf) {
    StageContext<PadicDomain> ctx(PadicDomain(2), QPoly{Q(2), Q(3), Q(1)});
    auto d = decide_kernel(ctx, QPoly{Q(1), Q(1)});
    ASSERT_TRUE(std::holds_alternative<InSf>(d));
    EXPECT_EQ(std::get<InSf>(d).delta_valuation.to_string(), "[0]");
}

TEST(Kernel, TamperedCertificatesAreRejected) {
    StageContext<PadicDomain> ctx(PadicDomain(2), QPoly{Q(2), Q(3), Q(1)});
    const QPoly q{Q(2), Q(1)};
    auto d = decide_kernel(ctx, q);
    auto c = std::get<Annihilator<Rational>>(d);
    auto bad = c;
    bad.h = QPoly{Q(1), Q(1)};
    EXPECT_FALSE(verify_certificate(ctx, q, KernelDecision<Rational>(bad)));
    bad = c;
    bad.b = 0;
    EXPECT_FALSE(verify_certificate(ctx, q, KernelDecision<Rational>(bad)));
    bad = c;
    bad.k = 0;
    EXPECT_FALSE(verify_certificate(ctx, q, KernelDecision<Rational>(bad)));
    EXPECT_FALSE(verify_certificate(ctx, q, KernelDecision<Rational>(InSf{ValueVector{0}})));
    EXPECT_FALSE(verify_certificate(ctx, QPoly{Q(1), Q(1)}, KernelDecision<Rational>(InSf{ValueVector{3}})));
}

template <class Preset>
void check_random_decisions(const Preset& ring, std::uint64_t seed) {
    using A = typename Preset::element_type;
    Rng rng(seed);
    Sampler<Preset> s(ring);
    std::size_t annihilated = 0;
    for (int i = 0; i < 80; ++i) {
        const int n = static_cast<int>(uniform(rng, 1, 3));
        StageContext<Preset> ctx(ring, random_nagata(rng, s, n));
        std::vector<UniPoly<A>> qs;
        for (int j = 0; j < 3; ++j) qs.push_back(random_poly<A>(rng, n - 1, [&](Rng& r) { return s.element(r); }));
        // f itself and multiples of it always land in the kernel
        qs.push_back(ctx.f() * UniPoly<A>{s.element(rng)});
        auto rep = minimality_report(ctx, qs);
        EXPECT_EQ(rep.verified, rep.samples);
        EXPECT_TRUE(rep.faults.empty()) << (rep.faults.empty() ? "" : rep.faults.front());
        annihilated += rep.annihilated;
        for (const auto& q : qs) {
            auto d = decide_kernel(ctx, q);
            if (const auto* c = std::get_if<Annihilator<A>>(&d)) {
                if (ring.is_reduced()) EXPECT_EQ(c->N, 1u);
                if (ring.is_domain()) EXPECT_TRUE(ring.is_zero(A(c->b - A(1))));
            }
        }
    }
    EXPECT_GT(annihilated, 0u);
}

TEST(KernelProperty, DecisionsVerifyOnEveryPreset) {
    check_random_decisions(PadicDomain(3), 101);
    check_random_decisions(TadicDomain(), 102);
    check_random_decisions(MonomialDomain(), 103);
    check_random_decisions(UWZeroPreset(), 104);
    check_random_decisions(USquarePreset(), 105);
}

TEST(Kernel, MinimalityReportNeedsSamples) {
    StageContext<PadicDomain> ctx(PadicDomain(2), QPoly{Q(2), Q(3), Q(1)});
    EXPECT_THROW(minimality_report(ctx, {}), precondition_error);
}
