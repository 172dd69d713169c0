#include <gtest/gtest.h>

#include "support.hpp"

using namespace henselize;
using henselize::fixtures::Q;

TEST(SquareFree, DecompositionReconstructs) {
    Rng rng(111);
    for (int i = 0; i < 100; ++i) {
        QPoly a = monic_part(random_qpoly(rng, 1, 4) + QPoly::monomial(Q(1), 2));
        QPoly b = QPoly{Q(uniform(rng, -5, 5)), Q(1)};
        QPoly p = a * b * b * b;
        auto parts = squarefree_decomposition(p);
        QPoly rebuilt = QPoly::constant(Q(1));
        for (std::size_t m = 0; m < parts.size(); ++m) rebuilt = rebuilt * pow(parts[m], static_cast<unsigned>(m + 1));
        EXPECT_EQ(rebuilt, p);
    }
}

TEST(SquareFree, SquareTests) {
    EXPECT_TRUE(is_square(Q(9, 4)));
    EXPECT_FALSE(is_square(Q(-1)));
    EXPECT_FALSE(is_square(Q(2)));
    EXPECT_TRUE(is_square(QPoly{Q(1), Q(2), Q(1)}));
    EXPECT_FALSE(is_square(QPoly{Q(0), Q(1)}));
    EXPECT_TRUE(is_square(RatFunc(QPoly{Q(4), Q(4), Q(1)}, QPoly{Q(0), Q(0), Q(1)})));
    EXPECT_FALSE(is_square(RatFunc(QPoly{Q(1), Q(-4)})));
}

TEST(Oracle, ExhaustiveRootsOfSplitPolynomials) {
    auto o = exhaustive_root_valuations(fixtures::from_roots({Integer(2), Integer(12), Integer(5)}), 2, 20);
    EXPECT_EQ(o.unresolved, 0u);
    EXPECT_EQ(to_string(o.valuations), "{[0], [1], [2]}");
    // a double root counts twice
    auto d = exhaustive_root_valuations(fixtures::from_roots({Integer(3), Integer(3), Integer(1)}), 3, 10);
    EXPECT_EQ(to_string(d.valuations), "{[0], [1], [1]}");
    // close roots are separated by the discriminant bound
    auto c = exhaustive_root_valuations(fixtures::from_roots({Integer(1), Integer(1 + 1024)}), 2, 5);
    EXPECT_EQ(to_string(c.valuations), "{[0], [0]}");
}

TEST(Oracle, UnresolvedRootsOutsideZp) {
    auto o = exhaustive_root_valuations(QPoly{Q(-2), Q(0), Q(1)}, 2, 10);
    EXPECT_EQ(o.unresolved, 2u);
    EXPECT_TRUE(o.valuations.empty());
}

TEST(Oracle, Preconditions) {
    EXPECT_THROW(exhaustive_root_valuations(QPoly{Q(1), Q(2)}, 2, 10), precondition_error);
    EXPECT_THROW(exhaustive_root_valuations(QPoly{Q(1), Q(1)}, 4, 10), precondition_error);
    EXPECT_THROW(exhaustive_root_valuations(QPoly{Q(1), Q(1)}, 2, 0), precondition_error);
    EXPECT_THROW(exhaustive_root_valuations(QPoly{Q(1, 2), Q(1)}, 2, 10), precondition_error);
}

TEST(Completion, HenselLiftConverges) {
    PadicCompletion comp(2, 40);
    QPoly f{Q(2), Q(1), Q(1)};
    Integer r = lift_hensel_zero(f, comp);
    EXPECT_TRUE(comp.is_zero(eval_in(comp, f, r)));
    EXPECT_EQ(comp.valuation(r), std::optional<long>(1));

    SeriesCompletion series(12);
    UniPoly<RatFunc> g{RatFunc::t(), RatFunc(1), RatFunc(1)};
    auto s = lift_hensel_zero(g, series);
    EXPECT_TRUE(series.is_zero(eval_in(series, g, s)));
    EXPECT_EQ(series.valuation(s), std::optional<long>(1));
}

TEST(Completion, CodeLiftFromAnApproximateRoot) {
    PadicCompletion comp(5, 30);
    QPoly g{Q(1), Q(0), Q(1)};  // X^2 + 1 has the roots +-2 mod 5
    Integer r = lift_code_zero(g, Q(2), comp);
    EXPECT_TRUE(comp.is_zero(eval_in(comp, g, r)));
    EXPECT_EQ(comp.truncate(r, 1), 2);
}

TEST(GroundTruth, ContextConstruction) {
    PadicField F(2);
    auto gt = build_ground_truth_context(F, QPoly{Q(2), Q(1), Q(1)}, QPoly{Q(1), Q(1), Q(1)});
    EXPECT_EQ(gt.context->degree(), 4u);
    EXPECT_TRUE(gt.vanishes(gt.f1 * QPoly{Q(3), Q(1)}));
    EXPECT_FALSE(gt.vanishes(gt.f2));
    // X^2 + X - 6 splits: no irreducibility certificate
    EXPECT_THROW(build_ground_truth_context(F, QPoly{Q(-6), Q(1), Q(1)}, QPoly{Q(1), Q(1)}), precondition_error);
    // f2 with a root in m is refused
    EXPECT_THROW(build_ground_truth_context(F, QPoly{Q(2), Q(1), Q(1)}, QPoly{Q(2), Q(1)}), precondition_error);
}
