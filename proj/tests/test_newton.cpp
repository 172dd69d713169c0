#include <gtest/gtest.h>

#include "support.hpp"

using namespace henselize;
using henselize::fixtures::Q;

TEST(NewtonPolygon, WorkedExamples) {
    PadicField F(2);
    EXPECT_EQ(to_string(root_valuations(QPoly{Q(2), Q(1), Q(1)}, F)), "{[0], [1]}");
    EXPECT_EQ(to_string(root_valuations(QPoly{Q(4), Q(3), Q(1)}, F)), "{[0], [2]}");
    // X^3 - 8 has one slope of length 3
    EXPECT_EQ(to_string(root_valuations(QPoly{Q(-8), Q(0), Q(0), Q(1)}, F)), "{[1], [1], [1]}");
    EXPECT_TRUE(isolated_slopes(QPoly{Q(-8), Q(0), Q(0), Q(1)}, F).empty());
    // X^2 - 2: the slope 1/2 leaves the value group
    EXPECT_EQ(to_string(root_valuations(QPoly{Q(-2), Q(0), Q(1)}, F)), "{[1/2], [1/2]}");
}

TEST(NewtonPolygon, ZeroRootsAreInfinite) {
    PadicField F(3);
    QPoly p = QPoly{Q(3), Q(1)}.shifted(2);
    NewtonPolygon np = polygon(p, F);
    EXPECT_EQ(np.trailing_zero_count, 2u);
    EXPECT_EQ(to_string(root_valuations(p, F)), "{[1], inf, inf}");
}

TEST(NewtonPolygon, Preconditions) {
    PadicField F(2);
    EXPECT_THROW(polygon(QPoly(), F), precondition_error);
    EXPECT_THROW(root_valuations(QPoly{Q(1), Q(2)}, F), precondition_error);
}

TEST(NewtonPolygon, MonomialValuesAreLexicographic) {
    MonomialField F;
    using P = UniPoly<MultiFrac>;
    // (X - u)(X - w): root values [1, 0] and [0, 1]
    MultiFrac u(MultiPoly::u()), w(MultiPoly::w());
    P p = P{MultiFrac(0) - u, MultiFrac(1)} * P{MultiFrac(0) - w, MultiFrac(1)};
    EXPECT_EQ(to_string(root_valuations(p, F)), "{[0, 1], [1, 0]}");
}

// Brute-force hull check: every point lies on or above each edge line, the
// vertices are points, and the edge lengths add up to the degree span.
TEST(NewtonPolygonProperty, HullIsLowerConvex) {
    Rng rng(61);
    PadicField F(3);
    for (int i = 0; i < 200; ++i) {
        const int d = static_cast<int>(uniform(rng, 1, 7));
        std::vector<Rational> c;
        for (int j = 0; j < d; ++j)
            c.push_back(coin(rng, 0.2) ? Q(0) : Rational(fixtures::random_integer_with_valuation(rng, 3, uniform(rng, 0, 4))));
        c.push_back(Q(1));
        QPoly p(c);
        NewtonPolygon np = polygon(p, F);
        std::size_t span = 0;
        for (const auto& e : np.edges) {
            span += e.length();
            for (const auto& pt : np.points) {
                // value(pt) >= value(from) + slope * (pt.index - from.index), compared exactly
                const auto from = std::find_if(np.points.begin(), np.points.end(),
                                               [&](const PolygonPoint& q) { return q.index == e.from; });
                ASSERT_NE(from, np.points.end());
                const Rational lhs = pt.value[0];
                const Rational rhs = from->value[0] + e.slope[0] * Rational(static_cast<long>(pt.index) - static_cast<long>(e.from));
                EXPECT_GE(lhs, rhs);
            }
        }
        EXPECT_EQ(span, static_cast<std::size_t>(d) - np.trailing_zero_count);
        for (std::size_t k = 1; k < np.edges.size(); ++k) EXPECT_LT(np.edges[k - 1].slope, np.edges[k].slope);
        // isolated slopes are exactly the length-one edges
        std::vector<std::size_t> expect;
        for (const auto& e : np.edges)
            if (e.length() == 1) expect.push_back(e.from);
        EXPECT_EQ(isolated_slopes(np), expect);
    }
}

// Root valuations of a product are the union of the factors' valuations.
TEST(NewtonPolygonProperty, MultiplicativeInFactors) {
    Rng rng(62);
    TadicField F;
    for (int i = 0; i < 150; ++i) {
        auto factor = [&] {
            const long k = uniform(rng, 0, 3);
            RatFunc r = RatFunc(Q(uniform(rng, 1, 5)));
            for (long j = 0; j < k; ++j) r = r * RatFunc::t();
            return UniPoly<RatFunc>{RatFunc(0) - r, RatFunc(1)};
        };
        UniPoly<RatFunc> a = factor(), b = factor() * factor();
        auto va = root_valuations(a, F), vb = root_valuations(b, F);
        va.insert(va.end(), vb.begin(), vb.end());
        EXPECT_EQ(root_valuations(a * b, F), fixtures::sorted(va));
    }
}

TEST(NewtonPolygonProperty, AgreesWithOracleOnSplittingPolynomials) {
    Rng rng(63);
    for (unsigned long p : {2UL, 3UL, 5UL}) {
        PadicField F(p);
        for (int i = 0; i < 40; ++i) {
            std::vector<ExtendedValue> expected;
            QPoly poly = fixtures::random_split_poly(rng, p, expected);
            EXPECT_EQ(root_valuations(poly, F), expected) << to_string(poly, "X");
            auto oracle = exhaustive_root_valuations(poly, p, 20);
            EXPECT_EQ(oracle.unresolved, 0u);
            EXPECT_EQ(oracle.valuations, expected) << to_string(poly, "X");
        }
    }
}
