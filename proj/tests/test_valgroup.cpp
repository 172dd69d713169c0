#include <gtest/gtest.h>

#include "support.hpp"

using namespace henselize;
using henselize::fixtures::Q;

TEST(ValueVector, LexicographicOrder) {
    EXPECT_LT((ValueVector{0, 5}), (ValueVector{1, -3}));
    EXPECT_LT((ValueVector{1, -3}), (ValueVector{1, 0}));
    EXPECT_EQ((ValueVector{2, 1}), (ValueVector{2, 1}));
    EXPECT_GT((ValueVector{0, 1}), ValueVector::zero(2));
}

TEST(ValueVector, Arithmetic) {
    ValueVector a{1, 2}, b{3, -1};
    EXPECT_EQ(a + b, (ValueVector{4, 1}));
    EXPECT_EQ(a - b, (ValueVector{-2, 3}));
    EXPECT_EQ(3 * a, (ValueVector{3, 6}));
    EXPECT_EQ(-a, (ValueVector{-1, -2}));
    EXPECT_TRUE(ValueVector::zero(3).is_zero());
}

TEST(ValueVector, RankMismatchIsRejected) {
    EXPECT_THROW((void)(ValueVector{1} + ValueVector{1, 2}), precondition_error);
    EXPECT_THROW((void)(ValueVector{1} < ValueVector{1, 2}), precondition_error);
}

TEST(ValueVector, DivisionLeavesTheLattice) {
    ValueVector half = div_by_int(ValueVector{1, 2}, 2);
    EXPECT_EQ(half.to_string(), "[1/2, 1]");
    EXPECT_FALSE(half.is_integral());
    EXPECT_TRUE(div_by_int(ValueVector{4, 2}, 2).is_integral());
    EXPECT_THROW(div_by_int(ValueVector{1}, 0), precondition_error);
}

TEST(ExtendedValue, InfinityAbsorbsAndDominates) {
    ExtendedValue inf = ExtendedValue::infinity();
    ExtendedValue one = ValueVector{1};
    EXPECT_TRUE((inf + one).is_infinite());
    EXPECT_LT(one, inf);
    EXPECT_TRUE(inf.is_positive());
    EXPECT_FALSE(inf.is_zero());
    EXPECT_EQ(inf.to_string(), "inf");
    EXPECT_THROW((void)inf.value(), precondition_error);
}

TEST(ExtendedValue, ParseRoundTrip) {
    for (std::string s : {"inf", "[0]", "[1/2, -3]", "[7, 0, 2]"})
        EXPECT_EQ(parse_extended_value(s).to_string(), s);
    EXPECT_THROW(parse_extended_value("[a]"), parse_error);
    EXPECT_THROW(parse_extended_value("1,2"), parse_error);
}

TEST(ExtendedValue, MinOfMultiset) {
    std::vector<ExtendedValue> vs{ExtendedValue::infinity(), ValueVector{3}, ValueVector{-1}};
    EXPECT_EQ(min_value(vs), ExtendedValue(ValueVector{-1}));
    EXPECT_THROW(min_value(std::vector<ExtendedValue>{}), precondition_error);
}

TEST(ValueVectorProperty, OrderIsTotalAndTranslationInvariant) {
    Rng rng(7);
    auto gen = [&] { return ValueVector{uniform(rng, -4, 4), uniform(rng, -4, 4)}; };
    for (int i = 0; i < 500; ++i) {
        ValueVector a = gen(), b = gen(), c = gen();
        const int trichotomy = (a < b) + (a == b) + (a > b);
        EXPECT_EQ(trichotomy, 1);
        EXPECT_EQ(a < b, a + c < b + c);
        if (a <= b && b <= c) EXPECT_LE(a, c);
    }
}
