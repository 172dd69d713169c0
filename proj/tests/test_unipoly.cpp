#include <gtest/gtest.h>

#include "support.hpp"

using namespace henselize;
using henselize::fixtures::leibniz_char_poly;
using henselize::fixtures::Q;

TEST(UniPoly, TrimsAndReportsDegree) {
    QPoly p{Q(1), Q(2), Q(0), Q(0)};
    EXPECT_EQ(p.degree(), 1);
    EXPECT_EQ(QPoly().degree(), -1);
    EXPECT_TRUE(QPoly{Q(0)}.is_zero());
    EXPECT_TRUE((QPoly{Q(3), Q(1)}).is_monic());
}

TEST(UniPoly, ArithmeticAndFormatting) {
    QPoly a{Q(2), Q(1), Q(1)}, b{Q(-1), Q(1)};
    EXPECT_EQ(to_string(a * b, "X"), "X^3 + X - 2");
    EXPECT_EQ(to_string(a - a, "X"), "0");
    EXPECT_EQ(to_string(QPoly{Q(4, 9), Q(-1), Q(1)}, "X"), "X^2 - X + 4/9");
    EXPECT_EQ(derivative(a), (QPoly{Q(1), Q(2)}));
    EXPECT_EQ(eval(a, Q(3)), Q(14));
    EXPECT_EQ(compose(a, QPoly{Q(1), Q(1)}), (QPoly{Q(4), Q(3), Q(1)}));
    EXPECT_EQ(reversed(QPoly{Q(1), Q(-1), Q(4, 9)}, 2), (QPoly{Q(4, 9), Q(-1), Q(1)}));
}

TEST(UniPoly, ShiftHelpers) {
    QPoly p{Q(1), Q(2), Q(3)};
    EXPECT_EQ(p.shifted(2), (QPoly{Q(0), Q(0), Q(1), Q(2), Q(3)}));
    EXPECT_EQ(p.unshifted(1), (QPoly{Q(2), Q(3)}));
    EXPECT_EQ(p.truncated(2), (QPoly{Q(1), Q(2)}));
    EXPECT_EQ(p.shifted(3).trailing_zero_count(), 3u);
}

TEST(UniPolyProperty, MonicDivisionReconstructs) {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        QPoly a = random_qpoly(rng, static_cast<int>(uniform(rng, 0, 7)), 9);
        QPoly f = random_qpoly(rng, static_cast<int>(uniform(rng, 0, 3)), 9) + QPoly::monomial(Q(1), 4);
        auto dr = divrem_monic(a, f);
        EXPECT_EQ(dr.quotient * f + dr.remainder, a);
        EXPECT_LT(dr.remainder.degree(), f.degree());
    }
}

TEST(UniPolyProperty, FieldDivisionReconstructs) {
    Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        QPoly a = random_qpoly(rng, static_cast<int>(uniform(rng, 0, 6)), 9);
        QPoly b;
        while (b.is_zero()) b = random_qpoly(rng, static_cast<int>(uniform(rng, 0, 3)), 9);
        auto dr = divrem_field(a, b, rational_inverse);
        EXPECT_EQ(dr.quotient * b + dr.remainder, a);
        EXPECT_LT(dr.remainder.degree(), b.degree());
    }
}

TEST(UniPoly, DivisionPreconditions) {
    EXPECT_THROW(divrem_monic(QPoly{Q(1)}, QPoly{Q(1), Q(2)}), precondition_error);
    EXPECT_THROW(divrem_field(QPoly{Q(1)}, QPoly(), rational_inverse), precondition_error);
}

TEST(ModElement, ArithmeticModuloF) {
    auto mod = ModElement<Rational>::make_modulus(QPoly{Q(2), Q(1), Q(1)});
    auto x = ModElement<Rational>::generator(mod);
    EXPECT_EQ((x * x).rep(), (QPoly{Q(-2), Q(-1)}));
    EXPECT_EQ(pow(x, 3).rep(), (QPoly{Q(2), Q(-1)}));
    EXPECT_EQ((x + ModElement<Rational>(3)).rep(), (QPoly{Q(3), Q(1)}));
    auto other = ModElement<Rational>::make_modulus(QPoly{Q(1), Q(0), Q(1)});
    EXPECT_THROW((void)(x * ModElement<Rational>::generator(other)), precondition_error);
    EXPECT_THROW(ModElement<Rational>::make_modulus(QPoly{Q(1), Q(2)}), precondition_error);
}

TEST(CharPoly, WorkedExample) {
    QPoly f{Q(2), Q(1), Q(1)};
    EXPECT_EQ(char_poly_mod(f, QPoly{Q(0), Q(0), Q(1)}), (QPoly{Q(4), Q(3), Q(1)}));
    EXPECT_EQ(char_poly_mod(f, QPoly::x()), f);
    EXPECT_EQ(char_poly_mod(f, QPoly{Q(5)}), (QPoly{Q(25), Q(-10), Q(1)}));
}

TEST(CharPolyProperty, BerkowitzMatchesLeibnizOverQ) {
    Rng rng(13);
    for (int i = 0; i < 150; ++i) {
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 5));
        Matrix<Rational> m(n, std::vector<Rational>(n));
        for (auto& row : m)
            for (auto& e : row) e = random_rational(rng, 6, 3);
        EXPECT_EQ(QPoly(berkowitz(m)), leibniz_char_poly(m));
    }
}

TEST(CharPolyProperty, BerkowitzMatchesLeibnizWithZeroDivisors) {
    using L = LocalElement<USquareUWZero>;
    Rng rng(14);
    LocalSampler<USquareUWZero> s;
    for (int i = 0; i < 80; ++i) {
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 4));
        Matrix<L> m(n, std::vector<L>(n));
        for (auto& row : m)
            for (auto& e : row) e = s.element(rng);
        UniPoly<L> diff = UniPoly<L>(berkowitz(m)) - leibniz_char_poly(m);
        for (const auto& c : diff.coeffs()) EXPECT_TRUE(is_zero(c)) << c.to_string();
    }
}

TEST(CharPolyProperty, CayleyHamiltonOverRationals) {
    Rng rng(15);
    for (int i = 0; i < 150; ++i) {
        const int n = static_cast<int>(uniform(rng, 1, 5));
        QPoly f = random_qpoly(rng, n - 1, 7) + QPoly::monomial(Q(1), static_cast<std::size_t>(n));
        QPoly q = random_qpoly(rng, static_cast<int>(uniform(rng, 0, 6)), 7);
        EXPECT_TRUE(cayley_hamilton_check(f, q));
        // det of multiplication by q(x) is the norm, multiplicative in q
        QPoly r = random_qpoly(rng, 2, 5);
        const Rational sign(n % 2 ? -1 : 1);
        EXPECT_EQ(char_poly_mod(f, q * r).coeff(0), sign * char_poly_mod(f, q).coeff(0) * char_poly_mod(f, r).coeff(0));
    }
}
