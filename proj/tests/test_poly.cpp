#include <gtest/gtest.h>

#include "klmasks/poly.hpp"

using klmasks::LPoly;

TEST(LPoly, ArithmeticAndNormalization)
{
    LPoly a = LPoly(1) + LPoly::monomial(1, 1);  // 1+q
    LPoly b = LPoly(1) - LPoly::monomial(1, 1);  // 1-q
    EXPECT_EQ((a * b).str(), "1-q^2");
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ((a - a).low(), 0);
    EXPECT_EQ(LPoly::monomial(3, -2).str(), "3q^(-2)");
    EXPECT_EQ((a * a).str(), "1+2q+q^2");
}

TEST(LPoly, ConjDilateContract)
{
    LPoly p = LPoly::monomial(2, -1) + LPoly::monomial(5, 3);
    EXPECT_EQ(p.conj().conj(), p);
    EXPECT_EQ(p.conj()[-3], 5);
    EXPECT_EQ(p.dilate(2).contract(2), p);
    EXPECT_THROW(p.contract(2), std::domain_error);
}

TEST(LPoly, HalfPowerRendering)
{
    LPoly p = LPoly::monomial(1, -1) + LPoly::monomial(1, 2);
    EXPECT_EQ(p.str_half_q(), "q^(-1/2)+q");
}

TEST(LPoly, SelfAddWithShift)
{
    LPoly p = LPoly(1) + LPoly::monomial(1, 1);
    p.add_scaled(p, 1, 1);
    EXPECT_EQ(p.str(), "1+2q+q^2");
}

TEST(LPoly, OverflowThrows)
{
    LPoly big = LPoly::monomial(INT64_MAX / 2 + 1, 0);
    EXPECT_THROW(big + big, std::overflow_error);
    EXPECT_THROW(big * LPoly(4), std::overflow_error);
}
