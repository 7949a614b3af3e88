#include "arithmos/natural.hpp"

#include <gtest/gtest.h>

using namespace arithmos;

TEST(Natural, UnitIsANatural)
{
    Natural one(1);
    EXPECT_TRUE(one.is_unit());
    EXPECT_EQ(one * one, one);
}

TEST(Natural, ZeroAndNegativesAreRejected)
{
    EXPECT_THROW(Natural(0), NotANatural);
    EXPECT_THROW(Natural(-4), NotANatural);
    EXPECT_THROW(Natural(BigInt(0)), NotANatural);
    EXPECT_FALSE(Natural::from(BigInt(-1)).has_value());
    EXPECT_EQ(*Natural::from(BigInt(5)), Natural(5));
}

TEST(Natural, ParseAcceptsOnlyPlainDecimals)
{
    EXPECT_EQ(Natural::parse("17"), Natural(17));
    EXPECT_EQ(Natural::parse("123456789012345678901234567890").to_string(), "123456789012345678901234567890");
    for (const char* bad : {"", "0", "000", "-3", "+3", "3.0", " 3", "abc", "1e3"}) {
        EXPECT_THROW(Natural::parse(bad), NotANatural) << bad;
    }
}

TEST(Natural, OrderingAndMeasure)
{
    EXPECT_LT(Natural(3), Natural(10));
    EXPECT_TRUE(Natural(2).measures(Natural(10)));
    EXPECT_FALSE(Natural(3).measures(Natural(10)));
    EXPECT_EQ(Natural(2).measure_count(Natural(10)), Natural(5));
    EXPECT_THROW(Natural(3).measure_count(Natural(10)), PreconditionViolation);
}

TEST(Natural, SixtyFourBitBoundary)
{
    const Natural max64(std::numeric_limits<std::uint64_t>::max());
    EXPECT_TRUE(max64.fits_u64());
    const Natural over = max64 + Natural(1);
    EXPECT_FALSE(over.fits_u64());
    EXPECT_THROW((void)over.to_u64(), std::overflow_error);
}

TEST(Degree, OnlySquaresAndCubes)
{
    EXPECT_EQ(degree_from(2), Degree::square);
    EXPECT_EQ(degree_from(3), Degree::cube);
    EXPECT_FALSE(degree_from(4).has_value());
    EXPECT_FALSE(degree_from(1).has_value());
}
