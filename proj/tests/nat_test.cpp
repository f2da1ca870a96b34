#include <bijenc/nat.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using bijenc::Nat;

TEST(Nat, ParsesAndPrintsDecimal) {
    const std::string big = "123456789012345678901234567890123456789";
    EXPECT_EQ(Nat::parse(big).str(), big);
    EXPECT_EQ(Nat::parse("0"), Nat(0));
    EXPECT_THROW(Nat::parse(""), bijenc::syntax_error);
    EXPECT_THROW(Nat::parse("-1"), bijenc::syntax_error);
    EXPECT_THROW(Nat::parse("12a"), bijenc::syntax_error);
    EXPECT_THROW(Nat(-3), bijenc::domain_error);
}

TEST(Nat, LimbsRoundTrip) {
    const Nat n = Nat::parse("340282366920938463463374607431768211457");  // 2^128 + 1
    EXPECT_EQ(n.limbs().size(), 3u);
    EXPECT_EQ(Nat::from_limbs(n.limbs()), n);
    EXPECT_TRUE(Nat().limbs().empty());
    EXPECT_EQ(n.bit_length(), 129u);
}

TEST(Nat, SubtractionNeverWraps) {
    EXPECT_EQ(Nat(5) - Nat(5), Nat(0));
    EXPECT_THROW(Nat(4) - Nat(5), bijenc::domain_error);
}

TEST(BitPrimitives, Examples) {
    EXPECT_EQ(bijenc::first_bit(5), Nat(1));
    EXPECT_EQ(bijenc::first_bit(40), Nat(0));
    EXPECT_EQ(bijenc::shift_left(5, 3), Nat(40));
    EXPECT_EQ(bijenc::shift_right(40, 3), Nat(5));
    EXPECT_EQ(bijenc::successor(0), Nat(1));
    EXPECT_EQ(bijenc::predecessor(1), Nat(0));
    EXPECT_EQ(bijenc::lsb(2012), 2u);
}

TEST(BitPrimitives, ZeroIsOutsideDomain) {
    EXPECT_THROW(bijenc::predecessor(0), bijenc::domain_error);
    EXPECT_THROW(bijenc::lsb(0), bijenc::domain_error);
    EXPECT_THROW(bijenc::decons(0), bijenc::domain_error);
}

TEST(BitPrimitives, ShiftsInvertAndLsbMatchesTrialDivision) {
    for (std::uint64_t n = 1; n < 5000; ++n) {
        EXPECT_EQ(bijenc::lsb(n), oracle::two_adic(n));
        for (std::size_t k : {0u, 1u, 7u, 64u, 200u})
            ASSERT_EQ(bijenc::shift_right(bijenc::shift_left(n, k), k), Nat(n));
    }
}

TEST(Cons, Examples) {
    EXPECT_EQ(bijenc::cons(0, 0), Nat(1));
    EXPECT_EQ(bijenc::cons(2, 251), Nat(2012));
    EXPECT_EQ(bijenc::cons(3, 0), Nat(8));
    EXPECT_EQ(bijenc::decons(1), (bijenc::Decons{0, 0}));
    EXPECT_EQ(bijenc::decons(2012), (bijenc::Decons{2, 251}));
    EXPECT_EQ(bijenc::decons(12), (bijenc::Decons{2, 1}));
}

TEST(Cons, BijectiveOnPositiveNats) {
    for (std::uint64_t z = 1; z <= (1u << 16); ++z) {
        const auto [x, y] = bijenc::decons(z);
        ASSERT_EQ(x, oracle::two_adic(z));
        ASSERT_EQ(bijenc::cons(x, y), Nat(z));
    }
    std::set<std::string> seen;
    for (std::size_t x = 0; x <= 100; ++x) {
        for (std::uint64_t y = 0; y <= 100; ++y) {
            const Nat z = bijenc::cons(x, y);
            ASSERT_EQ(bijenc::decons(z), (bijenc::Decons{x, y}));
            seen.insert(z.str());
        }
    }
    EXPECT_EQ(seen.size(), 101u * 101u);
}
