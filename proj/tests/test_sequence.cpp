#include <gtest/gtest.h>

#include <stdexcept>

#include "lhc/sequence.hpp"

using namespace lhc;

TEST(Sequence, ConstructionValidates) {
    EXPECT_THROW(Sequence(std::vector<Int>{}), std::invalid_argument);
    EXPECT_THROW((Sequence{0, 2}), std::invalid_argument);
    EXPECT_THROW((Sequence{3, -1}), std::invalid_argument);
    const Sequence s{1, 2, 3};
    EXPECT_EQ(s.n(), 3);
    EXPECT_EQ(s[0], 1);
    EXPECT_EQ(s[2], 3);
    EXPECT_EQ(s.back(), 3);
    EXPECT_EQ(s.str(), "(1,2,3)");
    EXPECT_EQ((Sequence{2, 4, 6}).n(), 3);
}

TEST(Sequence, Normalize) {
    EXPECT_EQ(normalize_sequence(Sequence{2, 4, 6}), (Sequence{1, 2, 3}));
    EXPECT_EQ(normalize_sequence(Sequence{1, 2, 3}), (Sequence{1, 2, 3}));
    EXPECT_EQ(normalize_sequence(Sequence{6, 10}), (Sequence{3, 5}));
}

TEST(Sequence, FromU) {
    EXPECT_EQ(sequence_from_u(1, {3, 2, 2}), (Sequence{1, 2, 3, 4}));
    EXPECT_EQ(sequence_from_u(2, {2, 2, 2}), (Sequence{2, 3, 4, 5}));
    EXPECT_EQ(sequence_from_u(5, {}), (Sequence{5}));
    EXPECT_THROW(sequence_from_u(1, {1}), std::invalid_argument);
    EXPECT_THROW(sequence_from_u(0, {2}), std::invalid_argument);
}

TEST(Sequence, ModK) {
    EXPECT_EQ(modk_sequence(2, 4), (Sequence{1, 3, 5, 7}));
    EXPECT_EQ(modk_sequence(1, 5), (Sequence{1, 2, 3, 4, 5}));
    EXPECT_EQ(modk_sequence(3, 2), (Sequence{1, 4}));
    EXPECT_THROW(modk_sequence(0, 3), std::invalid_argument);
}

TEST(Sequence, LSequence) {
    EXPECT_EQ(l_sequence(3, 4), (Sequence{1, 3, 8, 21}));
    EXPECT_EQ(l_sequence(2, 4), (Sequence{1, 2, 3, 4}));
    EXPECT_EQ(l_sequence(4, 3), (Sequence{1, 4, 15}));
    EXPECT_THROW(l_sequence(1, 3), std::invalid_argument);
}

TEST(IntOps, FloorCeilDivision) {
    EXPECT_EQ(div_floor(7, 2), 3);
    EXPECT_EQ(div_floor(-1, 5), -1);
    EXPECT_EQ(div_floor(-10, 5), -2);
    EXPECT_EQ(div_ceil(7, 2), 4);
    EXPECT_EQ(div_ceil(-1, 5), 0);
    EXPECT_EQ(div_ceil(10, 5), 2);
    EXPECT_EQ(gcd_int(12, 18), 6);
    EXPECT_EQ(gcd_int(0, 0), 0);
}
