#include <gtest/gtest.h>

#include <random>

#include "golden.hpp"
#include "packing/codes.hpp"
#include "packing/direct.hpp"

using namespace packing;

TEST(ConstantWeight, ExampleTriples) {
  const auto code = to_constant_weight(golden::pd_6_3(), {6, 3, 2, 1});
  EXPECT_EQ(code.length, 6);
  EXPECT_EQ(code.weight, 3);
  EXPECT_EQ(min_hamming_distance(code), 4);
  EXPECT_TRUE(has_distinct_words(code));
  EXPECT_EQ(serialize_code(code),
            "{\"type\":\"cw\",\"length\":6,\"weight\":3,\"words\":[\"111000\",\"100110\",\"010101\",\"001011\"]}\n");
}

TEST(ConstantWeight, Rejections) {
  EXPECT_THROW(to_constant_weight(golden::pd_6_3(), {6, 3, 2, 2}), CodeError);
  EXPECT_THROW(to_constant_weight(PackingDesign(4, {{0, 1, 2}, {0, 1, 3}}), {4, 3, 2, 1}), CodeError);
}

TEST(Lcs, Basics) {
  EXPECT_EQ(lcs_length({0, 1, 2, 3}, {1, 3, 0}), 2);
  EXPECT_EQ(lcs_length({}, {1}), 0);
  EXPECT_EQ(lcs_length({4, 5}, {4, 5}), 2);
}

TEST(Indel, WorkedExample) {
  const auto code = to_indel_code(golden::dpd_12_7(), {12, 7, 2, 1});
  EXPECT_EQ(code.deletion_capability, 5);
  EXPECT_EQ(max_pairwise_lcs(code), 1);
  EXPECT_TRUE(deletion_check_enumerative(code, 5));
  EXPECT_TRUE(deletion_check_lcs(code, 5));
  EXPECT_TRUE(deletion_channel_check(code, 5));
  EXPECT_FALSE(deletion_check_enumerative(code, 6));
  EXPECT_FALSE(deletion_channel_check(code, 6));
  EXPECT_THROW(deletion_channel_check(code, 8), CodeError);
}

TEST(Indel, SmallExample) {
  const auto code = to_indel_code(golden::dpd_6_4(), {6, 4, 2, 1});
  EXPECT_EQ(max_pairwise_lcs(code), 1);
  EXPECT_TRUE(deletion_channel_check(code, 2));
  EXPECT_EQ(serialize_code(code),
            "{\"type\":\"indel\",\"length\":4,\"alphabet\":6,\"words\":[[0,1,2,3],[4,3,5,0],[5,3,2,4],[2,1,0,5]]}\n");
}

TEST(Indel, ConstantWords) {
  const auto code = add_constant_words(to_indel_code(golden::dpd_6_4(), {6, 4, 2, 1}));
  EXPECT_EQ(code.words.size(), 10u);
  EXPECT_TRUE(code.repeats_allowed);
  EXPECT_EQ(code.words.back(), (std::vector<int>{5, 5, 5, 5}));
  EXPECT_TRUE(deletion_channel_check(code, 2));
}

TEST(Indel, ChecksAgreeOnRandomCodes) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    IndelCode code;
    code.alphabet_size = 4;
    code.word_length = std::uniform_int_distribution<int>(1, 6)(rng);
    code.repeats_allowed = true;
    const int count = std::uniform_int_distribution<int>(2, 5)(rng);
    for (int w = 0; w < count; ++w) {
      std::vector<int> word(code.word_length);
      for (auto& x : word) x = std::uniform_int_distribution<int>(0, 3)(rng);
      code.words.push_back(word);
    }
    for (int s = 0; s <= code.word_length; ++s) {
      EXPECT_EQ(deletion_check_enumerative(code, s), deletion_check_lcs(code, s));
    }
  }
}
