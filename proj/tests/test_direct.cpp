#include <gtest/gtest.h>

#include <random>

#include "golden.hpp"
#include "packing/bounds.hpp"
#include "packing/construct.hpp"
#include "packing/direct.hpp"

using namespace packing;

namespace {

std::vector<int> sorted(Block b) {
  std::sort(b.begin(), b.end());
  return b;
}

void expect_directed_permutation(const PackingDesign& in, const DirectedPackingDesign& out) {
  ASSERT_EQ(in.size(), out.size());
  for (std::size_t i = 0; i < in.size(); ++i) EXPECT_EQ(sorted(out.blocks()[i]), in.blocks()[i]);
  const int kmax = std::max(2, static_cast<int>(out.v()));
  if (in.v() >= 2) EXPECT_TRUE(validate_directed(out, {out.v(), kmax, 2, 1}).valid);
}

}  // namespace

TEST(DirectingState, WorkedExampleTables) {
  const auto res = golden::residual_12_7();
  const auto s = compute_state(0, res[0], res[1], res[2]);
  EXPECT_EQ(s.x, (std::vector<int>{1, 3, 4}));
  EXPECT_EQ(s.y, (std::vector<int>{2, 5, 6}));
  EXPECT_EQ(s.z, (std::vector<int>{9}));
  ASSERT_EQ(s.rows.size(), 7u);
  const std::vector<int> j{0, 1, 1, 2, 3, 3, 3};
  const std::vector<int> k{0, 0, 1, 1, 1, 2, 3};
  const std::vector<Window> R{{1, 2}, {0, 2}, {0, 2}, {0, 1}, {0, 1}, {0, 1}, {0, 1}};
  const std::vector<Window> S{{0, 1}, {0, 1}, {0, 2}, {0, 2}, {0, 2}, {1, 2}, {1, 2}};
  for (int i = 0; i < 7; ++i) {
    EXPECT_EQ(s.rows[i].j, j[i]) << i;
    EXPECT_EQ(s.rows[i].k, k[i]) << i;
    EXPECT_EQ(s.rows[i].R, R[i]) << i;
    EXPECT_EQ(s.rows[i].S, S[i]) << i;
  }
  EXPECT_EQ(s.ell, 1);
  EXPECT_EQ(s.m, 0);
}

TEST(DirectingState, WorkedExampleInsertion) {
  const auto res = golden::residual_12_7();
  const auto s = compute_state(0, res[0], res[1], res[2]);
  const auto out = insert_point(0, res[0], res[1], res[2], s);
  const auto expected = golden::dpd_12_7();
  EXPECT_EQ(out[0], expected.blocks()[0]);
  EXPECT_EQ(out[2], expected.blocks()[2]);
  // Any gap after 3 and before 9 works in the second block; the leftmost one is taken.
  EXPECT_EQ(out[1], (Block{4, 3, 0, 7, 8, 9, 1}));
  EXPECT_TRUE(validate_directed(expected, {12, 7, 2, 1}, BlockSizeMode::Uniform).valid);
  const DirectedPackingDesign ours(12, {out[0], out[1], out[2], res[3]});
  EXPECT_TRUE(validate_directed(ours, {12, 7, 2, 1}, BlockSizeMode::Uniform).valid);
}

TEST(DirectingState, DisjointResiduals) {
  const Block t1{1, 2}, t2{3, 4}, t3{5, 6};
  const auto s = compute_state(0, t1, t2, t3);
  EXPECT_EQ(s.p() + s.q() + s.r(), 0);
  const auto out = insert_point(0, t1, t2, t3, s);
  EXPECT_TRUE(validate_directed(DirectedPackingDesign(7, {out[0], out[1], out[2]}), {7, 3, 2, 1}).valid);
}

TEST(Direct, SharedPairReversed) {
  const auto out = direct_packing(PackingDesign(4, {{0, 1, 2}, {0, 1, 3}}));
  EXPECT_TRUE(validate_directed(out, {4, 3, 2, 1}).valid);
  EXPECT_NE(is_subsequence({0, 1}, out.blocks()[0]), is_subsequence({0, 1}, out.blocks()[1]));
}

TEST(Direct, WorkedExampleInput) {
  DirectingStats stats;
  const auto out = direct_packing(golden::pd2_12_7(), &stats);
  expect_directed_permutation(golden::pd2_12_7(), out);
  EXPECT_TRUE(validate_directed(out, {12, 7, 2, 1}, BlockSizeMode::Uniform).valid);
  EXPECT_GT(stats.insertions_by_frequency[3], 0);
}

TEST(Direct, RejectsBadInput) {
  // Pair {0,1} in three blocks.
  EXPECT_THROW(direct_packing(PackingDesign(3, {{0, 1}, {0, 1}, {0, 1, 2}})), DirectingError);
  // Point 0 in four blocks, no pair repeated more than twice.
  EXPECT_THROW(direct_packing(PackingDesign(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})), DirectingError);
}

TEST(Direct, EdgeCases) {
  expect_directed_permutation(PackingDesign(1, {{0}, {}, {0}}), direct_packing(PackingDesign(1, {{0}, {}, {0}})));
  const PackingDesign twice(4, {{0, 1, 2, 3}, {0, 1, 2, 3}});
  expect_directed_permutation(twice, direct_packing(twice));
  const PackingDesign single(4, {{0, 1, 2, 3}});
  expect_directed_permutation(single, direct_packing(single));
}

TEST(Direct, RandomizedInputs) {
  std::mt19937 rng(20261016);
  DirectingStats stats;
  for (int trial = 0; trial < 300; ++trial) {
    const auto input = golden::random_pd2(rng);
    const auto out = direct_packing(input, &stats);
    expect_directed_permutation(input, out);
  }
  EXPECT_GT(stats.insertions_by_frequency[3], 0);
}

TEST(Direct, LayeredConstructionAtLambdaTwo) {
  for (int v = 2; v <= 20; ++v) {
    for (int k = 2; k <= std::min(v, 8); ++k) {
      const auto b = exact_dpdn_by_theorem(v, k);
      if (!b.applicable()) continue;
      const auto [design, layout] = general_construction(static_cast<int>(*b.value), v, k, 2, 2);
      const auto directed = direct_packing(design);
      EXPECT_EQ(static_cast<std::int64_t>(directed.size()), *b.value);
      EXPECT_TRUE(validate_directed(directed, {v, k, 2, 1}, BlockSizeMode::Uniform).valid) << v << " " << k;
    }
  }
}
