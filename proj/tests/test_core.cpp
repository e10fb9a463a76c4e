#include <gtest/gtest.h>

#include <filesystem>

#include "golden.hpp"
#include "packing/combinatorics.hpp"
#include "packing/core.hpp"
#include "packing/design_io.hpp"

using namespace packing;

TEST(Combinatorics, Binomial) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(2, 3), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(binomial(60, 30), 118264581564861424LL);
  EXPECT_THROW(binomial(100, 50), std::overflow_error);
}

TEST(Combinatorics, Combinations) {
  const auto c = combinations(0, 3, 2);
  ASSERT_EQ(c.size(), 6u);
  EXPECT_EQ(c.front(), (std::vector<int>{0, 1}));
  EXPECT_EQ(c.back(), (std::vector<int>{2, 3}));
  EXPECT_EQ(floor_div(-7, 2), -4);
}

TEST(Params, RejectsBadOrder) {
  EXPECT_THROW(DesignParams(3, 4, 2, 1), std::invalid_argument);
  EXPECT_THROW(DesignParams(6, 3, 4, 1), std::invalid_argument);
  EXPECT_THROW(DesignParams(6, 3, 2, 0), std::invalid_argument);
  EXPECT_NO_THROW(DesignParams(6, 3, 2, 1));
}

TEST(Design, RejectsBadPoints) {
  EXPECT_THROW(PackingDesign(4, {{0, 4}}), DesignError);
  EXPECT_THROW(PackingDesign(4, {{0, 0, 1}}), DesignError);
  EXPECT_THROW(DirectedPackingDesign(4, {{-1, 2}}), DesignError);
  EXPECT_EQ(PackingDesign(4, {{3, 1, 2}}).blocks()[0], (Block{1, 2, 3}));
  EXPECT_EQ(DirectedPackingDesign(4, {{3, 1, 2}}).blocks()[0], (Block{3, 1, 2}));
}

TEST(Validate, ExampleTriples) {
  const auto report = validate_packing(golden::pd_6_3(), {6, 3, 2, 1}, BlockSizeMode::Uniform);
  EXPECT_TRUE(report.valid);
  EXPECT_EQ(report.worst_multiplicity, 1);
  EXPECT_EQ(report.worst_t_set, (std::vector<int>{0, 1}));
}

TEST(Validate, RepeatedPairFails) {
  const PackingDesign d(5, {{0, 1, 2}, {0, 1, 3}});
  const auto report = validate_packing(d, {5, 3, 2, 1});
  EXPECT_FALSE(report.valid);
  EXPECT_EQ(report.worst_t_set, (std::vector<int>{0, 1}));
  EXPECT_EQ(report.worst_multiplicity, 2);
  EXPECT_TRUE(validate_packing(d, {5, 3, 2, 2}).valid);
}

TEST(Validate, BlockSizeModes) {
  const PackingDesign d(5, {{0, 1, 2}, {3, 4}});
  EXPECT_TRUE(validate_packing(d, {5, 3, 2, 1}).valid);
  EXPECT_THROW(validate_packing(d, {5, 3, 2, 1}, BlockSizeMode::Uniform), std::invalid_argument);
  EXPECT_THROW(validate_packing(d, {5, 2, 2, 1}), std::invalid_argument);
  EXPECT_THROW(validate_packing(d, {6, 3, 2, 1}), std::invalid_argument);
}

TEST(Validate, DirectedExample) {
  const auto report = validate_directed(golden::dpd_6_4(), {6, 4, 2, 1}, BlockSizeMode::Uniform);
  EXPECT_TRUE(report.valid);
  // Reversing a block makes some ordered pair appear twice.
  const DirectedPackingDesign bad(3, {{0, 1, 2}, {0, 1, 2}});
  const auto r2 = validate_directed(bad, {3, 3, 2, 1});
  EXPECT_FALSE(r2.valid);
  EXPECT_EQ(r2.worst_t_set, (std::vector<int>{0, 1}));
  const DirectedPackingDesign ok(3, {{0, 1, 2}, {2, 1, 0}});
  EXPECT_TRUE(validate_directed(ok, {3, 3, 2, 1}).valid);
}

TEST(Validate, Subsequence) {
  EXPECT_TRUE(is_subsequence({1, 3}, {0, 1, 2, 3}));
  EXPECT_FALSE(is_subsequence({3, 1}, {0, 1, 2, 3}));
  EXPECT_TRUE(is_subsequence({}, {}));
}

TEST(Profile, Frequencies) {
  const auto p = frequency_profile(golden::pd_6_3());
  EXPECT_EQ(p.r, (std::vector<int>{2, 2, 2, 2, 2, 2}));
  EXPECT_EQ(p.n, 4);
  EXPECT_EQ(p.N[2], 6);
  EXPECT_EQ(p.total_incidence, 12);
  EXPECT_EQ(p.max_frequency(), 2);
}

TEST(Profile, StructuralDiagnosticsPass) {
  for (const auto& d : structural_diagnostics(golden::pd_6_3(), {6, 3, 2, 1})) {
    EXPECT_TRUE(d.passed) << d.check << " " << d.witness;
  }
}

TEST(Profile, UnderlyingDesign) {
  const auto u = underlying_design(golden::dpd_12_7());
  EXPECT_EQ(u, golden::pd2_12_7());
}

TEST(DesignIo, RoundTrip) {
  DesignDocument doc{4, 2, 1, golden::dpd_6_4()};
  const auto text = serialize_design(doc);
  EXPECT_EQ(text,
            "{\"v\":6,\"k\":4,\"t\":2,\"lambda\":1,\"directed\":true,"
            "\"blocks\":[[0,1,2,3],[4,3,5,0],[5,3,2,4],[2,1,0,5]]}\n");
  const auto back = parse_design(text);
  EXPECT_TRUE(back.directed());
  EXPECT_EQ(std::get<DirectedPackingDesign>(back.design), golden::dpd_6_4());
  EXPECT_EQ(back.params(), DesignParams(6, 4, 2, 1));
}

TEST(DesignIo, Defaults) {
  const auto doc = parse_design(R"({"v":5,"blocks":[[0,1],[2,3,4]]})");
  EXPECT_FALSE(doc.k.has_value());
  EXPECT_FALSE(doc.directed());
  EXPECT_EQ(doc.params(), DesignParams(5, 5, 2, 1));
}

TEST(DesignIo, Errors) {
  EXPECT_THROW(parse_design("{"), FormatError);
  EXPECT_THROW(parse_design(R"({"blocks":[]})"), FormatError);
  EXPECT_THROW(parse_design(R"({"v":3,"blocks":[[0,5]]})"), DesignError);
  EXPECT_THROW(read_design("/nonexistent/design.json"), FormatError);
}

TEST(DesignIo, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "packing_core_roundtrip.json";
  write_design({3, 2, 1, golden::pd_6_3()}, path);
  const auto doc = read_design(path);
  EXPECT_EQ(std::get<PackingDesign>(doc.design), golden::pd_6_3());
  std::filesystem::remove(path);
}
