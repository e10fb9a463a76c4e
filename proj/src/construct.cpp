#include "packing/construct.hpp"

#include <algorithm>
#include <numeric>

#include "packing/combinatorics.hpp"

namespace packing {

namespace {

// Lowest-index least-frequency choice; works for any v >= k >= 0.
std::vector<Block> balanced_blocks(int n, int v, int k) {
  std::vector<Block> blocks;
  std::vector<int> freq(v, 0);
  for (int b = 0; b < n; ++b) {
    const int low = *std::min_element(freq.begin(), freq.end());
    Block block;
    for (int x = 0; x < v && static_cast<int>(block.size()) < k; ++x) {
      if (freq[x] == low) block.push_back(x);
    }
    for (int x = 0; x < v && static_cast<int>(block.size()) < k; ++x) {
      if (freq[x] != low) block.push_back(x);
    }
    std::sort(block.begin(), block.end());
    for (int x : block) ++freq[x];
    blocks.push_back(std::move(block));
  }
  return blocks;
}

}  // namespace

PackingDesign balanced_packing(int n, int v, int k, int t) {
  if (!(v >= k && k >= t && t >= 1) || n < 0) {
    throw std::invalid_argument("balanced_packing needs v >= k >= t >= 1 and n >= 0");
  }
  return PackingDesign(v, balanced_blocks(n, v, k));
}

std::pair<PackingDesign, ConstructionLayout> general_construction(int n, int v, int k, int t, int lambda) {
  if (!(v >= k && k >= t && t >= 2) || lambda < 1 || n < 1) {
    throw HypothesisError("hypotheses not met: need v >= k >= t >= 2, lambda >= 1, n >= 1");
  }
  const std::int64_t inner_cut = checked_mul(t - 1, binomial(n - 1, lambda));
  if (!(k >= inner_cut)) {
    throw HypothesisError("hypotheses not met: k >= (t-1) C(n-1, lambda) fails (" + std::to_string(k) + " < " +
                          std::to_string(inner_cut) + ")");
  }
  const std::int64_t u_count = checked_mul(t - 1, binomial(n, lambda + 1));
  if (!(checked_mul(lambda, v) >= checked_mul(n, k) - u_count)) {
    throw HypothesisError("hypotheses not met: lambda v >= nk - (t-1) C(n, lambda+1) fails (" +
                          std::to_string(static_cast<std::int64_t>(lambda) * v) + " < " +
                          std::to_string(static_cast<std::int64_t>(n) * k - u_count) + ")");
  }

  ConstructionLayout layout;
  if (n <= lambda) {
    Block first(k);
    std::iota(first.begin(), first.end(), 0);
    std::vector<Block> blocks(n, first);
    layout.inner_blocks.assign(n, Block{});
    return {PackingDesign(v, std::move(blocks)), std::move(layout)};
  }

  // u-points: one per ((lambda+1)-subset S of {1..n}, j in 1..t-1), numbered first.
  std::vector<Block> blocks(n);
  int next_point = 0;
  for (const auto& subset : combinations(1, n, lambda + 1)) {
    for (int j = 1; j <= t - 1; ++j) {
      layout.u_points.push_back({subset, j, next_point});
      for (int i : subset) blocks[i - 1].push_back(next_point);
      ++next_point;
    }
  }

  const int w_count = v - static_cast<int>(u_count);
  for (int x = 0; x < w_count; ++x) layout.w_points.push_back(next_point + x);
  const int inner_k = k - static_cast<int>(inner_cut);
  layout.inner_blocks.assign(n, Block{});
  if (inner_k > 0) {
    // Frequencies are at most ceil(n * inner_k / |W|) <= lambda.
    const auto inner = balanced_blocks(n, w_count, inner_k);
    for (int i = 0; i < n; ++i) {
      for (int x : inner[i]) {
        layout.inner_blocks[i].push_back(layout.w_points[x]);
        blocks[i].push_back(layout.w_points[x]);
      }
    }
  }
  return {PackingDesign(v, std::move(blocks)), std::move(layout)};
}

std::pair<PackingDesign, BoundReport> construct_optimal(const DesignParams& params) {
  auto report = exact_by_theorems(params);
  if (!report.applicable()) {
    throw NotApplicableError("no exact theorem applies to (v,k,t,lambda) = (" + std::to_string(params.v) + "," +
                             std::to_string(params.k) + "," + std::to_string(params.t) + "," +
                             std::to_string(params.lambda) + ")");
  }
  auto [design, layout] =
      general_construction(static_cast<int>(*report.value), params.v, params.k, params.t, params.lambda);
  return {std::move(design), std::move(report)};
}

}  // namespace packing
