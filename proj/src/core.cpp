#include "packing/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "packing/combinatorics.hpp"

namespace packing {

namespace {

std::string format_points(const std::vector<int>& pts, char open = '{', char close = '}') {
  std::ostringstream os;
  os << open;
  for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? "," : "") << pts[i];
  os << close;
  return os.str();
}

void check_block_points(int v, const Block& block, std::size_t index) {
  std::vector<bool> seen(static_cast<std::size_t>(std::max(v, 0)), false);
  for (int x : block) {
    if (x < 0 || x >= v) {
      throw DesignError("point out of range: " + std::to_string(x) + " in block " + std::to_string(index) +
                        " (v = " + std::to_string(v) + ")");
    }
    if (seen[x]) {
      throw DesignError("duplicate point " + std::to_string(x) + " in block " + std::to_string(index));
    }
    seen[x] = true;
  }
}

template <typename Blocks>
std::optional<int> common_size(const Blocks& blocks) {
  if (blocks.empty()) return std::nullopt;
  const auto first = blocks.front().size();
  for (const auto& b : blocks) {
    if (b.size() != first) return std::nullopt;
  }
  return static_cast<int>(first);
}

template <typename Blocks>
void check_preconditions(int design_v, const Blocks& blocks, const DesignParams& params, BlockSizeMode mode,
                         std::vector<Diagnostic>& diagnostics) {
  if (design_v != params.v) {
    throw std::invalid_argument("design has v = " + std::to_string(design_v) + " but params have v = " +
                                std::to_string(params.v));
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const int size = static_cast<int>(blocks[i].size());
    if (size > params.k || (mode == BlockSizeMode::Uniform && size != params.k)) {
      throw std::invalid_argument("block " + std::to_string(i) + " has size " + std::to_string(size) +
                                  (mode == BlockSizeMode::Uniform ? ", expected " : ", exceeds k = ") +
                                  std::to_string(params.k));
    }
  }
  diagnostics.push_back({"block-size", true, ""});
}

ValidationReport finish_report(const std::map<std::vector<int>, int>& counts, const DesignParams& params,
                               std::vector<Diagnostic> diagnostics, bool ordered) {
  ValidationReport report;
  for (const auto& [tuple, count] : counts) {
    if (count > report.worst_multiplicity) {
      report.worst_multiplicity = count;
      report.worst_t_set = tuple;
    }
  }
  report.valid = report.worst_multiplicity <= params.lambda;
  std::string witness;
  if (!report.worst_t_set.empty()) {
    witness = (ordered ? format_points(report.worst_t_set, '(', ')') : format_points(report.worst_t_set)) +
              " x" + std::to_string(report.worst_multiplicity);
  }
  diagnostics.push_back({ordered ? "ordered-t-tuple-multiplicity" : "t-subset-multiplicity", report.valid,
                         witness});
  report.diagnostics = std::move(diagnostics);
  return report;
}

template <typename Blocks>
FrequencyProfile profile_of(int v, const Blocks& blocks) {
  FrequencyProfile p;
  p.n = static_cast<int>(blocks.size());
  p.r.assign(v, 0);
  for (const auto& b : blocks) {
    p.total_incidence += static_cast<std::int64_t>(b.size());
    for (int x : b) ++p.r[x];
  }
  p.N.assign(p.n + 1, 0);
  for (int rx : p.r) ++p.N[rx];
  return p;
}

}  // namespace

DesignParams::DesignParams(int v_, int k_, int t_, int lambda_) : v(v_), k(k_), t(t_), lambda(lambda_) {
  if (!(t >= 1 && k >= t && v >= k)) {
    throw std::invalid_argument("parameters must satisfy v >= k >= t >= 1 (got v=" + std::to_string(v) +
                                ", k=" + std::to_string(k) + ", t=" + std::to_string(t) + ")");
  }
  if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
}

PackingDesign::PackingDesign(int v, std::vector<Block> blocks) : v_(v), blocks_(std::move(blocks)) {
  if (v_ < 1) throw DesignError("v must be positive");
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    check_block_points(v_, blocks_[i], i);
    std::sort(blocks_[i].begin(), blocks_[i].end());
  }
}

std::optional<int> PackingDesign::uniform_block_size() const { return common_size(blocks_); }

DirectedPackingDesign::DirectedPackingDesign(int v, std::vector<Block> blocks) : v_(v), blocks_(std::move(blocks)) {
  if (v_ < 1) throw DesignError("v must be positive");
  for (std::size_t i = 0; i < blocks_.size(); ++i) check_block_points(v_, blocks_[i], i);
}

std::optional<int> DirectedPackingDesign::uniform_block_size() const { return common_size(blocks_); }

int FrequencyProfile::max_frequency() const {
  return r.empty() ? 0 : *std::max_element(r.begin(), r.end());
}

ValidationReport validate_packing(const PackingDesign& design, const DesignParams& params, BlockSizeMode mode) {
  std::vector<Diagnostic> diagnostics;
  check_preconditions(design.v(), design.blocks(), params, mode, diagnostics);
  std::map<std::vector<int>, int> counts;
  for (const auto& block : design.blocks()) {
    for_each_combination(block, params.t, [&](std::span<const int> subset) {
      ++counts[std::vector<int>(subset.begin(), subset.end())];
    });
  }
  return finish_report(counts, params, std::move(diagnostics), false);
}

ValidationReport validate_directed(const DirectedPackingDesign& design, const DesignParams& params,
                                   BlockSizeMode mode) {
  std::vector<Diagnostic> diagnostics;
  check_preconditions(design.v(), design.blocks(), params, mode, diagnostics);
  std::map<std::vector<int>, int> counts;
  // Position combinations taken in increasing order are exactly the ordered subsequences.
  for (const auto& block : design.blocks()) {
    for_each_combination(block, params.t, [&](std::span<const int> tuple) {
      ++counts[std::vector<int>(tuple.begin(), tuple.end())];
    });
  }
  return finish_report(counts, params, std::move(diagnostics), true);
}

bool is_subsequence(const std::vector<int>& pattern, const std::vector<int>& sequence) {
  std::size_t i = 0;
  for (int x : sequence) {
    if (i < pattern.size() && pattern[i] == x) ++i;
  }
  return i == pattern.size();
}

FrequencyProfile frequency_profile(const PackingDesign& design) { return profile_of(design.v(), design.blocks()); }

FrequencyProfile frequency_profile(const DirectedPackingDesign& design) {
  return profile_of(design.v(), design.blocks());
}

std::vector<Diagnostic> structural_diagnostics(const PackingDesign& design, const DesignParams& params) {
  if (design.v() != params.v) throw std::invalid_argument("design v does not match params");
  for (const auto& b : design.blocks()) {
    if (static_cast<int>(b.size()) != params.k) {
      throw std::invalid_argument("structural diagnostics need uniform block size k");
    }
  }
  const auto profile = frequency_profile(design);
  const int t = params.t;
  const int lambda = params.lambda;
  const std::int64_t n = profile.n;
  std::vector<Diagnostic> out;

  // Point frequency bound.
  {
    const std::int64_t cap =
        checked_mul(lambda, binomial(params.v - 1, t - 1)) / binomial(params.k - 1, t - 1);
    const int worst = static_cast<int>(std::max_element(profile.r.begin(), profile.r.end()) - profile.r.begin());
    const int max_r = profile.r[worst];
    out.push_back({"frequency-bound", max_r <= cap,
                   "max r(" + std::to_string(worst) + ") = " + std::to_string(max_r) +
                       " <= " + std::to_string(cap)});
  }

  // Sum_i C(i, lambda+1) N_i <= (t-1) C(n, lambda+1).
  {
    std::int64_t lhs = 0;
    for (std::size_t i = 0; i < profile.N.size(); ++i) {
      lhs = checked_add(lhs, checked_mul(binomial(static_cast<std::int64_t>(i), lambda + 1), profile.N[i]));
    }
    const std::int64_t rhs = checked_mul(t - 1, binomial(n, lambda + 1));
    out.push_back({"block-set-incidence-bound", lhs <= rhs,
                   std::to_string(lhs) + " <= " + std::to_string(rhs)});
  }

  // No t points with frequency sum above (t-1)n + lambda; the t most frequent points are the worst case.
  {
    std::vector<int> order(profile.r.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return profile.r[a] > profile.r[b]; });
    order.resize(std::min<std::size_t>(order.size(), t));
    std::int64_t sum = 0;
    for (int x : order) sum += profile.r[x];
    const std::int64_t cap = (t - 1) * n + lambda;
    std::sort(order.begin(), order.end());
    out.push_back({"frequency-sum-bound", sum <= cap,
                   format_points(order) + " sum " + std::to_string(sum) + " <= " + std::to_string(cap)});
  }
  return out;
}

PackingDesign underlying_design(const DirectedPackingDesign& directed) {
  return PackingDesign(directed.v(), directed.blocks());
}

}  // namespace packing
