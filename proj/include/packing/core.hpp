#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace packing {

/// Raised when a design violates a structural invariant (point outside [0, v),
/// repeated point inside a block). Distinct from a design that is merely not a packing.
class DesignError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The tuple (v, k, t, lambda) of a packing problem. Requires v >= k >= t >= 1, lambda >= 1.
struct DesignParams {
  int v = 0;
  int k = 0;
  int t = 0;
  int lambda = 0;

  DesignParams() = default;
  DesignParams(int v, int k, int t, int lambda);

  friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

using Block = std::vector<int>;

/// Unordered design. Blocks are stored sorted; block sizes may vary, and empty or
/// repeated blocks are allowed.
class PackingDesign {
 public:
  PackingDesign() = default;
  /// Throws DesignError on a point outside [0, v) or a repeated point in a block.
  PackingDesign(int v, std::vector<Block> blocks);

  int v() const { return v_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  /// Common block size, or nullopt when sizes differ (or there are no blocks).
  std::optional<int> uniform_block_size() const;

  friend bool operator==(const PackingDesign&, const PackingDesign&) = default;

 private:
  int v_ = 0;
  std::vector<Block> blocks_;
};

/// Ordered design: each block is a duplicate-free sequence, kept verbatim.
class DirectedPackingDesign {
 public:
  DirectedPackingDesign() = default;
  DirectedPackingDesign(int v, std::vector<Block> blocks);

  int v() const { return v_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  std::optional<int> uniform_block_size() const;

  friend bool operator==(const DirectedPackingDesign&, const DirectedPackingDesign&) = default;

 private:
  int v_ = 0;
  std::vector<Block> blocks_;
};

/// r(x) per point and N_i per frequency i in {0, ..., n}.
struct FrequencyProfile {
  std::vector<int> r;
  std::vector<int> N;
  int n = 0;
  std::int64_t total_incidence = 0;  // sum of block sizes

  int max_frequency() const;
};

struct Diagnostic {
  std::string check;
  bool passed = false;
  std::string witness;
};

struct ValidationReport {
  bool valid = false;
  /// A t-subset (or ordered t-tuple) of maximum multiplicity; empty when no block has t points.
  std::vector<int> worst_t_set;
  int worst_multiplicity = 0;
  std::vector<Diagnostic> diagnostics;
};

enum class BlockSizeMode { AtMost, Uniform };

/// Every t-subset of points lies in at most lambda blocks (repeated blocks counted separately).
/// Throws std::invalid_argument when design.v() != params.v or a block exceeds params.k
/// (or differs from it in Uniform mode).
ValidationReport validate_packing(const PackingDesign& design, const DesignParams& params,
                                  BlockSizeMode mode = BlockSizeMode::AtMost);

/// Every ordered t-tuple of distinct points is a (not necessarily contiguous) subsequence
/// of at most lambda blocks.
ValidationReport validate_directed(const DirectedPackingDesign& design, const DesignParams& params,
                                   BlockSizeMode mode = BlockSizeMode::AtMost);

/// True iff `pattern` occurs in `sequence` in order, gaps allowed.
bool is_subsequence(const std::vector<int>& pattern, const std::vector<int>& sequence);

FrequencyProfile frequency_profile(const PackingDesign& design);
FrequencyProfile frequency_profile(const DirectedPackingDesign& design);

/// Counting consequences of validity: point frequency bound, the (lambda+1)-set
/// incidence bound on N_i, and the frequency-sum bound on any t points.
/// Requires a uniform block size equal to params.k.
std::vector<Diagnostic> structural_diagnostics(const PackingDesign& design, const DesignParams& params);

/// Forgets the order inside every block.
PackingDesign underlying_design(const DirectedPackingDesign& directed);

}  // namespace packing
