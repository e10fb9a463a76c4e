#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "packing/core.hpp"

namespace packing {

struct SearchConfig {
  std::optional<std::int64_t> max_blocks;
  std::optional<std::int64_t> node_budget;
  /// Fix the first block to {0, ..., k-1} (resp. (0, 1, ..., k-1)). Blocks are always
  /// enumerated as a lexicographically nondecreasing sequence.
  bool symmetry_breaking = true;
};

enum class Certificate { Optimal, BudgetExhausted };

std::string_view to_string(Certificate c);

struct SolveResult {
  std::int64_t n = 0;
  PackingDesign witness;
  Certificate certificate = Certificate::Optimal;
  std::int64_t nodes = 0;
  std::int64_t upper_bound = 0;  // counting bound that could stop the search early
};

struct DirectedSolveResult {
  std::int64_t n = 0;
  DirectedPackingDesign witness;
  Certificate certificate = Certificate::Optimal;
  std::int64_t nodes = 0;
  std::int64_t upper_bound = 0;
};

/// Depth-first search over k-subsets in lexicographic order with t-subset counters.
/// Prunes with the counting bounds and a partial frequency-profile test; never consults
/// the exact-value theorems. Supports v <= 64.
SolveResult pdn_exact(const DesignParams& params, const SearchConfig& config = {});

/// DPDN(v, k) for (t, lambda) = (2, 1): search over ordered k-tuples. Supports v <= 16.
DirectedSolveResult dpdn_exact(int v, int k, const SearchConfig& config = {});

/// True iff the (valid) design's size matches best_upper_bound or the solver's optimum.
bool certify_optimal(const PackingDesign& design, const DesignParams& params, const SearchConfig& config = {});
bool certify_optimal(const DirectedPackingDesign& design, const DesignParams& params,
                     const SearchConfig& config = {});

}  // namespace packing
