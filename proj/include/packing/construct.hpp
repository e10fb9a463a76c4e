#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "packing/bounds.hpp"
#include "packing/core.hpp"

namespace packing {

/// Construction hypotheses failed; the message names the inequality.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotApplicableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Point bookkeeping for the layered construction.
struct ConstructionLayout {
  struct UPoint {
    std::vector<int> subset;  // a (lambda+1)-subset of {1, ..., n}
    int j = 0;                // copy index in {1, ..., t-1}
    int point = 0;
  };
  std::vector<UPoint> u_points;      // ordered lexicographically by (subset, j)
  std::vector<int> w_points;
  std::vector<Block> inner_blocks;   // W_1, ..., W_n in design point ids
};

/// n blocks of size k on v points with every frequency in {floor(nk/v), ceil(nk/v)}.
/// Each new block takes the lowest-index points of least frequency.
PackingDesign balanced_packing(int n, int v, int k, int t);

/// A PD_lambda(n; v, k, t) with every point frequency <= lambda + 1. Requires
/// k >= (t-1) C(n-1, lambda) and lambda v >= nk - (t-1) C(n, lambda+1); throws HypothesisError otherwise.
std::pair<PackingDesign, ConstructionLayout> general_construction(int n, int v, int k, int t, int lambda);

/// Optimal design in the large-block regime, with the report that certifies its size.
/// Throws NotApplicableError outside that regime.
std::pair<PackingDesign, BoundReport> construct_optimal(const DesignParams& params);

}  // namespace packing
