#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "packing/core.hpp"

namespace packing {

/// Input is not a 2-fold packing with every frequency at most 3.
class DirectingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A proved property of the insertion step failed; indicates a bug, never bad input.
class DirectingInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Consecutive integers {lo, ..., hi}.
struct Window {
  int lo = 0;
  int hi = 0;
  int size() const { return hi >= lo ? hi - lo + 1 : 0; }
  bool contains(int x) const { return lo <= x && x <= hi; }
  friend bool operator==(const Window&, const Window&) = default;
};

/// Bookkeeping for inserting a point `a` that lies in three blocks.
///
/// With B1', B2', B3' the residual blocks (a removed) and T1', T2', T3' their orderings:
/// X = B1' n B2' (indexed in T1' order), Y = B1' n B3' (T1' order), Z = B2' n B3' (T2' order).
/// Row i in {0, ..., p+q} describes the cut after the first i entries of T1'[X u Y]:
/// j, k count the X and Y entries before the cut; R and S are the windows of Z-indices
/// compatible with that cut in T2' and T3' (index 0 and r+1 stand for the sequence ends).
struct DirectingState {
  struct Row {
    int j = 0;
    int k = 0;
    Window R;
    Window S;
  };

  int a = -1;
  std::vector<int> x;  // x[0] is x_1
  std::vector<int> y;
  std::vector<int> z;
  std::vector<Row> rows;
  int ell = 0;  // least i with R(i).lo < S(i).hi
  int m = 0;    // least m with {m, m+1} inside R(ell) n S(ell)

  int p() const { return static_cast<int>(x.size()); }
  int q() const { return static_cast<int>(y.size()); }
  int r() const { return static_cast<int>(z.size()); }
};

/// Builds the state and checks every proved property (window sizes, end rows, the
/// step relations, the orientation of X, Y, Z in the three blocks, and the window overlap).
/// Throws DirectingInvariantError on any failure.
DirectingState compute_state(int a, const Block& t1, const Block& t2, const Block& t3);

/// Inserts `a` into the three residual orderings so that every point sharing two of the
/// blocks with `a` meets it once in each direction.
std::array<Block, 3> insert_point(int a, const Block& t1, const Block& t2, const Block& t3,
                                  const DirectingState& state);

struct DirectingStats {
  std::array<std::int64_t, 4> insertions_by_frequency{};
  std::int64_t ell_zero = 0;
};

/// Orders the blocks of a 2-fold packing (any block sizes) whose points have frequency <= 3 so
/// that no ordered pair repeats. Output block i is a permutation of input block i.
/// Throws DirectingError if the input is not such a packing.
DirectedPackingDesign direct_packing(const PackingDesign& design, DirectingStats* stats = nullptr);

}  // namespace packing
