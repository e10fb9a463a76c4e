#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "packing/core.hpp"

namespace packing {

enum class Provenance {
  JohnsonSchonheim,
  Hanani,
  SecondJohnson,
  GenSecondJohnson,
  Horsley1,
  Horsley2,
  Thm34,
  Thm35,
  Cor36,
  Thm44,
  DirectedViaLemma13,
};

std::string_view to_string(Provenance p);

/// A bound (or exact value) with the quantities that produced it.
/// `value` is empty when the bound does not apply; `note` then says why.
struct BoundReport {
  std::optional<std::int64_t> value;
  Provenance provenance = Provenance::JohnsonSchonheim;
  bool exact = false;
  std::vector<std::pair<std::string, std::string>> detail;
  std::string note;

  bool applicable() const { return value.has_value(); }
  /// Value of a named detail entry, or empty string.
  std::string get(std::string_view key) const;
};

BoundReport johnson_schonheim(const DesignParams& params);

/// Hanani's refinement for t = 2 (requires k >= 2).
BoundReport hanani_b(int v, int k, int lambda);

/// Second Johnson bound (lambda = 1): the largest d passing the quadratic counting test.
/// Detail carries the closed form, or "n/a" when v(t-1) >= k^2.
BoundReport second_johnson(int v, int k, int t);
bool second_johnson_feasible(std::int64_t d, int v, int k, int t);
std::optional<std::int64_t> second_johnson_closed_form(int v, int k, int t);

/// (t-1) C(d, lambda+1) >= v C(q, lambda+1) + r C(q, lambda) where dk = qv + r, 0 <= r < v.
bool gen_second_johnson_feasible(std::int64_t d, const DesignParams& params);
BoundReport gen_second_johnson_bound(const DesignParams& params);

BoundReport horsley_bound_1(int v, int k, int lambda);
BoundReport horsley_bound_2(int v, int k, int lambda);

/// Exact PDN from the large-block theorems (n-window, then the l-window), if either applies.
BoundReport exact_by_theorems(const DesignParams& params);
/// The n-window theorem alone; also used for the directed case at (t, lambda) = (2, 2).
BoundReport exact_n_window(const DesignParams& params);
/// The l-window theorem alone.
BoundReport exact_ell_window(const DesignParams& params);
/// Least l with (t-1) C(l, lambda) > k.
std::int64_t least_ell(int k, int t, int lambda);

/// Parameters ((t-1)/lambda C(n, lambda+1), (t-1) C(n-1, lambda), t, lambda) whose packing number is
/// exactly n; nullopt when n < lambda + 1, the divisibility fails, or v < k.
std::optional<DesignParams> corollary_parameters(int n, int t, int lambda);
/// Recognizes corollary-form parameters and reports their packing number (provenance Cor36).
BoundReport exact_by_corollary(const DesignParams& params);

/// Exact DPDN(v, k) = PDN_2(v, k) when nk - C(n,3) <= 2v < (n+1)k - C(n+1,3).
BoundReport exact_dpdn_by_theorem(int v, int k);

/// Every bound that applies to the problem, in a fixed order. For directed problems the
/// undirected bounds are evaluated at multiplicity t! * lambda and tagged DirectedViaLemma13.
std::vector<BoundReport> all_bounds(const DesignParams& params, bool directed = false);

/// Pure upper bounds only (no exact-value theorems); used by the exact solver for pruning.
std::vector<BoundReport> counting_bounds(const DesignParams& params, bool directed = false);

/// Minimum over all_bounds(); ties go to the earlier entry of all_bounds().
BoundReport best_upper_bound(const DesignParams& params, bool directed = false);

}  // namespace packing
