#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace packing {

/// Binomial coefficient C(n, r) with the convention C(n, r) = 0 when r > n or r < 0.
/// Throws std::overflow_error if the result does not fit in int64.
std::int64_t binomial(std::int64_t n, std::int64_t r);

/// Checked int64 arithmetic; throws std::overflow_error.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

/// Floor division for possibly negative numerators (denominator > 0).
std::int64_t floor_div(std::int64_t num, std::int64_t den);

/// Visits every r-element combination of `items` in lexicographic position order.
/// The callback receives the chosen elements in their original relative order.
void for_each_combination(std::span<const int> items, int r,
                          const std::function<void(std::span<const int>)>& visit);

/// All r-subsets of {lo, ..., hi} in lexicographic order.
std::vector<std::vector<int>> combinations(int lo, int hi, int r);

}  // namespace packing
