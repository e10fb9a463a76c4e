#include "packing/combinatorics.hpp"

#include <numeric>
#include <stdexcept>

namespace packing {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("int64 overflow in multiplication");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("int64 overflow in addition");
  return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    // result * (n - r + i) / i is exact at every step; divide by gcd first to delay overflow.
    const std::int64_t num = n - r + i;
    const std::int64_t g = std::gcd(result, i);
    result = checked_mul(result / g, num / (i / g));
  }
  return result;
}

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

void for_each_combination(std::span<const int> items, int r,
                          const std::function<void(std::span<const int>)>& visit) {
  const int n = static_cast<int>(items.size());
  if (r < 0 || r > n) return;
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> chosen(r);
  while (true) {
    for (int i = 0; i < r; ++i) chosen[i] = items[idx[i]];
    visit(chosen);
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::vector<int>> combinations(int lo, int hi, int r) {
  std::vector<int> items;
  for (int x = lo; x <= hi; ++x) items.push_back(x);
  std::vector<std::vector<int>> out;
  for_each_combination(items, r, [&](std::span<const int> c) { out.emplace_back(c.begin(), c.end()); });
  return out;
}

}  // namespace packing
