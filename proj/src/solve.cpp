#include "packing/solve.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "packing/bounds.hpp"
#include "packing/combinatorics.hpp"

namespace packing {

std::string_view to_string(Certificate c) {
  return c == Certificate::Optimal ? "optimal" : "budget-exhausted lower bound";
}

namespace {

struct Control {
  std::optional<std::int64_t> budget;
  std::int64_t nodes = 0;
  std::int64_t best = 0;
  std::int64_t stop_at = std::numeric_limits<std::int64_t>::max();
  bool exhausted = false;
  bool stop = false;

  // Counts a node; false once the budget is spent.
  bool enter() {
    if (budget && nodes >= *budget) {
      exhausted = true;
      stop = true;
      return false;
    }
    ++nodes;
    return true;
  }
};

std::int64_t counting_upper_bound(const DesignParams& params, bool directed) {
  std::int64_t ub = std::numeric_limits<std::int64_t>::max();
  for (const auto& b : counting_bounds(params, directed)) {
    if (b.applicable()) ub = std::min(ub, *b.value);
  }
  return ub;
}

// Can `more` extra blocks of size k raise the profile to `target` blocks without breaking
// sum_x C(r_x, lambda+1) <= (t-1) C(target, lambda+1)? Water-filling gives the minimum.
bool profile_allows(std::vector<int> freq, std::vector<int> capacity, std::int64_t more, int k, int t, int lambda,
                    std::int64_t target) {
  std::int64_t need = more * k;
  while (need > 0) {
    int pick = -1;
    std::int64_t pick_cost = 0;
    for (std::size_t x = 0; x < freq.size(); ++x) {
      if (capacity[x] <= 0) continue;
      const std::int64_t cost = binomial(freq[x], lambda);
      if (pick < 0 || cost < pick_cost) {
        pick = static_cast<int>(x);
        pick_cost = cost;
      }
    }
    if (pick < 0) return false;
    ++freq[pick];
    --capacity[pick];
    --need;
  }
  std::int64_t lhs = 0;
  for (int r : freq) lhs += binomial(r, lambda + 1);
  return lhs <= (t - 1) * binomial(target, lambda + 1);
}

std::int64_t frequency_cap(const DesignParams& p) {
  return checked_mul(p.lambda, binomial(p.v - 1, p.t - 1)) / binomial(p.k - 1, p.t - 1);
}

std::int64_t tsubset_rank(std::span<const int> sorted) {
  std::int64_t rank = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) rank += binomial(sorted[i], static_cast<std::int64_t>(i) + 1);
  return rank;
}

class PackingSearch {
 public:
  PackingSearch(const DesignParams& params, Control& control) : p_(params), control_(control) {
    for (const auto& subset : combinations(0, p_.v - 1, p_.k)) {
      std::uint64_t mask = 0;
      for (int x : subset) mask |= std::uint64_t{1} << x;
      masks_.push_back(mask);
      std::vector<int> ids;
      for_each_combination(subset, p_.t, [&](std::span<const int> ts) {
        ids.push_back(static_cast<int>(tsubset_rank(ts)));
      });
      tsubs_.push_back(std::move(ids));
      blocks_.push_back(subset);
    }
    counts_.assign(binomial(p_.v, p_.t), 0);
    freq_.assign(p_.v, 0);
    rmax_ = frequency_cap(p_);
  }

  void run(bool fix_first) {
    std::vector<int> all(masks_.size());
    std::iota(all.begin(), all.end(), 0);
    if (!fix_first) {
      dfs(all);
      return;
    }
    apply(0);
    chosen_.push_back(0);
    dfs(filter(all, 0, 0));
  }

  std::vector<Block> witness() const {
    std::vector<Block> out;
    for (int c : witness_) out.push_back(blocks_[c]);
    return out;
  }

 private:
  int max_count(int c) const {
    int m = 0;
    for (int id : tsubs_[c]) m = std::max(m, counts_[id]);
    return m;
  }

  void apply(int c) {
    for (int id : tsubs_[c]) ++counts_[id];
    for (int x : blocks_[c]) ++freq_[x];
  }
  void undo(int c) {
    for (int id : tsubs_[c]) --counts_[id];
    for (int x : blocks_[c]) --freq_[x];
  }

  // Candidates from list[from..] still feasible after `added` was applied.
  std::vector<int> filter(const std::vector<int>& list, std::size_t from, int added) const {
    std::vector<int> out;
    for (std::size_t i = from; i < list.size(); ++i) {
      const int c = list[i];
      if (std::popcount(masks_[c] & masks_[added]) < p_.t || max_count(c) < p_.lambda) out.push_back(c);
    }
    return out;
  }

  bool can_improve(const std::vector<int>& list) const {
    const std::int64_t m = static_cast<std::int64_t>(chosen_.size());
    const std::int64_t target = control_.best + 1;
    const std::int64_t more = target - m;
    std::int64_t available = 0;
    std::uint64_t reach = 0;
    for (int c : list) {
      available += p_.lambda - max_count(c);
      reach |= masks_[c];
    }
    if (available < more) return false;
    std::vector<int> capacity(p_.v, 0);
    for (int x = 0; x < p_.v; ++x) {
      if (reach >> x & 1) capacity[x] = static_cast<int>(std::min<std::int64_t>(more, rmax_ - freq_[x]));
    }
    return profile_allows(freq_, capacity, more, p_.k, p_.t, p_.lambda, target);
  }

  void dfs(const std::vector<int>& list) {
    if (control_.stop || !control_.enter()) return;
    const auto m = static_cast<std::int64_t>(chosen_.size());
    if (m > control_.best) {
      control_.best = m;
      witness_ = chosen_;
      if (control_.best >= control_.stop_at) {
        control_.stop = true;
        return;
      }
    }
    if (list.empty() || !can_improve(list)) return;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const int c = list[i];
      apply(c);
      chosen_.push_back(c);
      dfs(filter(list, i, c));
      chosen_.pop_back();
      undo(c);
      if (control_.stop) return;
    }
  }

  DesignParams p_;
  Control& control_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::vector<int>> tsubs_;
  std::vector<Block> blocks_;
  std::vector<int> counts_;
  std::vector<int> freq_;
  std::vector<int> chosen_;
  std::vector<int> witness_;
  std::int64_t rmax_ = 0;
};

using PairSet = std::array<std::uint64_t, 4>;  // ordered pairs (a, b) over v <= 16 points

class DirectedSearch {
 public:
  DirectedSearch(int v, int k, Control& control) : v_(v), k_(k), control_(control) {
    Block current;
    std::vector<bool> used(v, false);
    enumerate(current, used);
    freq_.assign(v, 0);
    rmax_ = frequency_cap(DesignParams(v, k, 2, 2));
  }

  void run(bool fix_first) {
    std::vector<int> all(tuples_.size());
    std::iota(all.begin(), all.end(), 0);
    if (!fix_first) {
      dfs(all);
      return;
    }
    // (0, 1, ..., k-1) is the lexicographically first tuple.
    apply(0);
    chosen_.push_back(0);
    dfs(filter(all, 1, 0));
  }

  std::vector<Block> witness() const {
    std::vector<Block> out;
    for (int c : witness_) out.push_back(tuples_[c]);
    return out;
  }

 private:
  void enumerate(Block& current, std::vector<bool>& used) {
    if (static_cast<int>(current.size()) == k_) {
      PairSet pairs{};
      std::uint16_t points = 0;
      for (int i = 0; i < k_; ++i) {
        points |= static_cast<std::uint16_t>(1u << current[i]);
        for (int j = i + 1; j < k_; ++j) {
          const int bit = current[i] * v_ + current[j];
          pairs[bit / 64] |= std::uint64_t{1} << (bit % 64);
        }
      }
      tuples_.push_back(current);
      pairs_.push_back(pairs);
      points_.push_back(points);
      return;
    }
    for (int x = 0; x < v_; ++x) {
      if (used[x]) continue;
      used[x] = true;
      current.push_back(x);
      enumerate(current, used);
      current.pop_back();
      used[x] = false;
    }
  }

  static bool disjoint(const PairSet& a, const PairSet& b) {
    return ((a[0] & b[0]) | (a[1] & b[1]) | (a[2] & b[2]) | (a[3] & b[3])) == 0;
  }

  void apply(int c) {
    for (int x : tuples_[c]) ++freq_[x];
  }
  void undo(int c) {
    for (int x : tuples_[c]) --freq_[x];
  }

  std::vector<int> filter(const std::vector<int>& list, std::size_t from, int added) const {
    std::vector<int> out;
    for (std::size_t i = from; i < list.size(); ++i) {
      if (disjoint(pairs_[list[i]], pairs_[added])) out.push_back(list[i]);
    }
    return out;
  }

  bool can_improve(const std::vector<int>& list) const {
    const std::int64_t m = static_cast<std::int64_t>(chosen_.size());
    const std::int64_t target = control_.best + 1;
    const std::int64_t more = target - m;
    if (static_cast<std::int64_t>(list.size()) < more) return false;
    std::uint32_t reach = 0;
    for (int c : list) reach |= points_[c];
    std::vector<int> capacity(v_, 0);
    for (int x = 0; x < v_; ++x) {
      if (reach >> x & 1) capacity[x] = static_cast<int>(std::min<std::int64_t>(more, rmax_ - freq_[x]));
    }
    // The unordered shadow is a 2-fold pair packing.
    return profile_allows(freq_, capacity, more, k_, 2, 2, target);
  }

  void dfs(const std::vector<int>& list) {
    if (control_.stop || !control_.enter()) return;
    const auto m = static_cast<std::int64_t>(chosen_.size());
    if (m > control_.best) {
      control_.best = m;
      witness_ = chosen_;
      if (control_.best >= control_.stop_at) {
        control_.stop = true;
        return;
      }
    }
    if (list.empty() || !can_improve(list)) return;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const int c = list[i];
      apply(c);
      chosen_.push_back(c);
      dfs(filter(list, i + 1, c));
      chosen_.pop_back();
      undo(c);
      if (control_.stop) return;
    }
  }

  int v_;
  int k_;
  Control& control_;
  std::vector<Block> tuples_;
  std::vector<PairSet> pairs_;
  std::vector<std::uint16_t> points_;
  std::vector<int> freq_;
  std::vector<int> chosen_;
  std::vector<int> witness_;
  std::int64_t rmax_ = 0;
};

Control make_control(const SearchConfig& config, std::int64_t ub) {
  if (config.node_budget && *config.node_budget <= 0) throw std::invalid_argument("node budget must be positive");
  if (config.max_blocks && *config.max_blocks <= 0) throw std::invalid_argument("max_blocks must be positive");
  Control control;
  control.budget = config.node_budget;
  control.stop_at = ub;
  if (config.max_blocks) control.stop_at = std::min(control.stop_at, *config.max_blocks);
  return control;
}

Certificate certificate_of(const Control& control, std::int64_t ub) {
  if (control.best >= ub) return Certificate::Optimal;
  if (control.exhausted || control.stop) return Certificate::BudgetExhausted;
  return Certificate::Optimal;
}

}  // namespace

SolveResult pdn_exact(const DesignParams& params, const SearchConfig& config) {
  if (params.v > 64) throw std::invalid_argument("pdn_exact supports v <= 64");
  const std::int64_t ub = counting_upper_bound(params, false);
  Control control = make_control(config, ub);
  PackingSearch search(params, control);
  search.run(config.symmetry_breaking);
  SolveResult out;
  out.n = control.best;
  out.witness = PackingDesign(params.v, search.witness());
  out.certificate = certificate_of(control, ub);
  out.nodes = control.nodes;
  out.upper_bound = ub;
  return out;
}

DirectedSolveResult dpdn_exact(int v, int k, const SearchConfig& config) {
  if (v > 16) throw std::invalid_argument("dpdn_exact supports v <= 16");
  const DesignParams params(v, k, 2, 1);
  if (k < 2) throw std::invalid_argument("dpdn_exact needs k >= 2");
  const std::int64_t ub = counting_upper_bound(params, true);
  Control control = make_control(config, ub);
  DirectedSearch search(v, k, control);
  search.run(config.symmetry_breaking);
  DirectedSolveResult out;
  out.n = control.best;
  out.witness = DirectedPackingDesign(v, search.witness());
  out.certificate = certificate_of(control, ub);
  out.nodes = control.nodes;
  out.upper_bound = ub;
  return out;
}

bool certify_optimal(const PackingDesign& design, const DesignParams& params, const SearchConfig& config) {
  if (!validate_packing(design, params, BlockSizeMode::Uniform).valid) return false;
  const auto size = static_cast<std::int64_t>(design.size());
  const auto bound = best_upper_bound(params, false);
  if (size == *bound.value) return true;
  const auto solved = pdn_exact(params, config);
  return solved.certificate == Certificate::Optimal && solved.n == size;
}

bool certify_optimal(const DirectedPackingDesign& design, const DesignParams& params, const SearchConfig& config) {
  if (!validate_directed(design, params, BlockSizeMode::Uniform).valid) return false;
  const auto size = static_cast<std::int64_t>(design.size());
  const auto bound = best_upper_bound(params, true);
  if (size == *bound.value) return true;
  if (params.t != 2 || params.lambda != 1) return false;
  const auto solved = dpdn_exact(params.v, params.k, config);
  return solved.certificate == Certificate::Optimal && solved.n == size;
}

}  // namespace packing
