#include "packing/direct.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace packing {

namespace {

using PositionMap = std::unordered_map<int, int>;

PositionMap positions(const Block& seq) {
  PositionMap pos;
  for (int i = 0; i < static_cast<int>(seq.size()); ++i) pos.emplace(seq[i], i);
  return pos;
}

[[noreturn]] void fail(int a, const std::string& what) {
  throw DirectingInvariantError("inserting point " + std::to_string(a) + ": " + what);
}

void require_decreasing(int a, const std::vector<int>& items, const PositionMap& pos, const char* what) {
  for (std::size_t i = 1; i < items.size(); ++i) {
    if (pos.at(items[i - 1]) < pos.at(items[i])) fail(a, std::string(what) + " is not reversed");
  }
}

// Position helpers on the augmented sequences; index 0 / count+1 are the placeholders.
struct Augmented {
  const std::vector<int>& items;
  const PositionMap& pos;
  int length;
  bool zero_at_start;  // whether index 0 sits before the sequence (else after it)

  int at(int index) const {
    const int count = static_cast<int>(items.size());
    if (index == 0) return zero_at_start ? -1 : length;
    if (index == count + 1) return zero_at_start ? length : -1;
    return pos.at(items[index - 1]);
  }
};

// Largest / smallest z-index whose position lies strictly before / after `p`.
int largest_before(const Augmented& z, int p, int fallback) {
  int best = fallback;
  for (int m = 1; m <= static_cast<int>(z.items.size()); ++m) {
    if (z.at(m) < p) best = std::max(best, m);
  }
  return best;
}
int smallest_before(const Augmented& z, int p, int fallback) {
  int best = fallback;
  for (int m = 1; m <= static_cast<int>(z.items.size()); ++m) {
    if (z.at(m) < p) best = std::min(best, m);
  }
  return best;
}
int largest_after(const Augmented& z, int p, int fallback) {
  int best = fallback;
  for (int m = 1; m <= static_cast<int>(z.items.size()); ++m) {
    if (z.at(m) > p) best = std::max(best, m);
  }
  return best;
}
int smallest_after(const Augmented& z, int p, int fallback) {
  int best = fallback;
  for (int m = 1; m <= static_cast<int>(z.items.size()); ++m) {
    if (z.at(m) > p) best = std::min(best, m);
  }
  return best;
}

void check_direction_split(int a, const std::vector<int>& shared, const Block& first, const Block& second) {
  const auto p1 = positions(first);
  const auto p2 = positions(second);
  for (int u : shared) {
    const bool before_in_first = p1.at(u) < p1.at(a);
    const bool before_in_second = p2.at(u) < p2.at(a);
    if (before_in_first == before_in_second) {
      fail(a, "point " + std::to_string(u) + " meets it in the same direction twice");
    }
  }
}

}  // namespace

DirectingState compute_state(int a, const Block& t1, const Block& t2, const Block& t3) {
  const auto pos1 = positions(t1);
  const auto pos2 = positions(t2);
  const auto pos3 = positions(t3);
  if (pos1.contains(a) || pos2.contains(a) || pos3.contains(a)) fail(a, "already present in a residual block");

  DirectingState s;
  s.a = a;
  for (int e : t1) {
    const bool in2 = pos2.contains(e);
    const bool in3 = pos3.contains(e);
    if (in2 && in3) fail(a, "point " + std::to_string(e) + " lies in all three blocks");
    if (in2) s.x.push_back(e);
    if (in3) s.y.push_back(e);
  }
  for (int e : t2) {
    if (pos3.contains(e)) s.z.push_back(e);
  }
  // No ordered pair repeats in the residual design, so shared points appear reversed.
  require_decreasing(a, s.x, pos2, "X in T2'");
  require_decreasing(a, s.y, pos3, "Y in T3'");
  require_decreasing(a, s.z, pos3, "Z in T3'");

  const int p = s.p(), q = s.q(), r = s.r();
  const Augmented x2{s.x, pos2, static_cast<int>(t2.size()), false};  // x_{p+1} first, x_0 last
  const Augmented z2{s.z, pos2, static_cast<int>(t2.size()), true};   // z_0 first, z_{r+1} last
  const Augmented y3{s.y, pos3, static_cast<int>(t3.size()), false};  // y_{q+1} first, y_0 last
  const Augmented z3{s.z, pos3, static_cast<int>(t3.size()), false};  // z_{r+1} first, z_0 last

  auto row_for = [&](int j, int k) {
    DirectingState::Row row;
    row.j = j;
    row.k = k;
    row.R.lo = largest_before(z2, x2.at(j + 1), 0);
    row.R.hi = smallest_after(z2, x2.at(j), r + 1);
    row.S.hi = smallest_before(z3, y3.at(k + 1), r + 1);
    row.S.lo = largest_after(z3, y3.at(k), 0);
    return row;
  };

  std::vector<bool> entry_is_x;  // entries of T1'[X u Y]
  {
    std::unordered_map<int, bool> kind;
    for (int e : s.x) kind[e] = true;
    for (int e : s.y) kind[e] = false;
    for (int e : t1) {
      if (auto it = kind.find(e); it != kind.end()) entry_is_x.push_back(it->second);
    }
  }
  int j = 0, k = 0;
  s.rows.push_back(row_for(0, 0));
  for (bool is_x : entry_is_x) {
    is_x ? ++j : ++k;
    s.rows.push_back(row_for(j, k));
  }

  for (int i = 0; i <= p + q; ++i) {
    const auto& row = s.rows[i];
    if (!(row.R.lo < row.R.hi && row.S.lo < row.S.hi)) fail(a, "window of size < 2 at row " + std::to_string(i));
  }
  if (!(s.rows.front().R.hi == r + 1 && s.rows.front().S.lo == 0)) fail(a, "first row windows are wrong");
  const auto& last = s.rows.back();
  if (!(last.j == p && last.k == q && last.R.lo == 0 && last.S.hi == r + 1)) fail(a, "last row windows are wrong");
  for (int i = 0; i < p + q; ++i) {
    const auto& cur = s.rows[i];
    const auto& nxt = s.rows[i + 1];
    if (entry_is_x[i]) {
      if (!(nxt.j == cur.j + 1 && nxt.k == cur.k && nxt.R.hi == cur.R.lo + 1 && nxt.S == cur.S)) {
        fail(a, "X-step relation broken at row " + std::to_string(i));
      }
    } else {
      if (!(nxt.j == cur.j && nxt.k == cur.k + 1 && nxt.R == cur.R && nxt.S.lo == cur.S.hi - 1)) {
        fail(a, "Y-step relation broken at row " + std::to_string(i));
      }
    }
  }

  s.ell = -1;
  for (int i = 0; i <= p + q; ++i) {
    if (s.rows[i].R.lo < s.rows[i].S.hi) {
      s.ell = i;
      break;
    }
  }
  if (s.ell < 0) fail(a, "no row with R.lo < S.hi");
  const auto& chosen = s.rows[s.ell];
  const Window overlap{std::max(chosen.R.lo, chosen.S.lo), std::min(chosen.R.hi, chosen.S.hi)};
  if (overlap.size() < 2) fail(a, "R(l) and S(l) share fewer than two indices");
  s.m = overlap.lo;
  return s;
}

std::array<Block, 3> insert_point(int a, const Block& t1, const Block& t2, const Block& t3,
                                  const DirectingState& s) {
  const auto pos1 = positions(t1);
  const auto pos2 = positions(t2);
  const auto pos3 = positions(t3);
  const auto& row = s.rows.at(s.ell);
  const int j = row.j, k = row.k, m = s.m;

  int gap1 = 0;
  if (s.ell > 0) {
    int seen = 0;
    for (int i = 0; i < static_cast<int>(t1.size()); ++i) {
      if (pos2.contains(t1[i]) || pos3.contains(t1[i])) {
        if (++seen == s.ell) {
          gap1 = i + 1;
          break;
        }
      }
    }
  }

  // Leftmost gap g with lower < g <= upper for every constraint pair.
  auto leftmost = [&](int lower_a, int upper_a, int lower_b, int upper_b, const char* which) {
    const int g = std::max(lower_a, lower_b) + 1;
    if (g > std::min(upper_a, upper_b)) fail(a, std::string("no insertion position in ") + which);
    return g;
  };
  const Augmented x2{s.x, pos2, static_cast<int>(t2.size()), false};
  const Augmented z2{s.z, pos2, static_cast<int>(t2.size()), true};
  const Augmented y3{s.y, pos3, static_cast<int>(t3.size()), false};
  const Augmented z3{s.z, pos3, static_cast<int>(t3.size()), false};
  const int gap2 = leftmost(x2.at(j + 1), x2.at(j), z2.at(m), z2.at(m + 1), "T2");
  const int gap3 = leftmost(y3.at(k + 1), y3.at(k), z3.at(m + 1), z3.at(m), "T3");

  std::array<Block, 3> out{t1, t2, t3};
  out[0].insert(out[0].begin() + gap1, a);
  out[1].insert(out[1].begin() + gap2, a);
  out[2].insert(out[2].begin() + gap3, a);

  check_direction_split(a, s.x, out[0], out[1]);
  check_direction_split(a, s.y, out[0], out[2]);
  check_direction_split(a, s.z, out[1], out[2]);
  return out;
}

DirectedPackingDesign direct_packing(const PackingDesign& design, DirectingStats* stats) {
  const int v = design.v();
  if (v >= 2) {
    const auto report = validate_packing(design, DesignParams(v, v, 2, 2));
    if (!report.valid) {
      throw DirectingError("input is not a 2-fold packing: pair {" + std::to_string(report.worst_t_set[0]) + "," +
                           std::to_string(report.worst_t_set[1]) + "} lies in " +
                           std::to_string(report.worst_multiplicity) + " blocks");
    }
  }
  const auto profile = frequency_profile(design);
  for (int x = 0; x < v; ++x) {
    if (profile.r[x] > 3) {
      throw DirectingError("frequency bound violated at point " + std::to_string(x) + " (r = " +
                           std::to_string(profile.r[x]) + ")");
    }
  }

  std::vector<std::vector<int>> containing(v);
  for (int b = 0; b < static_cast<int>(design.size()); ++b) {
    for (int x : design.blocks()[b]) containing[x].push_back(b);
  }

  // Peel points from v-1 down to 0, then reinsert in increasing order.
  std::vector<Block> ordered(design.size());
  for (int a = 0; a < v; ++a) {
    const auto& bs = containing[a];
    if (stats) ++stats->insertions_by_frequency[bs.size()];
    switch (bs.size()) {
      case 0:
        break;
      case 1:
        ordered[bs[0]].insert(ordered[bs[0]].begin(), a);
        break;
      case 2:
        ordered[bs[0]].insert(ordered[bs[0]].begin(), a);
        ordered[bs[1]].push_back(a);
        break;
      case 3: {
        const auto state = compute_state(a, ordered[bs[0]], ordered[bs[1]], ordered[bs[2]]);
        if (stats && state.ell == 0) ++stats->ell_zero;
        auto next = insert_point(a, ordered[bs[0]], ordered[bs[1]], ordered[bs[2]], state);
        for (int i = 0; i < 3; ++i) ordered[bs[i]] = std::move(next[i]);
        break;
      }
      default:
        throw DirectingInvariantError("frequency above 3 slipped through");
    }
  }
  return DirectedPackingDesign(v, std::move(ordered));
}

}  // namespace packing
