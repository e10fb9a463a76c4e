#include "packing/bounds.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <boost/rational.hpp>

#include "packing/combinatorics.hpp"

namespace packing {

using Rational = boost::rational<std::int64_t>;

namespace {

std::string str(std::int64_t x) { return std::to_string(x); }

std::string str(const Rational& q) {
  std::ostringstream os;
  os << q.numerator();
  if (q.denominator() != 1) os << "/" << q.denominator();
  return os.str();
}

std::int64_t floor_of(const Rational& q) { return floor_div(q.numerator(), q.denominator()); }

BoundReport not_applicable(Provenance p, std::string why) {
  BoundReport b;
  b.provenance = p;
  b.note = std::move(why);
  return b;
}

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f = checked_mul(f, i);
  return f;
}

}  // namespace

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::JohnsonSchonheim: return "JohnsonSchonheim";
    case Provenance::Hanani: return "Hanani";
    case Provenance::SecondJohnson: return "SecondJohnson";
    case Provenance::GenSecondJohnson: return "GenSecondJohnson";
    case Provenance::Horsley1: return "Horsley1";
    case Provenance::Horsley2: return "Horsley2";
    case Provenance::Thm34: return "Thm34";
    case Provenance::Thm35: return "Thm35";
    case Provenance::Cor36: return "Cor36";
    case Provenance::Thm44: return "Thm44";
    case Provenance::DirectedViaLemma13: return "DirectedViaLemma13";
  }
  return "?";
}

std::string BoundReport::get(std::string_view key) const {
  for (const auto& [k, v] : detail) {
    if (k == key) return v;
  }
  return {};
}

BoundReport johnson_schonheim(const DesignParams& params) {
  const auto [v, k, t, lambda] = params;
  // Innermost floor first, then t-1 outer floors from (v-t+2)/(k-t+2) out to v/k.
  std::int64_t x = checked_mul(lambda, v - t + 1) / (k - t + 1);
  for (int i = t - 2; i >= 0; --i) x = checked_mul(v - i, x) / (k - i);
  BoundReport b;
  b.provenance = Provenance::JohnsonSchonheim;
  b.value = x;
  return b;
}

BoundReport hanani_b(int v, int k, int lambda) {
  if (k < 2 || v < k) return not_applicable(Provenance::Hanani, "needs v >= k >= 2");
  const std::int64_t u = *johnson_schonheim(DesignParams(v, k, 2, lambda)).value;
  const bool first = checked_mul(lambda, v - 1) % (k - 1) == 0;
  // lambda v (v-1) = -1 (mod k)
  const bool second = (checked_mul(checked_mul(lambda, v), v - 1) + 1) % k == 0;
  BoundReport b;
  b.provenance = Provenance::Hanani;
  b.value = (first && second) ? u - 1 : u;
  b.detail = {{"U", str(u)}, {"congruences", first && second ? "hold" : "fail"}};
  return b;
}

bool second_johnson_feasible(std::int64_t d, int v, int k, int t) {
  const std::int64_t dk = checked_mul(d, k);
  const std::int64_t q = dk / v;
  const std::int64_t r = dk % v;
  const std::int64_t lhs = checked_mul(checked_mul(d, d - 1), t - 1);
  const std::int64_t rhs = checked_add(checked_mul(checked_mul(q, q - 1), v), checked_mul(2 * q, r));
  return lhs >= rhs;
}

std::optional<std::int64_t> second_johnson_closed_form(int v, int k, int t) {
  const std::int64_t den = static_cast<std::int64_t>(k) * k - static_cast<std::int64_t>(v) * (t - 1);
  if (den <= 0) return std::nullopt;
  return static_cast<std::int64_t>(v) * (k + 1 - t) / den;
}

namespace {

// Smallest failing d, searched up to the Johnson-Schonheim value + 1; nullopt if none.
template <typename Feasible>
std::optional<std::int64_t> first_infeasible(std::int64_t limit, Feasible feasible) {
  for (std::int64_t d = 0; d <= limit; ++d) {
    if (!feasible(d)) return d;
  }
  return std::nullopt;
}

}  // namespace

BoundReport second_johnson(int v, int k, int t) {
  if (t < 2) return not_applicable(Provenance::SecondJohnson, "needs t >= 2");
  const auto closed = second_johnson_closed_form(v, k, t);
  const std::int64_t limit = *johnson_schonheim(DesignParams(v, k, t, 1)).value + 1;
  const auto fail = first_infeasible(limit, [&](std::int64_t d) { return second_johnson_feasible(d, v, k, t); });
  BoundReport b;
  b.provenance = Provenance::SecondJohnson;
  b.detail = {{"closed_form", closed ? str(*closed) : "n/a"}};
  if (!fail) {
    b.note = "quadratic test never fails below the Johnson-Schonheim bound";
    return b;
  }
  b.value = *fail - 1;
  const std::int64_t dk = static_cast<std::int64_t>(*fail) * k;
  b.detail.insert(b.detail.begin(), {{"first_infeasible_d", str(*fail)}, {"q", str(dk / v)}, {"r", str(dk % v)}});
  return b;
}

bool gen_second_johnson_feasible(std::int64_t d, const DesignParams& params) {
  const auto [v, k, t, lambda] = params;
  const std::int64_t dk = checked_mul(d, k);
  const std::int64_t q = dk / v;
  const std::int64_t r = dk % v;
  const std::int64_t lhs = checked_mul(t - 1, binomial(d, lambda + 1));
  const std::int64_t rhs = checked_add(checked_mul(v, binomial(q, lambda + 1)), checked_mul(r, binomial(q, lambda)));
  return lhs >= rhs;
}

BoundReport gen_second_johnson_bound(const DesignParams& params) {
  const std::int64_t limit = *johnson_schonheim(params).value + 1;
  const auto fail = first_infeasible(limit, [&](std::int64_t d) { return gen_second_johnson_feasible(d, params); });
  if (!fail) {
    return not_applicable(Provenance::GenSecondJohnson,
                          "counting test never fails below the Johnson-Schonheim bound");
  }
  BoundReport b;
  b.provenance = Provenance::GenSecondJohnson;
  b.value = *fail - 1;
  const std::int64_t dk = *fail * params.k;
  b.detail = {{"first_infeasible_d", str(*fail)}, {"q", str(dk / params.v)}, {"r", str(dk % params.v)}};
  return b;
}

BoundReport horsley_bound_1(int v, int k, int lambda) {
  if (!(3 <= k && k < v)) return not_applicable(Provenance::Horsley1, "needs 3 <= k < v");
  const std::int64_t total = checked_mul(lambda, v - 1);
  const std::int64_t r = total / (k - 1);
  const std::int64_t d = total % (k - 1);
  BoundReport b;
  b.provenance = Provenance::Horsley1;
  b.detail = {{"r", str(r)}, {"d", str(d)}};
  if (d >= r - lambda) {
    b.note = "d >= r - lambda";
    return b;
  }
  b.value = checked_mul(v, r - 1) / (k - 1);
  return b;
}

BoundReport horsley_bound_2(int v, int k, int lambda) {
  if (!(3 <= k && k < v)) return not_applicable(Provenance::Horsley2, "needs 3 <= k < v");
  const std::int64_t total = checked_mul(lambda, v - 1);
  const std::int64_t r = total / (k - 1);
  const std::int64_t d = total % (k - 1);
  BoundReport b;
  b.provenance = Provenance::Horsley2;
  b.detail = {{"r", str(r)}, {"d", str(d)}};
  if (d < r - lambda) {
    b.note = "d < r - lambda";
    return b;
  }
  // At r = lambda the formula drops below lambda (0 at (6,5,1)), which any lambda repeated blocks beat.
  if (r == lambda) {
    b.note = "r = lambda";
    return b;
  }

  auto evaluate = [&](const Rational& alpha, const Rational& beta, const char* label) {
    const Rational den = Rational(k) * (alpha - beta) - 1;
    if (den <= 0) {
      b.detail.emplace_back(label, "degenerate");
      return;
    }
    const Rational num = Rational(r * v) * (alpha - beta) - alpha * v;
    const std::int64_t value = floor_of(num / den);
    b.detail.emplace_back(label, "alpha=" + str(alpha) + " beta=" + str(beta) + " -> " + str(value));
    if (!b.value || value < *b.value) b.value = value;
  };

  if (k * (r + lambda - 1) > 2 * d + 2) {
    evaluate(Rational(r - lambda + 1, 2 * d + 2), Rational(0), "case1");
  } else {
    b.detail.emplace_back("case1", "condition fails");
  }
  if ((r - lambda) * k * (k - 1) > 2 * (d + 1) * (d + k)) {
    evaluate(Rational(r - lambda, 2 * d + 2), Rational(r - lambda, 2 * (d + k)), "case2");
  } else {
    b.detail.emplace_back("case2", "condition fails");
  }
  if (!b.value) b.note = "no case applies";
  return b;
}

BoundReport exact_n_window(const DesignParams& params) {
  const auto [v, k, t, lambda] = params;
  if (t < 2) return not_applicable(Provenance::Thm34, "needs t >= 2");
  const std::int64_t lv = checked_mul(lambda, v);
  std::vector<std::int64_t> hits;
  BoundReport b;
  b.provenance = Provenance::Thm34;
  b.exact = true;
  // The window is nonempty only while (t-1) C(n, lambda) < k, so this scan sees every candidate.
  for (std::int64_t n = 1; checked_mul(t - 1, binomial(n, lambda)) < k; ++n) {
    const std::int64_t lower = checked_mul(n, k) - checked_mul(t - 1, binomial(n, lambda + 1));
    const std::int64_t upper = checked_mul(n + 1, k) - checked_mul(t - 1, binomial(n + 1, lambda + 1));
    if (lower <= lv && lv < upper) {
      hits.push_back(n);
      b.detail = {{"n", str(n)}, {"lower", str(lower)}, {"lambda_v", str(lv)}, {"upper", str(upper)}};
    }
  }
  if (hits.size() > 1) throw std::logic_error("n-window theorem matched more than one n");
  if (hits.empty()) {
    b.note = "no n satisfies the window";
    return b;
  }
  if (!(k > (t - 1) * binomial(hits.front(), lambda))) {
    throw std::logic_error("n-window hit without k > (t-1) C(n, lambda)");
  }
  b.value = hits.front();
  return b;
}

std::int64_t least_ell(int k, int t, int lambda) {
  if (t < 2) throw std::invalid_argument("least_ell needs t >= 2");
  std::int64_t ell = 0;
  while (checked_mul(t - 1, binomial(ell, lambda)) <= k) ++ell;
  return ell;
}

BoundReport exact_ell_window(const DesignParams& params) {
  const auto [v, k, t, lambda] = params;
  if (t < 2) return not_applicable(Provenance::Thm35, "needs t >= 2");
  const std::int64_t ell = least_ell(k, t, lambda);
  const std::int64_t lv = checked_mul(lambda, v);
  const std::int64_t lower = checked_mul(ell, k) - checked_mul(t - 1, binomial(ell, lambda + 1));
  const Rational upper = Rational(lambda + 1, lambda + 2) * Rational(checked_mul(ell + 1, k)) -
                         Rational(t - 1, lambda + 2) * Rational(binomial(ell + 1, lambda + 1));
  BoundReport b;
  b.provenance = Provenance::Thm35;
  b.exact = true;
  b.detail = {{"ell", str(ell)}, {"lower", str(lower)}, {"lambda_v", str(lv)}, {"upper", str(upper)}};
  if (lower <= lv && Rational(lv) < upper) {
    b.value = ell;
  } else {
    b.note = "lambda v outside the l-window";
  }
  return b;
}

BoundReport exact_by_theorems(const DesignParams& params) {
  if (params.t < 2) return not_applicable(Provenance::Thm34, "needs t >= 2");
  auto n_window = exact_n_window(params);
  if (n_window.applicable()) return n_window;
  auto ell_window = exact_ell_window(params);
  if (ell_window.applicable()) return ell_window;
  ell_window.note = "neither the n-window nor the l-window applies";
  return ell_window;
}

std::optional<DesignParams> corollary_parameters(int n, int t, int lambda) {
  if (t < 2 || lambda < 1 || n < lambda + 1) return std::nullopt;
  const std::int64_t top = checked_mul(t - 1, binomial(n, lambda + 1));
  if (top % lambda != 0) return std::nullopt;
  const std::int64_t v = top / lambda;
  const std::int64_t k = checked_mul(t - 1, binomial(n - 1, lambda));
  if (k < t || v < k || v > std::numeric_limits<int>::max()) return std::nullopt;
  return DesignParams(static_cast<int>(v), static_cast<int>(k), t, lambda);
}

BoundReport exact_by_corollary(const DesignParams& params) {
  for (int n = params.lambda + 1;; ++n) {
    const std::int64_t k = checked_mul(params.t - 1, binomial(n - 1, params.lambda));
    if (k > params.k) break;
    const auto p = corollary_parameters(n, params.t, params.lambda);
    if (p && *p == params) {
      BoundReport b;
      b.provenance = Provenance::Cor36;
      b.exact = true;
      b.value = n;
      b.detail = {{"n", str(n)}};
      return b;
    }
  }
  return not_applicable(Provenance::Cor36, "parameters are not of corollary form");
}

BoundReport exact_dpdn_by_theorem(int v, int k) {
  if (!(v >= k && k >= 2)) return not_applicable(Provenance::Thm44, "needs v >= k >= 2");
  auto b = exact_n_window(DesignParams(v, k, 2, 2));
  b.provenance = Provenance::Thm44;
  return b;
}

namespace {

void append_undirected(std::vector<BoundReport>& out, const DesignParams& p, bool with_exact) {
  out.push_back(gen_second_johnson_bound(p));
  if (p.lambda == 1) out.push_back(second_johnson(p.v, p.k, p.t));
  if (p.t == 2 && p.k >= 2) out.push_back(hanani_b(p.v, p.k, p.lambda));
  out.push_back(johnson_schonheim(p));
  if (p.t == 2) {
    out.push_back(horsley_bound_1(p.v, p.k, p.lambda));
    out.push_back(horsley_bound_2(p.v, p.k, p.lambda));
  }
  if (with_exact && p.t >= 2) {
    out.push_back(exact_n_window(p));
    out.push_back(exact_ell_window(p));
  }
}

std::vector<BoundReport> collect(const DesignParams& params, bool directed, bool with_exact) {
  std::vector<BoundReport> raw;
  if (!directed) {
    append_undirected(raw, params, with_exact);
    return raw;
  }
  if (with_exact && params.t == 2 && params.lambda == 1) raw.push_back(exact_dpdn_by_theorem(params.v, params.k));
  const std::int64_t multiplicity = checked_mul(factorial(params.t), params.lambda);
  if (multiplicity > std::numeric_limits<int>::max()) return raw;
  std::vector<BoundReport> inner;
  append_undirected(inner, DesignParams(params.v, params.k, params.t, static_cast<int>(multiplicity)), with_exact);
  for (auto& b : inner) {
    BoundReport wrapped = b;
    wrapped.provenance = Provenance::DirectedViaLemma13;
    wrapped.exact = false;
    wrapped.detail.insert(wrapped.detail.begin(),
                          {{"via", std::string(to_string(b.provenance))}, {"multiplicity", str(multiplicity)}});
    raw.push_back(std::move(wrapped));
  }
  return raw;
}

}  // namespace

std::vector<BoundReport> all_bounds(const DesignParams& params, bool directed) {
  return collect(params, directed, true);
}

std::vector<BoundReport> counting_bounds(const DesignParams& params, bool directed) {
  return collect(params, directed, false);
}

BoundReport best_upper_bound(const DesignParams& params, bool directed) {
  std::optional<BoundReport> best;
  for (auto& b : all_bounds(params, directed)) {
    if (b.applicable() && (!best || *b.value < *best->value)) best = std::move(b);
  }
  if (!best) throw std::logic_error("no applicable bound");  // Johnson-Schonheim always applies
  return *best;
}

}  // namespace packing
