#include "slid/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "slid/error.hpp"
#include "slid/reachability.hpp"

namespace slid {

DecompCountSeries count_decompositions(const AdjacencyRule& rule, std::size_t n) {
  const UsageWindow window(rule);
  std::map<UsageWindow::Pattern, BigInt> counts{{0, 1}};
  DecompCountSeries out{rule, {1}, {0}};
  for (std::size_t index = 1; index <= n; ++index) {
    std::map<UsageWindow::Pattern, BigInt> next;
    BigInt with_index = 0;
    for (const auto& [recent, count] : counts) {
      next[window.skip(recent)] += count;
      if (window.may_use(recent, static_cast<int>(index))) {
        next[window.use(recent)] += count;
        with_index += count;
      }
    }
    counts = std::move(next);
    out.c.push_back(with_index);
    out.d.push_back(out.d.back() + with_index);
  }
  return out;
}

namespace {

void require_dn_shape(int k, int c) {
  if (c < 1) throw RuleError("the d_n recurrence needs c >= 1");
  if (2 * c >= k) {
    throw RuleError("the d_n recurrence needs 2c < k, got k=" + std::to_string(k) +
                    ", c=" + std::to_string(c));
  }
}

}  // namespace

DnRecurrenceReport verify_dn_recurrence(int k, int c, std::span<const BigInt> d) {
  require_dn_shape(k, c);
  DnRecurrenceReport out;
  out.k = k;
  out.c = c;
  for (std::size_t n = static_cast<std::size_t>(k) + 2; n < d.size(); ++n) {
    DnRecurrenceRow row;
    row.n = static_cast<int>(n);
    row.lhs = d[n];
    row.rhs = d[n - 1] + d[n - k + c] - d[n - k + c - 1] + d[n - k - 1];
    row.holds = row.lhs == row.rhs;
    out.all_hold = out.all_hold && row.holds;
    out.rows.push_back(std::move(row));
  }
  return out;
}

DnRecurrenceReport verify_dn_recurrence(int k, int c, std::size_t n_max) {
  require_dn_shape(k, c);
  const auto series = count_decompositions(AdjacencyRule::fringe(k, {c}), n_max);
  return verify_dn_recurrence(k, c, series.d);
}

GreedyResult greedy_decomposition(const SequenceState& state, const BigInt& m) {
  if (m < 0) throw RangeError("greedy decomposition needs m >= 0");
  if (m > 0 && (state.size() == 0 || m > state.terms().back())) {
    throw RangeError("terms do not cover " + to_decimal(m) + "; generate more terms first");
  }
  const auto terms = state.terms();
  GreedyResult out;
  out.decomposition.value = m;
  BigInt remaining = m;
  std::size_t limit = terms.size();  // candidates are indices 1..limit
  while (remaining > 0) {
    const auto it = std::upper_bound(terms.begin(), terms.begin() + static_cast<long>(limit),
                                     remaining);
    const auto index = static_cast<std::size_t>(it - terms.begin());  // largest with a <= remaining
    if (index == 0) {
      throw ConsistencyError("greedy ran out of terms with " + to_decimal(remaining) + " left");
    }
    out.decomposition.indices.push_back(static_cast<int>(index));
    remaining -= terms[index - 1];
    limit = index - 1;
  }
  out.legal = is_legal(state.rule(), out.decomposition.indices);
  return out;
}

GreedyScan greedy_legality_scan(const SequenceState& state, std::size_t n) {
  const BigInt& bound = state.term(n);
  GreedyScan out;
  out.n = n;
  out.scanned = bound - 1;
  out.legal = 0;
  for (BigInt m = 1; m < bound; ++m) {
    if (greedy_decomposition(state, m).legal) ++out.legal;
  }
  out.proportion =
      out.scanned == 0 ? 0.0L : to_long_double(out.legal) / to_long_double(out.scanned);
  return out;
}

long double Polynomial::operator()(long double x) const {
  long double acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial term_growth_polynomial(int k) {
  if (k < 1) throw RangeError("growth polynomial needs k >= 1");
  Polynomial p;
  p.coeffs.assign(static_cast<std::size_t>(k) + 2, 0.0L);
  p.coeffs[k + 1] += 1;
  p.coeffs[k] -= 1;
  p.coeffs[0] -= 1;
  return p;
}

Polynomial count_growth_polynomial(int k, int c) {
  if (k < 1 || c < 0 || c >= k) throw RangeError("count polynomial needs 0 <= c < k");
  Polynomial p;
  p.coeffs.assign(static_cast<std::size_t>(k) + 2, 0.0L);
  p.coeffs[k + 1] += 1;
  p.coeffs[k] -= 1;
  p.coeffs[c + 1] -= 1;
  p.coeffs[c] += 1;
  p.coeffs[0] -= 1;
  return p;
}

double dominant_root(const Polynomial& p) {
  long double lo = 1.0L;
  long double hi = 2.0L;
  long double f_lo = p(lo);
  const long double f_hi = p(hi);
  if (f_lo == 0) return static_cast<double>(lo);
  if (f_hi == 0) return static_cast<double>(hi);
  if ((f_lo < 0) == (f_hi < 0)) {
    throw NumericError("polynomial has no sign change on [1, 2]");
  }
  for (int iter = 0; iter < 200 && hi - lo > 1e-15L; ++iter) {
    const long double mid = (lo + hi) / 2;
    const long double f_mid = p(mid);
    if (f_mid == 0) return static_cast<double>(mid);
    if ((f_mid < 0) == (f_lo < 0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return static_cast<double>((lo + hi) / 2);
}

GrowthEstimate estimate_term_growth(const SequenceState& state, int k, std::size_t n) {
  GrowthEstimate out;
  out.polynomial = term_growth_polynomial(k);
  out.dominant_root = dominant_root(out.polynomial);
  out.n = n;
  out.empirical_ratio =
      static_cast<double>(to_long_double(state.term(n + 1)) / to_long_double(state.term(n)));
  return out;
}

namespace {

// c when the rule is [k] \ {k - c} with 2c < k.
std::optional<std::pair<int, int>> single_gap_shape(const AdjacencyRule& rule) {
  if (!rule.is_pure() || !rule.max_diff()) return std::nullopt;
  const int k = *rule.max_diff();
  if (static_cast<int>(rule.diffs().size()) != k - 1) return std::nullopt;
  int missing = 1;
  while (rule.diffs().contains(missing)) ++missing;
  const int c = k - missing;
  if (c < 1 || 2 * c >= k) return std::nullopt;
  return std::make_pair(k, c);
}

}  // namespace

AverageGrowthReport average_decomposition_growth(const AdjacencyRule& rule, std::size_t n_max) {
  constexpr std::size_t kMaxSumBound = 50'000'000;
  if (n_max > 63) throw RangeError("average growth counts fit 64 bits only up to n_max = 63");
  const auto seq = generate(rule, static_cast<long long>(n_max));
  AverageGrowthReport out;
  if (n_max == 0) return out;
  const BigInt& top = seq.term(n_max);
  if (top > kMaxSumBound) {
    throw RangeError("a_" + std::to_string(n_max) + " = " + to_decimal(top) +
                     " is too large for the bounded-sum count");
  }
  const auto bound = top.convert_to<std::size_t>();

  // counts[pattern][s]: legal sets over the indices seen so far with sum s < bound.
  const UsageWindow window(rule);
  std::map<UsageWindow::Pattern, std::vector<std::uint64_t>> counts;
  counts[0].assign(bound, 0);
  counts[0][0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto a_n = seq.term(n).convert_to<std::size_t>();
    AverageGrowthRow row;
    row.n = n;
    row.a_n = seq.term(n);
    std::uint64_t total = 0;
    for (const auto& [recent, by_sum] : counts) {
      for (std::size_t s = 0; s < a_n; ++s) total += by_sum[s];
    }
    row.decompositions = total;
    row.average = static_cast<long double>(total) / static_cast<long double>(a_n);
    out.rows.push_back(row);

    std::map<UsageWindow::Pattern, std::vector<std::uint64_t>> next;
    for (auto& [recent, by_sum] : counts) {
      if (window.may_use(recent, static_cast<int>(n))) {
        auto& dst = next[window.use(recent)];
        if (dst.empty()) dst.assign(bound, 0);
        for (std::size_t s = 0; s + a_n < bound; ++s) dst[s + a_n] += by_sum[s];
      }
      auto& skip = next[window.skip(recent)];
      if (skip.empty()) {
        skip = std::move(by_sum);
      } else {
        for (std::size_t s = 0; s < bound; ++s) skip[s] += by_sum[s];
      }
    }
    counts = std::move(next);
  }

  if (out.rows.size() >= 2) {
    out.empirical_ratio = out.rows.back().average / out.rows[out.rows.size() - 2].average;
  }
  const std::size_t first = out.rows.size() / 2;
  const std::size_t count = out.rows.size() - first;
  if (count >= 2) {
    long double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = first; i < out.rows.size(); ++i) {
      const auto x = static_cast<long double>(out.rows[i].n);
      const long double y = std::log(out.rows[i].average);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const auto cnt = static_cast<long double>(count);
    out.fitted_log_slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
  }
  if (const auto shape = single_gap_shape(rule)) {
    const auto [k, c] = *shape;
    out.predicted_ratio = dominant_root(count_growth_polynomial(k, c)) /
                          dominant_root(term_growth_polynomial(k));
  }
  return out;
}

}  // namespace slid
