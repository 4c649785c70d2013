#pragma once

#include <optional>
#include <span>
#include <vector>

#include "slid/bigint.hpp"
#include "slid/rule.hpp"
#include "slid/sequence.hpp"

namespace slid {

/// d[n]: legal index sets inside [n], the empty set included (d[0] = 1).
/// c[n]: those that contain n, so c[n] = d[n] - d[n-1]; c[0] is 0.
struct DecompCountSeries {
  AdjacencyRule rule;
  std::vector<BigInt> d;
  std::vector<BigInt> c;
};

/// Counts by DP over the same window patterns the generator uses. Counting
/// depends only on legality, so no terms are needed.
DecompCountSeries count_decompositions(const AdjacencyRule& rule, std::size_t n);
inline DecompCountSeries count_decompositions(const SequenceState& state, std::size_t prefix_len) {
  return count_decompositions(state.rule(), prefix_len);
}

struct DnRecurrenceRow {
  int n = 0;
  BigInt lhs;  // d_n
  BigInt rhs;  // d_{n-1} + d_{n-k+c} - d_{n-k+c-1} + d_{n-k-1}
  bool holds = false;
};

struct DnRecurrenceReport {
  int k = 0;
  int c = 0;
  std::vector<DnRecurrenceRow> rows;  // n = k+2 .. n_max
  bool all_hold = true;
};

/// Checks d_n = d_{n-1} + d_{n-k+c} - d_{n-k+c-1} + d_{n-k-1} for k+1 < n <= n_max
/// with S = [k] \ {k - c}. Requires 1 <= c and 2c < k.
DnRecurrenceReport verify_dn_recurrence(int k, int c, std::size_t n_max);
/// Same check against externally supplied counts d[0..n_max].
DnRecurrenceReport verify_dn_recurrence(int k, int c, std::span<const BigInt> d);

struct GreedyResult {
  Decomposition decomposition;
  bool legal = false;
};

/// Repeatedly takes the largest unused term not exceeding what remains.
/// m must not exceed the last term (m = 0 is always fine).
GreedyResult greedy_decomposition(const SequenceState& state, const BigInt& m);

struct GreedyScan {
  std::size_t n = 0;
  BigInt scanned;  // integers in [1, a_n)
  BigInt legal;
  long double proportion = 0;
};

/// Greedy legality over every m in [1, a_n).
GreedyScan greedy_legality_scan(const SequenceState& state, std::size_t n);

/// Real polynomial, coefficients in ascending degree.
struct Polynomial {
  std::vector<long double> coeffs;

  long double operator()(long double x) const;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// x^{k+1} - x^k - 1: characteristic polynomial of a_{n+1} = a_n + a_{n-k}.
Polynomial term_growth_polynomial(int k);
/// x^{k+1} - x^k - x^{c+1} + x^c - 1: characteristic polynomial of the d_n recurrence.
Polynomial count_growth_polynomial(int k, int c);

/// Root on [1, 2] by bisection to absolute width 1e-12 (or better). Throws
/// NumericError when p(1) and p(2) have the same sign.
double dominant_root(const Polynomial& p);

struct GrowthEstimate {
  Polynomial polynomial;
  double dominant_root = 0;
  std::size_t n = 0;
  double empirical_ratio = 0;  // a_{n+1} / a_n
};

/// Compares the growth of a_{n+1}/a_n against the root of x^{k+1} - x^k - 1.
/// The state needs n + 1 terms.
GrowthEstimate estimate_term_growth(const SequenceState& state, int k, std::size_t n);

struct AverageGrowthRow {
  std::size_t n = 0;
  BigInt a_n;
  BigInt decompositions;  // legal sets with sum < a_n, i.e. decompositions of [0, a_n)
  long double average = 0;
};

struct AverageGrowthReport {
  std::vector<AverageGrowthRow> rows;
  /// average_n / average_{n-1} at the last row.
  long double empirical_ratio = 0;
  /// Least-squares slope of log(average) over the last half of the rows.
  long double fitted_log_slope = 0;
  /// r / lambda when the rule is [k] \ {k - c} with 2c < k.
  std::optional<double> predicted_ratio;
};

/// Average number of decompositions of the integers in [0, a_n) for n = 1..n_max.
/// Counts by a bounded-sum DP, so a_{n_max} must stay moderate.
AverageGrowthReport average_decomposition_growth(const AdjacencyRule& rule, std::size_t n_max);

}  // namespace slid
