#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "slid/bigint.hpp"
#include "slid/fringe.hpp"
#include "slid/rule.hpp"
#include "slid/sequence.hpp"

namespace slid {

/// k = max S and c with k - c the smallest positive integer missing from S.
/// Equivalently S = [k] \ (k - fringe) with c = max(fringe).
struct GapProfile {
  int k = 0;
  int c = 0;
  std::set<int> fringe;
};

/// Throws RuleError for the empty set, for S = [k] (no missing element below k)
/// and for rules with exceptional pairs.
GapProfile gap_profile(const AdjacencyRule& rule);

enum class StatementKind { A, B, C };

std::string_view statement_name(StatementKind kind);

/// One instance of the three induction statements:
///   A(n):   a_{n+1} = a_n + a_{n-k}
///   B(n):   a_n + a_{n-k} > a_{n-1} + a_{n-1-(k-c)} + a_{n-1-2(k-c)} + ...
///   C_d(n): a_{n+1} + a_n > a_{n+c} + a_{n-d}
struct StatementEvaluation {
  StatementKind kind = StatementKind::A;
  int n = 0;
  std::optional<int> d;
  BigInt lhs;
  BigInt rhs;
  bool holds = false;
};

/// Needs n - k >= 1 and terms through n + 1. Only k = max S is used.
StatementEvaluation eval_A(const SequenceState& state, int n);
/// Needs n - k >= 1 and terms through n. Rejects S = [k].
StatementEvaluation eval_B(const SequenceState& state, int n);
/// Needs d >= 1, n - d >= 1 and terms through max(n + 1, n + c). Rejects S = [k].
StatementEvaluation eval_C(const SequenceState& state, int n, int d);

struct SideCondition {
  std::string name;
  std::string detail;
  bool holds = false;
  /// Gating conditions decide the conclusion; the rest are reported only.
  bool gating = true;
};

enum class Conclusion {
  proven,
  /// The check did not go through. This does not refute the recurrence.
  not_proven,
};

std::string_view conclusion_name(Conclusion conclusion);

/// Evidence for the finite check: if some d > 0 has k >= 2d - 4c + 2, C_d(n) for
/// c+d+1 <= n <= k+c+1+d and B(n) for k+c+1 <= n <= 2k+c+d+2, then
/// a_{n+1} = a_n + a_{n-k} for every n > k + c.
struct CheckReport {
  std::string rule;
  int k = 0;
  int c = 0;
  std::set<int> fringe;
  int d = 0;
  std::size_t terms_used = 0;
  /// Prefix length on which the oracle engine reproduced the terms.
  std::size_t oracle_verified_terms = 0;
  std::vector<StatementEvaluation> c_cases;
  std::vector<StatementEvaluation> b_cases;
  std::vector<SideCondition> side_conditions;
  Conclusion conclusion = Conclusion::not_proven;
  /// First failing base case, if any.
  std::optional<StatementEvaluation> first_failure;
  /// Fringe constants, when the report includes the fixed-fringe bounds.
  std::optional<FringeProfile> fringe_profile;
};

struct CheckOptions {
  /// Terms beyond this many are trusted to the window engine alone.
  std::size_t oracle_cross_check_terms = 30;
  /// Also report (non-gating) the fixed-fringe k threshold derived from T.
  bool fringe_bounds = true;
};

/// Index through which the finite check needs terms: 2k + c + d + 3.
std::size_t check_terms_needed(int k, int c, int d);

/// Largest d with k >= 2d - 4c + 2.
int max_admissible_d(int k, int c);

/// Runs the finite check for a pure rule S != [k]. Throws RuleError for
/// unsuitable rules and RangeError for d <= 0.
CheckReport finite_check(const AdjacencyRule& rule, int d, const CheckOptions& options = {});

/// Same, starting from a known prefix (extended as needed).
CheckReport finite_check(const SequenceState& seed, int d, const CheckOptions& options = {});

/// Tries d = 1 .. max_admissible_d(k, c) and returns the first proven report,
/// or the report for the largest d when none proves.
CheckReport finite_check_auto(const AdjacencyRule& rule, const CheckOptions& options = {});
CheckReport finite_check_auto(const SequenceState& seed, const CheckOptions& options = {});

/// Machine-readable report with every statement evaluation.
std::string to_json(const CheckReport& report);
std::string to_json(const FringeProfile& profile);

}  // namespace slid
