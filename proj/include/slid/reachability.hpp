#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "slid/bigint.hpp"
#include "slid/rule.hpp"

namespace slid {

/// Half-open run [lo, hi) of consecutive integers.
struct SumRun {
  BigInt lo;
  BigInt hi;

  bool operator==(const SumRun&) const = default;
};

/// A set of nonnegative integers stored as sorted, disjoint, non-touching runs.
///
/// Decomposition sums of S-LID prefixes cluster into long runs, so this stays
/// small even when the values themselves need more than 64 bits.
class SumSet {
 public:
  SumSet() = default;

  static SumSet singleton(const BigInt& value);

  bool empty() const { return runs_.empty(); }
  std::size_t run_count() const { return runs_.size(); }
  std::span<const SumRun> runs() const { return runs_; }

  bool contains(const BigInt& value) const;
  /// Largest element; the set must be nonempty.
  BigInt max_element() const;
  /// Number of elements.
  BigInt cardinality() const;

  /// {x + offset : x in *this}.
  SumSet shifted(const BigInt& offset) const;
  void unite(const SumSet& other);

  bool operator==(const SumSet&) const = default;

 private:
  /// Points at the run containing value, or runs_.end().
  std::vector<SumRun>::const_iterator find_run(const BigInt& value) const;

  std::vector<SumRun> runs_;

  friend BigInt first_gap_from(std::span<const SumSet* const> sets, BigInt from);
};

/// Smallest x >= from that belongs to none of the sets.
BigInt first_gap_from(std::span<const SumSet* const> sets, BigInt from);

/// Transition rules over usage patterns of the last `horizon()` indices.
/// Bit j of a pattern is set when index n - j is used, n being the last index seen.
class UsageWindow {
 public:
  using Pattern = std::uint64_t;

  static constexpr int kMaxHorizon = 62;

  explicit UsageWindow(const AdjacencyRule& rule);

  int horizon() const { return horizon_; }
  /// Pattern after appending an unused index.
  Pattern skip(Pattern recent) const { return (recent << 1) & mask_; }
  /// Pattern after appending a used index.
  Pattern use(Pattern recent) const { return skip(recent) | (horizon_ == 0 ? 0 : 1); }
  /// Whether `index` may join a set whose recent usage is `recent`.
  bool may_use(Pattern recent, int index) const;

 private:
  int horizon_ = 0;
  Pattern mask_ = 0;
  Pattern diff_mask_ = 0;
  std::map<int, Pattern> pair_masks_;  // later index of a pair -> bits of its partners
};

/// Window-DP state for S-LID decomposition sums over a growing prefix a_1..a_n.
///
/// The key of each entry is the usage pattern of the last `horizon()` indices:
/// bit j is set when index n - j is in the decomposition. The value is the set
/// of all sums of legal index sets inside [n] with that usage pattern. Only
/// legal patterns are ever created, so dense rules keep very few keys.
class ReachabilityTable {
 public:
  using Pattern = UsageWindow::Pattern;

  explicit ReachabilityTable(AdjacencyRule rule);

  const AdjacencyRule& rule() const { return rule_; }
  int horizon() const { return window_.horizon(); }
  std::size_t prefix_length() const { return prefix_length_; }
  /// 1 + sum of absorbed terms; no representable sum reaches it.
  const BigInt& sum_bound() const { return sum_bound_; }
  const std::map<Pattern, SumSet>& states() const { return states_; }

  /// Appends index n+1 with the given value.
  void absorb(const BigInt& term);

  bool representable(const BigInt& value) const;
  /// Smallest x >= from with no legal decomposition inside the prefix.
  BigInt smallest_unrepresentable_from(const BigInt& from) const;
  /// Largest representable sum.
  BigInt max_representable() const;
  /// Union of all pattern sets.
  SumSet representable_set() const;

 private:
  AdjacencyRule rule_;
  UsageWindow window_;
  std::size_t prefix_length_ = 0;
  BigInt sum_bound_ = 1;
  std::map<Pattern, SumSet> states_;
};

}  // namespace slid
