#pragma once

#include <compare>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>

namespace slid {

/// Unordered pair of distinct positive indices, stored with first < second.
struct IndexPair {
  int first = 0;
  int second = 0;

  IndexPair() = default;
  IndexPair(int i, int j);

  int span() const { return second - first; }
  auto operator<=>(const IndexPair&) const = default;
};

/// Which summand pairs are forbidden: indices i != j clash when |i - j| lies in
/// the difference set, or when {i, j} is one of the exceptional pairs.
class AdjacencyRule {
 public:
  /// The rule with no forbidden pairs (powers of two).
  AdjacencyRule() = default;
  explicit AdjacencyRule(std::set<int> diffs, std::set<IndexPair> exceptional_pairs = {});

  /// S = {1, ..., k}.
  static AdjacencyRule full(int k);
  /// S = {1, ..., k} minus {k - t : t in fringe}. Every t must satisfy 1 <= t < k.
  static AdjacencyRule fringe(int k, const std::set<int>& fringe);

  const std::set<int>& diffs() const { return diffs_; }
  const std::set<IndexPair>& exceptional_pairs() const { return pairs_; }

  bool is_pure() const { return pairs_.empty(); }
  std::optional<int> max_diff() const;
  /// max(S); throws RuleError for the empty difference set.
  int require_max_diff() const;
  /// Width of the index window that decides legality of a new summand.
  int horizon() const;

  bool clashes(int i, int j) const;

  /// Canonical spec string, e.g. "S=1,3,4 pairs={1,3}". Parses back to *this.
  std::string to_string() const;

  bool operator==(const AdjacencyRule&) const = default;

 private:
  std::set<int> diffs_;
  std::set<IndexPair> pairs_;
};

/// True iff no two indices of the set clash under the rule.
bool is_legal(const AdjacencyRule& rule, std::span<const int> indices);

/// Parses the rule mini-language:
///
///   S=1,3,4                    explicit difference set ("S=" may be omitted)
///   S={1,3,4}                  same, braced
///   S=                         empty set
///   S=full(k=12)\{11,10}       [12] minus {11, 10}
///   k=12 fringe=1,2            same as the previous line
///   k=5                        [5]
///   pairs={1,3},{2,7}          exceptional pairs, may be combined with any of the above
///
/// Clauses are separated by whitespace or ';'. Throws RuleError naming the
/// offending token.
AdjacencyRule parse_rule(std::string_view spec);

}  // namespace slid
