#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "slid/bigint.hpp"
#include "slid/reachability.hpp"
#include "slid/rule.hpp"

namespace slid {

/// How the next term is computed.
enum class Engine {
  /// Enumerates every legal index subset of the prefix (exponential).
  oracle,
  /// Incremental ReachabilityTable; polynomial in n times the number of legal window patterns.
  window_dp,
};

std::string_view engine_name(Engine engine);
/// Accepts "oracle" and "window_dp". Throws RuleError otherwise.
Engine parse_engine(std::string_view name);

/// The first terms a_1, ..., a_n of the sequence a rule defines.
///
/// Immutable once built; the constructor checks that terms are strictly
/// increasing and start 1, 2.
class SequenceState {
 public:
  explicit SequenceState(AdjacencyRule rule, std::vector<BigInt> terms = {});

  const AdjacencyRule& rule() const { return rule_; }
  std::span<const BigInt> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  /// 1-based access; throws RangeError outside [1, size()].
  const BigInt& term(std::size_t index) const;
  /// a_index for index >= 1, zero for index <= 0. Throws past size().
  BigInt term_or_zero(long long index) const;

  bool operator==(const SequenceState&) const = default;

 private:
  AdjacencyRule rule_;
  std::vector<BigInt> terms_;
};

/// A legal index set together with the value it represents.
struct Decomposition {
  std::vector<int> indices;  // strictly descending
  BigInt value;

  bool operator==(const Decomposition&) const = default;
};

/// Every legal L within [prefix_len] whose terms sum to m, ordered
/// lexicographically on the descending index lists (so {} comes first).
std::vector<Decomposition> decompose_all(const SequenceState& state, const BigInt& m,
                                         std::size_t prefix_len);

/// Least positive integer without a legal decomposition over indices <= prefix_len.
BigInt smallest_nonrepresentable(const SequenceState& state, std::size_t prefix_len,
                                 Engine engine = Engine::window_dp);

/// Where the window engine may start scanning for the next term: a_n + a_{n-k}
/// for pure rules with n >= k+1 (the fundamental lower bound), a_n + 1 otherwise.
BigInt search_start(const AdjacencyRule& rule, std::span<const BigInt> prefix);

/// Brute-force next term: enumerates all legal subsets of the prefix.
BigInt oracle_next_term(const AdjacencyRule& rule, std::span<const BigInt> prefix);

/// Streams terms of one sequence. Keeps the ReachabilityTable between calls so
/// each new term costs one table update.
class Generator {
 public:
  explicit Generator(AdjacencyRule rule, Engine engine = Engine::window_dp);
  /// Continues from a known prefix (e.g. loaded from a b-file).
  explicit Generator(const SequenceState& seed, Engine engine = Engine::window_dp);

  const BigInt& next();
  std::size_t size() const { return terms_.size(); }
  SequenceState state() const;

 private:
  AdjacencyRule rule_;
  Engine engine_;
  std::vector<BigInt> terms_;
  ReachabilityTable table_;
};

/// Appends a_{n+1}.
SequenceState extend(const SequenceState& state, Engine engine = Engine::window_dp);

/// First n terms. Throws RangeError for n < 0.
SequenceState generate(const AdjacencyRule& rule, long long n, Engine engine = Engine::window_dp);

/// Continues a seed prefix until it holds n terms (returns a copy if already long enough).
SequenceState generate_from(const SequenceState& seed, long long n,
                            Engine engine = Engine::window_dp);

}  // namespace slid
