#pragma once

#include <string_view>
#include <vector>

#include "slid/rule.hpp"
#include "slid/sequence.hpp"

namespace slid {

/// The two quilt tilings, reduced to index-difference adjacency.
enum class Quilt {
  /// Log-cabin / Fibonacci spiral: |i - j| in {1, 3, 4} or {i, j} = {1, 3}.
  fibonacci,
  /// Padovan triangle spiral: |i - j| in {1, 5} or {i, j} = {1, 4}.
  triangular,
};

/// "fibonacci_quilt" or "triangular_quilt".
std::string_view quilt_name(Quilt quilt);
/// Accepts the canonical names plus the short forms "fib" and "tri".
Quilt parse_quilt(std::string_view name);

AdjacencyRule quilt_rule(Quilt quilt);

/// First n terms of the quilt sequence; plain sequence generation under quilt_rule().
SequenceState quilt_sequence(Quilt quilt, long long n, Engine engine = Engine::window_dp);

/// All n in [first, last] with a_{n+1} = a_n + a_{n-k}.
/// Needs k >= 1, first - k >= 1 and terms through index last + 1.
std::vector<int> recurrence_index_set(const SequenceState& state, int k, int first, int last);

}  // namespace slid
