#include "slid/quilt.hpp"

#include "slid/error.hpp"

namespace slid {

std::string_view quilt_name(Quilt quilt) {
  return quilt == Quilt::fibonacci ? "fibonacci_quilt" : "triangular_quilt";
}

Quilt parse_quilt(std::string_view name) {
  if (name == "fibonacci_quilt" || name == "fib") return Quilt::fibonacci;
  if (name == "triangular_quilt" || name == "tri") return Quilt::triangular;
  throw RuleError("unknown quilt '" + std::string(name) +
                  "' (expected fib, tri, fibonacci_quilt or triangular_quilt)");
}

AdjacencyRule quilt_rule(Quilt quilt) {
  switch (quilt) {
    case Quilt::fibonacci:
      return AdjacencyRule({1, 3, 4}, {IndexPair(1, 3)});
    case Quilt::triangular:
      return AdjacencyRule({1, 5}, {IndexPair(1, 4)});
  }
  throw RuleError("unknown quilt");
}

SequenceState quilt_sequence(Quilt quilt, long long n, Engine engine) {
  return generate(quilt_rule(quilt), n, engine);
}

std::vector<int> recurrence_index_set(const SequenceState& state, int k, int first, int last) {
  if (k < 1) throw RangeError("recurrence lag k must be >= 1");
  if (first > last) return {};
  if (first - k < 1) {
    throw RangeError("recurrence range starts at n=" + std::to_string(first) +
                     " but a_{n-k} needs n >= " + std::to_string(k + 1));
  }
  if (static_cast<std::size_t>(last) + 1 > state.size()) {
    throw RangeError("recurrence range up to n=" + std::to_string(last) + " needs " +
                     std::to_string(last + 1) + " terms, have " + std::to_string(state.size()));
  }
  std::vector<int> hits;
  for (int n = first; n <= last; ++n) {
    if (state.term(n + 1) == state.term(n) + state.term(n - k)) hits.push_back(n);
  }
  return hits;
}

}  // namespace slid
