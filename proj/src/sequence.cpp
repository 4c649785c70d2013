#include "slid/sequence.hpp"

#include <algorithm>
#include <functional>

#include "slid/error.hpp"

namespace slid {

std::string_view engine_name(Engine engine) {
  return engine == Engine::oracle ? "oracle" : "window_dp";
}

Engine parse_engine(std::string_view name) {
  if (name == "oracle") return Engine::oracle;
  if (name == "window_dp") return Engine::window_dp;
  throw RuleError("unknown engine '" + std::string(name) + "' (expected oracle or window_dp)");
}

SequenceState::SequenceState(AdjacencyRule rule, std::vector<BigInt> terms)
    : rule_(std::move(rule)), terms_(std::move(terms)) {
  if (!terms_.empty() && terms_[0] != 1) {
    throw ConsistencyError("a_1 must be 1, got " + to_decimal(terms_[0]));
  }
  if (terms_.size() >= 2 && terms_[1] != 2) {
    throw ConsistencyError("a_2 must be 2, got " + to_decimal(terms_[1]));
  }
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    if (terms_[i] <= terms_[i - 1]) {
      throw ConsistencyError("terms must be strictly increasing; a_" + std::to_string(i + 1) +
                             " = " + to_decimal(terms_[i]) + " <= a_" + std::to_string(i) +
                             " = " + to_decimal(terms_[i - 1]));
    }
  }
}

const BigInt& SequenceState::term(std::size_t index) const {
  if (index < 1 || index > terms_.size()) {
    throw RangeError("term index " + std::to_string(index) + " outside [1, " +
                     std::to_string(terms_.size()) + "]");
  }
  return terms_[index - 1];
}

BigInt SequenceState::term_or_zero(long long index) const {
  if (index <= 0) return 0;
  return term(static_cast<std::size_t>(index));
}

std::vector<Decomposition> decompose_all(const SequenceState& state, const BigInt& m,
                                         std::size_t prefix_len) {
  if (prefix_len > state.size()) {
    throw RangeError("prefix_len " + std::to_string(prefix_len) + " exceeds the " +
                     std::to_string(state.size()) + " generated terms");
  }
  if (m < 0) throw RangeError("decompose_all needs m >= 0");
  const auto terms = state.terms();
  std::vector<BigInt> prefix_sum(prefix_len + 1, 0);
  for (std::size_t i = 1; i <= prefix_len; ++i) prefix_sum[i] = prefix_sum[i - 1] + terms[i - 1];

  std::vector<Decomposition> out;
  std::vector<int> chosen;
  // Children are tried in ascending index order, which yields lexicographic
  // order on the descending index lists.
  std::function<void(int, const BigInt&)> walk = [&](int below, const BigInt& remaining) {
    if (remaining == 0) {
      out.push_back({chosen, m});
      return;
    }
    for (int j = 1; j < below; ++j) {
      const BigInt& a = terms[j - 1];
      if (a > remaining) break;
      if (prefix_sum[j] < remaining) continue;
      const bool ok = std::none_of(chosen.begin(), chosen.end(),
                                   [&](int i) { return state.rule().clashes(i, j); });
      if (!ok) continue;
      chosen.push_back(j);
      walk(j, remaining - a);
      chosen.pop_back();
    }
  };
  walk(static_cast<int>(prefix_len) + 1, m);
  return out;
}

BigInt search_start(const AdjacencyRule& rule, std::span<const BigInt> prefix) {
  const std::size_t n = prefix.size();
  if (n == 0) return 1;
  if (rule.is_pure() && rule.max_diff()) {
    const auto k = static_cast<std::size_t>(*rule.max_diff());
    if (n >= k + 1) return prefix[n - 1] + prefix[n - k - 1];
  }
  return prefix[n - 1] + 1;
}

BigInt oracle_next_term(const AdjacencyRule& rule, std::span<const BigInt> prefix) {
  const int n = static_cast<int>(prefix.size());
  std::vector<std::vector<char>> clash(n + 1, std::vector<char>(n + 1, 0));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) clash[i][j] = rule.clashes(i, j) ? 1 : 0;
  }
  std::vector<BigInt> sums;
  std::vector<int> chosen;
  std::function<void(int, const BigInt&)> walk = [&](int from, const BigInt& sum) {
    sums.push_back(sum);
    for (int j = from; j <= n; ++j) {
      const bool ok =
          std::none_of(chosen.begin(), chosen.end(), [&](int i) { return clash[i][j] != 0; });
      if (!ok) continue;
      chosen.push_back(j);
      walk(j + 1, sum + prefix[j - 1]);
      chosen.pop_back();
    }
  };
  walk(1, BigInt(0));
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  BigInt candidate = 1;
  for (const auto& s : sums) {
    if (s < candidate) continue;
    if (s != candidate) break;
    ++candidate;
  }
  return candidate;
}

BigInt smallest_nonrepresentable(const SequenceState& state, std::size_t prefix_len,
                                 Engine engine) {
  if (prefix_len > state.size()) {
    throw RangeError("prefix_len " + std::to_string(prefix_len) + " exceeds the " +
                     std::to_string(state.size()) + " generated terms");
  }
  const auto prefix = state.terms().first(prefix_len);
  if (engine == Engine::oracle) return oracle_next_term(state.rule(), prefix);
  ReachabilityTable table(state.rule());
  for (const auto& t : prefix) table.absorb(t);
  return table.smallest_unrepresentable_from(search_start(state.rule(), prefix));
}

Generator::Generator(AdjacencyRule rule, Engine engine)
    : rule_(std::move(rule)), engine_(engine), table_(rule_) {}

Generator::Generator(const SequenceState& seed, Engine engine)
    : rule_(seed.rule()),
      engine_(engine),
      terms_(seed.terms().begin(), seed.terms().end()),
      table_(rule_) {
  if (engine_ == Engine::window_dp) {
    for (const auto& t : terms_) table_.absorb(t);
  }
}

const BigInt& Generator::next() {
  BigInt value;
  if (engine_ == Engine::oracle) {
    value = oracle_next_term(rule_, terms_);
  } else {
    value = table_.smallest_unrepresentable_from(search_start(rule_, terms_));
    table_.absorb(value);
  }
  terms_.push_back(std::move(value));
  return terms_.back();
}

SequenceState Generator::state() const { return SequenceState(rule_, terms_); }

SequenceState extend(const SequenceState& state, Engine engine) {
  Generator gen(state, engine);
  gen.next();
  return gen.state();
}

SequenceState generate(const AdjacencyRule& rule, long long n, Engine engine) {
  if (n < 0) throw RangeError("generate needs n >= 0, got " + std::to_string(n));
  Generator gen(rule, engine);
  while (gen.size() < static_cast<std::size_t>(n)) gen.next();
  return gen.state();
}

SequenceState generate_from(const SequenceState& seed, long long n, Engine engine) {
  if (n < 0) throw RangeError("generate needs n >= 0, got " + std::to_string(n));
  const auto want = static_cast<std::size_t>(n);
  if (seed.size() >= want) {
    auto t = seed.terms().first(want);
    return SequenceState(seed.rule(), {t.begin(), t.end()});
  }
  Generator gen(seed, engine);
  while (gen.size() < want) gen.next();
  return gen.state();
}

}  // namespace slid
