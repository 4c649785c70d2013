#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "slid/error.hpp"
#include "slid/sequence.hpp"

using namespace slid;

namespace {

std::vector<BigInt> big(std::initializer_list<unsigned long long> values) {
  return {values.begin(), values.end()};
}

std::vector<BigInt> terms_of(const SequenceState& s) { return {s.terms().begin(), s.terms().end()}; }

}  // namespace

TEST_CASE("{3}-LID first twenty terms") {
  const auto expect = big({1, 2, 4, 8, 9, 11, 15, 23, 32, 64, 79, 134, 166, 244, 355, 489, 679,
                           1011, 1485, 2163});
  for (Engine e : {Engine::oracle, Engine::window_dp}) {
    CHECK(terms_of(generate(AdjacencyRule({3}), 20, e)) == expect);
  }
}

TEST_CASE("empty S gives powers of two") {
  const auto s = generate(AdjacencyRule(), 40);
  for (std::size_t n = 1; n <= 40; ++n) CHECK(s.term(n) == BigInt(1) << (n - 1));
}

TEST_CASE("{1}-LID is the Fibonacci sequence 1, 2, 3, 5, ...") {
  const auto s = generate(AdjacencyRule({1}), 90);
  CHECK(s.term(1) == 1);
  CHECK(s.term(2) == 2);
  for (std::size_t n = 3; n <= 90; ++n) CHECK(s.term(n) == s.term(n - 1) + s.term(n - 2));
  CHECK(to_decimal(s.term(90)) == "4660046610375530309");
}

TEST_CASE("{2}-LID starts 1, 2, 4, 5, 7 then a_{n+1} = a_n + a_{n-2}") {
  const auto s = generate(AdjacencyRule({2}), 30);
  CHECK(terms_of(generate(AdjacencyRule({2}), 5)) == big({1, 2, 4, 5, 7}));
  for (std::size_t n = 3; n < 30; ++n) CHECK(s.term(n + 1) == s.term(n) + s.term(n - 2));
}

TEST_CASE("engines agree with the brute-force reference on 200 random rules") {
  std::mt19937_64 rng(20260101);
  for (int trial = 0; trial < 200; ++trial) {
    const auto ref = oracle::random_rule(rng, 1 + trial % 6, trial % 2 == 1);
    const auto rule = oracle::to_rule(ref);
    CAPTURE(rule.to_string());
    const auto expect = oracle::sequence(ref, 15);
    const auto dp = generate(rule, 15, Engine::window_dp);
    const auto brute = generate(rule, 15, Engine::oracle);
    for (std::size_t n = 1; n <= 15; ++n) {
      CHECK(dp.term(n) == expect[n - 1]);
      CHECK(brute.term(n) == expect[n - 1]);
    }
  }
}

TEST_CASE("every prefix is strictly increasing and meets the fundamental lower bound") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 120; ++trial) {
    const auto ref = oracle::random_rule(rng, 1 + trial % 6, false);
    if (ref.diffs.empty()) continue;
    const auto s = generate(oracle::to_rule(ref), 40);
    const auto k = static_cast<std::size_t>(*ref.diffs.rbegin());
    for (std::size_t n = 1; n < s.size(); ++n) {
      CHECK(s.term(n + 1) > s.term(n));
      if (n >= k + 1) CHECK(s.term(n + 1) >= s.term(n) + s.term(n - k));
    }
  }
}

TEST_CASE("[k]-LID: a_{n+1} = n+1 up to k, then a_n + a_{n-k}, and the closed form") {
  for (int k = 1; k <= 6; ++k) {
    const auto s = generate(AdjacencyRule::full(k), 41);
    for (int n = 0; n <= 40; ++n) {
      if (n <= k) {
        CHECK(s.term(n + 1) == n + 1);
      } else {
        CHECK(s.term(n + 1) == s.term(n) + s.term(n - k));
      }
      BigInt closed = 1;
      for (int i = 0; i <= (n + 1) / (k + 1); ++i) closed += s.term_or_zero(n - i * (k + 1));
      CHECK(s.term(n + 1) == closed);
    }
  }
}

TEST_CASE("[k]-LID largest representable value") {
  for (int k = 1; k <= 6; ++k) {
    const auto s = generate(AdjacencyRule::full(k), 30);
    ReachabilityTable table(AdjacencyRule::full(k));
    for (int n = 1; n <= 30; ++n) {
      table.absorb(s.term(n));
      BigInt expect = 0;
      for (int i = 0; i <= (n + 1) / (k + 1); ++i) expect += s.term_or_zero(n - i * (k + 1));
      CHECK(table.max_representable() == expect);
      if (n < 30) CHECK(s.term(n + 1) <= expect + 1);
    }
  }
}

TEST_CASE("generator continues a seed prefix") {
  const auto full = generate(AdjacencyRule({1, 3, 4}), 25);
  const SequenceState seed(full.rule(), {full.terms().begin(), full.terms().begin() + 10});
  CHECK(generate_from(seed, 25) == full);
  CHECK(generate_from(seed, 25, Engine::oracle) == full);
  CHECK(generate_from(full, 5).size() == 5);
  Generator g(seed);
  CHECK(g.next() == full.term(11));
  CHECK(extend(seed).term(11) == full.term(11));
}

TEST_CASE("decompose_all lists legal decompositions in lexicographic order") {
  const auto fib = generate(AdjacencyRule({1}), 20);
  const auto one = decompose_all(fib, 2022, 20);
  REQUIRE(one.size() == 1);
  CHECK(one[0].indices == std::vector<int>{16, 13, 8, 6, 1});

  const auto pow2 = generate(AdjacencyRule(), 6);
  CHECK(decompose_all(pow2, 0, 6).size() == 1);
  CHECK(decompose_all(pow2, 0, 6)[0].indices.empty());

  const auto s3 = generate(AdjacencyRule({3}), 12);
  BigInt m = 1;
  while (decompose_all(s3, m, 12).size() < 3 && m < 200) ++m;
  const auto many = decompose_all(s3, m, 12);
  REQUIRE(many.size() >= 3);
  for (std::size_t i = 1; i < many.size(); ++i) CHECK(many[i - 1].indices < many[i].indices);
  for (const auto& d : many) {
    BigInt sum = 0;
    for (int idx : d.indices) sum += s3.term(idx);
    CHECK(sum == m);
    CHECK(is_legal(s3.rule(), d.indices));
  }
}

TEST_CASE("smallest_nonrepresentable recovers the next term with either engine") {
  const auto s = generate(AdjacencyRule({1, 5}, {IndexPair(1, 4)}), 20);
  for (std::size_t n = 1; n < 20; ++n) {
    CHECK(smallest_nonrepresentable(s, n, Engine::window_dp) == s.term(n + 1));
    CHECK(smallest_nonrepresentable(s, n, Engine::oracle) == s.term(n + 1));
  }
}

TEST_CASE("state validation and access errors") {
  CHECK_THROWS_AS(SequenceState(AdjacencyRule(), big({1, 3})), ConsistencyError);
  CHECK_THROWS_AS(SequenceState(AdjacencyRule(), big({2})), ConsistencyError);
  CHECK_THROWS_AS(SequenceState(AdjacencyRule(), big({1, 2, 2})), ConsistencyError);
  const auto s = generate(AdjacencyRule({1}), 4);
  CHECK_THROWS_AS(s.term(0), RangeError);
  CHECK_THROWS_AS(s.term(5), RangeError);
  CHECK(s.term_or_zero(-3) == 0);
  CHECK_THROWS_AS(generate(AdjacencyRule(), -1), RangeError);
  CHECK(generate(AdjacencyRule(), 0).size() == 0);
  CHECK(parse_engine("oracle") == Engine::oracle);
  CHECK_THROWS_AS(parse_engine("fast"), RuleError);
}
