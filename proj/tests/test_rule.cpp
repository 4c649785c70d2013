#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "slid/error.hpp"
#include "slid/rule.hpp"

using namespace slid;

TEST_CASE("explicit difference sets") {
  CHECK(parse_rule("S=1,3,4").diffs() == std::set<int>{1, 3, 4});
  CHECK(parse_rule("S={1,3,4}") == parse_rule("1,3,4"));
  CHECK(parse_rule("3").diffs() == std::set<int>{3});
  CHECK(parse_rule("").diffs().empty());
  CHECK(parse_rule("S=").diffs().empty());
  CHECK(parse_rule("  S=2 ; ").diffs() == std::set<int>{2});
}

TEST_CASE("full(k) with removals matches k/fringe clauses") {
  const auto a = parse_rule("S=full(k=12)\\{11,10}");
  const auto b = parse_rule("k=12 fringe=1,2");
  CHECK(a == b);
  CHECK(a == AdjacencyRule::fringe(12, {1, 2}));
  CHECK(a.diffs().size() == 10);
  CHECK(!a.diffs().contains(11));
  CHECK(!a.diffs().contains(10));
  CHECK(parse_rule("full(5)") == AdjacencyRule::full(5));
  CHECK(parse_rule("k=5") == AdjacencyRule::full(5));
  CHECK(parse_rule("full(k=5)\\{3}") == AdjacencyRule::fringe(5, {2}));
}

TEST_CASE("exceptional pairs") {
  const auto fib = parse_rule("S=1,3,4 pairs={1,3}");
  CHECK(fib.exceptional_pairs() == std::set<IndexPair>{IndexPair(1, 3)});
  CHECK(fib.clashes(3, 1));
  CHECK(!fib.clashes(2, 4));
  CHECK(fib.clashes(5, 9));
  CHECK(!fib.is_pure());
  CHECK(fib.horizon() == 4);

  const auto wide = parse_rule("S=1 pairs={2,9},{4,3}");
  CHECK(wide.exceptional_pairs().contains(IndexPair(3, 4)));
  CHECK(wide.horizon() == 7);
}

TEST_CASE("to_string round-trips") {
  for (const char* spec : {"S=1,3,4 pairs={1,3}", "S=", "S=1,5 pairs={1,4}", "k=9 fringe=2,3",
                           "full(6)", "S=2,7 pairs={1,2},{5,11}"}) {
    const auto rule = parse_rule(spec);
    CHECK(parse_rule(rule.to_string()) == rule);
  }
  CHECK(parse_rule("S=1,3,4 pairs={1,3}").to_string() == "S=1,3,4 pairs={1,3}");
  CHECK(AdjacencyRule().to_string() == "S=");
}

TEST_CASE("malformed specs name the offending token") {
  auto message = [](const char* spec) {
    try {
      parse_rule(spec);
    } catch (const RuleError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("S=1,x").find("'S=1,x'") != std::string::npos);
  CHECK(message("S=1 bogus=3").find("'bogus=3'") != std::string::npos);
  CHECK(message("full(k=5)\\{9}").find("'full(k=5)\\{9}'") != std::string::npos);
  CHECK(message("pairs={1}").find("'pairs={1}'") != std::string::npos);
  CHECK(message("pairs={2,2}").find("'pairs={2,2}'") != std::string::npos);
  CHECK(message("S={1,2").find("unbalanced") != std::string::npos);
  CHECK(message("S=0").find("positive") != std::string::npos);
  CHECK_THROWS_AS(parse_rule("fringe=1"), RuleError);
  CHECK_THROWS_AS(parse_rule("k=5 fringe=5"), RuleError);
  CHECK_THROWS_AS(parse_rule("k=5 S=1"), RuleError);
  CHECK_THROWS_AS(parse_rule("S=1 S=2"), RuleError);
}

TEST_CASE("constructor preconditions") {
  CHECK_THROWS_AS(AdjacencyRule::full(0), RuleError);
  CHECK_THROWS_AS(AdjacencyRule::fringe(4, {4}), RuleError);
  CHECK_THROWS_AS(AdjacencyRule::fringe(4, {}), RuleError);
  CHECK_THROWS_AS(AdjacencyRule({0, 2}), RuleError);
  CHECK_THROWS_AS(IndexPair(0, 3), RuleError);
  CHECK_THROWS_AS(AdjacencyRule().require_max_diff(), RuleError);
  CHECK(!AdjacencyRule().max_diff());
}

TEST_CASE("is_legal agrees with pairwise clash checks on random sets") {
  std::mt19937_64 rng(20240607);
  std::uniform_int_distribution<int> idx(1, 20);
  for (int trial = 0; trial < 500; ++trial) {
    const auto ref = oracle::random_rule(rng, 6, trial % 2 == 1);
    const auto rule = oracle::to_rule(ref);
    std::set<int> chosen;
    for (int c = trial % 6; c > 0; --c) chosen.insert(idx(rng));
    const std::vector<int> v(chosen.rbegin(), chosen.rend());
    bool expect = true;
    for (int a : v) {
      for (int b : v) {
        if (a < b && ref.clash(a, b)) expect = false;
      }
    }
    CHECK(is_legal(rule, v) == expect);
  }
}
