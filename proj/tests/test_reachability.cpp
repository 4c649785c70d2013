#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "slid/reachability.hpp"

using namespace slid;

namespace {

SumSet from_values(const std::set<std::uint64_t>& values) {
  SumSet s;
  for (auto v : values) s.unite(SumSet::singleton(v));
  return s;
}

std::set<std::uint64_t> to_values(const SumSet& s) {
  std::set<std::uint64_t> out;
  for (const auto& run : s.runs()) {
    for (BigInt x = run.lo; x < run.hi; ++x) out.insert(x.convert_to<std::uint64_t>());
  }
  return out;
}

}  // namespace

TEST_CASE("SumSet keeps runs disjoint and non-touching") {
  auto s = from_values({0, 1, 2, 5, 7, 8});
  REQUIRE(s.run_count() == 3);
  CHECK(s.runs()[0] == SumRun{0, 3});
  CHECK(s.runs()[1] == SumRun{5, 6});
  CHECK(s.runs()[2] == SumRun{7, 9});
  s.unite(SumSet::singleton(6));
  CHECK(s.run_count() == 2);
  s.unite(from_values({3, 4}));
  CHECK(s.run_count() == 1);
  CHECK(s.cardinality() == 9);
  CHECK(s.max_element() == 8);
  CHECK(s.contains(0));
  CHECK(!s.contains(9));
}

TEST_CASE("SumSet shift and union match std::set on random inputs") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> val(0, 60);
  for (int trial = 0; trial < 300; ++trial) {
    std::set<std::uint64_t> a, b;
    for (int i = val(rng) % 25; i > 0; --i) a.insert(val(rng));
    for (int i = val(rng) % 25; i > 0; --i) b.insert(val(rng));
    const int shift = val(rng);
    auto sa = from_values(a);
    sa.unite(from_values(b).shifted(shift));
    auto expect = a;
    for (auto x : b) expect.insert(x + shift);
    CHECK(to_values(sa) == expect);
    for (std::uint64_t probe = 0; probe < 130; ++probe) {
      CHECK(sa.contains(probe) == (expect.count(probe) > 0));
    }
    std::uint64_t gap = 0;
    while (expect.count(gap)) ++gap;
    const SumSet* sets[] = {&sa};
    CHECK(first_gap_from(sets, 0) == gap);
  }
}

TEST_CASE("first_gap_from skips across several sets") {
  const auto a = from_values({3, 4, 5, 9});
  const auto b = from_values({6, 7, 10});
  const SumSet* sets[] = {&a, &b};
  CHECK(first_gap_from(sets, 0) == 0);
  CHECK(first_gap_from(sets, 3) == 8);
  CHECK(first_gap_from(sets, 9) == 11);
}

TEST_CASE("table sums equal brute-force legal sums for arbitrary increasing terms") {
  std::mt19937_64 rng(314159);
  std::uniform_int_distribution<int> step(1, 9);
  std::uniform_int_distribution<int> length(1, 13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto ref = oracle::random_rule(rng, 1 + trial % 6, trial % 3 == 0);
    ReachabilityTable table(oracle::to_rule(ref));
    std::vector<std::uint64_t> terms;
    std::uint64_t value = 0;
    for (int n = length(rng); n > 0; --n) {
      value += step(rng);
      terms.push_back(value);
      table.absorb(value);
    }
    std::set<std::uint64_t> expect;
    for (auto mask : oracle::legal_masks(ref, static_cast<int>(terms.size()))) {
      expect.insert(oracle::mask_sum(mask, terms));
    }
    CHECK(to_values(table.representable_set()) == expect);
    CHECK(table.max_representable() == *expect.rbegin());
    std::uint64_t gap = 1;
    while (expect.count(gap)) ++gap;
    CHECK(table.smallest_unrepresentable_from(1) == gap);
  }
}

TEST_CASE("usage patterns stay within the horizon") {
  const UsageWindow w(AdjacencyRule({1, 3}));
  CHECK(w.horizon() == 3);
  CHECK(w.use(0) == 1);
  CHECK(w.skip(w.use(0)) == 2);
  CHECK(w.skip(0b100) == 0);
  CHECK(!w.may_use(0b001, 5));  // index 4 used: difference 1
  CHECK(w.may_use(0b010, 5));   // index 3: difference 2 is allowed
  CHECK(!w.may_use(0b100, 5));  // index 2: difference 3
  const UsageWindow none{AdjacencyRule()};
  CHECK(none.horizon() == 0);
  CHECK(none.use(0) == 0);
}
