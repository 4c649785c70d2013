#include "slid/reachability.hpp"

#include <algorithm>
#include <utility>

#include "slid/error.hpp"

namespace slid {

SumSet SumSet::singleton(const BigInt& value) {
  SumSet s;
  s.runs_.push_back({value, value + 1});
  return s;
}

std::vector<SumRun>::const_iterator SumSet::find_run(const BigInt& value) const {
  // First run whose end is past value.
  auto it = std::upper_bound(runs_.begin(), runs_.end(), value,
                             [](const BigInt& v, const SumRun& r) { return v < r.hi; });
  if (it != runs_.end() && it->lo <= value) return it;
  return runs_.end();
}

bool SumSet::contains(const BigInt& value) const { return find_run(value) != runs_.end(); }

BigInt SumSet::max_element() const {
  if (runs_.empty()) throw RangeError("max_element of an empty SumSet");
  return runs_.back().hi - 1;
}

BigInt SumSet::cardinality() const {
  BigInt total = 0;
  for (const auto& r : runs_) total += r.hi - r.lo;
  return total;
}

SumSet SumSet::shifted(const BigInt& offset) const {
  SumSet out;
  out.runs_.reserve(runs_.size());
  for (const auto& r : runs_) out.runs_.push_back({r.lo + offset, r.hi + offset});
  return out;
}

void SumSet::unite(const SumSet& other) {
  if (other.runs_.empty()) return;
  if (runs_.empty()) {
    runs_ = other.runs_;
    return;
  }
  std::vector<SumRun> merged;
  merged.reserve(runs_.size() + other.runs_.size());
  auto a = runs_.begin();
  auto b = other.runs_.begin();
  auto push = [&merged](const SumRun& r) {
    if (!merged.empty() && r.lo <= merged.back().hi) {
      if (merged.back().hi < r.hi) merged.back().hi = r.hi;
    } else {
      merged.push_back(r);
    }
  };
  while (a != runs_.end() || b != other.runs_.end()) {
    if (b == other.runs_.end() || (a != runs_.end() && a->lo <= b->lo)) {
      push(*a++);
    } else {
      push(*b++);
    }
  }
  runs_ = std::move(merged);
}

BigInt first_gap_from(std::span<const SumSet* const> sets, BigInt from) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (const SumSet* s : sets) {
      auto it = s->find_run(from);
      if (it != s->runs_.end()) {
        from = it->hi;
        moved = true;
      }
    }
  }
  return from;
}

UsageWindow::UsageWindow(const AdjacencyRule& rule) : horizon_(rule.horizon()) {
  if (horizon_ > kMaxHorizon) {
    throw RuleError("rule horizon " + std::to_string(horizon_) + " exceeds the supported " +
                    std::to_string(kMaxHorizon));
  }
  mask_ = horizon_ == 0 ? 0 : ((Pattern{1} << horizon_) - 1);
  for (int d : rule.diffs()) diff_mask_ |= Pattern{1} << (d - 1);
  for (const auto& p : rule.exceptional_pairs()) {
    pair_masks_[p.second] |= Pattern{1} << (p.span() - 1);
  }
}

bool UsageWindow::may_use(Pattern recent, int index) const {
  if ((recent & diff_mask_) != 0) return false;
  auto it = pair_masks_.find(index);
  return it == pair_masks_.end() || (recent & it->second) == 0;
}

ReachabilityTable::ReachabilityTable(AdjacencyRule rule)
    : rule_(std::move(rule)), window_(rule_) {
  states_.emplace(Pattern{0}, SumSet::singleton(0));
}

void ReachabilityTable::absorb(const BigInt& term) {
  const int index = static_cast<int>(prefix_length_) + 1;
  std::map<Pattern, SumSet> next;
  for (auto& [recent, sums] : states_) {
    if (window_.may_use(recent, index)) {
      next[window_.use(recent)].unite(sums.shifted(term));
    }
    auto& slot = next[window_.skip(recent)];
    if (slot.empty()) {
      slot = std::move(sums);
    } else {
      slot.unite(sums);
    }
  }
  states_ = std::move(next);
  ++prefix_length_;
  sum_bound_ += term;
}

bool ReachabilityTable::representable(const BigInt& value) const {
  return std::any_of(states_.begin(), states_.end(),
                     [&value](const auto& entry) { return entry.second.contains(value); });
}

BigInt ReachabilityTable::smallest_unrepresentable_from(const BigInt& from) const {
  std::vector<const SumSet*> sets;
  sets.reserve(states_.size());
  for (const auto& [recent, sums] : states_) sets.push_back(&sums);
  return first_gap_from(sets, from);
}

BigInt ReachabilityTable::max_representable() const {
  BigInt best = 0;
  for (const auto& [recent, sums] : states_) {
    if (!sums.empty()) best = std::max(best, sums.max_element());
  }
  return best;
}

SumSet ReachabilityTable::representable_set() const {
  SumSet out;
  for (const auto& [recent, sums] : states_) out.unite(sums);
  return out;
}

}  // namespace slid
