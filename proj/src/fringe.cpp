#include "slid/fringe.hpp"

#include <algorithm>
#include <cmath>

#include "slid/error.hpp"
#include "slid/sequence.hpp"

namespace slid {

namespace {

int fringe_max(const std::set<int>& fringe) {
  if (fringe.empty()) throw RuleError("fringe set T must be nonempty");
  if (*fringe.begin() < 1) throw RuleError("fringe elements must be positive");
  return *fringe.rbegin();
}

long long lookup(const FTable& f, int i) {
  auto it = f.find(i);
  if (it == f.end()) {
    throw RangeError("f_T table has no entry for i=" + std::to_string(i));
  }
  return it->second;
}

// Twice the quadratic, so everything stays integral.
long long twice_quadratic(long long i, long long c) {
  return i * i + (3 - 2 * c) * i + (2 + c - 3 * c * c);
}

long long isqrt(long long v) {
  auto r = static_cast<long long>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

long long floor_div2(long long v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

}  // namespace

FTable compute_f_table(const std::set<int>& fringe, int first, int last) {
  const int c = fringe_max(fringe);
  if (first > last) return {};
  const int k0 = std::max({last + 2 * c - 1, 2 * (c + 1), 1 - first}) + 1;

  FTable table;
  for (int k : {k0, k0 + 1}) {
    const auto seq = generate(AdjacencyRule::fringe(k, fringe), k + last);
    for (int i = first; i <= last; ++i) {
      const long long value = static_cast<long long>(seq.term(k + i) - k);
      auto [it, inserted] = table.emplace(i, value);
      if (!inserted && it->second != value) {
        throw ConsistencyError("f_T(" + std::to_string(i) + ") depends on k: " +
                               std::to_string(it->second) + " at k=" + std::to_string(k0) +
                               ", " + std::to_string(value) + " at k=" + std::to_string(k));
      }
    }
  }
  return table;
}

int compute_m(int c) {
  if (c < 0) throw RangeError("compute_m needs c >= 0");
  // Larger root of i^2 + (3 - 2c) i + (2 + c - 3c^2) is (2c - 3 + sqrt(16c^2 - 16c + 1)) / 2.
  const long long cc = c;
  const long long disc = 16 * cc * cc - 16 * cc + 1;
  const long long root_floor = floor_div2(2 * cc - 3 + isqrt(disc));
  const int m = static_cast<int>(std::max(0LL, root_floor + 1));
  if (twice_quadratic(m, cc) <= 0 || (m > 0 && twice_quadratic(m - 1, cc) > 0)) {
    throw ConsistencyError("root location for m disagrees with direct evaluation at c=" +
                           std::to_string(c));
  }
  return m;
}

DConstant compute_d(int c, int m, const FTable& f) {
  DConstant out;
  out.floor_term = 2 * c + m - 1;
  bool first = true;
  for (int i = -2 * c + 2; i <= c + m; ++i) {
    const long long v = lookup(f, i + c) - lookup(f, i) - lookup(f, i + 1) + i + 1;
    out.inner_max = first ? v : std::max(out.inner_max, v);
    first = false;
  }
  out.d = static_cast<int>(std::max<long long>(out.floor_term, out.inner_max));
  return out;
}

DConstant compute_d(const std::set<int>& fringe) {
  const int c = fringe_max(fringe);
  const int m = compute_m(c);
  return compute_d(c, m, compute_f_table(fringe, -2 * c + 2, 2 * c + m));
}

KThreshold compute_k_threshold(int c, int d, const FTable& f) {
  KThreshold out;
  out.from_check = 2 * d - 4 * c + 2;
  out.from_window = 4 * c + d + 1;
  bool first = true;
  for (int i = -2 * c + 2; i <= c + d + 2; ++i) {
    const long long v =
        lookup(f, i - 1 + c) - lookup(f, i - 1) - lookup(f, i) + i + 2 * c - 1;
    out.strict_max = first ? v : std::max(out.strict_max, v);
    first = false;
  }
  out.k = static_cast<int>(
      std::max<long long>({out.from_check, out.from_window, out.strict_max + 1}));
  return out;
}

KThreshold compute_k_threshold(const std::set<int>& fringe) {
  return compute_fringe_profile(fringe).k_threshold;
}

FringeProfile compute_fringe_profile(const std::set<int>& fringe) {
  FringeProfile p;
  p.fringe = fringe;
  p.c = fringe_max(fringe);
  p.m = compute_m(p.c);
  p.f_table = compute_f_table(fringe, -2 * p.c + 1, 2 * p.c + p.m);
  p.d = compute_d(p.c, p.m, p.f_table);
  const int need_last = 2 * p.c + p.d.d + 1;
  if (need_last > 2 * p.c + p.m) p.f_table = compute_f_table(fringe, -2 * p.c + 1, need_last);
  p.k_threshold = compute_k_threshold(p.c, p.d.d, p.f_table);
  return p;
}

}  // namespace slid
