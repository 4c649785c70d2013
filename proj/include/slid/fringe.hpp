#pragma once

#include <map>
#include <set>

namespace slid {

/// Offsets f_T(i) with a_{k+i} = k + f_T(i) for every large enough k, where the
/// sequence is the one for S = [k] \ (k - T).
using FTable = std::map<int, long long>;

/// Computes f_T(i) for i in [first, last] from generated sequences.
///
/// Picks k0 large enough for every requested i (k0 >= i + 2c - 1, k0 >= 2(c+1),
/// k0 + first >= 1) plus one, generates the sequences for k0 and k0 + 1 and
/// reads a_{k+i} - k off both. The offsets must agree; a mismatch raises
/// ConsistencyError.
FTable compute_f_table(const std::set<int>& fringe, int first, int last);

/// Smallest m >= 0 with i^2/2 + (3/2 - c) i + (1 + c/2 - 3c^2/2) > 0 for all integers i >= m.
int compute_m(int c);

struct DConstant {
  int d = 0;
  int floor_term = 0;      // 2c + m - 1
  long long inner_max = 0; // max over -2c+2 <= i <= c+m of f(i+c) - f(i) - f(i+1) + i + 1
};

/// d = max(2c + m - 1, inner_max). The table must cover [-2c+2, 2c+m].
DConstant compute_d(int c, int m, const FTable& f);
DConstant compute_d(const std::set<int>& fringe);

struct KThreshold {
  int k = 0;               // least k meeting all three bounds
  int from_check = 0;      // 2d - 4c + 2
  int from_window = 0;     // 4c + d + 1
  long long strict_max = 0;  // k must exceed this: max over -2c+2 <= i <= c+d+2 of
                             // f(i-1+c) - f(i-1) - f(i) + i + 2c - 1
};

/// The table must cover [-2c+1, 2c+d+1].
KThreshold compute_k_threshold(int c, int d, const FTable& f);
KThreshold compute_k_threshold(const std::set<int>& fringe);

/// Everything derived from a fringe set T.
struct FringeProfile {
  std::set<int> fringe;
  int c = 0;
  FTable f_table;  // covers at least [-2c+1, 2c+d+1]
  int m = 0;
  DConstant d;
  KThreshold k_threshold;
};

FringeProfile compute_fringe_profile(const std::set<int>& fringe);

}  // namespace slid
