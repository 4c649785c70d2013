#include "slid/recurrence.hpp"

#include <algorithm>

#include "json.hpp"

#include "slid/error.hpp"

namespace slid {

GapProfile gap_profile(const AdjacencyRule& rule) {
  if (!rule.is_pure()) {
    throw RuleError("the finite check applies to rules without exceptional pairs");
  }
  const int k = rule.require_max_diff();
  int missing = 1;
  while (rule.diffs().contains(missing)) ++missing;
  if (missing > k) {
    throw RuleError("S = [" + std::to_string(k) +
                    "] has no missing element below k, so c is undefined");
  }
  GapProfile g;
  g.k = k;
  g.c = k - missing;
  for (int s = 1; s < k; ++s) {
    if (!rule.diffs().contains(s)) g.fringe.insert(k - s);
  }
  return g;
}

std::string_view statement_name(StatementKind kind) {
  switch (kind) {
    case StatementKind::A:
      return "A";
    case StatementKind::B:
      return "B";
    case StatementKind::C:
      return "C";
  }
  return "?";
}

std::string_view conclusion_name(Conclusion conclusion) {
  return conclusion == Conclusion::proven ? "proven" : "not_proven";
}

namespace {

void require_terms(const SequenceState& state, long long through, std::string_view what) {
  if (through > static_cast<long long>(state.size())) {
    throw RangeError(std::string(what) + " needs terms through index " + std::to_string(through) +
                     ", have " + std::to_string(state.size()));
  }
}

}  // namespace

StatementEvaluation eval_A(const SequenceState& state, int n) {
  const int k = state.rule().require_max_diff();
  if (n - k < 1) {
    throw RangeError("A(" + std::to_string(n) + ") needs n - k >= 1 with k=" + std::to_string(k));
  }
  require_terms(state, n + 1LL, "A(n)");
  StatementEvaluation e;
  e.kind = StatementKind::A;
  e.n = n;
  e.lhs = state.term(n + 1);
  e.rhs = state.term(n) + state.term(n - k);
  e.holds = e.lhs == e.rhs;
  return e;
}

StatementEvaluation eval_B(const SequenceState& state, int n) {
  const auto g = gap_profile(state.rule());
  if (n - g.k < 1) {
    throw RangeError("B(" + std::to_string(n) + ") needs n - k >= 1 with k=" +
                     std::to_string(g.k));
  }
  require_terms(state, n, "B(n)");
  const int gap = g.k - g.c;
  StatementEvaluation e;
  e.kind = StatementKind::B;
  e.n = n;
  e.lhs = state.term(n) + state.term(n - g.k);
  e.rhs = 0;
  for (int idx = n - 1; idx >= 1; idx -= gap) e.rhs += state.term(idx);
  e.holds = e.lhs > e.rhs;
  return e;
}

StatementEvaluation eval_C(const SequenceState& state, int n, int d) {
  const auto g = gap_profile(state.rule());
  if (d < 1) throw RangeError("C_d needs d >= 1");
  if (n - d < 1) {
    throw RangeError("C_" + std::to_string(d) + "(" + std::to_string(n) + ") needs n - d >= 1");
  }
  require_terms(state, std::max(n + 1, n + g.c), "C_d(n)");
  StatementEvaluation e;
  e.kind = StatementKind::C;
  e.n = n;
  e.d = d;
  e.lhs = state.term(n + 1) + state.term(n);
  e.rhs = state.term(n + g.c) + state.term(n - d);
  e.holds = e.lhs > e.rhs;
  return e;
}

std::size_t check_terms_needed(int k, int c, int d) {
  return static_cast<std::size_t>(2 * k + c + d + 3);
}

int max_admissible_d(int k, int c) { return (k + 4 * c - 2) / 2; }

namespace {

struct PreparedTerms {
  SequenceState state;
  std::size_t oracle_verified = 0;
};

// Extends the seed with the window engine and re-derives the leading terms
// with the oracle.
PreparedTerms prepare_terms(const SequenceState& seed, std::size_t needed,
                            const CheckOptions& options) {
  PreparedTerms out{generate_from(seed, static_cast<long long>(std::max(needed, seed.size()))), 0};
  const std::size_t verify = std::min(out.state.size(), options.oracle_cross_check_terms);
  if (verify > 0) {
    const auto oracle = generate(seed.rule(), static_cast<long long>(verify), Engine::oracle);
    for (std::size_t i = 1; i <= verify; ++i) {
      if (oracle.term(i) != out.state.term(i)) {
        throw ConsistencyError("engine term a_" + std::to_string(i) + " = " +
                               to_decimal(out.state.term(i)) + " but oracle gives " +
                               to_decimal(oracle.term(i)));
      }
    }
  }
  out.oracle_verified = verify;
  return out;
}

std::vector<SideCondition> fringe_conditions(int k, const FringeProfile& p) {
  const auto& kt = p.k_threshold;
  std::vector<SideCondition> out;
  out.push_back({"fringe: k >= 2d_T - 4c + 2",
                 "d_T=" + std::to_string(p.d.d) + ", bound " + std::to_string(kt.from_check),
                 k >= kt.from_check, false});
  out.push_back({"fringe: k >= 4c + d_T + 1", "bound " + std::to_string(kt.from_window),
                 k >= kt.from_window, false});
  out.push_back({"fringe: k > strict f_T maximum", "maximum " + std::to_string(kt.strict_max),
                 k > kt.strict_max, false});
  return out;
}

CheckReport build_report(const PreparedTerms& prepared, const GapProfile& g, int d,
                         const std::optional<FringeProfile>& profile) {
  const auto& state = prepared.state;
  CheckReport r;
  r.rule = state.rule().to_string();
  r.k = g.k;
  r.c = g.c;
  r.fringe = g.fringe;
  r.d = d;
  r.terms_used = check_terms_needed(g.k, g.c, d);
  r.oracle_verified_terms = std::min(prepared.oracle_verified, r.terms_used);

  bool cases_ok = true;
  for (int n = g.c + d + 1; n <= g.k + g.c + 1 + d; ++n) {
    r.c_cases.push_back(eval_C(state, n, d));
    if (!r.c_cases.back().holds && !r.first_failure) r.first_failure = r.c_cases.back();
    cases_ok = cases_ok && r.c_cases.back().holds;
  }
  for (int n = g.k + g.c + 1; n <= 2 * g.k + g.c + d + 2; ++n) {
    r.b_cases.push_back(eval_B(state, n));
    if (!r.b_cases.back().holds && !r.first_failure) r.first_failure = r.b_cases.back();
    cases_ok = cases_ok && r.b_cases.back().holds;
  }

  const int bound = 2 * d - 4 * g.c + 2;
  r.side_conditions.push_back({"k >= 2d - 4c + 2", "bound " + std::to_string(bound),
                               g.k >= bound, true});
  if (profile) {
    r.fringe_profile = profile;
    for (auto& sc : fringe_conditions(g.k, *profile)) r.side_conditions.push_back(std::move(sc));
  }
  const bool gates_ok = std::all_of(r.side_conditions.begin(), r.side_conditions.end(),
                                    [](const SideCondition& sc) { return sc.holds || !sc.gating; });
  r.conclusion = cases_ok && gates_ok ? Conclusion::proven : Conclusion::not_proven;
  return r;
}

std::optional<FringeProfile> maybe_profile(const GapProfile& g, const CheckOptions& options) {
  if (!options.fringe_bounds) return std::nullopt;
  return compute_fringe_profile(g.fringe);
}

}  // namespace

CheckReport finite_check(const SequenceState& seed, int d, const CheckOptions& options) {
  const auto g = gap_profile(seed.rule());
  if (d <= 0) throw RangeError("finite check needs d > 0, got " + std::to_string(d));
  const auto prepared = prepare_terms(seed, check_terms_needed(g.k, g.c, d), options);
  return build_report(prepared, g, d, maybe_profile(g, options));
}

CheckReport finite_check(const AdjacencyRule& rule, int d, const CheckOptions& options) {
  return finite_check(SequenceState(rule), d, options);
}

CheckReport finite_check_auto(const SequenceState& seed, const CheckOptions& options) {
  const auto g = gap_profile(seed.rule());
  const int d_max = std::max(1, max_admissible_d(g.k, g.c));
  const auto prepared = prepare_terms(seed, check_terms_needed(g.k, g.c, d_max), options);
  const auto profile = maybe_profile(g, options);
  CheckReport last;
  for (int d = 1; d <= d_max; ++d) {
    last = build_report(prepared, g, d, profile);
    if (last.conclusion == Conclusion::proven) break;
  }
  return last;
}

CheckReport finite_check_auto(const AdjacencyRule& rule, const CheckOptions& options) {
  return finite_check_auto(SequenceState(rule), options);
}

namespace {

nlohmann::json statement_json(const StatementEvaluation& e) {
  nlohmann::json j;
  j["statement"] = std::string(statement_name(e.kind));
  j["n"] = e.n;
  if (e.d) j["d"] = *e.d;
  j["lhs"] = to_decimal(e.lhs);
  j["rhs"] = to_decimal(e.rhs);
  j["holds"] = e.holds;
  return j;
}

nlohmann::json profile_json(const FringeProfile& p) {
  nlohmann::json f = nlohmann::json::array();
  for (const auto& [i, v] : p.f_table) f.push_back({{"i", i}, {"f", v}});
  nlohmann::json j;
  j["T"] = p.fringe;
  j["c"] = p.c;
  j["m"] = p.m;
  j["d"] = p.d.d;
  j["d_floor_term"] = p.d.floor_term;
  j["d_inner_max"] = p.d.inner_max;
  j["k_threshold"] = p.k_threshold.k;
  j["k_from_check"] = p.k_threshold.from_check;
  j["k_from_window"] = p.k_threshold.from_window;
  j["k_strict_max"] = p.k_threshold.strict_max;
  j["f_table"] = std::move(f);
  return j;
}

}  // namespace

std::string to_json(const CheckReport& report) {
  nlohmann::json j;
  j["rule"] = report.rule;
  j["k"] = report.k;
  j["c"] = report.c;
  j["T"] = report.fringe;
  j["d"] = report.d;
  j["terms_used"] = report.terms_used;
  j["oracle_verified_terms"] = report.oracle_verified_terms;
  auto& cases = j["base_cases"];
  cases["C"] = nlohmann::json::array();
  for (const auto& e : report.c_cases) cases["C"].push_back(statement_json(e));
  cases["B"] = nlohmann::json::array();
  for (const auto& e : report.b_cases) cases["B"].push_back(statement_json(e));
  j["side_conditions"] = nlohmann::json::array();
  for (const auto& sc : report.side_conditions) {
    j["side_conditions"].push_back(
        {{"name", sc.name}, {"detail", sc.detail}, {"holds", sc.holds}, {"gating", sc.gating}});
  }
  j["first_failure"] =
      report.first_failure ? statement_json(*report.first_failure) : nlohmann::json(nullptr);
  if (report.fringe_profile) j["fringe_profile"] = profile_json(*report.fringe_profile);
  j["conclusion"] = std::string(conclusion_name(report.conclusion));
  return j.dump(2) + "\n";
}

std::string to_json(const FringeProfile& profile) { return profile_json(profile).dump(2) + "\n"; }

}  // namespace slid
