#include "slid/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "slid/analytics.hpp"
#include "slid/error.hpp"
#include "slid/fringe.hpp"
#include "slid/quilt.hpp"
#include "slid/recurrence.hpp"
#include "slid/serialize.hpp"

namespace slid::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { table, json, csv, bfile };

struct Globals {
  std::string format = "table";
  std::string engine = "window_dp";
  std::string seed_terms;

  Format fmt() const {
    if (format == "json") return Format::json;
    if (format == "csv") return Format::csv;
    if (format == "bfile") return Format::bfile;
    return Format::table;
  }
};

void reject_format(const Globals& g, std::string_view command, std::initializer_list<Format> bad) {
  if (std::find(bad.begin(), bad.end(), g.fmt()) != bad.end()) {
    throw UsageError("--format " + g.format + " is not available for " + std::string(command));
  }
}

std::string fixed(long double v, int digits = 12) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

// Plain aligned columns; the last column is never padded.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out) const {
    std::vector<std::size_t> width(rows_.front().size(), 0);
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << row[i];
        if (i + 1 < row.size()) out << std::string(width[i] - row[i].size() + 2, ' ');
      }
      out << '\n';
    }
  }

  void print_csv(std::ostream& out) const {
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
      out << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string join(const std::vector<int>& v, std::string_view sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? std::string(sep) : "") + std::to_string(v[i]);
  return s;
}

std::string set_string(const std::set<int>& s) {
  return "{" + join(std::vector<int>(s.begin(), s.end()), ",") + "}";
}

SequenceState compare_engines(const SequenceState& a, const SequenceState& b) {
  for (std::size_t i = 1; i <= std::min(a.size(), b.size()); ++i) {
    if (a.term(i) != b.term(i)) {
      throw Mismatch("engines disagree at a_" + std::to_string(i) + ": window_dp gives " +
                     to_decimal(a.term(i)) + ", oracle gives " + to_decimal(b.term(i)));
    }
  }
  return a;
}

// First n terms, continuing from --seed-terms when given and honouring --engine.
SequenceState produce(const Globals& g, const AdjacencyRule& rule, long long n,
                      bool use_seed = true) {
  SequenceState seed(rule);
  if (use_seed && !g.seed_terms.empty()) seed = load_prefix(read_file(g.seed_terms), &rule);
  if (g.engine == "both") {
    return compare_engines(generate_from(seed, n, Engine::window_dp),
                           generate_from(seed, n, Engine::oracle));
  }
  return generate_from(seed, n, parse_engine(g.engine));
}

void emit_terms(const Globals& g, const SequenceState& s, std::ostream& out) {
  switch (g.fmt()) {
    case Format::json:
      out << to_json(s);
      return;
    case Format::bfile:
      out << to_bfile(s);
      return;
    case Format::csv:
    case Format::table: {
      Table t({"n", "a_n"});
      for (std::size_t i = 1; i <= s.size(); ++i) t.add({std::to_string(i), to_decimal(s.term(i))});
      if (g.fmt() == Format::csv) {
        t.print_csv(out);
      } else {
        out << "rule: " << s.rule().to_string() << "\n";
        t.print(out);
      }
      return;
    }
  }
}

// ---- gen -------------------------------------------------------------------

struct GenArgs {
  std::string spec;
  long long n = 0;
};

int cmd_gen(const Globals& g, const GenArgs& a, std::ostream& out) {
  emit_terms(g, produce(g, parse_rule(a.spec), a.n), out);
  return kOk;
}

// ---- quilt -----------------------------------------------------------------

struct QuiltArgs {
  std::string which;
  long long n = 30;
  int scan_k = 0;
  int scan_from = 0;
  int scan_to = 0;
};

void emit_index_set(const Globals& g, const std::string& rule, int k, int first, int last,
                    const std::vector<int>& indices, std::ostream& out) {
  switch (g.fmt()) {
    case Format::json: {
      json j;
      j["rule"] = rule;
      j["k"] = k;
      j["from"] = first;
      j["to"] = last;
      j["indices"] = indices;
      out << j.dump(2) << "\n";
      return;
    }
    case Format::csv:
      out << "n\n";
      for (int n : indices) out << n << "\n";
      return;
    default:
      out << "rule: " << rule << "\n"
          << "a_{n+1} = a_n + a_{n-" << k << "} for n in [" << first << ", " << last << "]: "
          << indices.size() << " indices\n"
          << join(indices, " ") << "\n";
  }
}

int cmd_quilt(const Globals& g, const QuiltArgs& a, std::ostream& out) {
  const Quilt quilt = parse_quilt(a.which);
  const auto rule = quilt_rule(quilt);
  if (a.scan_k == 0) {
    emit_terms(g, produce(g, rule, a.n), out);
    return kOk;
  }
  reject_format(g, "quilt --scan-k", {Format::bfile});
  const int first = a.scan_from ? a.scan_from : a.scan_k + 1;
  if (a.scan_to < first) throw UsageError("--scan-to must be at least " + std::to_string(first));
  const auto state = produce(g, rule, a.scan_to + 1LL);
  emit_index_set(g, std::string(quilt_name(quilt)), a.scan_k, first, a.scan_to,
                 recurrence_index_set(state, a.scan_k, first, a.scan_to), out);
  return kOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string file;
  std::string spec;
  int k = 0;
  int from = 0;
  int to = 0;
};

int cmd_verify(const Globals& g, const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  reject_format(g, "verify", {Format::bfile, Format::csv});
  std::optional<AdjacencyRule> rule;
  if (!a.spec.empty()) rule = parse_rule(a.spec);
  const auto stored = load_prefix(read_file(a.file), rule ? &*rule : nullptr);
  const auto fresh = produce(g, stored.rule(), static_cast<long long>(stored.size()), false);

  std::optional<std::size_t> bad;
  for (std::size_t i = 1; i <= stored.size() && !bad; ++i) {
    if (stored.term(i) != fresh.term(i)) bad = i;
  }

  const int k = a.k ? a.k : stored.rule().max_diff().value_or(0);
  std::vector<int> indices;
  int first = 0;
  int last = 0;
  if (k > 0) {
    first = a.from ? a.from : k + 1;
    last = a.to ? a.to : static_cast<int>(stored.size()) - 1;
    if (last >= first) indices = recurrence_index_set(stored, k, first, last);
  }

  if (g.fmt() == Format::json) {
    json j;
    j["rule"] = stored.rule().to_string();
    j["terms"] = stored.size();
    j["matches_regeneration"] = !bad;
    j["first_mismatch"] = bad ? json(*bad) : json(nullptr);
    j["k"] = k;
    j["from"] = first;
    j["to"] = last;
    j["recurrence_indices"] = indices;
    out << j.dump(2) << "\n";
  } else {
    out << "rule: " << stored.rule().to_string() << "\n"
        << "terms: " << stored.size() << "\n"
        << "regeneration: " << (bad ? "MISMATCH at a_" + std::to_string(*bad) : "match") << "\n";
    if (k > 0) {
      out << "a_{n+1} = a_n + a_{n-" << k << "} for n in [" << first << ", " << last
          << "]: " << join(indices, " ") << "\n";
    }
  }
  if (bad) {
    err << "error: stored a_" << *bad << " = " << to_decimal(stored.term(*bad))
        << " but regeneration gives " << to_decimal(fresh.term(*bad)) << "\n";
    return kMismatch;
  }
  return kOk;
}

// ---- check -----------------------------------------------------------------

struct CheckArgs {
  std::string spec;
  int k = 0;
  std::vector<int> fringe;
  int d = 0;
  bool auto_d = false;
  std::string expect;
  std::size_t oracle_terms = 30;
  bool no_fringe_bounds = false;
  int verify_to = 0;
};

AdjacencyRule check_rule(const CheckArgs& a) {
  if (!a.spec.empty()) {
    if (a.k || !a.fringe.empty()) throw UsageError("give either --S or --k/--fringe, not both");
    return parse_rule(a.spec);
  }
  if (a.k == 0 || a.fringe.empty()) throw UsageError("check needs --S, or --k with --fringe");
  return AdjacencyRule::fringe(a.k, std::set<int>(a.fringe.begin(), a.fringe.end()));
}

std::string statement_label(const StatementEvaluation& e) {
  std::string s(statement_name(e.kind));
  if (e.d) s += "_" + std::to_string(*e.d);
  return s + "(" + std::to_string(e.n) + ")";
}

void print_cases(std::string_view title, const std::vector<StatementEvaluation>& cases,
                 std::ostream& out) {
  out << title << "\n";
  Table t({"  case", "lhs", "rhs", "holds"});
  for (const auto& e : cases) {
    t.add({"  " + statement_label(e), to_decimal(e.lhs), to_decimal(e.rhs), e.holds ? "yes" : "no"});
  }
  t.print(out);
}

// a_{n+1} = a_n + a_{n-k} over k+c < n <= to; returns the first failing n.
std::optional<int> term_level_failure(const SequenceState& s, int k, int c, int to) {
  for (int n = k + c + 1; n <= to; ++n) {
    if (s.term(n + 1) != s.term(n) + s.term(n - k)) return n;
  }
  return std::nullopt;
}

int cmd_check(const Globals& g, const CheckArgs& a, std::ostream& out) {
  reject_format(g, "check", {Format::bfile, Format::csv});
  if (a.auto_d && a.d) throw UsageError("--d and --auto-d are mutually exclusive");
  if (!a.expect.empty() && a.expect != "proven") throw UsageError("--expect takes 'proven'");
  const auto rule = check_rule(a);

  SequenceState seed(rule);
  if (!g.seed_terms.empty()) seed = load_prefix(read_file(g.seed_terms), &rule);
  CheckOptions opts;
  opts.oracle_cross_check_terms = a.oracle_terms;
  opts.fringe_bounds = !a.no_fringe_bounds;
  const auto report = a.d ? finite_check(seed, a.d, opts) : finite_check_auto(seed, opts);

  std::optional<int> term_failure;
  if (a.verify_to > 0) {
    const auto s = generate_from(seed, a.verify_to + 1LL);
    term_failure = term_level_failure(s, report.k, report.c, a.verify_to);
  }

  if (g.fmt() == Format::json) {
    auto j = json::parse(to_json(report));
    if (a.verify_to > 0) {
      j["term_level"] = {{"from", report.k + report.c + 1},
                         {"to", a.verify_to},
                         {"holds", !term_failure},
                         {"first_failure", term_failure ? json(*term_failure) : json(nullptr)}};
    }
    out << j.dump(2) << "\n";
  } else {
    out << "rule: " << report.rule << "\n"
        << "k=" << report.k << " c=" << report.c << " T=" << set_string(report.fringe)
        << " d=" << report.d << "\n"
        << "terms used: " << report.terms_used << " (oracle cross-checked: "
        << report.oracle_verified_terms << ")\n";
    print_cases("base cases C_d(n):", report.c_cases, out);
    print_cases("base cases B(n):", report.b_cases, out);
    out << "side conditions:\n";
    for (const auto& sc : report.side_conditions) {
      out << "  " << sc.name << " [" << sc.detail << "]: " << (sc.holds ? "holds" : "fails")
          << (sc.gating ? "" : " (reported only)") << "\n";
    }
    if (report.first_failure) out << "first failure: " << statement_label(*report.first_failure) << "\n";
    if (a.verify_to > 0) {
      out << "term level, " << report.k + report.c + 1 << " <= n <= " << a.verify_to << ": "
          << (term_failure ? "fails at n=" + std::to_string(*term_failure) : "holds") << "\n";
    }
    out << "conclusion: " << conclusion_name(report.conclusion) << "\n";
  }
  if (a.expect == "proven" && report.conclusion != Conclusion::proven) return kNotProven;
  return kOk;
}

// ---- fringe-profile ----------------------------------------------------------

struct ProfileArgs {
  std::vector<int> fringe;
  std::string i_range;
};

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("range must look like a..b, got '" + text + "'");
  try {
    std::size_t used = 0;
    const int lo = std::stoi(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument(text);
    const std::string tail = text.substr(dots + 2);
    const int hi = std::stoi(tail, &used);
    if (used != tail.size()) throw std::invalid_argument(text);
    if (lo > hi) throw UsageError("empty range '" + text + "'");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("range must look like a..b, got '" + text + "'");
  }
}

int cmd_fringe_profile(const Globals& g, const ProfileArgs& a, std::ostream& out) {
  reject_format(g, "fringe-profile", {Format::bfile});
  const std::set<int> fringe(a.fringe.begin(), a.fringe.end());
  const auto profile = compute_fringe_profile(fringe);
  FTable shown = profile.f_table;
  if (!a.i_range.empty()) {
    const auto [lo, hi] = parse_range(a.i_range);
    shown = compute_f_table(fringe, lo, hi);
  }

  switch (g.fmt()) {
    case Format::json: {
      auto j = json::parse(to_json(profile));
      j["f_table"] = json::array();
      for (const auto& [i, v] : shown) j["f_table"].push_back({{"i", i}, {"f", v}});
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "i,f\n";
      for (const auto& [i, v] : shown) out << i << "," << v << "\n";
      break;
    default: {
      const auto& kt = profile.k_threshold;
      out << "T=" << set_string(profile.fringe) << " c=" << profile.c << "\n"
          << "m = " << profile.m << "\n"
          << "d = " << profile.d.d << " (2c+m-1 = " << profile.d.floor_term
          << ", inner max = " << profile.d.inner_max << ")\n"
          << "k_threshold = " << kt.k << " (2d-4c+2 = " << kt.from_check
          << ", 4c+d+1 = " << kt.from_window << ", strict max = " << kt.strict_max << ")\n";
      Table t({"i", "f_T(i)"});
      for (const auto& [i, v] : shown) t.add({std::to_string(i), std::to_string(v)});
      t.print(out);
    }
  }
  return kOk;
}

// ---- count -----------------------------------------------------------------

struct CountArgs {
  std::string spec;
  std::size_t n = 0;
};

// (k, c) when the rule is [k] \ {k - c} with 2c < k.
std::optional<std::pair<int, int>> single_gap(const AdjacencyRule& rule) {
  if (!rule.is_pure() || !rule.max_diff()) return std::nullopt;
  try {
    const auto gp = gap_profile(rule);
    if (gp.fringe.size() == 1 && gp.c >= 1 && 2 * gp.c < gp.k) return std::make_pair(gp.k, gp.c);
  } catch (const RuleError&) {
  }
  return std::nullopt;
}

int cmd_count(const Globals& g, const CountArgs& a, std::ostream& out) {
  reject_format(g, "count", {Format::bfile});
  const auto rule = parse_rule(a.spec);
  const auto series = count_decompositions(rule, a.n);
  const auto terms = produce(g, rule, static_cast<long long>(a.n));

  Table t({"n", "a_n", "d_n", "c_n", "ratio"});
  for (std::size_t n = 1; n <= a.n; ++n) {
    const long double ratio = to_long_double(series.d[n]) / to_long_double(series.d[n - 1]);
    t.add({std::to_string(n), to_decimal(terms.term(n)), to_decimal(series.d[n]),
           to_decimal(series.c[n]), fixed(ratio)});
  }
  std::optional<DnRecurrenceReport> rec;
  if (const auto shape = single_gap(rule)) {
    rec = verify_dn_recurrence(shape->first, shape->second, std::span<const BigInt>(series.d));
  }

  switch (g.fmt()) {
    case Format::csv:
      t.print_csv(out);
      break;
    case Format::json: {
      json j;
      j["rule"] = rule.to_string();
      j["rows"] = json::array();
      for (std::size_t n = 1; n <= a.n; ++n) {
        j["rows"].push_back({{"n", n},
                             {"a_n", to_decimal(terms.term(n))},
                             {"d_n", to_decimal(series.d[n])},
                             {"c_n", to_decimal(series.c[n])}});
      }
      if (rec) {
        j["dn_recurrence"] = {{"k", rec->k}, {"c", rec->c}, {"checked", rec->rows.size()},
                              {"all_hold", rec->all_hold}};
      }
      out << j.dump(2) << "\n";
      break;
    }
    default:
      out << "rule: " << rule.to_string() << "\n";
      t.print(out);
      if (rec) {
        out << "d_n = d_{n-1} + d_{n-k+c} - d_{n-k+c-1} + d_{n-k-1} (k=" << rec->k
            << ", c=" << rec->c << "): " << (rec->all_hold ? "holds" : "FAILS") << " on "
            << rec->rows.size() << " indices\n";
      }
  }
  return kOk;
}

// ---- greedy ----------------------------------------------------------------

struct GreedyArgs {
  std::string spec;
  std::string quilt;
  std::string m;
  std::size_t scan_to = 0;
};

int cmd_greedy(const Globals& g, const GreedyArgs& a, std::ostream& out) {
  reject_format(g, "greedy", {Format::bfile});
  if (a.spec.empty() == a.quilt.empty()) throw UsageError("greedy needs exactly one of --S, --quilt");
  if (a.m.empty() == (a.scan_to == 0)) throw UsageError("greedy needs exactly one of --m, --scan-to");
  const auto rule = a.quilt.empty() ? parse_rule(a.spec) : quilt_rule(parse_quilt(a.quilt));

  if (!a.m.empty()) {
    const BigInt m = parse_decimal(a.m);
    long long n = 8;
    auto state = produce(g, rule, n);
    while (state.terms().back() < m) state = produce(g, rule, n *= 2);
    const auto r = greedy_decomposition(state, m);
    std::vector<int> idx = r.decomposition.indices;
    if (g.fmt() == Format::json) {
      json j;
      j["rule"] = rule.to_string();
      j["m"] = a.m;
      j["indices"] = idx;
      j["legal"] = r.legal;
      out << j.dump(2) << "\n";
    } else if (g.fmt() == Format::csv) {
      out << "m,indices,legal\n" << a.m << "," << join(idx, " ") << "," << r.legal << "\n";
    } else {
      out << a.m << " = ";
      for (std::size_t i = 0; i < idx.size(); ++i) {
        out << (i ? " + " : "") << "a_" << idx[i];
      }
      if (idx.empty()) out << "(empty sum)";
      out << "\nlegal: " << (r.legal ? "yes" : "no") << "\n";
    }
    return kOk;
  }

  const auto state = produce(g, rule, static_cast<long long>(a.scan_to));
  Table t({"n", "a_n", "scanned", "legal", "proportion"});
  json rows = json::array();
  for (std::size_t n = 1; n <= a.scan_to; ++n) {
    const auto s = greedy_legality_scan(state, n);
    t.add({std::to_string(n), to_decimal(state.term(n)), to_decimal(s.scanned), to_decimal(s.legal),
           fixed(s.proportion)});
    rows.push_back({{"n", n},
                    {"a_n", to_decimal(state.term(n))},
                    {"scanned", to_decimal(s.scanned)},
                    {"legal", to_decimal(s.legal)},
                    {"proportion", static_cast<double>(s.proportion)}});
  }
  if (g.fmt() == Format::json) {
    out << json{{"rule", rule.to_string()}, {"rows", rows}}.dump(2) << "\n";
  } else if (g.fmt() == Format::csv) {
    t.print_csv(out);
  } else {
    out << "rule: " << rule.to_string() << "\n";
    t.print(out);
  }
  return kOk;
}

// ---- growth ----------------------------------------------------------------

struct GrowthArgs {
  int k = 0;
  int c = 0;
  std::size_t n = 60;
  std::size_t average_n = 25;
};

int cmd_growth(const Globals& g, const GrowthArgs& a, std::ostream& out) {
  reject_format(g, "growth", {Format::bfile});
  if (a.k < 1) throw UsageError("--k must be at least 1");
  if (a.c < 0 || (a.c > 0 && a.c >= a.k)) throw UsageError("--c must lie in [1, k-1]");
  const auto rule = a.c ? AdjacencyRule::fringe(a.k, {a.c}) : AdjacencyRule::full(a.k);
  const auto terms = produce(g, rule, static_cast<long long>(a.n) + 1);
  const auto est = estimate_term_growth(terms, a.k, a.n);

  std::optional<double> r;
  if (a.c) r = dominant_root(count_growth_polynomial(a.k, a.c));
  std::optional<AverageGrowthReport> avg;
  if (a.c && 2 * a.c < a.k && a.average_n > 0) avg = average_decomposition_growth(rule, a.average_n);

  Table t({"n", "a_n", "decompositions", "average"});
  if (avg) {
    for (const auto& row : avg->rows) {
      t.add({std::to_string(row.n), to_decimal(row.a_n), to_decimal(row.decompositions),
             fixed(row.average)});
    }
  }

  switch (g.fmt()) {
    case Format::csv:
      t.print_csv(out);
      break;
    case Format::json: {
      json j;
      j["rule"] = rule.to_string();
      j["k"] = a.k;
      j["lambda"] = est.dominant_root;
      j["n"] = a.n;
      j["empirical_ratio"] = est.empirical_ratio;
      if (r) {
        j["c"] = a.c;
        j["r"] = *r;
        j["r_at_least_lambda"] = *r >= est.dominant_root;
      }
      if (avg) {
        j["average"] = {{"n_max", a.average_n},
                        {"empirical_ratio", static_cast<double>(avg->empirical_ratio)},
                        {"fitted_log_slope", static_cast<double>(avg->fitted_log_slope)}};
        if (avg->predicted_ratio) j["average"]["predicted_ratio"] = *avg->predicted_ratio;
      }
      out << j.dump(2) << "\n";
      break;
    }
    default:
      out << "rule: " << rule.to_string() << "\n"
          << "lambda (root of x^" << a.k + 1 << " - x^" << a.k << " - 1) = "
          << fixed(est.dominant_root, 15) << "\n"
          << "a_" << a.n + 1 << " / a_" << a.n << " = " << fixed(est.empirical_ratio, 15) << "\n";
      if (r) {
        out << "r (root of the d_n polynomial) = " << fixed(*r, 15) << "\n"
            << "r >= lambda: " << (*r >= est.dominant_root ? "yes" : "no") << "\n";
      }
      if (avg) {
        t.print(out);
        out << "average ratio at n=" << a.average_n << ": " << fixed(avg->empirical_ratio) << "\n"
            << "fitted exp(slope): " << fixed(std::exp(avg->fitted_log_slope)) << "\n";
        if (avg->predicted_ratio) out << "r / lambda: " << fixed(*avg->predicted_ratio) << "\n";
      }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generate and analyze sequences with forbidden index differences.", "slid"};
  app.require_subcommand(1);

  Globals g;
  app.add_option("--format", g.format, "table, json, csv or bfile")
      ->check(CLI::IsMember({"table", "json", "csv", "bfile"}))
      ->capture_default_str();
  app.add_option("--engine", g.engine, "oracle, window_dp or both")
      ->check(CLI::IsMember({"oracle", "window_dp", "both"}))
      ->capture_default_str();
  app.add_option("--seed-terms", g.seed_terms, "continue from a JSON or b-file prefix");

  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  GenArgs gen;
  auto* gen_cmd = sub("gen", "print the first n terms");
  gen_cmd->add_option("--S", gen.spec, "rule spec, e.g. 3 or 'full(k=5)\\{3}'")->required();
  gen_cmd->add_option("--n", gen.n, "number of terms")->required()->check(CLI::NonNegativeNumber);

  QuiltArgs quilt;
  auto* quilt_cmd = sub("quilt", "quilt sequences (fib or tri)");
  quilt_cmd->add_option("which", quilt.which, "fib or tri")->required();
  quilt_cmd->add_option("--n", quilt.n, "number of terms")->capture_default_str();
  quilt_cmd->add_option("--scan-k", quilt.scan_k, "list n with q_{n+1} = q_n + q_{n-k}");
  quilt_cmd->add_option("--scan-from", quilt.scan_from, "first n scanned (default k+1)");
  quilt_cmd->add_option("--scan-to", quilt.scan_to, "last n scanned");

  VerifyArgs verify;
  auto* verify_cmd = sub("verify", "regenerate a stored prefix and report its recurrence indices");
  verify_cmd->add_option("file", verify.file, "JSON or b-file")->required();
  verify_cmd->add_option("--S", verify.spec, "rule spec (required for b-files)");
  verify_cmd->add_option("--k", verify.k, "recurrence lag (default max S)");
  verify_cmd->add_option("--from", verify.from, "first n (default k+1)");
  verify_cmd->add_option("--to", verify.to, "last n (default size-1)");

  CheckArgs check;
  auto* check_cmd = sub("check", "finite check of a_{n+1} = a_n + a_{n-k}");
  check_cmd->add_option("--S", check.spec, "rule spec");
  check_cmd->add_option("--k", check.k, "k = max S");
  check_cmd->add_option("--fringe", check.fringe, "T, so S = [k] \\ (k - T)")->delimiter(',');
  check_cmd->add_option("--d", check.d, "the d of C_d")->check(CLI::PositiveNumber);
  check_cmd->add_flag("--auto-d", check.auto_d, "try every admissible d (default)");
  check_cmd->add_option("--expect", check.expect, "exit 3 unless the conclusion is proven");
  check_cmd->add_option("--oracle-terms", check.oracle_terms, "terms cross-checked by the oracle")
      ->capture_default_str();
  check_cmd->add_flag("--no-fringe-bounds", check.no_fringe_bounds, "skip the fringe constants");
  check_cmd->add_option("--verify-to", check.verify_to, "also test the recurrence on terms up to n");

  ProfileArgs profile;
  auto* profile_cmd = sub("fringe-profile", "f_T table and the constants m, d, k_threshold");
  profile_cmd->add_option("--T", profile.fringe, "fringe set, e.g. 1,2")
      ->required()
      ->delimiter(',');
  profile_cmd->add_option("--i-range", profile.i_range, "f_T rows to print, e.g. -2..8");

  CountArgs count;
  auto* count_cmd = sub("count", "legal decomposition counts d_n and c_n");
  count_cmd->add_option("--S", count.spec, "rule spec")->required();
  count_cmd->add_option("--n", count.n, "last n")->required();

  GreedyArgs greedy;
  auto* greedy_cmd = sub("greedy", "greedy decompositions and their legality");
  greedy_cmd->add_option("--S", greedy.spec, "rule spec");
  greedy_cmd->add_option("--quilt", greedy.quilt, "fib or tri");
  greedy_cmd->add_option("--m", greedy.m, "decompose one integer");
  greedy_cmd->add_option("--scan-to", greedy.scan_to, "scan m in [1, a_n) for n up to this");

  GrowthArgs growth;
  auto* growth_cmd = sub("growth", "dominant roots against empirical growth");
  growth_cmd->add_option("--k", growth.k, "k")->required();
  growth_cmd->add_option("--c", growth.c, "c, for S = [k] \\ {k - c}");
  growth_cmd->add_option("--n", growth.n, "index of the empirical ratio")->capture_default_str();
  growth_cmd->add_option("--average-n", growth.average_n, "n_max of the average count (0 skips)")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*gen_cmd) return cmd_gen(g, gen, out);
    if (*quilt_cmd) return cmd_quilt(g, quilt, out);
    if (*verify_cmd) return cmd_verify(g, verify, out, err);
    if (*check_cmd) return cmd_check(g, check, out);
    if (*profile_cmd) return cmd_fringe_profile(g, profile, out);
    if (*count_cmd) return cmd_count(g, count, out);
    if (*greedy_cmd) return cmd_greedy(g, greedy, out);
    if (*growth_cmd) return cmd_growth(g, growth, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const RuleError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Mismatch& e) {
    err << "error: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
  return kUsageError;
}

}  // namespace slid::cli
