#include "slid/rule.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <vector>

#include "slid/error.hpp"

namespace slid {

IndexPair::IndexPair(int i, int j) : first(std::min(i, j)), second(std::max(i, j)) {
  if (i < 1 || j < 1) {
    throw RuleError("exceptional pair indices must be positive");
  }
  if (i == j) {
    throw RuleError("exceptional pair needs two distinct indices");
  }
}

AdjacencyRule::AdjacencyRule(std::set<int> diffs, std::set<IndexPair> exceptional_pairs)
    : diffs_(std::move(diffs)), pairs_(std::move(exceptional_pairs)) {
  if (!diffs_.empty() && *diffs_.begin() < 1) {
    throw RuleError("differences must be positive, got " + std::to_string(*diffs_.begin()));
  }
  for (const auto& p : pairs_) {
    if (p.first < 1 || p.first >= p.second) {
      throw RuleError("malformed exceptional pair");
    }
  }
}

AdjacencyRule AdjacencyRule::full(int k) {
  if (k < 1) {
    throw RuleError("full(k) needs k >= 1, got " + std::to_string(k));
  }
  std::set<int> s;
  for (int i = 1; i <= k; ++i) s.insert(i);
  return AdjacencyRule(std::move(s));
}

AdjacencyRule AdjacencyRule::fringe(int k, const std::set<int>& fringe) {
  if (fringe.empty()) {
    throw RuleError("fringe set must be nonempty");
  }
  std::set<int> s;
  for (int i = 1; i <= k; ++i) s.insert(i);
  for (int t : fringe) {
    if (t < 1 || t >= k) {
      throw RuleError("fringe element " + std::to_string(t) + " must lie in [1, " +
                      std::to_string(k - 1) + "] for k=" + std::to_string(k));
    }
    s.erase(k - t);
  }
  return AdjacencyRule(std::move(s));
}

std::optional<int> AdjacencyRule::max_diff() const {
  if (diffs_.empty()) return std::nullopt;
  return *diffs_.rbegin();
}

int AdjacencyRule::require_max_diff() const {
  if (diffs_.empty()) {
    throw RuleError("operation needs k = max(S), but S is empty");
  }
  return *diffs_.rbegin();
}

int AdjacencyRule::horizon() const {
  int w = diffs_.empty() ? 0 : *diffs_.rbegin();
  for (const auto& p : pairs_) w = std::max(w, p.span());
  return w;
}

bool AdjacencyRule::clashes(int i, int j) const {
  if (i == j) return false;
  const int gap = i > j ? i - j : j - i;
  return diffs_.contains(gap) || pairs_.contains(IndexPair(i, j));
}

std::string AdjacencyRule::to_string() const {
  std::string out = "S=";
  bool first = true;
  for (int d : diffs_) {
    if (!first) out += ',';
    out += std::to_string(d);
    first = false;
  }
  if (!pairs_.empty()) {
    out += " pairs=";
    first = true;
    for (const auto& p : pairs_) {
      if (!first) out += ',';
      out += '{' + std::to_string(p.first) + ',' + std::to_string(p.second) + '}';
      first = false;
    }
  }
  return out;
}

bool is_legal(const AdjacencyRule& rule, std::span<const int> indices) {
  for (std::size_t x = 0; x < indices.size(); ++x) {
    for (std::size_t y = x + 1; y < indices.size(); ++y) {
      if (rule.clashes(indices[x], indices[y])) return false;
    }
  }
  return true;
}

namespace {

[[noreturn]] void bad_token(std::string_view token, std::string_view why = {}) {
  std::string msg = "malformed rule spec: offending token '" + std::string(token) + "'";
  if (!why.empty()) {
    msg += " (";
    msg += why;
    msg += ')';
  }
  throw RuleError(msg);
}

int parse_int(std::string_view text, std::string_view token) {
  int value = 0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) bad_token(token, "expected integer");
  return value;
}

std::vector<int> parse_list(std::string_view text, std::string_view token) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    out.push_back(parse_int(text.substr(pos, comma - pos), token));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string_view strip_braces(std::string_view text, std::string_view token) {
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') bad_token(token, "unbalanced brace");
    return text.substr(1, text.size() - 2);
  }
  return text;
}

std::set<int> parse_set_expr(std::string_view text, std::string_view token) {
  constexpr std::string_view kFull = "full(";
  if (text.substr(0, kFull.size()) == kFull) {
    const auto close = text.find(')');
    if (close == std::string_view::npos) bad_token(token, "missing ')'");
    auto arg = text.substr(kFull.size(), close - kFull.size());
    if (arg.substr(0, 2) == "k=") arg.remove_prefix(2);
    const int k = parse_int(arg, token);
    if (k < 1) bad_token(token, "full(k) needs k >= 1");
    std::set<int> s = AdjacencyRule::full(k).diffs();
    auto rest = text.substr(close + 1);
    if (rest.empty()) return s;
    if (rest.front() != '\\') bad_token(token, "expected '\\' after full(...)");
    rest.remove_prefix(1);
    for (int x : parse_list(strip_braces(rest, token), token)) {
      if (x < 1 || x > k) bad_token(token, "removed element outside [1, k]");
      s.erase(x);
    }
    return s;
  }
  std::set<int> s;
  for (int x : parse_list(strip_braces(text, token), token)) {
    if (x < 1) bad_token(token, "differences must be positive");
    s.insert(x);
  }
  return s;
}

void parse_pairs(std::string_view text, std::string_view token, std::set<IndexPair>& out) {
  // {a,b},{c,d}
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != '{') bad_token(token, "expected '{'");
    const auto close = text.find('}', pos);
    if (close == std::string_view::npos) bad_token(token, "unbalanced brace");
    const auto items = parse_list(text.substr(pos + 1, close - pos - 1), token);
    if (items.size() != 2) bad_token(token, "a pair needs exactly two indices");
    try {
      out.insert(IndexPair(items[0], items[1]));
    } catch (const RuleError& e) {
      bad_token(token, e.what());
    }
    pos = close + 1;
    if (pos < text.size()) {
      if (text[pos] != ',') bad_token(token, "expected ',' between pairs");
      ++pos;
    }
  }
  if (text.empty()) bad_token(token, "empty pair list");
}

std::vector<std::string_view> split_clauses(std::string_view spec) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    while (pos < spec.size() &&
           (std::isspace(static_cast<unsigned char>(spec[pos])) != 0 || spec[pos] == ';')) {
      ++pos;
    }
    std::size_t end = pos;
    while (end < spec.size() && std::isspace(static_cast<unsigned char>(spec[end])) == 0 &&
           spec[end] != ';') {
      ++end;
    }
    if (end > pos) out.push_back(spec.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

}  // namespace

AdjacencyRule parse_rule(std::string_view spec) {
  std::optional<std::set<int>> diffs;
  std::optional<int> k;
  std::optional<std::set<int>> fringe;
  std::set<IndexPair> pairs;

  for (auto token : split_clauses(spec)) {
    if (token.substr(0, 2) == "S=") {
      if (diffs) bad_token(token, "S given twice");
      diffs = parse_set_expr(token.substr(2), token);
    } else if (token.substr(0, 2) == "k=") {
      if (k) bad_token(token, "k given twice");
      k = parse_int(token.substr(2), token);
      if (*k < 1) bad_token(token, "k must be >= 1");
    } else if (token.substr(0, 7) == "fringe=") {
      if (fringe) bad_token(token, "fringe given twice");
      fringe.emplace();
      for (int t : parse_list(strip_braces(token.substr(7), token), token)) fringe->insert(t);
      if (fringe->empty()) bad_token(token, "empty fringe");
    } else if (token.substr(0, 6) == "pairs=") {
      parse_pairs(token.substr(6), token, pairs);
    } else if (!diffs && (token.find('=') == std::string_view::npos ||
                          token.substr(0, 5) == "full(")) {
      diffs = parse_set_expr(token, token);
    } else {
      bad_token(token);
    }
  }

  if (fringe && !k) throw RuleError("malformed rule spec: 'fringe=' needs 'k='");
  if (k && diffs) throw RuleError("malformed rule spec: give either S= or k=, not both");
  if (k) {
    std::set<int> s;
    if (fringe) {
      for (int t : *fringe) {
        if (t < 1 || t >= *k) {
          throw RuleError("malformed rule spec: offending token 'fringe=" + std::to_string(t) +
                          "' (fringe elements must lie in [1, k-1])");
        }
      }
      s = AdjacencyRule::fringe(*k, *fringe).diffs();
    } else {
      s = AdjacencyRule::full(*k).diffs();
    }
    return AdjacencyRule(std::move(s), std::move(pairs));
  }
  return AdjacencyRule(diffs.value_or(std::set<int>{}), std::move(pairs));
}

}  // namespace slid
