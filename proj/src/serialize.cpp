#include "slid/serialize.hpp"

#include <cctype>

#include "json.hpp"

#include "slid/error.hpp"

namespace slid {

using nlohmann::json;

std::string to_json(const SequenceState& state) {
  json pairs = json::array();
  for (const auto& p : state.rule().exceptional_pairs()) pairs.push_back({p.first, p.second});
  json terms = json::array();
  for (const auto& t : state.terms()) terms.push_back(to_decimal(t));
  json doc;
  doc["rule"] = state.rule().to_string();
  doc["diffs"] = state.rule().diffs();
  doc["pairs"] = std::move(pairs);
  doc["terms"] = std::move(terms);
  return doc.dump(2) + "\n";
}

SequenceState sequence_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rule") || !doc.contains("terms")) {
    throw FormatError("sequence JSON needs \"rule\" and \"terms\"");
  }
  try {
    AdjacencyRule rule = parse_rule(doc.at("rule").get<std::string>());
    if (doc.contains("diffs") && doc["diffs"].get<std::set<int>>() != rule.diffs()) {
      throw FormatError("\"diffs\" disagrees with \"rule\"");
    }
    std::vector<BigInt> terms;
    for (const auto& t : doc.at("terms")) {
      terms.push_back(t.is_string() ? parse_decimal(t.get<std::string>())
                                    : parse_decimal(t.dump()));
    }
    return SequenceState(std::move(rule), std::move(terms));
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed sequence JSON: ") + e.what());
  }
}

std::string to_bfile(std::span<const BigInt> terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    out += std::to_string(i + 1);
    out += ' ';
    out += to_decimal(terms[i]);
    out += '\n';
  }
  return out;
}

std::vector<BigInt> parse_bfile(std::string_view text) {
  std::vector<BigInt> terms;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const auto space = line.find(' ');
    if (space == std::string_view::npos || line.find(' ', space + 1) != std::string_view::npos) {
      throw FormatError("b-file line " + std::to_string(line_no) + ": expected 'n value'");
    }
    try {
      const BigInt n = parse_decimal(line.substr(0, space));
      if (n != terms.size() + 1) {
        throw FormatError("b-file line " + std::to_string(line_no) + ": expected index " +
                          std::to_string(terms.size() + 1));
      }
      terms.push_back(parse_decimal(line.substr(space + 1)));
    } catch (const FormatError& e) {
      const std::string what = e.what();
      if (what.rfind("b-file", 0) == 0) throw;
      throw FormatError("b-file line " + std::to_string(line_no) + ": " + what);
    }
  }
  return terms;
}

SequenceState load_prefix(std::string_view text, const AdjacencyRule* rule) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first])) != 0) {
    ++first;
  }
  if (first < text.size() && text[first] == '{') {
    SequenceState state = sequence_from_json(text);
    if (rule != nullptr && !(state.rule() == *rule)) {
      throw FormatError("prefix file rule '" + state.rule().to_string() +
                        "' differs from requested '" + rule->to_string() + "'");
    }
    return state;
  }
  if (rule == nullptr) throw FormatError("a b-file prefix needs an explicit rule");
  return SequenceState(*rule, parse_bfile(text));
}

}  // namespace slid
