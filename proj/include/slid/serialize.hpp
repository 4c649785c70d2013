#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "slid/bigint.hpp"
#include "slid/sequence.hpp"

namespace slid {

/// {"rule": "S=...", "diffs": [...], "pairs": [[i, j], ...], "terms": ["1", "2", ...]}
/// Terms are decimal strings so no reader truncates them.
std::string to_json(const SequenceState& state);
SequenceState sequence_from_json(std::string_view text);

/// OEIS b-file body: one "n a_n" line per term, n from 1, '\n' terminated, no
/// trailing whitespace.
std::string to_bfile(std::span<const BigInt> terms);
inline std::string to_bfile(const SequenceState& state) { return to_bfile(state.terms()); }

/// Reads "n value" lines. Blank lines and lines starting with '#' are skipped;
/// indices must run 1, 2, 3, ... Throws FormatError with the line number.
std::vector<BigInt> parse_bfile(std::string_view text);

/// Loads a prefix from either format: JSON when the first non-space character
/// is '{', b-file otherwise. A b-file carries no rule, so `rule` supplies it;
/// for JSON the embedded rule must match `rule` when one is given.
SequenceState load_prefix(std::string_view text, const AdjacencyRule* rule);

}  // namespace slid
