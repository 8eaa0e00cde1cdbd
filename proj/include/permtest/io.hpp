#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "permtest/equations.hpp"
#include "permtest/permutation.hpp"
#include "permtest/testers.hpp"
#include "permtest/transfer.hpp"

namespace permtest::io {

using Json = nlohmann::json;

/// {"n": int, "perms": [[images...], ...]} with 1-indexed images. Unknown keys are rejected.
PermTuple tuple_from_json(const Json& j);
Json tuple_to_json(const PermTuple& t);
PermTuple load_tuple(const std::string& path);
void save_tuple(const std::string& path, const PermTuple& t);

/// One word per line in the term syntax; blank lines and '#' comments are skipped.
WordSet parse_word_list(const std::string& text, const std::vector<std::string>& letter_names);
WordSet load_word_list(const std::string& path, const std::vector<std::string>& letter_names);

/// Transcript as [[u, "label", v], ...].
Json transcript_to_json(const PartialSGraph& h, const std::vector<std::string>& letter_names);

/// {"tester", "params", "verdict", "queries", "seed", "rng", "transcript"}.
Json verdict_report(const std::string& tester, const Json& params, const Verdict& v,
                    const std::vector<std::string>& letter_names);

/// {"source_letters": [...], "target_letters": [...], "images": {"X": "a b", ...}}.
PresentationMap map_from_json(const Json& j);
Json map_to_json(const PresentationMap& map);
PresentationMap load_map(const std::string& path);

/// {"corrections": {"c": [{"v": "c^-1", "r": "c b^-1 a^-1", "eps": -1}], ...}} over the source letters.
CorrectionData correction_from_json(const Json& j, const std::vector<std::string>& source_letters);
Json correction_to_json(const CorrectionData& data, const std::vector<std::string>& source_letters);
CorrectionData load_correction(const std::string& path, const std::vector<std::string>& source_letters);

/// Reads a whole file; throws ValidationError if it cannot be opened.
std::string read_file(const std::string& path);
Json load_json(const std::string& path);

}  // namespace permtest::io
