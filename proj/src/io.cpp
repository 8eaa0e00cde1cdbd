#include "permtest/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "permtest/dsl.hpp"
#include "permtest/errors.hpp"

namespace permtest::io {

namespace {

void require_keys(const Json& j, const std::set<std::string>& required, const std::set<std::string>& optional,
                  const std::string& what) {
  if (!j.is_object()) throw ValidationError(what + " must be a JSON object");
  for (const auto& key : required) {
    if (!j.contains(key)) throw ValidationError(what + " is missing the key '" + key + "'");
  }
  for (const auto& [key, value] : j.items()) {
    if (required.count(key) == 0 && optional.count(key) == 0) {
      throw ValidationError(what + " has an unknown key '" + key + "'");
    }
  }
}

std::vector<std::string> string_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ValidationError(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const Json& item : j) {
    if (!item.is_string()) throw ValidationError(what + " must be an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

PermTuple tuple_from_json(const Json& j) {
  require_keys(j, {"n", "perms"}, {}, "tuple");
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 0) {
    throw ValidationError("tuple field 'n' must be a non-negative integer");
  }
  const auto n = static_cast<std::uint32_t>(j["n"].get<long long>());
  if (!j["perms"].is_array()) throw ValidationError("tuple field 'perms' must be an array");
  std::vector<Permutation> perms;
  std::size_t index = 0;
  for (const Json& p : j["perms"]) {
    ++index;
    if (!p.is_array() || p.size() != n) {
      throw ValidationError("permutation " + std::to_string(index) + " must list exactly n = " + std::to_string(n) +
                            " images");
    }
    std::vector<Point> images;
    for (const Json& v : p) {
      if (!v.is_number_integer()) throw ValidationError("permutation " + std::to_string(index) + " has a non-integer image");
      long long value = v.get<long long>();
      if (value < 1 || value > static_cast<long long>(n)) {
        throw ValidationError("permutation " + std::to_string(index) + " has image " + std::to_string(value) +
                              " outside [1, " + std::to_string(n) + "]");
      }
      images.push_back(static_cast<Point>(value));
    }
    try {
      perms.push_back(Permutation::from_images(std::move(images)));
    } catch (const ValidationError& e) {
      throw ValidationError("permutation " + std::to_string(index) + ": " + e.what());
    }
  }
  return PermTuple(std::move(perms), n);
}

Json tuple_to_json(const PermTuple& t) {
  Json perms = Json::array();
  for (const Permutation& p : t.perms()) perms.push_back(p.images());
  return Json{{"n", t.n()}, {"perms", perms}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json load_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what(), 0, 0);
  }
}

PermTuple load_tuple(const std::string& path) { return tuple_from_json(load_json(path)); }

void save_tuple(const std::string& path, const PermTuple& t) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << tuple_to_json(t).dump() << "\n";
}

WordSet parse_word_list(const std::string& text, const std::vector<std::string>& letter_names) {
  WordSet out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.insert(parse_word(line, letter_names));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no, e.column());
    }
  }
  return out;
}

WordSet load_word_list(const std::string& path, const std::vector<std::string>& letter_names) {
  return parse_word_list(read_file(path), letter_names);
}

Json transcript_to_json(const PartialSGraph& h, const std::vector<std::string>& letter_names) {
  Json edges = Json::array();
  for (const LabelledEdge& e : h.edges()) {
    const std::string& label =
        e.label <= letter_names.size() ? letter_names[e.label - 1] : std::to_string(e.label);
    edges.push_back(Json::array({e.source, label, e.target}));
  }
  return edges;
}

Json verdict_report(const std::string& tester, const Json& params, const Verdict& v,
                    const std::vector<std::string>& letter_names) {
  return Json{{"tester", tester},
              {"params", params},
              {"verdict", v.accepted},
              {"queries", v.queries_used},
              {"seed", v.seed},
              {"rng", v.rng},
              {"transcript", transcript_to_json(v.transcript, letter_names)}};
}

PresentationMap map_from_json(const Json& j) {
  require_keys(j, {"source_letters", "target_letters", "images"}, {}, "presentation map");
  std::vector<std::string> source = string_list(j["source_letters"], "'source_letters'");
  std::vector<std::string> target = string_list(j["target_letters"], "'target_letters'");
  const Json& images = j["images"];
  if (!images.is_object()) throw ValidationError("'images' must map source letters to words");
  for (const auto& [key, value] : images.items()) {
    if (std::find(source.begin(), source.end(), key) == source.end()) {
      throw ValidationError("'images' names '" + key + "', which is not a source letter");
    }
  }
  std::vector<Word> words;
  for (const std::string& letter : source) {
    if (!images.contains(letter)) throw ValidationError("no image given for source letter '" + letter + "'");
    if (!images[letter].is_string()) throw ValidationError("image of '" + letter + "' must be a string");
    words.push_back(parse_word(images[letter].get<std::string>(), target));
  }
  return PresentationMap(std::move(source), std::move(target), std::move(words));
}

Json map_to_json(const PresentationMap& map) {
  Json images = Json::object();
  for (std::size_t i = 0; i < map.source_letters().size(); ++i) {
    images[map.source_letters()[i]] = render_word(map.images()[i], map.target_letters());
  }
  return Json{{"source_letters", map.source_letters()}, {"target_letters", map.target_letters()}, {"images", images}};
}

PresentationMap load_map(const std::string& path) { return map_from_json(load_json(path)); }

CorrectionData correction_from_json(const Json& j, const std::vector<std::string>& source_letters) {
  require_keys(j, {"corrections"}, {}, "correction data");
  const Json& table = j["corrections"];
  if (!table.is_object()) throw ValidationError("'corrections' must be an object keyed by source letters");
  CorrectionData data;
  data.factors.resize(source_letters.size());
  for (const auto& [key, list] : table.items()) {
    auto it = std::find(source_letters.begin(), source_letters.end(), key);
    if (it == source_letters.end()) throw ValidationError("correction for unknown letter '" + key + "'");
    if (!list.is_array()) throw ValidationError("corrections for '" + key + "' must be an array");
    auto& factors = data.factors[static_cast<std::size_t>(it - source_letters.begin())];
    for (const Json& f : list) {
      require_keys(f, {"v", "r", "eps"}, {}, "correction factor");
      if (!f["v"].is_string() || !f["r"].is_string() || !f["eps"].is_number_integer()) {
        throw ValidationError("correction factor needs string 'v', string 'r' and integer 'eps'");
      }
      int eps = f["eps"].get<int>();
      if (eps != 1 && eps != -1) throw ValidationError("correction exponent must be 1 or -1");
      factors.push_back({parse_word(f["v"].get<std::string>(), source_letters),
                         parse_word(f["r"].get<std::string>(), source_letters), eps});
    }
  }
  return data;
}

Json correction_to_json(const CorrectionData& data, const std::vector<std::string>& source_letters) {
  Json table = Json::object();
  for (std::size_t i = 0; i < data.factors.size() && i < source_letters.size(); ++i) {
    Json list = Json::array();
    for (const CorrectionFactor& f : data.factors[i]) {
      list.push_back(Json{{"v", render_word(f.conjugator, source_letters)},
                          {"r", render_word(f.relator, source_letters)},
                          {"eps", f.exponent}});
    }
    table[source_letters[i]] = list;
  }
  return Json{{"corrections", table}};
}

CorrectionData load_correction(const std::string& path, const std::vector<std::string>& source_letters) {
  return correction_from_json(load_json(path), source_letters);
}

}  // namespace permtest::io
