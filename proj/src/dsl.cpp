#include "permtest/dsl.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "permtest/errors.hpp"

namespace permtest {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '=') {
      out.push_back({"=", i + 1});
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '=') ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

Word parse_term(const std::vector<Token>& tokens, const std::map<std::string, std::uint32_t>& index,
                std::size_t line_no, std::size_t term_column) {
  if (tokens.empty()) throw ParseError("empty term", line_no, term_column);
  if (tokens.size() == 1 && tokens[0].text == "1") return Word();
  std::vector<Letter> letters;
  for (const Token& tok : tokens) {
    std::string name = tok.text;
    int sign = 1;
    if (auto caret = name.find('^'); caret != std::string::npos) {
      if (name.substr(caret) != "^-1") {
        throw ParseError("only the exponent ^-1 is allowed in '" + tok.text + "'", line_no, tok.column + caret);
      }
      name = name.substr(0, caret);
      sign = -1;
    }
    if (name == "1") throw ParseError("the identity 1 must stand alone as a term", line_no, tok.column);
    auto it = index.find(name);
    if (it == index.end()) throw ParseError("unknown letter '" + name + "'", line_no, tok.column);
    letters.push_back({it->second, sign});
  }
  return Word::from_letters(letters);
}

std::map<std::string, std::uint32_t> name_index(const std::vector<std::string>& names) {
  std::map<std::string, std::uint32_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = static_cast<std::uint32_t>(i + 1);
  return index;
}

}  // namespace

EquationSystem parse_system(std::string_view text) {
  std::vector<std::string> names;
  std::map<std::string, std::uint32_t> index;
  std::vector<Equation> equations;
  bool header_seen = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }

    if (!header_seen) {
      if (tokens[0].text != "letters") {
        throw ParseError("expected 'letters' declaration", line_no, tokens[0].column);
      }
      if (tokens.size() < 2) throw ParseError("'letters' needs at least one name", line_no, tokens[0].column);
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const Token& tok = tokens[i];
        if (!is_identifier(tok.text)) throw ParseError("invalid letter name '" + tok.text + "'", line_no, tok.column);
        if (index.count(tok.text) != 0) {
          throw ParseError("duplicate letter name '" + tok.text + "'", line_no, tok.column);
        }
        names.push_back(tok.text);
        index[tok.text] = static_cast<std::uint32_t>(names.size());
      }
      header_seen = true;
    } else {
      std::size_t eq_pos = tokens.size();
      for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i].text != "=") continue;
        if (eq_pos != tokens.size()) throw ParseError("more than one '='", line_no, tokens[i].column);
        eq_pos = i;
      }
      if (eq_pos == tokens.size()) throw ParseError("expected '<term> = <term>'", line_no, tokens[0].column);
      std::vector<Token> lhs(tokens.begin(), tokens.begin() + static_cast<std::ptrdiff_t>(eq_pos));
      std::vector<Token> rhs(tokens.begin() + static_cast<std::ptrdiff_t>(eq_pos) + 1, tokens.end());
      std::size_t rhs_column = rhs.empty() ? tokens[eq_pos].column + 1 : rhs[0].column;
      equations.push_back({parse_term(lhs, index, line_no, tokens[0].column),
                           parse_term(rhs, index, line_no, rhs_column)});
    }
    if (end == text.size()) break;
  }
  if (!header_seen) throw ParseError("missing 'letters' declaration", line_no, 0);
  return EquationSystem(std::move(names), std::move(equations));
}

std::string render_word(const Word& word, const std::vector<std::string>& letter_names) {
  if (word.empty()) return "1";
  std::string out;
  for (const Letter& l : word.letters()) {
    if (l.generator == 0 || l.generator > letter_names.size()) {
      throw ValidationError("word uses generator " + std::to_string(l.generator) + " outside the alphabet");
    }
    if (!out.empty()) out += ' ';
    out += letter_names[l.generator - 1];
    if (!l.positive()) out += "^-1";
  }
  return out;
}

std::string render_system(const EquationSystem& system) {
  std::string out = "letters";
  for (const std::string& name : system.letter_names()) out += " " + name;
  out += "\n";
  for (const Equation& eq : system.equations()) {
    out += render_word(eq.lhs, system.letter_names()) + " = " + render_word(eq.rhs, system.letter_names()) + "\n";
  }
  return out;
}

Word parse_word(std::string_view text, const std::vector<std::string>& letter_names) {
  std::vector<Token> tokens = tokenize(text);
  for (const Token& tok : tokens) {
    if (tok.text == "=") throw ParseError("unexpected '=' in a word", 1, tok.column);
  }
  return parse_term(tokens, name_index(letter_names), 1, 1);
}

EquationSystem load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open system file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_system(buffer.str());
}

}  // namespace permtest
