#include "vlcodes/codespec.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "vlcodes/regex.hpp"

namespace vlc {

Nfa CodeSpecFile::language() const {
  if (is_regex) return compile_regex(alphabet, regex);
  return words_language(alphabet, words);
}

namespace {

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

CodeSpecFile parse_code_spec(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  auto next_content_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++line_no;
      out = strip(line);
      if (!out.empty() && out[0] != '#') return true;
    }
    return false;
  };

  std::string header;
  if (!next_content_line(header) || header.rfind("alphabet:", 0) != 0)
    throw SpecParseError("expected 'alphabet: <symbols>'", line_no ? line_no : 1, 1);
  std::string letters = strip(header.substr(9));
  Alphabet alphabet = [&] {
    try {
      return Alphabet(letters);
    } catch (const std::invalid_argument& e) {
      throw SpecParseError(e.what(), line_no, 10);
    }
  }();

  std::string kind_line;
  if (!next_content_line(kind_line) || kind_line.rfind("kind:", 0) != 0)
    throw SpecParseError("expected 'kind: words' or 'kind: regex'", line_no + 1, 1);
  std::string kind = strip(kind_line.substr(5));
  if (kind != "words" && kind != "regex")
    throw SpecParseError("kind must be 'words' or 'regex', got '" + kind + "'",
                         line_no, 7);

  CodeSpecFile spec{alphabet, kind == "regex", {}, ""};

  if (spec.is_regex) {
    std::string body;
    if (!next_content_line(body))
      throw SpecParseError("missing regex body", line_no + 1, 1);
    try {
      compile_regex(alphabet, body);  // validate now for a located error
    } catch (const RegexError& e) {
      throw SpecParseError(e.what(), line_no, e.position + 1);
    }
    spec.regex = body;
    std::string extra;
    if (next_content_line(extra))
      throw SpecParseError("unexpected content after the regex", line_no, 1);
    return spec;
  }

  std::set<Word> seen;
  std::string body;
  while (next_content_line(body)) {
    Word w = [&] {
      try {
        return Word::parse(alphabet, body);
      } catch (const std::invalid_argument& e) {
        throw SpecParseError(e.what(), line_no, 1);
      }
    }();
    if (w.empty())
      throw SpecParseError("the empty word is not allowed in a code list", line_no, 1);
    if (!seen.insert(w).second)
      throw SpecParseError("duplicate word '" + body + "'", line_no, 1);
    spec.words.push_back(std::move(w));
  }
  if (spec.words.empty())
    throw SpecParseError("word list is empty", line_no + 1, 1);
  return spec;
}

CodeSpecFile parse_code_spec_text(const std::string& text) {
  std::istringstream in(text);
  return parse_code_spec(in);
}

CodeSpecFile load_code_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  return parse_code_spec(in);
}

}  // namespace vlc
