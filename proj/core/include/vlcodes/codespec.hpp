#ifndef VLCODES_CODESPEC_HPP
#define VLCODES_CODESPEC_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "vlcodes/nfa.hpp"

namespace vlc {

struct SpecParseError : std::runtime_error {
  std::size_t line, column;
  SpecParseError(const std::string& message, std::size_t line_no, std::size_t col)
      : std::runtime_error(message + " (line " + std::to_string(line_no) +
                           ", column " + std::to_string(col) + ")"),
        line(line_no),
        column(col) {}
};

/// Textual code description:
///   line 1: `alphabet: ab`
///   line 2: `kind: words` or `kind: regex`
///   then one word per line, or a single regex.
struct CodeSpecFile {
  Alphabet alphabet;
  bool is_regex = false;
  std::vector<Word> words;   // kind: words
  std::string regex;         // kind: regex

  Nfa language() const;
};

CodeSpecFile parse_code_spec(std::istream& in);
CodeSpecFile parse_code_spec_text(const std::string& text);
CodeSpecFile load_code_spec(const std::string& path);

}  // namespace vlc

#endif  // VLCODES_CODESPEC_HPP
