#ifndef VLCODES_REGEX_HPP
#define VLCODES_REGEX_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "vlcodes/nfa.hpp"

namespace vlc {

struct RegexError : std::runtime_error {
  std::size_t position;  // code-point index into the pattern
  RegexError(const std::string& message, std::size_t pos)
      : std::runtime_error(message + " at position " + std::to_string(pos)),
        position(pos) {}
};

/// Compiles a regular expression into an automaton. Literals are single
/// alphabet symbols; operators are `|`, juxtaposition, `*` and parentheses;
/// `\` escapes an operator symbol. The empty pattern denotes the empty word.
Nfa compile_regex(const Alphabet& a, std::string_view pattern);

}  // namespace vlc

#endif  // VLCODES_REGEX_HPP
