#include "vlcodes/regex.hpp"

namespace vlc {

namespace {

// Recursive-descent parser over code points producing Thompson automata.
class RegexParser {
 public:
  RegexParser(const Alphabet& a, std::string_view pattern)
      : alphabet_(a), tokens_(utf8_split(pattern)) {}

  Nfa parse() {
    Nfa n = alternation();
    if (pos_ < tokens_.size())
      throw RegexError("unexpected '" + tokens_[pos_] + "'", pos_);
    return n;
  }

 private:
  const std::string* peek() const {
    return pos_ < tokens_.size() ? &tokens_[pos_] : nullptr;
  }

  Nfa alternation() {
    Nfa n = sequence();
    while (peek() && *peek() == "|") {
      ++pos_;
      n = nfa_union(n, sequence());
    }
    return n;
  }

  Nfa sequence() {
    Nfa n = epsilon_language(alphabet_);
    while (true) {
      const std::string* t = peek();
      if (!t || *t == "|" || *t == ")") break;
      n = nfa_concat(n, starred());
    }
    return n;
  }

  Nfa starred() {
    Nfa n = atom();
    while (peek() && *peek() == "*") {
      ++pos_;
      n = nfa_star(n);
    }
    return n;
  }

  Nfa atom() {
    const std::string* t = peek();
    if (!t) throw RegexError("unexpected end of pattern", pos_);
    if (*t == "(") {
      ++pos_;
      Nfa n = alternation();
      if (!peek() || *peek() != ")")
        throw RegexError("missing ')'", pos_);
      ++pos_;
      return n;
    }
    if (*t == "*") throw RegexError("'*' needs an operand", pos_);
    if (*t == ")") throw RegexError("unmatched ')'", pos_);
    std::string literal = *t;
    if (*t == "\\") {
      ++pos_;
      if (!peek()) throw RegexError("dangling escape", pos_);
      literal = *peek();
    }
    auto idx = alphabet_.index_of(literal);
    if (!idx)
      throw RegexError("symbol '" + literal + "' not in alphabet " + alphabet_.str(),
                       pos_);
    ++pos_;
    Nfa n(alphabet_);
    auto q0 = n.add_state();
    auto q1 = n.add_state();
    n.mark_initial(q0);
    n.mark_accepting(q1);
    n.add_arc(q0, *idx, q1);
    return n;
  }

  const Alphabet& alphabet_;
  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Nfa compile_regex(const Alphabet& a, std::string_view pattern) {
  return RegexParser(a, pattern).parse();
}

}  // namespace vlc
