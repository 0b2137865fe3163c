#ifndef VLCODES_NFA_HPP
#define VLCODES_NFA_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "vlcodes/words.hpp"

namespace vlc {

inline constexpr std::uint32_t kEpsilon = 0xFFFFFFFFu;

/// Nondeterministic finite automaton with epsilon moves. Immutable by
/// convention: operations return fresh automata.
struct Nfa {
  Alphabet alphabet;
  std::uint32_t state_count = 0;
  std::vector<std::uint32_t> initial;
  std::vector<std::uint32_t> accepting;

  struct Arc {
    std::uint32_t from;
    std::uint32_t symbol;  // kEpsilon for an epsilon move
    std::uint32_t to;
  };
  std::vector<Arc> arcs;

  explicit Nfa(Alphabet a) : alphabet(std::move(a)) {}

  std::uint32_t add_state();
  void add_arc(std::uint32_t from, std::uint32_t symbol, std::uint32_t to);
  void mark_initial(std::uint32_t q);
  void mark_accepting(std::uint32_t q);
  void check_valid() const;
};

Nfa empty_language(const Alphabet& a);
Nfa epsilon_language(const Alphabet& a);
Nfa universal_language(const Alphabet& a);
Nfa word_language(const Word& w);
Nfa words_language(const Alphabet& a, const std::vector<Word>& words);

Nfa nfa_union(const Nfa& a, const Nfa& b);
Nfa nfa_concat(const Nfa& a, const Nfa& b);
Nfa nfa_star(const Nfa& a);
Nfa nfa_reverse(const Nfa& a);
/// Keeps only states both reachable and co-reachable.
Nfa nfa_trim(const Nfa& a);

Nfa complement(const Nfa& a);
Nfa intersect(const Nfa& a, const Nfa& b);
Nfa difference(const Nfa& a, const Nfa& b);

/// F(L): trim, then make every state initial and accepting.
Nfa factor_closure(const Nfa& a);
Nfa prefix_closure(const Nfa& a);
Nfa suffix_closure(const Nfa& a);

/// {v : exists u in `by` with uv in `of`}, by product reachability.
Nfa left_quotient(const Nfa& by, const Nfa& of);
/// {v : v·u in `of`} for a fixed word u.
Nfa right_quotient_word(const Nfa& of, const Word& u);
/// Letterwise image under a permutation of the alphabet.
Nfa map_letters(const Nfa& a, const std::vector<std::uint32_t>& letter_map);

bool contains(const Nfa& a, const Word& w);
bool is_empty(const Nfa& a);
/// Shortest accepted word, ties broken lexicographically by alphabet order.
std::optional<Word> shortest_word(const Nfa& a);

struct Verdict {
  bool value = false;
  std::optional<Word> witness;
};
/// witness = shortest member when the language is nonempty.
Verdict check_empty(const Nfa& a);
/// witness = shortest non-member when the language is not universal.
Verdict check_universal(const Nfa& a);
/// Compares canonical minimal DFAs.
bool equivalent(const Nfa& a, const Nfa& b);
bool is_subset(const Nfa& a, const Nfa& b);

bool language_finite(const Nfa& a);
/// Shortlex-sorted members up to the given length.
std::vector<Word> enumerate_words(const Nfa& a, std::size_t max_len);
/// All members of a finite language; throws if infinite.
std::vector<Word> enumerate_finite(const Nfa& a);
/// First `count` members in shortlex order, scanning lengths up to max_len.
std::vector<Word> first_words(const Nfa& a, std::size_t count, std::size_t max_len);

}  // namespace vlc

#endif  // VLCODES_NFA_HPP
