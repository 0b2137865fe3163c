#ifndef VLCODES_DFA_HPP
#define VLCODES_DFA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "vlcodes/nfa.hpp"

namespace vlc {

/// Complete deterministic automaton; dead states are explicit. The result of
/// minimal_dfa() is canonically numbered, so structural equality is language
/// equality.
struct Dfa {
  Alphabet alphabet;
  std::uint32_t state_count = 0;
  std::uint32_t initial = 0;
  std::vector<bool> accepting;
  std::vector<std::uint32_t> next;  // state_count * |alphabet|

  explicit Dfa(Alphabet a) : alphabet(std::move(a)) {}

  std::uint32_t step(std::uint32_t q, std::uint32_t letter) const {
    return next[static_cast<std::size_t>(q) * alphabet.size() + letter];
  }

  bool operator==(const Dfa& o) const {
    return alphabet == o.alphabet && state_count == o.state_count &&
           initial == o.initial && accepting == o.accepting && next == o.next;
  }
};

/// Subset construction with epsilon closures; the result is complete.
Dfa determinize(const Nfa& a);
/// Canonical minimal complete DFA (Moore refinement + BFS renumbering).
Dfa minimal_dfa(const Nfa& a);
Dfa minimize(const Dfa& d);
Nfa dfa_to_nfa(const Dfa& d);
/// Printable digest usable as a hash key for language equality.
std::string canonical_key(const Dfa& d);

}  // namespace vlc

#endif  // VLCODES_DFA_HPP
