#ifndef VLCODES_TRANSDUCER_HPP
#define VLCODES_TRANSDUCER_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "vlcodes/nfa.hpp"

namespace vlc {

/// Two-tape automaton over A* x A*. Arc labels carry at most one symbol per
/// tape; (eps, eps) arcs are eliminated on construction.
struct Transducer {
  Alphabet alphabet;
  std::uint32_t state_count = 0;
  std::vector<std::uint32_t> initial, accepting;

  struct Arc {
    std::uint32_t from;
    std::uint32_t in, out;  // kEpsilon for the empty label
    std::uint32_t to;
  };
  std::vector<Arc> arcs;

  // True when every path that uses a non-copy arc relates a pair of distinct
  // words. Holds for the directly built channel relations; composition and
  // union results drop the flag.
  bool prefix_synchronized = false;

  explicit Transducer(Alphabet a) : alphabet(std::move(a)) {}

  std::uint32_t add_state();
  void add_arc(std::uint32_t from, std::uint32_t in, std::uint32_t out,
               std::uint32_t to);
};

struct RelationSpec {
  enum class Kind {
    prefix_k,          // d_P <= k
    prefix_k_strict,   // 1 <= d_P <= k
    suffix_1,          // d_S <= 1
    suffix_1_strict,   // d_S = 1
    factor_k,          // d_F <= k, built as the k-fold power of (P1 u S1)
    theta,             // w' = w or w' = theta(w)
    theta_strict,      // w' = theta(w) != w
  };
  Kind kind;
  unsigned k = 1;
  std::optional<ThetaSpec> theta;
};

/// Builds the transducer realizing the requested channel relation. Throws for
/// k = 0 on the k-indexed kinds and for anti-automorphisms, which are not
/// rational relations.
Transducer build_relation(const Alphabet& a, const RelationSpec& spec);

Transducer transducer_inverse(const Transducer& t);
Transducer transducer_union(const Transducer& a, const Transducer& b);
/// compose(a, b) relates (x, z) iff some y has (x, y) in a and (y, z) in b.
Transducer transducer_compose(const Transducer& a, const Transducer& b);

/// tau(L): restrict the input tape to L, project the output tape.
Nfa image(const Transducer& t, const Nfa& language);

struct RelationCheck {
  bool empty = true;
  std::optional<std::pair<Word, Word>> witness;  // shortest by total length, then lex
};
/// Decides emptiness of T n (Lin x Lout) by triple-product search. With
/// exclude_diagonal the pair must also differ; this needs a
/// prefix-synchronized transducer (first-divergence tracking).
RelationCheck restricted_emptiness(const Transducer& t, const Nfa& input_language,
                                   const Nfa& output_language,
                                   bool exclude_diagonal = false);

/// Pair acceptance: does t relate (w, w')? Intersects with {w} x {w'}.
bool relates(const Transducer& t, const Word& w, const Word& w2);

}  // namespace vlc

#endif  // VLCODES_TRANSDUCER_HPP
