#ifndef VLCODES_ANALYSIS_HPP
#define VLCODES_ANALYSIS_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vlcodes/dfa.hpp"
#include "vlcodes/nfa.hpp"

namespace vlc {

/// Exact rational, reduced, positive denominator.
using Rational = mpq_class;

std::string fraction_string(const Rational& r);
std::string decimal_string(const Rational& r, std::size_t digits = 20);

/// Sardinas-Patterson run: the quotient-set sequence U_0, U_1, ... kept as
/// canonical minimal DFAs, plus the reconstructed ambiguity when the input is
/// not a code.
struct SpSequence {
  std::vector<Dfa> items;
  bool is_code = false;
  std::optional<std::size_t> failure_index;  // first n >= 1 with eps in U_n
  std::optional<Word> ambiguous_word;
  // two distinct factorizations of ambiguous_word over X
  std::optional<std::pair<std::vector<Word>, std::vector<Word>>> factorizations;
};

/// Decides the code property. Requires a nonempty language without the empty
/// word (a set containing the empty word is never treated as a code).
SpSequence sardinas_patterson(const Nfa& X);

struct MeasureResult {
  bool diverges = false;
  Rational value = 0;
};

/// Uniform Bernoulli measure sum_{w in X} |A|^{-|w|}, solved exactly on the
/// trim minimal DFA. Returns the divergence flag when the series has no
/// finite value (detected by a closed complete subautomaton) or the linear
/// system is inconsistent with partial sums.
MeasureResult measure(const Nfa& X);

struct CompletenessResult {
  bool complete = false;
  std::optional<Word> non_factor;  // BFS-shortest word outside F(X*)
};

/// X is complete iff every word is a factor of some word of X*.
CompletenessResult is_complete(const Nfa& X);

struct CodeShape {
  bool is_prefix = false;
  bool is_suffix = false;
  bool is_bifix = false;
  bool is_uniform = false;
};

/// Prefix/suffix/bifix/uniform classification; throws if X contains the
/// empty word.
CodeShape classify(const Nfa& X);

}  // namespace vlc

#endif  // VLCODES_ANALYSIS_HPP
