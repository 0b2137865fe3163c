#ifndef VLCODES_DECIDERS_HPP
#define VLCODES_DECIDERS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vlcodes/analysis.hpp"
#include "vlcodes/nfa.hpp"
#include "vlcodes/transducer.hpp"

namespace vlc {

enum class Condition { c1, c2, c3, c4 };
enum class Status { holds, fails, unknown_open_problem };

const char* condition_name(Condition c);
const char* status_name(Status s);

struct ConditionReport {
  Condition condition;
  MetricSpec metric;
  Status status = Status::unknown_open_problem;
  std::optional<Word> witness_word;
  std::optional<std::pair<Word, Word>> witness_pair;
  std::string notes;
};

/// Thrown when a decision procedure is applied to a set that is not a code.
struct NotACodeError : std::invalid_argument {
  explicit NotACodeError(const std::string& what) : std::invalid_argument(what) {}
};

/// theta(L): a letter permutation image, reversed first for the anti case.
Nfa theta_language_image(const Nfa& language, const ThetaSpec& t);
Word theta_apply_inverse(const Word& w, const ThetaSpec& t);

struct FixedPointResult {
  bool all_fixed = true;
  std::optional<Word> witness;  // shortlex-least non-fixed member
};

/// Decides whether every word of L is fixed by the anti-automorphism theta.
/// The non-fixed words form a context-free language; its product with the
/// DFA of L is searched for a shortest witness.
FixedPointResult all_fixed_points(const Nfa& language, const ThetaSpec& t);

/// Error detection: X is independent for the strict channel relation.
ConditionReport decide_c1(const Nfa& X, const MetricSpec& m);
/// Error correction: distinct codewords have disjoint channel balls.
ConditionReport decide_c2(const Nfa& X, const MetricSpec& m);
/// Maximality of X inside the family of independent codes.
ConditionReport decide_c3(const Nfa& X, const MetricSpec& m);
/// The reflexive channel image of X is again a code.
ConditionReport decide_c4(const Nfa& X, const MetricSpec& m);

/// All four conditions, never aborting early.
std::vector<ConditionReport> decide_all(const Nfa& X, const MetricSpec& m);

}  // namespace vlc

#endif  // VLCODES_DECIDERS_HPP
