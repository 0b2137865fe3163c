#ifndef VLCODES_COMPLETION_HPP
#define VLCODES_COMPLETION_HPP

#include <optional>
#include <string>
#include <utility>

#include "vlcodes/analysis.hpp"
#include "vlcodes/deciders.hpp"
#include "vlcodes/nfa.hpp"

namespace vlc {

enum class CompletionFlavor { generic_er, prefix_pk, factor_fk, theta_anti, theta_auto };

const char* flavor_name(CompletionFlavor f);

/// Embedding of a non-complete independent code X into a complete one
/// Z = X u Y, where Y = z (U z)* is anchored on an overlapping-free word
/// z outside F(X*) and U = A* \ (X* u A* z A*).
struct CompletionRecipe {
  Word z0;  // non-factor seed
  Word z;   // the anchor actually used (after metric-specific padding)
  Nfa U;
  Nfa Y;
  Nfa Z;
  CompletionFlavor flavor;
};

/// Thrown when the automorphism flavor exhausts its seed retries without a
/// verified independent completion.
struct CompletionInconclusive : std::runtime_error {
  explicit CompletionInconclusive(const std::string& what)
      : std::runtime_error(what) {}
};

/// BFS-shortest word outside F(X*), padded with the least letter up to
/// min_len; with avoid_unary the result never is a power of a single letter.
/// Throws when X is complete.
Word find_non_factor(const Nfa& X, std::size_t min_len, bool avoid_unary);

/// Builds the metric-specific completion recipe. Preconditions: X is a
/// non-complete code, independent for the metric whenever that is decidable.
CompletionRecipe build_completion(const Nfa& X, const MetricSpec& m);

struct VerificationReport {
  bool ok = false;
  std::string failed_property;  // "code", "complete" or "independent"; empty when ok
  std::optional<Word> witness_word;
  std::optional<std::pair<Word, Word>> witness_pair;
  bool measure_converged = false;
  Rational measure_value = 0;
  std::string notes;
};

/// Checks, in order: Z is a code, Z is complete, Z is independent. The
/// independence check is exact for the prefix, suffix and theta metrics and
/// enumerates words up to sample_bound for the factor metric.
VerificationReport verify_completion(const CompletionRecipe& r, const MetricSpec& m,
                                     std::size_t sample_bound);

}  // namespace vlc

#endif  // VLCODES_COMPLETION_HPP
