#ifndef VLCODES_WORDS_HPP
#define VLCODES_WORDS_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace vlc {

/// Splits UTF-8 text into code points. Throws std::invalid_argument on
/// malformed input.
std::vector<std::string> utf8_split(std::string_view text);

/// Ordered inventory of at least two distinct single-character symbols.
class Alphabet {
public:
  explicit Alphabet(std::string_view letters);
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbol(std::uint32_t i) const { return symbols_.at(i); }
  std::optional<std::uint32_t> index_of(std::string_view symbol) const;
  std::string str() const;

  bool operator==(const Alphabet& other) const {
    return symbols_ == other.symbols_;
  }
  bool operator!=(const Alphabet& other) const { return !(*this == other); }

private:
  std::vector<std::string> symbols_;
};

/// A finite sequence of alphabet letters; the empty sequence is the empty
/// word. Immutable after construction.
class Word {
public:
  Word(Alphabet alphabet, std::vector<std::uint32_t> letters);

  static Word epsilon(const Alphabet& a);
  /// Parses a UTF-8 string of symbols; "" and "eps" both denote the empty
  /// word.
  static Word parse(const Alphabet& a, std::string_view text);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::uint32_t operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<std::uint32_t>& letters() const { return letters_; }
  const Alphabet& alphabet() const { return alphabet_; }

  std::string str() const;
  Word reversed() const;
  Word prefix(std::size_t n) const;
  Word suffix(std::size_t n) const;
  Word append(std::uint32_t letter) const;
  Word concat(const Word& other) const;

  bool operator==(const Word& o) const { return letters_ == o.letters_; }
  bool operator!=(const Word& o) const { return !(*this == o); }
  /// Shortlex; the tie-break order used for deterministic witnesses.
  bool operator<(const Word& o) const;

private:
  Alphabet alphabet_;
  std::vector<std::uint32_t> letters_;
};

using WordSet = std::set<Word>;

/// A monoid (anti-)automorphism given by a letter permutation; `anti`
/// composes the permutation with word reversal.
struct ThetaSpec {
  Alphabet alphabet;
  std::vector<std::uint32_t> letter_map;
  bool anti = false;

  ThetaSpec(Alphabet a, std::vector<std::uint32_t> map, bool anti_flag);

  static ThetaSpec identity(const Alphabet& a, bool anti_flag);
  /// Parses "x:y" pairs, comma separated; unmapped letters stay fixed.
  static ThetaSpec parse(const Alphabet& a, std::string_view pairs,
                         bool anti_flag);

  std::uint32_t map(std::uint32_t letter) const { return letter_map.at(letter); }
  std::uint32_t inverse_map(std::uint32_t letter) const;
  /// Smallest n >= 1 with theta^n = identity on words. For the anti case
  /// this is the permutation order when even, twice it otherwise.
  unsigned order() const;
  std::vector<std::uint32_t> moved_letters() const;
  std::string str() const;  // "a:b,b:a" form
};

std::size_t prefix_distance(const Word& a, const Word& b);
std::size_t suffix_distance(const Word& a, const Word& b);
/// |a|+|b| minus twice the length of a maximum-length common factor,
/// computed by dynamic programming over all factor pairs.
std::size_t factor_distance(const Word& a, const Word& b);
/// 0 when equal, 1 when b = theta(a) differs from a, 2 otherwise. A
/// quasi-metric: not symmetric unless theta is an involution.
std::size_t theta_distance(const Word& a, const Word& b, const ThetaSpec& t);

Word theta_apply(const Word& w, const ThetaSpec& t, unsigned power = 1);

/// True iff w has no nonempty border shorter than itself (failure-function
/// check). Throws on the empty word.
bool is_overlapping_free(const Word& w);

struct MetricSpec {
  enum class Kind { prefix, suffix, factor, theta };

  Kind kind = Kind::prefix;
  unsigned k = 1;  // >= 1; fixed to 1 for theta
  std::optional<ThetaSpec> theta;

  static MetricSpec prefix(unsigned k);
  static MetricSpec suffix(unsigned k);
  static MetricSpec factor(unsigned k);
  static MetricSpec theta_metric(ThetaSpec t);

  std::string name() const;
  std::size_t distance(const Word& a, const Word& b) const;
};

/// The exact ball {w' : d(w, w') <= k}. Finite for the prefix, suffix and
/// factor metrics; for theta only k <= 1 is accepted.
WordSet neighborhood(const Word& w, const MetricSpec& metric, unsigned k);

}  // namespace vlc

#endif  // VLCODES_WORDS_HPP
