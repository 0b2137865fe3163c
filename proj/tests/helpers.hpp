#ifndef VLCODES_TESTS_HELPERS_HPP
#define VLCODES_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "vlcodes/nfa.hpp"
#include "vlcodes/words.hpp"

namespace vlctest {

inline vlc::Alphabet binary() { return vlc::Alphabet("ab"); }

inline vlc::Word W(const vlc::Alphabet& a, const std::string& text) {
  return vlc::Word::parse(a, text);
}

// All words over `a` of length <= max_len, shortlex order.
inline std::vector<vlc::Word> all_words(const vlc::Alphabet& a, std::size_t max_len) {
  std::vector<vlc::Word> out{vlc::Word::epsilon(a)};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (std::uint32_t l = 0; l < a.size(); ++l) out.push_back(out[i].append(l));
    level_begin = level_end;
  }
  return out;
}

// Independent ball oracle: enumerate and filter by the distance function.
inline vlc::WordSet ball_oracle(const vlc::Word& w, const vlc::MetricSpec& m,
                                unsigned k) {
  vlc::WordSet out;
  for (const auto& c : all_words(w.alphabet(), w.size() + k))
    if (m.distance(w, c) <= k) out.insert(c);
  return out;
}

inline vlc::WordSet iterate_ball(const vlc::Word& w, const vlc::MetricSpec& one,
                                 unsigned times) {
  vlc::WordSet cur{w};
  for (unsigned i = 0; i < times; ++i) {
    vlc::WordSet next;
    for (const auto& x : cur)
      for (const auto& y : vlc::neighborhood(x, one, 1)) next.insert(y);
    cur = std::move(next);
  }
  return cur;
}

inline std::vector<std::string> strs(const vlc::WordSet& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.str());
  return out;
}

}  // namespace vlctest

#endif  // VLCODES_TESTS_HELPERS_HPP
