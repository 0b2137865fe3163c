#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "vlcodes/dfa.hpp"
#include "vlcodes/regex.hpp"

using namespace vlc;
using vlctest::all_words;
using vlctest::W;

namespace {

Nfa words_nfa(const Alphabet& a, std::initializer_list<const char*> ws) {
  std::vector<Word> words;
  for (const char* s : ws) words.push_back(W(a, s));
  return words_language(a, words);
}

// Random regex over a fixed seed for reproducible property tests.
std::string random_regex(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 4);
  switch (pick(rng)) {
    case 0: return rng() % 2 ? "a" : "b";
    case 1: return rng() % 2 ? "b" : "a";
    case 2: return random_regex(rng, depth - 1) + random_regex(rng, depth - 1);
    case 3: return "(" + random_regex(rng, depth - 1) + "|" +
                   random_regex(rng, depth - 1) + ")";
    default: return "(" + random_regex(rng, depth - 1) + ")*";
  }
}

}  // namespace

TEST_CASE("regex compilation") {
  Alphabet a = vlctest::binary();
  Nfa n = compile_regex(a, "a*b");
  CHECK(contains(n, W(a, "b")));
  CHECK(contains(n, W(a, "aaab")));
  CHECK(!contains(n, W(a, "ba")));
  CHECK(!contains(n, W(a, "eps")));

  Nfa list = words_nfa(a, {"a", "ba", "bb"});
  CHECK(contains(list, W(a, "ba")));
  CHECK(!contains(list, W(a, "b")));

  CHECK(is_empty(words_language(a, {})));
  CHECK(contains(compile_regex(a, ""), Word::epsilon(a)));

  CHECK_THROWS_AS(compile_regex(a, "a**b)"), RegexError);
  CHECK_THROWS_AS(compile_regex(a, "(ab"), RegexError);
  CHECK_THROWS_AS(compile_regex(a, "ac"), RegexError);
  CHECK_THROWS_AS(compile_regex(a, "*a"), RegexError);
  // escaped operator symbols become literals over a suitable alphabet
  Alphabet star_alpha(std::vector<std::string>{"a", "*"});
  CHECK(contains(compile_regex(star_alpha, "a\\*"), Word::parse(star_alpha, "a*")));
}

TEST_CASE("boolean operations") {
  Alphabet a = vlctest::binary();
  CHECK(equivalent(complement(empty_language(a)), universal_language(a)));
  CHECK(is_empty(intersect(compile_regex(a, "a*b"), compile_regex(a, "b*a"))));

  Nfa avoid = difference(universal_language(a),
                         compile_regex(a, "(a|b)*bba(a|b)*"));
  CHECK(contains(avoid, W(a, "bbab") ) == false);
  CHECK(contains(avoid, W(a, "abab")));
  CHECK(contains(avoid, W(a, "bb")));
}

TEST_CASE("closure operations") {
  Alphabet a = vlctest::binary();
  CHECK(equivalent(factor_closure(compile_regex(a, "(a*b)*")), universal_language(a)));
  CHECK(equivalent(factor_closure(compile_regex(a, "(aa)*")), compile_regex(a, "a*")));

  Nfa star = nfa_star(words_nfa(a, {"a", "ba", "bb"}));
  CHECK(contains(star, W(a, "bba")));   // (bb)(a)
  CHECK(contains(star, W(a, "aba")));   // (a)(ba)
  CHECK(!contains(star, W(a, "b")));

  Nfa rev = nfa_reverse(compile_regex(a, "a*b"));
  CHECK(contains(rev, W(a, "baa")));
  CHECK(!contains(rev, W(a, "aab")));

  Nfa pc = prefix_closure(words_nfa(a, {"ab", "ba"}));
  CHECK(equivalent(pc, words_nfa(a, {"eps", "a", "b", "ab", "ba"})));
  Nfa sc = suffix_closure(compile_regex(a, "a*b"));
  CHECK(equivalent(sc, compile_regex(a, "(a*b)|")));  // suffixes of a^n b

  CHECK_THROWS_AS(nfa_union(words_nfa(a, {"a"}), compile_regex(Alphabet("abc"), "c")),
                  std::invalid_argument);
}

TEST_CASE("left quotients") {
  Alphabet a = vlctest::binary();
  Nfa x = words_nfa(a, {"a", "ba", "bb"});
  CHECK(equivalent(left_quotient(words_nfa(a, {"a"}), x), epsilon_language(a)));
  Nfa u0 = difference(left_quotient(x, x), epsilon_language(a));
  CHECK(is_empty(u0));
  CHECK(is_empty(left_quotient(empty_language(a), x)));
}

TEST_CASE("decision procedures with witnesses") {
  Alphabet a = vlctest::binary();
  Nfa gap = difference(universal_language(a), factor_closure(compile_regex(a, "(aa)*")));
  auto empt = check_empty(gap);
  CHECK(!empt.value);
  CHECK(empt.witness->str() == "b");

  CHECK(check_universal(universal_language(a)).value);
  CHECK(contains(nfa_star(words_nfa(a, {"a", "ab", "ba"})), W(a, "aba")));
}

TEST_CASE("double complement and De Morgan on random regexes") {
  Alphabet a = vlctest::binary();
  std::mt19937 rng(20240817);
  for (int i = 0; i < 12; ++i) {
    Nfa l1 = compile_regex(a, random_regex(rng, 3));
    Nfa l2 = compile_regex(a, random_regex(rng, 3));
    CHECK(equivalent(complement(complement(l1)), l1));
    CHECK(equivalent(complement(nfa_union(l1, l2)),
                     intersect(complement(l1), complement(l2))));
    CHECK(equivalent(complement(intersect(l1, l2)),
                     nfa_union(complement(l1), complement(l2))));
  }
}

TEST_CASE("enumeration agrees with membership") {
  Alphabet a = vlctest::binary();
  std::mt19937 rng(7);
  for (int i = 0; i < 6; ++i) {
    Nfa l = compile_regex(a, random_regex(rng, 3));
    auto listed = enumerate_words(l, 6);
    WordSet set(listed.begin(), listed.end());
    for (const auto& w : all_words(a, 6)) CHECK(contains(l, w) == (set.count(w) > 0));
  }
}

TEST_CASE("factor closure is factorial and contains the language") {
  Alphabet a = vlctest::binary();
  std::mt19937 rng(99);
  for (int i = 0; i < 6; ++i) {
    Nfa l = compile_regex(a, random_regex(rng, 3));
    Nfa fc = factor_closure(l);
    CHECK(is_subset(l, fc));
    for (const auto& w : enumerate_words(fc, 5)) {
      for (std::size_t b = 0; b <= w.size(); ++b)
        for (std::size_t len = 0; b + len <= w.size(); ++len) {
          Word f(a, {w.letters().begin() + b, w.letters().begin() + b + len});
          CHECK(contains(fc, f));
        }
    }
  }
}

TEST_CASE("quotient composition law") {
  Alphabet a = vlctest::binary();
  Nfa x = compile_regex(a, "(ab*a)|(ba*b)");
  for (const auto& w : all_words(a, 2))
    for (const auto& u : all_words(a, 2)) {
      Nfa lhs = left_quotient(word_language(u), left_quotient(word_language(w), x));
      Nfa rhs = left_quotient(word_language(w.concat(u)), x);
      CHECK(equivalent(lhs, rhs));
    }
}

TEST_CASE("finiteness and canonical minimal DFAs") {
  Alphabet a = vlctest::binary();
  CHECK(language_finite(words_nfa(a, {"a", "ba", "bb"})));
  CHECK(!language_finite(compile_regex(a, "a*b")));
  CHECK(language_finite(empty_language(a)));

  auto words = enumerate_finite(words_nfa(a, {"a", "ba", "bb"}));
  CHECK(words.size() == 3);

  // the canonical form is insensitive to the presentation
  Dfa d1 = minimal_dfa(compile_regex(a, "(a|b)(a|b)*"));
  Dfa d2 = minimal_dfa(nfa_concat(universal_language(a),
                                  words_nfa(a, {"a", "b"})));
  CHECK(d1 == d2);
  CHECK(canonical_key(d1) == canonical_key(d2));
}
