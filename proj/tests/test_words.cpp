#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "vlcodes/words.hpp"

using namespace vlc;
using vlctest::all_words;
using vlctest::ball_oracle;
using vlctest::W;

TEST_CASE("prefix distance on the running example") {
  Alphabet a = vlctest::binary();
  CHECK(prefix_distance(W(a, "a"), W(a, "ba")) == 3);
  CHECK(prefix_distance(W(a, "a"), W(a, "bb")) == 3);
  CHECK(prefix_distance(W(a, "ba"), W(a, "bb")) == 2);
  CHECK(prefix_distance(W(a, "baab"), W(a, "baab")) == 0);
  CHECK(prefix_distance(W(a, "eps"), W(a, "ab")) == 2);
}

TEST_CASE("suffix distance via reversal") {
  Alphabet a = vlctest::binary();
  CHECK(suffix_distance(W(a, "ab"), W(a, "bb")) == 2);  // common suffix b
  CHECK(suffix_distance(W(a, "a"), W(a, "ba")) == 1);   // common suffix a
  CHECK(suffix_distance(W(a, "abab"), W(a, "abab")) == 0);
}

TEST_CASE("factor distance, including the two-optima example") {
  Alphabet a = vlctest::binary();
  CHECK(factor_distance(W(a, "babababbab"), W(a, "bbabbaababaa")) == 12);
  CHECK(factor_distance(W(a, "a"), W(a, "ba")) == 1);
  CHECK(factor_distance(W(a, "abba"), W(a, "abba")) == 0);
}

TEST_CASE("theta distance is a quasi-metric") {
  Alphabet abc("abc");
  // the 3-cycle automorphism is not symmetric
  ThetaSpec cyc = ThetaSpec::parse(abc, "a:b,b:c,c:a", false);
  CHECK(theta_distance(W(abc, "a"), W(abc, "b"), cyc) == 1);
  CHECK(theta_distance(W(abc, "b"), W(abc, "a"), cyc) == 2);
  CHECK(theta_distance(W(abc, "ab"), W(abc, "ab"), cyc) == 0);

  Alphabet a = vlctest::binary();
  ThetaSpec swap = ThetaSpec::parse(a, "a:b,b:a", false);
  CHECK(theta_distance(W(a, "ab"), W(a, "ba"), swap) == 1);
}

TEST_CASE("theta application and order") {
  Alphabet dna("ACGT");
  ThetaSpec wc = ThetaSpec::parse(dna, "A:T,T:A,C:G,G:C", true);
  CHECK(theta_apply(W(dna, "GCA"), wc).str() == "TGC");
  CHECK(theta_apply(W(dna, "GCA"), wc, 0).str() == "GCA");
  CHECK(wc.order() == 2);

  Alphabet a = vlctest::binary();
  ThetaSpec anti_swap = ThetaSpec::parse(a, "a:b,b:a", true);
  CHECK(anti_swap.order() == 2);
  CHECK(theta_apply(W(a, "abb"), anti_swap, 2) == W(a, "abb"));

  Alphabet abc("abc");
  ThetaSpec anti_cyc = ThetaSpec::parse(abc, "a:b,b:c,c:a", true);
  CHECK(anti_cyc.order() == 6);
  for (const auto& w : all_words(abc, 4))
    CHECK(theta_apply(w, anti_cyc, anti_cyc.order()) == w);
}

TEST_CASE("overlapping-free words") {
  Alphabet a = vlctest::binary();
  CHECK(is_overlapping_free(W(a, "bba")));
  CHECK(!is_overlapping_free(W(a, "aba")));
  CHECK(!is_overlapping_free(W(a, "abab")));
  CHECK(is_overlapping_free(W(a, "b")));
  CHECK_THROWS_AS(is_overlapping_free(Word::epsilon(a)), std::invalid_argument);
  // the padded pattern z0 a b^{|z0|} is always overlapping-free
  for (const auto& z0 : all_words(a, 3)) {
    if (z0.empty()) continue;
    Word z = z0.append(z0[0]);
    std::uint32_t other = z0[0] == 0 ? 1 : 0;
    for (std::size_t i = 0; i < z0.size(); ++i) z = z.append(other);
    CHECK(is_overlapping_free(z));
  }
}

TEST_CASE("neighborhoods match the hand-computed values") {
  Alphabet a = vlctest::binary();
  MetricSpec prefix1 = MetricSpec::prefix(1);
  auto ball = neighborhood(W(a, "a"), prefix1, 1);
  CHECK(vlctest::strs(ball) == std::vector<std::string>{"", "a", "aa", "ab"});

  MetricSpec factor1 = MetricSpec::factor(1);
  CHECK(neighborhood(W(a, "abba"), factor1, 0) == WordSet{W(a, "abba")});

  // P_1(P_1(a^2)), the ten-word set
  WordSet twice;
  for (const auto& mid : neighborhood(W(a, "aa"), prefix1, 1))
    for (const auto& w : neighborhood(mid, prefix1, 1)) twice.insert(w);
  WordSet expected;
  for (const char* s : {"a", "", "aa", "ab", "aaa", "aaaa", "aaab", "aab", "aaba", "aabb"})
    expected.insert(W(a, s));
  CHECK(twice == expected);
}

TEST_CASE("neighborhoods are exactly the distance balls") {
  Alphabet a = vlctest::binary();
  for (const auto& w : all_words(a, 4)) {
    for (unsigned k = 0; k <= 2; ++k) {
      for (auto m : {MetricSpec::prefix(1), MetricSpec::suffix(1), MetricSpec::factor(1)})
        CHECK(neighborhood(w, m, k) == ball_oracle(w, m, k));
    }
  }
  ThetaSpec swap = ThetaSpec::parse(a, "a:b,b:a", false);
  MetricSpec mt = MetricSpec::theta_metric(swap);
  CHECK(neighborhood(W(a, "ab"), mt, 1) == WordSet{W(a, "ab"), W(a, "ba")});
  CHECK_THROWS_AS(neighborhood(W(a, "ab"), mt, 2), std::invalid_argument);
}

TEST_CASE("metric axioms on all short binary words") {
  Alphabet a = vlctest::binary();
  auto words = all_words(a, 6);
  const std::size_t n = words.size();
  for (auto metric : {MetricSpec::prefix(1), MetricSpec::suffix(1), MetricSpec::factor(1)}) {
    std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = metric.distance(words[i], words[j]);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(d[i][i] == 0);
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) CHECK(d[i][j] > 0);
        CHECK(d[i][j] == d[j][i]);
      }
    }
    // triangle inequality over all triples
    std::size_t violations = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (d[i][j] + d[j][k] < d[i][k]) ++violations;
    CHECK(violations == 0);
  }
}

TEST_CASE("factor distance never exceeds prefix or suffix distance") {
  Alphabet a = vlctest::binary();
  auto words = all_words(a, 6);
  for (const auto& x : words)
    for (const auto& y : words) {
      auto df = factor_distance(x, y);
      CHECK(df <= prefix_distance(x, y));
      CHECK(df <= suffix_distance(x, y));
    }
}

TEST_CASE("factor balls iterate") {
  Alphabet a = vlctest::binary();
  MetricSpec factor1 = MetricSpec::factor(1);
  for (const auto& w : all_words(a, 5))
    for (unsigned k = 1; k <= 3; ++k)
      CHECK(neighborhood(w, factor1, k) == vlctest::iterate_ball(w, factor1, k));
}

TEST_CASE("prefix balls have midpoints") {
  Alphabet a = vlctest::binary();
  auto words = all_words(a, 6);
  auto candidates = all_words(a, 8);
  for (unsigned k = 1; k <= 2; ++k) {
    for (const auto& x : words)
      for (const auto& y : words) {
        if (prefix_distance(x, y) > 2 * k) continue;
        bool found = false;
        for (const auto& mid : candidates)
          if (prefix_distance(x, mid) <= k && prefix_distance(mid, y) <= k) {
            found = true;
            break;
          }
        CHECK(found);
      }
  }
}

TEST_CASE("word parsing and alphabet checks") {
  Alphabet a = vlctest::binary();
  CHECK(Word::parse(a, "eps").empty());
  CHECK(Word::parse(a, "").empty());
  CHECK(Word::parse(a, "ab").str() == "ab");
  CHECK_THROWS_AS(Word::parse(a, "ac"), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet("a"), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet("aba"), std::invalid_argument);
  Alphabet abc("abc");
  CHECK_THROWS_AS(prefix_distance(W(a, "a"), W(abc, "a")), std::invalid_argument);
  CHECK_THROWS_AS(ThetaSpec::parse(a, "a:b", false), std::invalid_argument);  // not a bijection
}
