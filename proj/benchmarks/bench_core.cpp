#include <benchmark/benchmark.h>

#include "vlcodes/completion.hpp"
#include "vlcodes/deciders.hpp"
#include "vlcodes/regex.hpp"

using namespace vlc;

namespace {

Nfa watson_crick() {
  Alphabet dna("ACGT");
  std::vector<Word> words;
  for (const char* s : {"A", "C", "GA", "GG", "GT", "GCA", "GCC", "GCG", "GCT"})
    words.push_back(Word::parse(dna, s));
  return words_language(dna, words);
}

void BM_SardinasPatterson(benchmark::State& state) {
  Nfa z = watson_crick();
  for (auto _ : state) benchmark::DoNotOptimize(sardinas_patterson(z).is_code);
}
BENCHMARK(BM_SardinasPatterson);

void BM_Measure(benchmark::State& state) {
  Alphabet ab("ab");
  Nfa z = compile_regex(ab, "(ab*a)|(ba*b)");
  for (auto _ : state) benchmark::DoNotOptimize(measure(z).value == 1);
}
BENCHMARK(BM_Measure);

void BM_PrefixImage(benchmark::State& state) {
  Alphabet ab("ab");
  Nfa x = compile_regex(ab, "(ab*a)|(ba*b)");
  Transducer t = build_relation(
      ab, {RelationSpec::Kind::prefix_k_strict, static_cast<unsigned>(state.range(0)), {}});
  for (auto _ : state) benchmark::DoNotOptimize(image(t, x).state_count);
}
BENCHMARK(BM_PrefixImage)->Arg(1)->Arg(2)->Arg(4);

void BM_FactorDistance(benchmark::State& state) {
  Alphabet ab("ab");
  std::vector<std::uint32_t> l1, l2;
  for (int i = 0; i < state.range(0); ++i) {
    l1.push_back(i % 2);
    l2.push_back((i / 2) % 2);
  }
  Word w1(ab, l1), w2(ab, l2);
  for (auto _ : state) benchmark::DoNotOptimize(factor_distance(w1, w2));
}
BENCHMARK(BM_FactorDistance)->Arg(32)->Arg(256);

void BM_CheckAllPrefix(benchmark::State& state) {
  Alphabet ab("ab");
  std::vector<Word> words;
  for (const char* s : {"a", "ba", "bb"}) words.push_back(Word::parse(ab, s));
  Nfa x = words_language(ab, words);
  MetricSpec m = MetricSpec::prefix(1);
  for (auto _ : state) benchmark::DoNotOptimize(decide_all(x, m).size());
}
BENCHMARK(BM_CheckAllPrefix);

void BM_Completion(benchmark::State& state) {
  Alphabet ab("ab");
  Nfa x = words_language(ab, {Word::parse(ab, "aa")});
  MetricSpec m = MetricSpec::prefix(1);
  for (auto _ : state) {
    auto recipe = build_completion(x, m);
    benchmark::DoNotOptimize(verify_completion(recipe, m, 10).ok);
  }
}
BENCHMARK(BM_Completion);

}  // namespace

BENCHMARK_MAIN();
