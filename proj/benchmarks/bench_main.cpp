#include <benchmark/benchmark.h>

#include "morphud/eval.hpp"
#include "morphud/morph2word.hpp"
#include "morphud/word2morph.hpp"
#include "synthetic.hpp"

namespace morphud {
namespace {

const TagMap& sejong() {
  static const TagMap map = *TagMap::builtin("sejong");
  return map;
}

std::vector<Sentence> words(std::size_t n) { return testing::random_treebank(42, n); }

std::size_t token_count(const std::vector<Sentence>& s) {
  std::size_t n = 0;
  for (const auto& x : s) n += x.size();
  return n;
}

void BM_Parse(benchmark::State& state) {
  const auto text = emit_conllu(words(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(parse_conllu(text));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_Parse)->Arg(100)->Arg(1000);

void BM_Convert(benchmark::State& state) {
  const auto input = words(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    std::vector<Sentence> out;
    benchmark::DoNotOptimize(convert_treebank(input, sejong(), out));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * token_count(input)));
}
BENCHMARK(BM_Convert)->Arg(100)->Arg(1000);

void BM_Revert(benchmark::State& state) {
  const auto input = words(static_cast<std::size_t>(state.range(0)));
  std::vector<Sentence> morph;
  convert_treebank(input, sejong(), morph);
  const auto predicted = testing::corrupt_heads(morph, 0.1, 1, true);
  for (auto _ : state) {
    std::vector<Sentence> out;
    benchmark::DoNotOptimize(revert_treebank(predicted, input, out, &sejong()));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * token_count(input)));
}
BENCHMARK(BM_Revert)->Arg(100)->Arg(1000);

void BM_ScoreAndAnalyze(benchmark::State& state) {
  const auto gold = words(static_cast<std::size_t>(state.range(0)));
  const auto system = testing::corrupt_heads(gold, 0.2, 3, false);
  for (auto _ : state) {
    benchmark::DoNotOptimize(score(gold, system));
    benchmark::DoNotOptimize(direction_confusion(gold, system));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * token_count(gold)));
}
BENCHMARK(BM_ScoreAndAnalyze)->Arg(1000);

}  // namespace
}  // namespace morphud

BENCHMARK_MAIN();
