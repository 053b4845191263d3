#include "morphud/eval.hpp"

#include <gtest/gtest.h>

#include "morphud/error.hpp"
#include "morphud/word2morph.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"

namespace morphud {
namespace {

std::string data_path(const std::string& name) { return std::string(MORPHUD_TEST_DATA_DIR) + "/" + name; }

std::vector<Sentence> golden_morph() {
  const auto word = read_conllu_file(data_path("golden_word.conllu"));
  std::vector<Sentence> out;
  convert_treebank(word, *TagMap::builtin("sejong"), out);
  return out;
}

Sentence chain(int n) {
  Sentence s;
  for (int i = 1; i <= n; ++i)
    s.tokens.push_back({i, "t", "t", "X", "X", "_", i - 1, i == 1 ? "root" : "dep", "_", "_"});
  return s;
}

TEST(Score, IdentityIsPerfect) {
  const auto gold = golden_morph();
  const auto r = score(gold, gold);
  EXPECT_EQ(r.total, 21u);
  EXPECT_DOUBLE_EQ(r.uas(), 1.0);
  EXPECT_DOUBLE_EQ(r.las(), 1.0);
}

TEST(Score, GoldenDeprelEdit) {
  const auto gold = golden_morph();
  auto system = gold;
  system[0].tokens[1].deprel = "nmod";  // 의: case -> nmod
  const auto r = score(gold, system);
  EXPECT_EQ(r.uas_correct, 21u);
  EXPECT_EQ(r.las_correct, 20u);
  EXPECT_DOUBLE_EQ(r.uas(), 1.0);
  EXPECT_DOUBLE_EQ(r.las(), 20.0 / 21.0);
}

TEST(Score, GoldenHeadEdit) {
  const auto gold = golden_morph();
  auto system = gold;
  system[0].tokens[7].head = 9;  // 디자이너: 10 -> 9
  const auto r = score(gold, system);
  EXPECT_EQ(r.uas_correct, 20u);
  EXPECT_EQ(r.las_correct, 20u);
}

TEST(Score, SubtypesIgnoredUnlessExact) {
  auto gold = std::vector{chain(2)};
  auto system = gold;
  gold[0].tokens[1].deprel = "nmod:poss";
  system[0].tokens[1].deprel = "nmod";
  EXPECT_EQ(score(gold, system).las_correct, 2u);
  EXPECT_EQ(score(gold, system, DeprelMatch::kExact).las_correct, 1u);
}

TEST(Score, EmptyTreebankScoresZero) {
  const auto r = score({}, {});
  EXPECT_EQ(r.total, 0u);
  EXPECT_EQ(r.uas(), 0.0);
  EXPECT_EQ(r.las(), 0.0);
}

TEST(Score, TokenizationMismatchIsAnError) {
  auto gold = std::vector{chain(3)};
  auto longer = std::vector{chain(4)};
  EXPECT_THROW(score(gold, longer), EvalError);
  auto renamed = gold;
  renamed[0].tokens[2].form = "u";
  EXPECT_THROW(score(gold, renamed), EvalError);
  auto two = std::vector{chain(3), chain(3)};
  EXPECT_THROW(score(gold, two), EvalError);
}

TEST(Score, MatchesBruteForceOnRandomCorruption) {
  const auto gold = testing::random_treebank(3, 300);
  for (double p : {0.0, 0.1, 0.5, 1.0}) {
    auto system = testing::corrupt_heads(gold, p, 17, false);
    system[0].tokens[0].deprel = "weird:sub";
    const auto r = score(gold, system);
    const auto b = testing::brute_force_attachment(gold, system);
    EXPECT_EQ(r.total, b.total);
    EXPECT_EQ(r.uas_correct, b.heads);
    EXPECT_EQ(r.las_correct, b.labeled);
    EXPECT_LE(r.las(), r.uas());
  }
}

TEST(Directions, Classification) {
  const auto s = golden_morph()[0];
  EXPECT_EQ(direction_of(s.at(2)), Direction::kLeft);    // 의 -> 프랑스
  EXPECT_EQ(direction_of(s.at(1)), Direction::kRight);   // 프랑스 -> 디자이너
  EXPECT_EQ(direction_of(s.at(18)), Direction::kToRoot);
  EXPECT_EQ(to_string(Direction::kToRoot), "root");
}

TEST(Depths, Golden) {
  const auto s = golden_morph()[0];
  EXPECT_EQ(depth_of(s.at(18), s), 1);
  EXPECT_EQ(depth_of(s.at(10), s), 2);
  EXPECT_EQ(depth_of(s.at(8), s), 3);
  EXPECT_EQ(depth_of(s.at(1), s), 4);
  EXPECT_EQ(depth_of(s.at(18), s, DepthConvention::kRootTokenZero), 0);
  EXPECT_EQ(depth_of(s.at(1), s, DepthConvention::kRootTokenZero), 3);
}

TEST(Depths, RecursionAndOracle) {
  for (const auto& s : testing::random_treebank(5, 200)) {
    const auto d = depths(s);
    for (const auto& t : s.tokens) {
      const int expected = t.head == 0 ? 1 : d[static_cast<std::size_t>(t.head - 1)] + 1;
      ASSERT_EQ(d[static_cast<std::size_t>(t.id - 1)], expected);
      ASSERT_EQ(d[static_cast<std::size_t>(t.id - 1)], testing::brute_depth(s, t.id));
    }
  }
}

TEST(Depths, CycleIsAnError) {
  Sentence s = chain(3);
  s.tokens[0].head = 3;
  EXPECT_THROW(depths(s), EvalError);
}

TEST(DirectionConfusion, SingleEditLandsInOneCell) {
  const auto gold = std::vector{chain(3)};
  auto system = gold;
  system[0].tokens[2].head = 1;  // 3: 2 -> 1, both to the left
  const auto m = direction_confusion(gold, system);
  EXPECT_EQ(m.total(), 1u);
  EXPECT_EQ(m.at(Direction::kLeft, Direction::kLeft), 1u);

  system[0].tokens[0].head = 3;  // 1: root -> right
  system[0].tokens[2].head = 0;
  const auto m2 = direction_confusion(gold, system);
  EXPECT_EQ(m2.at(Direction::kToRoot, Direction::kRight), 1u);
  EXPECT_EQ(m2.at(Direction::kLeft, Direction::kToRoot), 1u);
  EXPECT_EQ(m2.trace(), 0u);
}

TEST(DirectionConfusion, AllModeMassEqualsTokens) {
  const auto gold = testing::random_treebank(9, 100);
  const auto system = testing::corrupt_heads(gold, 0.3, 4, false);
  const auto all = direction_confusion(gold, system, ConfusionFilter::kAll);
  const auto errors = direction_confusion(gold, system);
  const auto r = score(gold, system);
  EXPECT_EQ(all.total(), r.total);
  EXPECT_EQ(errors.total(), r.total - r.uas_correct);

  const auto brute = testing::brute_direction_counts(gold, system, true);
  for (std::size_t g = 0; g < kDirections; ++g)
    for (std::size_t s = 0; s < kDirections; ++s) {
      auto it = brute.find({static_cast<int>(g), static_cast<int>(s)});
      EXPECT_EQ(errors.counts[g][s], it == brute.end() ? 0u : it->second);
    }
}

TEST(DepthConfusion, ChainReattachment) {
  const auto gold = std::vector{chain(3)};
  auto system = gold;
  system[0].tokens[2].head = 1;
  const auto m = depth_confusion(gold, system);
  EXPECT_EQ(m.total(), 1u);
  EXPECT_EQ(m.at(3, 2), 1u);
  const auto all = depth_confusion(gold, system, 10, ConfusionFilter::kAll);
  EXPECT_EQ(all.total(), 3u);
  EXPECT_EQ(all.trace(), 2u);
}

TEST(DepthConfusion, CapClampsDeepTokens) {
  const auto gold = std::vector{chain(15)};
  const auto m = depth_confusion(gold, gold, 4, ConfusionFilter::kAll);
  EXPECT_EQ(m.total(), 15u);
  EXPECT_EQ(m.at(4, 4), 12u);
  EXPECT_EQ(m.at(1, 1), 1u);
  EXPECT_THROW(m.at(5, 0), std::out_of_range);
}

TEST(DepthConfusion, CyclicSystemIsAnError) {
  const auto gold = std::vector{chain(3)};
  auto system = gold;
  system[0].tokens[0].head = 2;
  EXPECT_THROW(depth_confusion(gold, system), EvalError);
}

TEST(Reports, MergeAdds) {
  EvalReport a{10, 8, 6};
  a.merge({5, 5, 5});
  EXPECT_EQ(a, (EvalReport{15, 13, 11}));
  DepthConfusion x(3), y(3);
  x.add(1, 2);
  y.add(7, 7);
  x.merge(y);
  EXPECT_EQ(x.at(3, 3), 1u);
  EXPECT_EQ(x.total(), 2u);
}

}  // namespace
}  // namespace morphud
