#include "morphud/eval.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "morphud/error.hpp"

namespace morphud {

namespace {

bool labels_match(std::string_view gold, std::string_view system, DeprelMatch match) {
  if (match == DeprelMatch::kExact) return gold == system;
  return main_relation(gold) == main_relation(system);
}

bool include(const Token& gold, const Token& system, ConfusionFilter filter) {
  return filter == ConfusionFilter::kAll || gold.head != system.head;
}

}  // namespace

double EvalReport::uas() const noexcept {
  return total == 0 ? 0.0 : static_cast<double>(uas_correct) / static_cast<double>(total);
}

double EvalReport::las() const noexcept {
  return total == 0 ? 0.0 : static_cast<double>(las_correct) / static_cast<double>(total);
}

void EvalReport::merge(const EvalReport& other) noexcept {
  total += other.total;
  uas_correct += other.uas_correct;
  las_correct += other.las_correct;
}

void check_same_tokenization(std::span<const Sentence> gold, std::span<const Sentence> system) {
  if (gold.size() != system.size())
    throw EvalError("gold has " + std::to_string(gold.size()) + " sentences, system has " +
                    std::to_string(system.size()));
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const auto& g = gold[i];
    const auto& s = system[i];
    const std::string where = "sentence " + sentence_ref(g, i + 1) + ": ";
    if (g.size() != s.size())
      throw EvalError(where + "gold has " + std::to_string(g.size()) + " tokens, system has " +
                      std::to_string(s.size()));
    for (std::size_t j = 0; j < g.size(); ++j)
      if (g.tokens[j].form != s.tokens[j].form)
        throw EvalError(where + "token " + std::to_string(j + 1) + ": gold form '" +
                        g.tokens[j].form + "' differs from system form '" + s.tokens[j].form +
                        "'");
  }
}

EvalReport score(std::span<const Sentence> gold, std::span<const Sentence> system,
                 DeprelMatch match) {
  check_same_tokenization(gold, system);
  EvalReport report;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    for (std::size_t j = 0; j < gold[i].size(); ++j) {
      const Token& g = gold[i].tokens[j];
      const Token& s = system[i].tokens[j];
      ++report.total;
      if (g.head != s.head) continue;
      ++report.uas_correct;
      if (labels_match(g.deprel, s.deprel, match)) ++report.las_correct;
    }
  }
  return report;
}

Direction direction_of(const Token& token) noexcept {
  if (token.head == 0) return Direction::kToRoot;
  return token.head < token.id ? Direction::kLeft : Direction::kRight;
}

std::string_view to_string(Direction d) noexcept {
  switch (d) {
    case Direction::kLeft:
      return "left";
    case Direction::kRight:
      return "right";
    case Direction::kToRoot:
      return "root";
  }
  return "root";
}

std::vector<int> depths(const Sentence& sentence, DepthConvention convention) {
  const std::size_t n = sentence.size();
  std::vector<int> depth(n + 1, -1);  // -1 unknown, -2 on the current path
  depth[0] = 0;
  std::vector<std::size_t> path;
  for (std::size_t start = 1; start <= n; ++start) {
    std::size_t node = start;
    path.clear();
    while (depth[node] == -1) {
      depth[node] = -2;
      path.push_back(node);
      const int h = sentence.tokens[node - 1].head;
      if (h < 0 || static_cast<std::size_t>(h) > n)
        throw EvalError("token " + std::to_string(node) + " has head out of range");
      node = static_cast<std::size_t>(h);
    }
    if (depth[node] == -2)
      throw EvalError("cyclic head assignment through token " + std::to_string(node));
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      const auto h = static_cast<std::size_t>(sentence.tokens[*it - 1].head);
      depth[*it] = depth[h] + 1;
    }
  }
  std::vector<int> out(depth.begin() + 1, depth.end());
  if (convention == DepthConvention::kRootTokenZero)
    for (auto& d : out) --d;
  return out;
}

int depth_of(const Token& token, const Sentence& sentence, DepthConvention convention) {
  return depths(sentence, convention).at(static_cast<std::size_t>(token.id - 1));
}

std::size_t DirectionConfusion::total() const noexcept {
  std::size_t sum = 0;
  for (const auto& row : counts) sum = std::accumulate(row.begin(), row.end(), sum);
  return sum;
}

std::size_t DirectionConfusion::trace() const noexcept {
  std::size_t sum = 0;
  for (std::size_t i = 0; i < kDirections; ++i) sum += counts[i][i];
  return sum;
}

void DirectionConfusion::merge(const DirectionConfusion& other) noexcept {
  for (std::size_t i = 0; i < kDirections; ++i)
    for (std::size_t j = 0; j < kDirections; ++j) counts[i][j] += other.counts[i][j];
}

DepthConfusion::DepthConfusion(std::size_t cap) : cap_(cap), counts_((cap + 1) * (cap + 1), 0) {}

std::size_t DepthConfusion::at(std::size_t gold, std::size_t system) const {
  if (gold > cap_ || system > cap_) throw std::out_of_range("depth beyond cap");
  return counts_[gold * (cap_ + 1) + system];
}

void DepthConfusion::add(int gold_depth, int system_depth) {
  auto clamp = [&](int d) { return std::min(static_cast<std::size_t>(std::max(d, 0)), cap_); };
  ++counts_[clamp(gold_depth) * (cap_ + 1) + clamp(system_depth)];
}

std::size_t DepthConfusion::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
}

std::size_t DepthConfusion::trace() const noexcept {
  std::size_t sum = 0;
  for (std::size_t i = 0; i <= cap_; ++i) sum += counts_[i * (cap_ + 1) + i];
  return sum;
}

void DepthConfusion::merge(const DepthConfusion& other) {
  if (other.cap_ != cap_) throw std::invalid_argument("depth matrices with different caps");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
}

DirectionConfusion direction_confusion(std::span<const Sentence> gold,
                                       std::span<const Sentence> system, ConfusionFilter filter) {
  check_same_tokenization(gold, system);
  DirectionConfusion m;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    for (std::size_t j = 0; j < gold[i].size(); ++j) {
      const Token& g = gold[i].tokens[j];
      const Token& s = system[i].tokens[j];
      if (!include(g, s, filter)) continue;
      ++m.counts[static_cast<std::size_t>(direction_of(g))][static_cast<std::size_t>(direction_of(s))];
    }
  }
  return m;
}

DepthConfusion depth_confusion(std::span<const Sentence> gold, std::span<const Sentence> system,
                               std::size_t cap, ConfusionFilter filter,
                               DepthConvention convention) {
  check_same_tokenization(gold, system);
  DepthConfusion m(cap);
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const auto gold_depth = depths(gold[i], convention);
    const auto system_depth = depths(system[i], convention);
    for (std::size_t j = 0; j < gold[i].size(); ++j) {
      if (!include(gold[i].tokens[j], system[i].tokens[j], filter)) continue;
      m.add(gold_depth[j], system_depth[j]);
    }
  }
  return m;
}

}  // namespace morphud
