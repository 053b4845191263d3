#pragma once

// Attachment scores and arc error analyses over identically tokenized
// gold/system treebanks.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "morphud/conllu.hpp"

namespace morphud {

enum class DeprelMatch {
  kMainRelation,  // compare labels up to the first ':'
  kExact,
};

struct EvalReport {
  std::size_t total = 0;
  std::size_t uas_correct = 0;
  std::size_t las_correct = 0;

  /// 0 when total is 0.
  double uas() const noexcept;
  double las() const noexcept;
  void merge(const EvalReport& other) noexcept;

  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

/// Throws EvalError naming the first divergence unless both sides have the
/// same sentence count, token counts and forms.
void check_same_tokenization(std::span<const Sentence> gold, std::span<const Sentence> system);

EvalReport score(std::span<const Sentence> gold, std::span<const Sentence> system,
                 DeprelMatch match = DeprelMatch::kMainRelation);

enum class Direction { kLeft = 0, kRight = 1, kToRoot = 2 };
inline constexpr std::size_t kDirections = 3;

/// Left: head precedes the token; Right: head follows; ToRoot: head 0.
Direction direction_of(const Token& token) noexcept;
std::string_view to_string(Direction d) noexcept;

enum class DepthConvention {
  kRootTokenOne,   // virtual root 0, root token 1
  kRootTokenZero,  // root token 0
};

/// Depth of every token (index 0 holds token 1). Throws EvalError if the
/// head function has a cycle.
std::vector<int> depths(const Sentence& sentence,
                        DepthConvention convention = DepthConvention::kRootTokenOne);
int depth_of(const Token& token, const Sentence& sentence,
             DepthConvention convention = DepthConvention::kRootTokenOne);

enum class ConfusionFilter {
  kErrorsOnly,  // tokens whose system head is wrong
  kAll,
};

/// counts[gold][system].
struct DirectionConfusion {
  std::array<std::array<std::size_t, kDirections>, kDirections> counts{};

  std::size_t at(Direction gold, Direction system) const noexcept {
    return counts[static_cast<std::size_t>(gold)][static_cast<std::size_t>(system)];
  }
  std::size_t total() const noexcept;
  std::size_t trace() const noexcept;
  void merge(const DirectionConfusion& other) noexcept;
};

/// (cap+1) x (cap+1) counts indexed [gold depth][system depth], depths
/// above the cap clamped to it.
class DepthConfusion {
 public:
  explicit DepthConfusion(std::size_t cap = 10);

  std::size_t cap() const noexcept { return cap_; }
  std::size_t at(std::size_t gold, std::size_t system) const;
  void add(int gold_depth, int system_depth);
  std::size_t total() const noexcept;
  std::size_t trace() const noexcept;
  void merge(const DepthConfusion& other);

 private:
  std::size_t cap_;
  std::vector<std::size_t> counts_;
};

DirectionConfusion direction_confusion(std::span<const Sentence> gold,
                                       std::span<const Sentence> system,
                                       ConfusionFilter filter = ConfusionFilter::kErrorsOnly);

DepthConfusion depth_confusion(std::span<const Sentence> gold, std::span<const Sentence> system,
                               std::size_t cap = 10,
                               ConfusionFilter filter = ConfusionFilter::kErrorsOnly,
                               DepthConvention convention = DepthConvention::kRootTokenOne);

}  // namespace morphud
