#pragma once

// Splitting an eojeol-level token into morphemes and picking the morpheme
// that carries the eojeol's external dependency.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "morphud/conllu.hpp"
#include "morphud/tagmap.hpp"

namespace morphud {

struct Morpheme {
  std::string segment;  // lemma-level segment, never empty
  std::string xtag;
  std::string upos;
  Role role = Role::kDep;
  HeadClass head_class = HeadClass::kOther;
};

struct MorphemeAnalysis {
  std::vector<Morpheme> morphemes;  // surface order
  std::size_t head_index = 0;
  /// Lemma and XPOS segment counts disagreed; the token was kept whole.
  bool count_mismatch = false;
  /// Tags that were missing from the tag map (default entry used).
  std::vector<std::string> unknown_tags;
};

/// Which head-selection step produced the answer of `select_head`.
enum class HeadRule {
  kLastNominal,   // last noun / proper noun
  kFirstVerbal,   // first verb
  kFallback,      // last member of the first non-empty fallback class
  kFunctionOnly,  // only function words (and punctuation) present
  kDefault,       // nothing eligible: index 0
};

struct HeadChoice {
  std::size_t index = 0;
  HeadRule rule = HeadRule::kDefault;
};

/// Head selection over a non-empty sequence of head classes.
HeadChoice select_head(std::span<const HeadClass> classes, std::span<const HeadClass> fallback_order);

/// Index of the head morpheme; `morphemes` must be non-empty.
std::size_t find_head(std::span<const Morpheme> morphemes, const TagMap& tagmap);

/// Lemma/XPOS pairs of a token, split on '+'. A token whose counts disagree
/// (or that yields an empty segment) comes back as one pair holding the
/// whole lemma and XPOS, with `mismatch` set.
struct Segmentation {
  std::vector<std::pair<std::string, std::string>> parts;
  bool mismatch = false;
};
Segmentation split_segments(std::string_view lemma, std::string_view xpos);

/// Number of morphemes `segment_token` produces for this token.
std::size_t segment_count(const Token& token);

/// Throws ConversionError (token coordinate only) on empty lemma or XPOS.
MorphemeAnalysis segment_token(const Token& token, const TagMap& tagmap);

/// Where the eojeol head sits relative to a dependent morpheme.
enum class HeadSide { kBefore, kAfter };

/// Relation label for a non-head morpheme. Compound applies only to content
/// morphemes that precede the head; after the head they become "dep".
std::string intra_eojeol_deprel(const Morpheme& morpheme, HeadSide head_side);

}  // namespace morphud
