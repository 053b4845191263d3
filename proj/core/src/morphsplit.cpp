#include "morphud/morphsplit.hpp"

#include <algorithm>

#include "morphud/error.hpp"

namespace morphud {

namespace {

std::vector<std::string_view> split_plus(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find('+', start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

bool is_unset(std::string_view field) { return field.empty() || field == "_"; }

}  // namespace

HeadChoice select_head(std::span<const HeadClass> classes,
                       std::span<const HeadClass> fallback_order) {
  auto last_of = [&](HeadClass cls) -> std::optional<std::size_t> {
    for (std::size_t i = classes.size(); i-- > 0;)
      if (classes[i] == cls) return i;
    return std::nullopt;
  };

  if (auto i = last_of(HeadClass::kNominal)) return {*i, HeadRule::kLastNominal};

  auto verb = std::find(classes.begin(), classes.end(), HeadClass::kVerbal);
  if (verb != classes.end())
    return {static_cast<std::size_t>(verb - classes.begin()), HeadRule::kFirstVerbal};

  for (HeadClass cls : fallback_order)
    if (auto i = last_of(cls)) return {*i, HeadRule::kFallback};

  // Function words head only when everything else is punctuation.
  const bool only_function = std::all_of(classes.begin(), classes.end(), [](HeadClass c) {
    return c == HeadClass::kFunction || c == HeadClass::kPunctuation;
  });
  if (only_function)
    if (auto i = last_of(HeadClass::kFunction)) return {*i, HeadRule::kFunctionOnly};

  return {0, HeadRule::kDefault};
}

std::size_t find_head(std::span<const Morpheme> morphemes, const TagMap& tagmap) {
  std::vector<HeadClass> classes;
  classes.reserve(morphemes.size());
  for (const auto& m : morphemes) classes.push_back(m.head_class);
  return select_head(classes, tagmap.fallback_order()).index;
}

Segmentation split_segments(std::string_view lemma, std::string_view xpos) {
  Segmentation result;
  auto segments = split_plus(lemma);
  auto tags = split_plus(xpos);
  const bool any_empty =
      std::any_of(segments.begin(), segments.end(), [](auto s) { return s.empty(); }) ||
      std::any_of(tags.begin(), tags.end(), [](auto s) { return s.empty(); });
  if (segments.size() != tags.size() || any_empty) {
    result.mismatch = segments.size() > 1 || tags.size() > 1;
    result.parts.emplace_back(std::string(lemma), std::string(xpos));
    return result;
  }
  result.parts.reserve(segments.size());
  for (std::size_t i = 0; i < segments.size(); ++i)
    result.parts.emplace_back(std::string(segments[i]), std::string(tags[i]));
  return result;
}

std::size_t segment_count(const Token& token) {
  if (is_unset(token.lemma) || is_unset(token.xpos)) return 1;
  return split_segments(token.lemma, token.xpos).parts.size();
}

MorphemeAnalysis segment_token(const Token& token, const TagMap& tagmap) {
  if (is_unset(token.lemma))
    throw ConversionError("", token.id, "empty lemma");
  if (is_unset(token.xpos))
    throw ConversionError("", token.id, "empty XPOS");

  auto seg = split_segments(token.lemma, token.xpos);
  MorphemeAnalysis analysis;
  analysis.count_mismatch = seg.mismatch;
  analysis.morphemes.reserve(seg.parts.size());
  for (auto& [segment, xtag] : seg.parts) {
    if (!seg.mismatch && !tagmap.contains(xtag)) analysis.unknown_tags.push_back(xtag);
    const TagEntry& entry = tagmap.lookup(xtag);
    analysis.morphemes.push_back(
        Morpheme{std::move(segment), std::move(xtag), entry.upos, entry.role, entry.head_class});
  }
  analysis.head_index = find_head(analysis.morphemes, tagmap);
  return analysis;
}

std::string intra_eojeol_deprel(const Morpheme& morpheme, HeadSide head_side) {
  switch (morpheme.role) {
    case Role::kCase:
      return "case";
    case Role::kAux:
      return "aux";
    case Role::kPunct:
      return "punct";
    case Role::kCompound:
      return head_side == HeadSide::kAfter ? "compound" : "dep";
    case Role::kDep:
      break;
  }
  return "dep";
}

}  // namespace morphud
