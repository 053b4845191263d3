#pragma once

// Eojeol-level (wordUD) to morpheme-level (morphUD) conversion.
//
// Each word is replaced by its morphemes. The head morpheme inherits the
// word's external arc, re-pointed at the head morpheme of the governing
// word; the other morphemes attach to the head morpheme. Every morpheme
// token records where it came from in MISC:
//
//   Eojeol=<word id>        on every morpheme
//   MorphRole=Head|Dep      on every morpheme
//   OrigForm=<surface>      on the first morpheme of each word
//   SpaceAfter=No           on every non-final morpheme; the word's own
//                           SpaceAfter entry moves to its last morpheme

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "morphud/conllu.hpp"
#include "morphud/tagmap.hpp"

namespace morphud {

inline constexpr std::string_view kMiscEojeol = "Eojeol";
inline constexpr std::string_view kMiscMorphRole = "MorphRole";
inline constexpr std::string_view kMiscOrigForm = "OrigForm";
inline constexpr std::string_view kMiscSpaceAfter = "SpaceAfter";

/// Morpheme ids [first, last] covering one word, and the id of its head
/// morpheme. All ids are 1-based.
struct WordSpan {
  int first = 0;
  int last = 0;
  int head = 0;

  bool contains(int morph_id) const noexcept { return morph_id >= first && morph_id <= last; }
  int size() const noexcept { return last - first + 1; }

  friend bool operator==(const WordSpan&, const WordSpan&) = default;
};

struct AlignmentMap {
  std::vector<WordSpan> words;  // words[i] describes word id i + 1
  int total = 0;                // morpheme count

  /// Word id (1-based) containing the morpheme, or 0 if out of range.
  int word_of(int morph_id) const noexcept;

  /// Throws AlignmentError unless spans are contiguous, disjoint, ordered,
  /// cover 1..total, and each head lies inside its span.
  void validate() const;

  friend bool operator==(const AlignmentMap&, const AlignmentMap&) = default;
};

struct ConvertedSentence {
  Sentence sentence;
  AlignmentMap alignment;
  std::size_t mismatches = 0;  // words kept whole after a lemma/XPOS count mismatch
  std::vector<std::string> unknown_tags;
};

/// Converts one valid word-level sentence. Throws ConversionError with the
/// sentence's sent_id (if any) and token id.
ConvertedSentence convert_sentence(const Sentence& sentence, const TagMap& tagmap);

struct ConversionSummary {
  std::size_t sentences = 0;
  std::size_t words = 0;
  std::size_t morphemes = 0;
  std::size_t mismatches = 0;
  std::size_t skipped = 0;
  std::map<std::string, std::size_t> unknown_tags;  // tag -> occurrences

  void merge(const ConversionSummary& other);
  friend bool operator==(const ConversionSummary&, const ConversionSummary&) = default;
};

struct ConvertOptions {
  /// Drop sentences that fail to convert instead of aborting.
  bool skip_bad = false;
  /// Receives one line per skipped sentence or mismatch.
  std::vector<std::string>* warnings = nullptr;
};

ConversionSummary convert_treebank(std::span<const Sentence> input, const TagMap& tagmap,
                                   std::vector<Sentence>& output,
                                   const ConvertOptions& options = {});
ConversionSummary convert_treebank(std::istream& in, std::ostream& out, const TagMap& tagmap,
                                   const ConvertOptions& options = {});
ConversionSummary convert_treebank(const std::filesystem::path& in,
                                   const std::filesystem::path& out, const TagMap& tagmap,
                                   const ConvertOptions& options = {});

/// Surface text of a converted sentence rebuilt from OrigForm and
/// SpaceAfter, matching the original word-level "# text".
std::string surface_text(const Sentence& morph_sentence);

/// Surface text of a word-level sentence from FORM and SpaceAfter.
std::string word_text(const Sentence& word_sentence);

}  // namespace morphud
