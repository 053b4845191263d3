#pragma once

// Morpheme-level (morphUD) back to eojeol-level (wordUD) conversion, used
// to score morpheme-level parser output against word-level gold.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "morphud/conllu.hpp"
#include "morphud/tagmap.hpp"
#include "morphud/word2morph.hpp"

namespace morphud {

/// Pairs a word skeleton with a morpheme sentence. Uses the Eojeol/MorphRole
/// MISC keys when every morpheme carries them; otherwise walks the skeleton
/// and gives each word as many morphemes as its lemma/XPOS segmentation
/// yields. `tagmap` (optional) classifies morpheme XPOS when the head of a
/// reconstructed span must be chosen; without it the morpheme UPOS is used.
/// Throws AlignmentError with coordinates when the two cannot be paired.
AlignmentMap pair_tokens(const Sentence& word_sentence, const Sentence& morph_sentence,
                         const TagMap* tagmap = nullptr);

/// Counts of the repairs applied while reverting a (possibly malformed)
/// morpheme-level prediction. All zero for converted gold input.
struct RepairReport {
  std::size_t no_external_arc = 0;        // span with no arc leaving it
  std::size_t multiple_external_arcs = 0; // span with more than one arc leaving it
  std::size_t self_loops = 0;             // word ended up headed by itself
  std::size_t extra_roots = 0;            // second and later root words
  std::size_t cycles = 0;                 // word-level cycles broken
  std::size_t promoted_roots = 0;         // sentences that had no root word
  std::size_t root_labels = 0;            // "root" label added or removed
  std::vector<std::string> events;        // one line per repair

  std::size_t total() const noexcept {
    return no_external_arc + multiple_external_arcs + self_loops + extra_roots + cycles +
           promoted_roots + root_labels;
  }
  void merge(const RepairReport& other);
};

struct RevertResult {
  Sentence sentence;
  RepairReport repairs;
};

/// Word-level sentence whose HEAD/DEPREL come from the morpheme arcs and
/// whose other columns come from the skeleton. Never throws on malformed
/// arcs; the result is always a single-rooted tree. When a span has zero or
/// several arcs leaving it, the alignment's head morpheme is preferred.
RevertResult revert_sentence(const Sentence& morph_sentence, const Sentence& word_skeleton,
                             const AlignmentMap& alignment);

struct RevertSummary {
  std::size_t sentences = 0;
  std::size_t words = 0;
  std::size_t morphemes = 0;
  RepairReport repairs;
};

/// Pairs and reverts sentence by sentence. Sentence counts must match.
RevertSummary revert_treebank(std::span<const Sentence> morph, std::span<const Sentence> skeleton,
                              std::vector<Sentence>& output, const TagMap* tagmap = nullptr);
RevertSummary revert_treebank(const std::filesystem::path& morph,
                              const std::filesystem::path& skeleton,
                              const std::filesystem::path& out, const TagMap* tagmap = nullptr);

}  // namespace morphud
