#pragma once

// Plain-text token streams for training word or morpheme embeddings.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>

#include "morphud/conllu.hpp"

namespace morphud {

enum class CorpusMode {
  kWord,      // FORM of every token
  kMorpheme,  // lemma segments of every token
};

struct CorpusStats {
  std::size_t lines = 0;
  std::size_t tokens = 0;
};

/// One line per sentence, tokens joined by single spaces.
std::string corpus_line(const Sentence& sentence, CorpusMode mode);

CorpusStats export_corpus(std::span<const Sentence> sentences, CorpusMode mode, std::ostream& out);

}  // namespace morphud
