#include "morphud/corpus.hpp"

#include <ostream>

#include "morphud/morphsplit.hpp"

namespace morphud {

namespace {

template <typename Fn>
void for_each_unit(const Sentence& sentence, CorpusMode mode, Fn&& fn) {
  for (const auto& t : sentence.tokens) {
    if (mode == CorpusMode::kWord) {
      fn(std::string_view(t.form));
      continue;
    }
    const bool has_lemma = !t.lemma.empty() && t.lemma != "_";
    if (!has_lemma) {
      fn(std::string_view(t.form));
      continue;
    }
    const bool has_xpos = !t.xpos.empty() && t.xpos != "_";
    for (const auto& [segment, tag] : split_segments(t.lemma, has_xpos ? t.xpos : t.lemma).parts)
      fn(std::string_view(segment));
  }
}

}  // namespace

std::string corpus_line(const Sentence& sentence, CorpusMode mode) {
  std::string line;
  for_each_unit(sentence, mode, [&](std::string_view unit) {
    if (!line.empty()) line += ' ';
    line += unit;
  });
  return line;
}

CorpusStats export_corpus(std::span<const Sentence> sentences, CorpusMode mode,
                          std::ostream& out) {
  CorpusStats stats;
  for (const auto& s : sentences) {
    bool first = true;
    for_each_unit(s, mode, [&](std::string_view unit) {
      if (!first) out << ' ';
      out << unit;
      first = false;
      ++stats.tokens;
    });
    out << '\n';
    ++stats.lines;
  }
  return stats;
}

}  // namespace morphud
