#include "morphud/word2morph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include "morphud/error.hpp"
#include "morphud/morphsplit.hpp"

namespace morphud {

namespace {

bool is_space_after(std::string_view item) {
  return item.substr(0, item.find('=')) == kMiscSpaceAfter;
}

std::string misc_entry(std::string_view key, std::string_view value) {
  std::string out(key);
  out += '=';
  out += value;
  return out;
}

}  // namespace

int AlignmentMap::word_of(int morph_id) const noexcept {
  auto it = std::upper_bound(words.begin(), words.end(), morph_id,
                             [](int id, const WordSpan& w) { return id < w.first; });
  if (it == words.begin()) return 0;
  --it;
  return it->contains(morph_id) ? static_cast<int>(it - words.begin()) + 1 : 0;
}

void AlignmentMap::validate() const {
  int expected = 1;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto& w = words[i];
    const std::string where = "word " + std::to_string(i + 1) + ": ";
    if (w.first != expected)
      throw AlignmentError(where + "span starts at " + std::to_string(w.first) + ", expected " +
                           std::to_string(expected));
    if (w.last < w.first) throw AlignmentError(where + "empty span");
    if (!w.contains(w.head))
      throw AlignmentError(where + "head morpheme " + std::to_string(w.head) +
                           " lies outside its span");
    expected = w.last + 1;
  }
  if (expected - 1 != total)
    throw AlignmentError("spans cover " + std::to_string(expected - 1) + " morphemes, expected " +
                         std::to_string(total));
}

ConvertedSentence convert_sentence(const Sentence& sentence, const TagMap& tagmap) {
  ConvertedSentence result;
  std::vector<MorphemeAnalysis> analyses;
  analyses.reserve(sentence.tokens.size());
  try {
    for (const auto& word : sentence.tokens) analyses.push_back(segment_token(word, tagmap));
  } catch (const ConversionError& e) {
    throw ConversionError(sentence.sent_id().value_or(""), e.token(), e.message());
  }

  auto& alignment = result.alignment;
  alignment.words.reserve(analyses.size());
  int next = 1;
  bool identity = true;
  for (const auto& a : analyses) {
    const int n = static_cast<int>(a.morphemes.size());
    alignment.words.push_back({next, next + n - 1, next + static_cast<int>(a.head_index)});
    next += n;
    identity = identity && n == 1;
    if (a.count_mismatch) ++result.mismatches;
    result.unknown_tags.insert(result.unknown_tags.end(), a.unknown_tags.begin(),
                               a.unknown_tags.end());
  }
  alignment.total = next - 1;

  Sentence& out = result.sentence;
  out.comments = sentence.comments;
  out.tokens.reserve(static_cast<std::size_t>(alignment.total));

  for (std::size_t wi = 0; wi < sentence.tokens.size(); ++wi) {
    const Token& word = sentence.tokens[wi];
    const MorphemeAnalysis& a = analyses[wi];
    const WordSpan& span = alignment.words[wi];
    const int external_head =
        word.head == 0 ? 0 : alignment.words[static_cast<std::size_t>(word.head - 1)].head;

    std::vector<std::string> extras;
    std::string space_after;
    for (auto& item : misc_items(word.misc)) {
      if (is_space_after(item))
        space_after = std::move(item);
      else
        extras.push_back(std::move(item));
    }

    for (std::size_t j = 0; j < a.morphemes.size(); ++j) {
      const Morpheme& m = a.morphemes[j];
      const bool is_head = j == a.head_index;
      const bool is_last = j + 1 == a.morphemes.size();
      Token t;
      t.id = span.first + static_cast<int>(j);
      if (a.morphemes.size() == 1) {
        t.form = word.form;
        t.lemma = word.lemma;
        t.upos = word.upos;
        t.xpos = word.xpos;
        t.feats = word.feats;
        t.deps = identity ? word.deps : "_";
      } else {
        t.form = m.segment;
        t.lemma = m.segment;
        t.upos = m.upos;
        t.xpos = m.xtag;
        t.feats = is_head ? word.feats : "_";
        t.deps = "_";
      }
      if (is_head) {
        t.head = external_head;
        t.deprel = word.deprel;
      } else {
        t.head = span.head;
        t.deprel = intra_eojeol_deprel(m, j < a.head_index ? HeadSide::kAfter : HeadSide::kBefore);
      }

      std::vector<std::string> misc;
      misc.push_back(misc_entry(kMiscEojeol, std::to_string(word.id)));
      misc.push_back(misc_entry(kMiscMorphRole, is_head ? "Head" : "Dep"));
      if (j == 0) misc.push_back(misc_entry(kMiscOrigForm, word.form));
      if (is_head) misc.insert(misc.end(), extras.begin(), extras.end());
      if (!is_last)
        misc.push_back(misc_entry(kMiscSpaceAfter, "No"));
      else if (!space_after.empty())
        misc.push_back(space_after);
      t.misc = join_misc(misc);
      out.tokens.push_back(std::move(t));
    }
  }
  return result;
}

void ConversionSummary::merge(const ConversionSummary& other) {
  sentences += other.sentences;
  words += other.words;
  morphemes += other.morphemes;
  mismatches += other.mismatches;
  skipped += other.skipped;
  for (const auto& [tag, n] : other.unknown_tags) unknown_tags[tag] += n;
}

ConversionSummary convert_treebank(std::span<const Sentence> input, const TagMap& tagmap,
                                   std::vector<Sentence>& output, const ConvertOptions& options) {
  ConversionSummary summary;
  output.reserve(output.size() + input.size());
  for (std::size_t i = 0; i < input.size(); ++i) {
    const Sentence& s = input[i];
    const std::string ref = sentence_ref(s, i + 1);
    ConvertedSentence converted;
    try {
      converted = convert_sentence(s, tagmap);
    } catch (const ConversionError& e) {
      if (!options.skip_bad) throw ConversionError(ref, e.token(), e.message());
      ++summary.skipped;
      if (options.warnings)
        options.warnings->push_back(std::string("skipped ") +
                                    ConversionError(ref, e.token(), e.message()).what());
      continue;
    }
    ++summary.sentences;
    summary.words += s.tokens.size();
    summary.morphemes += converted.sentence.tokens.size();
    summary.mismatches += converted.mismatches;
    for (const auto& tag : converted.unknown_tags) ++summary.unknown_tags[tag];
    if (converted.mismatches > 0 && options.warnings)
      options.warnings->push_back("sentence " + ref + ": " + std::to_string(converted.mismatches) +
                                  " word(s) with lemma/XPOS segment mismatch kept whole");
    output.push_back(std::move(converted.sentence));
  }
  return summary;
}

ConversionSummary convert_treebank(std::istream& in, std::ostream& out, const TagMap& tagmap,
                                   const ConvertOptions& options) {
  const auto input = parse_conllu(in);
  std::vector<Sentence> output;
  auto summary = convert_treebank(input, tagmap, output, options);
  write_conllu(out, output);
  return summary;
}

ConversionSummary convert_treebank(const std::filesystem::path& in,
                                   const std::filesystem::path& out, const TagMap& tagmap,
                                   const ConvertOptions& options) {
  const auto input = read_conllu_file(in);
  std::vector<Sentence> output;
  auto summary = convert_treebank(input, tagmap, output, options);
  write_conllu_file(out, output);
  return summary;
}

std::string surface_text(const Sentence& morph_sentence) {
  std::string text;
  for (const auto& t : morph_sentence.tokens) {
    if (auto form = misc_value(t.misc, kMiscOrigForm)) text += *form;
    const bool glued = misc_value(t.misc, kMiscSpaceAfter) == std::optional<std::string>("No");
    if (!glued && t.id != static_cast<int>(morph_sentence.size())) text += ' ';
  }
  return text;
}

std::string word_text(const Sentence& word_sentence) {
  std::string text;
  for (const auto& t : word_sentence.tokens) {
    text += t.form;
    const bool glued = misc_value(t.misc, kMiscSpaceAfter) == std::optional<std::string>("No");
    if (!glued && t.id != static_cast<int>(word_sentence.size())) text += ' ';
  }
  return text;
}

}  // namespace morphud
