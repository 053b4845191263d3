#include "morphud/morph2word.hpp"

#include <algorithm>
#include <charconv>

#include "morphud/error.hpp"
#include "morphud/morphsplit.hpp"

namespace morphud {

namespace {

std::optional<int> parse_positive(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || value < 1) return std::nullopt;
  return value;
}

HeadClass classify(const Token& morph, const TagMap* tagmap) {
  if (tagmap && tagmap->contains(morph.xpos)) return tagmap->lookup(morph.xpos).head_class;
  return head_class_for_upos(morph.upos);
}

std::span<const HeadClass> fallback_of(const TagMap* tagmap) {
  static const TagMap defaults;
  return (tagmap ? *tagmap : defaults).fallback_order();
}

/// Morpheme id the head rules pick inside `span`.
int preferred_head(const Sentence& morph, const WordSpan& span, const TagMap* tagmap) {
  std::vector<HeadClass> classes;
  classes.reserve(static_cast<std::size_t>(span.size()));
  for (int m = span.first; m <= span.last; ++m) classes.push_back(classify(morph.at(m), tagmap));
  return span.first + static_cast<int>(select_head(classes, fallback_of(tagmap)).index);
}

AlignmentMap pair_from_misc(const Sentence& word, const Sentence& morph, const TagMap* tagmap) {
  AlignmentMap map;
  map.total = static_cast<int>(morph.size());
  const int n_words = static_cast<int>(word.size());
  std::vector<int> explicit_head;
  for (const auto& t : morph.tokens) {
    auto value = misc_value(t.misc, kMiscEojeol);
    auto w = value ? parse_positive(*value) : std::nullopt;
    if (!w)
      throw AlignmentError("morpheme " + std::to_string(t.id) + ": invalid Eojeol value");
    const int current = static_cast<int>(map.words.size());
    if (*w == current) {
      map.words.back().last = t.id;
    } else if (*w == current + 1 && *w <= n_words) {
      map.words.push_back({t.id, t.id, 0});
      explicit_head.push_back(0);
    } else {
      throw AlignmentError("morpheme " + std::to_string(t.id) + ": Eojeol=" + *value +
                           " out of order (expected " + std::to_string(current) + " or " +
                           std::to_string(current + 1) + ")");
    }
    if (misc_value(t.misc, kMiscMorphRole) == std::optional<std::string>("Head")) {
      int& h = explicit_head.back();
      h = h == 0 ? t.id : -1;  // -1: more than one
    }
  }
  if (static_cast<int>(map.words.size()) != n_words)
    throw AlignmentError("morpheme sentence covers " + std::to_string(map.words.size()) +
                         " words, skeleton has " + std::to_string(n_words));
  for (std::size_t i = 0; i < map.words.size(); ++i) {
    auto& span = map.words[i];
    span.head = explicit_head[i] > 0 ? explicit_head[i] : preferred_head(morph, span, tagmap);
  }
  return map;
}

AlignmentMap pair_from_segments(const Sentence& word, const Sentence& morph,
                                const TagMap* tagmap) {
  AlignmentMap map;
  map.total = static_cast<int>(morph.size());
  int next = 1;
  for (const auto& w : word.tokens) {
    const int count = static_cast<int>(segment_count(w));
    const int remaining = map.total - next + 1;
    if (count > remaining)
      throw AlignmentError("word " + std::to_string(w.id) + " needs " + std::to_string(count) +
                           " morphemes but only " + std::to_string(remaining) + " remain");
    WordSpan span{next, next + count - 1, 0};
    span.head = preferred_head(morph, span, tagmap);
    map.words.push_back(span);
    next += count;
  }
  if (next - 1 != map.total)
    throw AlignmentError("morpheme count mismatch: skeleton segments into " +
                         std::to_string(next - 1) + " morphemes, sentence has " +
                         std::to_string(map.total));
  return map;
}

}  // namespace

AlignmentMap pair_tokens(const Sentence& word_sentence, const Sentence& morph_sentence,
                         const TagMap* tagmap) {
  std::size_t keyed = 0;
  for (const auto& t : morph_sentence.tokens)
    if (misc_value(t.misc, kMiscEojeol)) ++keyed;
  if (keyed == 0) return pair_from_segments(word_sentence, morph_sentence, tagmap);
  if (keyed != morph_sentence.size())
    throw AlignmentError("only " + std::to_string(keyed) + " of " +
                         std::to_string(morph_sentence.size()) + " morphemes carry " +
                         std::string(kMiscEojeol));
  return pair_from_misc(word_sentence, morph_sentence, tagmap);
}

void RepairReport::merge(const RepairReport& other) {
  no_external_arc += other.no_external_arc;
  multiple_external_arcs += other.multiple_external_arcs;
  self_loops += other.self_loops;
  extra_roots += other.extra_roots;
  cycles += other.cycles;
  promoted_roots += other.promoted_roots;
  root_labels += other.root_labels;
  events.insert(events.end(), other.events.begin(), other.events.end());
}

RevertResult revert_sentence(const Sentence& morph_sentence, const Sentence& word_skeleton,
                             const AlignmentMap& alignment) {
  const int n = static_cast<int>(word_skeleton.size());
  if (static_cast<int>(alignment.words.size()) != n ||
      alignment.total != static_cast<int>(morph_sentence.size()))
    throw AlignmentError("alignment does not cover the given sentences");

  RevertResult result;
  RepairReport& rep = result.repairs;
  auto note = [&](int word, const std::string& what) {
    rep.events.push_back("word " + std::to_string(word) + ": " + what);
  };

  std::vector<int> head(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::string> deprel(static_cast<std::size_t>(n) + 1);

  for (int w = 1; w <= n; ++w) {
    const WordSpan& span = alignment.words[static_cast<std::size_t>(w - 1)];
    std::vector<int> external;
    for (int m = span.first; m <= span.last; ++m) {
      const int h = morph_sentence.at(m).head;
      if (h == 0 || !span.contains(h)) external.push_back(m);
    }
    int representative = external.empty() ? 0 : external.front();
    if (external.size() != 1) {
      const int preferred = span.head;
      if (external.empty()) {
        ++rep.no_external_arc;
        representative = preferred;
        note(w, "no arc leaves the word; using morpheme " + std::to_string(preferred));
      } else {
        ++rep.multiple_external_arcs;
        if (std::find(external.begin(), external.end(), preferred) != external.end())
          representative = preferred;
        note(w, std::to_string(external.size()) + " arcs leave the word; using morpheme " +
                    std::to_string(representative));
      }
    }
    const Token& r = morph_sentence.at(representative);
    head[static_cast<std::size_t>(w)] = r.head == 0 ? 0 : alignment.word_of(r.head);
    deprel[static_cast<std::size_t>(w)] = r.deprel;
  }

  // Single root: the first root word wins.
  int root = 0;
  for (int w = 1; w <= n; ++w) {
    if (head[static_cast<std::size_t>(w)] != 0) continue;
    if (root == 0) {
      root = w;
      continue;
    }
    ++rep.extra_roots;
    head[static_cast<std::size_t>(w)] = root;
    if (is_root_deprel(deprel[static_cast<std::size_t>(w)]))
      deprel[static_cast<std::size_t>(w)] = "dep";
    note(w, "second root reattached to word " + std::to_string(root));
  }

  auto attach_or_promote = [&](int w) {
    if (root == 0) {
      root = w;
      head[static_cast<std::size_t>(w)] = 0;
      deprel[static_cast<std::size_t>(w)] = "root";
      ++rep.promoted_roots;
      note(w, "promoted to root");
    } else {
      head[static_cast<std::size_t>(w)] = root;
      deprel[static_cast<std::size_t>(w)] = "dep";
    }
  };

  for (int w = 1; w <= n; ++w) {
    if (head[static_cast<std::size_t>(w)] != w) continue;
    ++rep.self_loops;
    note(w, "self-loop");
    attach_or_promote(w);
  }

  // Break remaining cycles at their smallest word id.
  std::vector<char> state(static_cast<std::size_t>(n) + 1, 0);
  state[0] = 2;
  for (int start = 1; start <= n; ++start) {
    std::vector<int> path;
    int node = start;
    while (state[static_cast<std::size_t>(node)] == 0) {
      state[static_cast<std::size_t>(node)] = 1;
      path.push_back(node);
      node = head[static_cast<std::size_t>(node)];
    }
    if (state[static_cast<std::size_t>(node)] == 1) {
      auto begin = std::find(path.begin(), path.end(), node);
      const int breaker = *std::min_element(begin, path.end());
      ++rep.cycles;
      note(breaker, "cycle broken");
      attach_or_promote(breaker);
    }
    for (int p : path) state[static_cast<std::size_t>(p)] = 2;
  }

  // Root label iff attached to the virtual root.
  for (int w = 1; w <= n; ++w) {
    auto& label = deprel[static_cast<std::size_t>(w)];
    const bool is_root = head[static_cast<std::size_t>(w)] == 0;
    if (is_root && !is_root_deprel(label)) {
      label = "root";
      ++rep.root_labels;
      note(w, "root label restored");
    } else if (!is_root && is_root_deprel(label)) {
      label = "dep";
      ++rep.root_labels;
      note(w, "root label on a non-root word replaced by dep");
    }
  }

  result.sentence.comments = word_skeleton.comments;
  result.sentence.tokens = word_skeleton.tokens;
  for (auto& t : result.sentence.tokens) {
    t.head = head[static_cast<std::size_t>(t.id)];
    t.deprel = deprel[static_cast<std::size_t>(t.id)];
  }
  return result;
}

RevertSummary revert_treebank(std::span<const Sentence> morph, std::span<const Sentence> skeleton,
                              std::vector<Sentence>& output, const TagMap* tagmap) {
  if (morph.size() != skeleton.size())
    throw AlignmentError("morpheme file has " + std::to_string(morph.size()) +
                         " sentences, skeleton has " + std::to_string(skeleton.size()));
  RevertSummary summary;
  output.reserve(output.size() + morph.size());
  for (std::size_t i = 0; i < morph.size(); ++i) {
    const std::string ref = sentence_ref(skeleton[i], i + 1);
    AlignmentMap alignment;
    try {
      alignment = pair_tokens(skeleton[i], morph[i], tagmap);
    } catch (const AlignmentError& e) {
      throw AlignmentError("sentence " + ref + ": " + e.what());
    }
    auto reverted = revert_sentence(morph[i], skeleton[i], alignment);
    for (auto& e : reverted.repairs.events) e = "sentence " + ref + ": " + e;
    ++summary.sentences;
    summary.words += skeleton[i].size();
    summary.morphemes += morph[i].size();
    summary.repairs.merge(reverted.repairs);
    output.push_back(std::move(reverted.sentence));
  }
  return summary;
}

RevertSummary revert_treebank(const std::filesystem::path& morph,
                              const std::filesystem::path& skeleton,
                              const std::filesystem::path& out, const TagMap* tagmap) {
  const auto predicted = read_conllu_file(morph, {.mode = ParseMode::kLenient});
  const auto words = read_conllu_file(skeleton);
  std::vector<Sentence> output;
  auto summary = revert_treebank(predicted, words, output, tagmap);
  write_conllu_file(out, output);
  return summary;
}

}  // namespace morphud
