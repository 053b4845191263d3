#include "synthetic.hpp"

#include <algorithm>
#include <array>
#include <string_view>

namespace morphud::testing {

namespace {

struct Piece {
  std::string_view tag;
  std::string_view upos;  // word-level UPOS when this piece leads the word
};

constexpr std::array<Piece, 15> kContent = {{
    {"NNG", "NOUN"}, {"NNG", "NOUN"}, {"NNG", "NOUN"}, {"NNP", "PROPN"}, {"NNB", "NOUN"},
    {"NP", "PRON"},  {"NR", "NUM"},   {"VV", "VERB"},  {"VV", "VERB"},   {"VA", "ADJ"},
    {"VX", "AUX"},   {"MAG", "ADV"},  {"MM", "DET"},   {"SL", "X"},      {"XR", "NOUN"},
}};

constexpr std::array<std::string_view, 7> kParticles = {"JKS", "JKO", "JKB", "JKG", "JX", "JC", "JKQ"};
constexpr std::array<std::string_view, 4> kEndings = {"EF", "EC", "ETM", "ETN"};
constexpr std::array<std::string_view, 16> kDeprels = {
    "nsubj", "obj",  "obl",      "nmod", "advmod", "amod", "acl",   "advcl",
    "compound", "det", "cc", "conj", "dep", "flat", "nmod:poss", "obl:tmod"};

std::string syllables(std::mt19937_64& rng, int min, int max) {
  std::uniform_int_distribution<int> count(min, max);
  std::uniform_int_distribution<char32_t> syllable(0xAC00, 0xD7A3);
  std::string out;
  for (int i = count(rng); i > 0; --i) {
    char32_t c = syllable(rng);
    out += static_cast<char>(0xE0 | (c >> 12));
    out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (c & 0x3F));
  }
  return out;
}

template <typename C>
auto pick(std::mt19937_64& rng, const C& c) {
  std::uniform_int_distribution<std::size_t> d(0, c.size() - 1);
  return c[d(rng)];
}

bool chance(std::mt19937_64& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

struct Word {
  std::vector<std::string> segments;
  std::vector<std::string> tags;
  std::string upos;
};

Word random_word(std::mt19937_64& rng, bool last) {
  Word w;
  auto add = [&](std::string seg, std::string_view tag) {
    w.segments.push_back(std::move(seg));
    w.tags.emplace_back(tag);
  };
  const int shape = std::uniform_int_distribution<int>(0, 99)(rng);
  if (shape < 4) {  // bare particle
    add(syllables(rng, 1, 1), pick(rng, kParticles));
    w.upos = "ADP";
  } else if (shape < 8) {  // punctuation
    add(".", "SF");
    w.upos = "PUNCT";
  } else {
    if (chance(rng, 0.05)) add(syllables(rng, 1, 1), "XPN");
    const Piece head = pick(rng, kContent);
    add(syllables(rng, 1, 3), head.tag);
    w.upos = head.upos;
    const bool verbal = head.tag == "VV" || head.tag == "VA" || head.tag == "VX";
    if (!verbal && chance(rng, 0.25)) add(syllables(rng, 1, 2), "NNG");  // compound noun
    if (!verbal && chance(rng, 0.15)) add(syllables(rng, 1, 1), "XSN");
    if (verbal) {
      if (chance(rng, 0.4)) add(syllables(rng, 1, 1), "EP");
      add(syllables(rng, 1, 1), pick(rng, kEndings));
    } else if (head.tag != "MAG" && head.tag != "MM") {
      if (chance(rng, 0.2)) {
        add("이", "VCP");
        add(syllables(rng, 1, 1), pick(rng, kEndings));
      } else if (chance(rng, 0.7)) {
        add(syllables(rng, 1, 1), pick(rng, kParticles));
      }
    }
    if (last && chance(rng, 0.3)) add(".", "SF");
  }
  return w;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::vector<int> random_heads(std::mt19937_64& rng, int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> heads(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t k = 1; k < order.size(); ++k) {
    std::uniform_int_distribution<std::size_t> d(0, k - 1);
    heads[static_cast<std::size_t>(order[k])] = order[d(rng)];
  }
  return heads;
}

Sentence random_word_sentence(std::mt19937_64& rng, const SyntheticOptions& options,
                              const std::string& sent_id) {
  const int n = std::uniform_int_distribution<int>(options.min_words, options.max_words)(rng);
  const auto heads = random_heads(rng, n);
  Sentence s;
  s.comments.push_back("# sent_id = " + sent_id);
  std::string text;
  for (int i = 1; i <= n; ++i) {
    Word w = random_word(rng, i == n);
    if (chance(rng, options.unknown_tag_rate)) w.tags.back() = "ZZ";
    Token t;
    t.id = i;
    t.form = join(w.segments, "");
    t.lemma = join(w.segments, "+");
    t.upos = w.upos;
    t.xpos = join(w.tags, "+");
    if (w.segments.size() > 1 && chance(rng, options.mismatch_rate)) t.xpos += "+SW";
    t.feats = chance(rng, 0.1) ? "Polite=Form" : "_";
    t.head = heads[static_cast<std::size_t>(i)];
    t.deprel = t.head == 0 ? "root" : std::string(pick(rng, kDeprels));
    t.deps = "_";
    const bool glued = i < n && chance(rng, 0.1);
    t.misc = glued ? "SpaceAfter=No" : (chance(rng, 0.05) ? "Translit=x" : "_");
    text += t.form;
    if (i < n && !glued) text += ' ';
    s.tokens.push_back(std::move(t));
  }
  s.comments.push_back("# text = " + text);
  return s;
}

std::vector<Sentence> random_treebank(std::uint64_t seed, std::size_t sentences,
                                      const SyntheticOptions& options) {
  std::mt19937_64 rng(seed);
  std::vector<Sentence> out;
  out.reserve(sentences);
  for (std::size_t i = 0; i < sentences; ++i)
    out.push_back(random_word_sentence(rng, options, "synthetic-" + std::to_string(i + 1)));
  return out;
}

std::vector<Sentence> corrupt_heads(std::span<const Sentence> sentences, double fraction,
                                    std::uint64_t seed, bool strip_misc) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Sentence> out(sentences.begin(), sentences.end());
  for (auto& s : out) {
    const int n = static_cast<int>(s.size());
    for (auto& t : s.tokens) {
      const double u = unit(rng);
      // Target drawn from {0..n} minus {id, current head}; always drawn so
      // the stream does not depend on `fraction`.
      std::vector<int> options;
      for (int h = 0; h <= n; ++h)
        if (h != t.id && h != t.head) options.push_back(h);
      const int target =
          options.empty() ? t.head
                          : options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
      if (u < fraction) t.head = target;
      if (strip_misc) t.misc = "_";
    }
  }
  return out;
}

}  // namespace morphud::testing
