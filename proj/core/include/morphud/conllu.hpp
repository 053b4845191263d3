#pragma once

// Reading and writing CoNLL-U treebanks.
//
// Fields are kept as the raw column strings ("_" stays "_"); only ID and
// HEAD are parsed to integers. Emission renders empty fields as "_", so
// parse(emit(s)) == s for every sentence that came out of the parser.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace morphud {

struct Token {
  int id = 0;
  std::string form;
  std::string lemma;
  std::string upos;
  std::string xpos;
  std::string feats;
  int head = 0;
  std::string deprel;
  std::string deps;
  std::string misc;

  friend bool operator==(const Token&, const Token&) = default;
};

struct Sentence {
  std::vector<std::string> comments;  // raw lines, including the leading '#'
  std::vector<Token> tokens;

  /// Value of "# sent_id = ..." if present.
  std::optional<std::string> sent_id() const;
  /// Value of "# text = ..." if present.
  std::optional<std::string> text() const;

  std::size_t size() const noexcept { return tokens.size(); }
  const Token& at(int id) const { return tokens.at(static_cast<std::size_t>(id - 1)); }

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

enum class ParseMode {
  /// Every sentence must be a single-rooted tree; multiword tokens and
  /// empty nodes are errors.
  kStrict,
  /// Column-level checks only. Multiword tokens and empty nodes are skipped
  /// with a warning; root count, cycles and root labels are not checked.
  kLenient,
};

struct ParseOptions {
  ParseMode mode = ParseMode::kStrict;
  /// Receives one message per skipped line in lenient mode.
  std::vector<std::string>* warnings = nullptr;
};

std::vector<Sentence> parse_conllu(std::istream& in, const ParseOptions& options = {});
std::vector<Sentence> parse_conllu(std::string_view text, const ParseOptions& options = {});
std::vector<Sentence> read_conllu_file(const std::filesystem::path& path,
                                       const ParseOptions& options = {});

void write_conllu(std::ostream& out, std::span<const Sentence> sentences);
void write_sentence(std::ostream& out, const Sentence& sentence);
std::string emit_conllu(std::span<const Sentence> sentences);
void write_conllu_file(const std::filesystem::path& path, std::span<const Sentence> sentences);

/// True for "root" and subtyped labels such as "root:foo".
bool is_root_deprel(std::string_view deprel) noexcept;

/// Label up to the first ':' ("nmod:poss" -> "nmod").
std::string_view main_relation(std::string_view deprel) noexcept;

/// Describes the first tree-invariant violation (root count, root label,
/// self-loop, cycle, head range), or nullopt for a valid tree.
std::optional<std::string> find_tree_violation(const Sentence& sentence);

/// Human-readable sentence reference for diagnostics: sent_id when present,
/// otherwise "#<ordinal>" (1-based).
std::string sentence_ref(const Sentence& sentence, std::size_t ordinal);

// MISC column helpers. An entry without '=' is treated as a key with an
// empty value.
std::vector<std::string> misc_items(std::string_view misc);
std::optional<std::string> misc_value(std::string_view misc, std::string_view key);
std::string join_misc(std::span<const std::string> items);

}  // namespace morphud
