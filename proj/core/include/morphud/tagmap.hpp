#pragma once

// Mapping from language-specific morpheme tags (Sejong, KAIST, ...) to a
// universal POS, an intra-eojeol dependent role and a head-priority class.
//
// File format, one entry per line, '#' starts a comment:
//
//   XTAG <tab> UPOS <tab> ROLE [<tab> CLASS]
//   @fallback <tab> CLASS <tab> CLASS ...     order of the fallback classes
//   @default  <tab> UPOS <tab> ROLE [<tab> CLASS]   entry for unknown tags
//
// ROLE is one of compound, case, aux, punct, dep. CLASS is one of nominal,
// verbal, pron, adj, adv, num, other, function, punct; when omitted it is
// derived from UPOS.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace morphud {

/// Relation a non-head morpheme takes towards the head of its eojeol.
enum class Role { kCompound, kCase, kAux, kPunct, kDep };

/// Head-eligibility class. Nominal and verbal are tried first, then the
/// configured fallback classes, then function words; punctuation never
/// heads a word that has anything else in it.
enum class HeadClass { kNominal, kVerbal, kPronoun, kAdjective, kAdverb, kNumeral, kOther, kFunction, kPunctuation };

std::string_view to_string(Role role) noexcept;
std::string_view to_string(HeadClass cls) noexcept;
std::optional<Role> parse_role(std::string_view name) noexcept;
std::optional<HeadClass> parse_head_class(std::string_view name) noexcept;

/// The 17 universal POS tags.
bool is_universal_pos(std::string_view upos) noexcept;

/// Head class implied by a universal POS tag ("_" and unknown -> kOther).
HeadClass head_class_for_upos(std::string_view upos) noexcept;

struct TagEntry {
  std::string upos;
  Role role = Role::kDep;
  HeadClass head_class = HeadClass::kOther;

  friend bool operator==(const TagEntry&, const TagEntry&) = default;
};

class TagMap {
 public:
  /// Empty map: every tag resolves to the default entry (X, dep, other)
  /// and the fallback order is pron, adj, adv, num, other.
  TagMap();

  static TagMap parse(std::istream& in, std::string_view source = "<tagmap>");
  static TagMap parse(std::string_view text, std::string_view source = "<tagmap>");
  static TagMap load(const std::filesystem::path& path);

  /// Built-in profiles: "sejong" (ko_gsd XPOS) and "kaist" (ko_kaist XPOS).
  static std::optional<TagMap> builtin(std::string_view name);
  /// `spec` names a built-in profile or a file path.
  static TagMap resolve(std::string_view spec);

  /// Adds or replaces an entry. Throws TagMapError if the entry breaks the
  /// class constraints (content POS must be head-eligible, function POS
  /// must be last-resort).
  void set(std::string xtag, TagEntry entry);
  void set_default(TagEntry entry);
  void set_fallback_order(std::vector<HeadClass> order);

  bool contains(std::string_view xtag) const;
  /// Entry for `xtag`, or the default entry for unknown tags.
  const TagEntry& lookup(std::string_view xtag) const;
  const TagEntry& default_entry() const noexcept { return default_; }
  std::span<const HeadClass> fallback_order() const noexcept { return fallback_; }
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::unordered_map<std::string, TagEntry, Hash, std::equal_to<>> entries_;
  TagEntry default_;
  std::vector<HeadClass> fallback_;
};

namespace detail {
std::string_view sejong_profile_text();
std::string_view kaist_profile_text();
}  // namespace detail

}  // namespace morphud
