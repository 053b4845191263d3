#include "morphud/tagmap.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <sstream>

#include "morphud/error.hpp"

namespace morphud {

namespace {

constexpr std::array<std::string_view, 17> kUniversalPos = {
    "ADJ", "ADP", "ADV", "AUX", "CCONJ", "DET", "INTJ", "NOUN", "NUM",
    "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X"};

constexpr std::array<std::pair<Role, std::string_view>, 5> kRoleNames = {{
    {Role::kCompound, "compound"},
    {Role::kCase, "case"},
    {Role::kAux, "aux"},
    {Role::kPunct, "punct"},
    {Role::kDep, "dep"},
}};

constexpr std::array<std::pair<HeadClass, std::string_view>, 9> kClassNames = {{
    {HeadClass::kNominal, "nominal"},
    {HeadClass::kVerbal, "verbal"},
    {HeadClass::kPronoun, "pron"},
    {HeadClass::kAdjective, "adj"},
    {HeadClass::kAdverb, "adv"},
    {HeadClass::kNumeral, "num"},
    {HeadClass::kOther, "other"},
    {HeadClass::kFunction, "function"},
    {HeadClass::kPunctuation, "punct"},
}};

bool is_fallback_class(HeadClass cls) {
  switch (cls) {
    case HeadClass::kPronoun:
    case HeadClass::kAdjective:
    case HeadClass::kAdverb:
    case HeadClass::kNumeral:
    case HeadClass::kOther:
      return true;
    default:
      return false;
  }
}

bool is_content_pos(std::string_view upos) {
  return upos == "NOUN" || upos == "PROPN" || upos == "VERB" || upos == "PRON" ||
         upos == "ADJ" || upos == "ADV" || upos == "NUM";
}

bool is_function_pos(std::string_view upos) {
  return upos == "ADP" || upos == "CCONJ" || upos == "SCONJ" || upos == "PART";
}

void check_entry(std::string_view xtag, const TagEntry& e) {
  auto where = [&] { return "tag '" + std::string(xtag) + "': "; };
  if (!is_universal_pos(e.upos))
    throw TagMapError(where() + "'" + e.upos + "' is not a universal POS tag");
  if (is_content_pos(e.upos) &&
      (e.head_class == HeadClass::kFunction || e.head_class == HeadClass::kPunctuation))
    throw TagMapError(where() + e.upos + " must be head-eligible, not class " +
                      std::string(to_string(e.head_class)));
  if (is_function_pos(e.upos) && e.head_class != HeadClass::kFunction)
    throw TagMapError(where() + e.upos + " must be in the function (last-resort) class");
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= line.size()) {
    auto pos = line.find('\t', start);
    if (pos == std::string_view::npos) pos = line.size();
    auto field = line.substr(start, pos - start);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    out.push_back(field);
    start = pos + 1;
  }
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

TagEntry entry_from_fields(std::span<const std::string_view> f, const std::string& where) {
  if (f.size() < 2 || f.size() > 3)
    throw TagMapError(where + "expected UPOS, ROLE and optional CLASS");
  TagEntry e;
  e.upos = std::string(f[0]);
  auto role = parse_role(f[1]);
  if (!role) throw TagMapError(where + "unknown role '" + std::string(f[1]) + "'");
  e.role = *role;
  if (f.size() == 3) {
    auto cls = parse_head_class(f[2]);
    if (!cls) throw TagMapError(where + "unknown head class '" + std::string(f[2]) + "'");
    e.head_class = *cls;
  } else {
    e.head_class = head_class_for_upos(e.upos);
  }
  return e;
}

}  // namespace

std::string_view to_string(Role role) noexcept {
  for (const auto& [r, name] : kRoleNames)
    if (r == role) return name;
  return "dep";
}

std::string_view to_string(HeadClass cls) noexcept {
  for (const auto& [c, name] : kClassNames)
    if (c == cls) return name;
  return "other";
}

std::optional<Role> parse_role(std::string_view name) noexcept {
  for (const auto& [r, n] : kRoleNames)
    if (n == name) return r;
  return std::nullopt;
}

std::optional<HeadClass> parse_head_class(std::string_view name) noexcept {
  for (const auto& [c, n] : kClassNames)
    if (n == name) return c;
  return std::nullopt;
}

bool is_universal_pos(std::string_view upos) noexcept {
  return std::find(kUniversalPos.begin(), kUniversalPos.end(), upos) != kUniversalPos.end();
}

HeadClass head_class_for_upos(std::string_view upos) noexcept {
  if (upos == "NOUN" || upos == "PROPN") return HeadClass::kNominal;
  if (upos == "VERB") return HeadClass::kVerbal;
  if (upos == "PRON") return HeadClass::kPronoun;
  if (upos == "ADJ") return HeadClass::kAdjective;
  if (upos == "ADV") return HeadClass::kAdverb;
  if (upos == "NUM") return HeadClass::kNumeral;
  if (is_function_pos(upos)) return HeadClass::kFunction;
  if (upos == "PUNCT") return HeadClass::kPunctuation;
  return HeadClass::kOther;
}

TagMap::TagMap()
    : default_{"X", Role::kDep, HeadClass::kOther},
      fallback_{HeadClass::kPronoun, HeadClass::kAdjective, HeadClass::kAdverb,
                HeadClass::kNumeral, HeadClass::kOther} {}

TagMap TagMap::parse(std::istream& in, std::string_view source) {
  TagMap map;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view v = line;
    auto first = v.find_first_not_of(" \t");
    if (first == std::string_view::npos || v[first] == '#') continue;
    const std::string where = std::string(source) + ":" + std::to_string(lineno) + ": ";
    auto fields = split_fields(v.substr(first));
    try {
      if (fields[0] == "@fallback") {
        std::vector<HeadClass> order;
        for (auto name : std::span(fields).subspan(1)) {
          auto cls = parse_head_class(name);
          if (!cls) throw TagMapError("unknown head class '" + std::string(name) + "'");
          order.push_back(*cls);
        }
        map.set_fallback_order(std::move(order));
      } else if (fields[0] == "@default") {
        map.set_default(entry_from_fields(std::span(fields).subspan(1), ""));
      } else if (fields[0].starts_with('@')) {
        throw TagMapError("unknown directive '" + std::string(fields[0]) + "'");
      } else {
        std::string xtag(fields[0]);
        if (map.contains(xtag)) throw TagMapError("duplicate tag '" + xtag + "'");
        map.set(std::move(xtag), entry_from_fields(std::span(fields).subspan(1), ""));
      }
    } catch (const TagMapError& e) {
      throw TagMapError(where + e.what());
    }
  }
  return map;
}

TagMap TagMap::parse(std::string_view text, std::string_view source) {
  std::istringstream in{std::string(text)};
  return parse(in, source);
}

TagMap TagMap::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw TagMapError("cannot open tag map " + path.string());
  return parse(in, path.string());
}

std::optional<TagMap> TagMap::builtin(std::string_view name) {
  if (name == "sejong") return parse(detail::sejong_profile_text(), "<builtin:sejong>");
  if (name == "kaist") return parse(detail::kaist_profile_text(), "<builtin:kaist>");
  return std::nullopt;
}

TagMap TagMap::resolve(std::string_view spec) {
  if (auto map = builtin(spec)) return *std::move(map);
  return load(std::filesystem::path(spec));
}

void TagMap::set(std::string xtag, TagEntry entry) {
  if (xtag.empty()) throw TagMapError("empty tag");
  check_entry(xtag, entry);
  entries_.insert_or_assign(std::move(xtag), std::move(entry));
}

void TagMap::set_default(TagEntry entry) {
  check_entry("@default", entry);
  default_ = std::move(entry);
}

void TagMap::set_fallback_order(std::vector<HeadClass> order) {
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!is_fallback_class(order[i]))
      throw TagMapError("class '" + std::string(to_string(order[i])) +
                        "' cannot appear in the fallback order");
    if (std::find(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(i), order[i]) !=
        order.begin() + static_cast<std::ptrdiff_t>(i))
      throw TagMapError("class '" + std::string(to_string(order[i])) +
                        "' listed twice in the fallback order");
  }
  for (auto required : {HeadClass::kPronoun, HeadClass::kAdjective, HeadClass::kAdverb,
                        HeadClass::kNumeral}) {
    if (std::find(order.begin(), order.end(), required) == order.end())
      throw TagMapError("fallback order must rank class '" +
                        std::string(to_string(required)) + "'");
  }
  fallback_ = std::move(order);
}

bool TagMap::contains(std::string_view xtag) const { return entries_.find(xtag) != entries_.end(); }

const TagEntry& TagMap::lookup(std::string_view xtag) const {
  auto it = entries_.find(xtag);
  return it == entries_.end() ? default_ : it->second;
}

}  // namespace morphud
