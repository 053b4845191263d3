#include "morphud/conllu.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "morphud/error.hpp"

namespace morphud {

namespace {

constexpr std::size_t kColumns = 10;

std::optional<std::string> comment_value(const Sentence& s, std::string_view key) {
  for (const auto& line : s.comments) {
    std::string_view v = line;
    if (v.empty() || v.front() != '#') continue;
    v.remove_prefix(1);
    while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
    if (!v.starts_with(key)) continue;
    v.remove_prefix(key.size());
    while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
    if (v.empty() || v.front() != '=') continue;
    v.remove_prefix(1);
    if (!v.empty() && v.front() == ' ') v.remove_prefix(1);
    return std::string(v);
  }
  return std::nullopt;
}

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  if (s.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find('\t', start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

class Reader {
 public:
  explicit Reader(const ParseOptions& options) : options_(options) {}

  std::vector<Sentence> run(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (lineno == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
      consume(line, lineno);
    }
    finish(lineno + 1);
    return std::move(out_);
  }

 private:
  void consume(std::string_view line, std::size_t lineno) {
    if (is_blank(line)) {
      if (!line.empty()) throw FormatError(lineno, "whitespace-only line");
      finish(lineno);
      return;
    }
    if (current_.comments.empty() && current_.tokens.empty()) start_line_ = lineno;
    if (line.front() == '#') {
      if (!current_.tokens.empty())
        throw FormatError(lineno, "comment line inside a token block");
      current_.comments.emplace_back(line);
      return;
    }
    auto cols = split_tabs(line);
    if (cols.size() != kColumns)
      throw FormatError(lineno, "expected 10 tab-separated columns, found " +
                                    std::to_string(cols.size()));
    const std::string_view id_col = cols[0];
    if (id_col.find('-') != std::string_view::npos ||
        id_col.find('.') != std::string_view::npos) {
      const char* what = id_col.find('-') != std::string_view::npos
                             ? "multiword token range"
                             : "empty node";
      if (options_.mode == ParseMode::kStrict)
        throw FormatError(lineno, std::string(what) + " '" + std::string(id_col) +
                                      "' is not supported");
      if (options_.warnings)
        options_.warnings->push_back("line " + std::to_string(lineno) + ": skipped " +
                                     what + " '" + std::string(id_col) + "'");
      return;
    }
    for (std::size_t i = 0; i < kColumns; ++i)
      if (cols[i].empty())
        throw FormatError(lineno, "empty field in column " + std::to_string(i + 1));

    auto id = parse_int(id_col);
    if (!id || *id < 1) throw FormatError(lineno, "invalid token id '" + std::string(id_col) + "'");
    const int expected = static_cast<int>(current_.tokens.size()) + 1;
    if (*id != expected)
      throw FormatError(lineno, "non-contiguous token id " + std::to_string(*id) +
                                    " (expected " + std::to_string(expected) + ")");
    auto head = parse_int(cols[6]);
    if (!head || *head < 0)
      throw FormatError(lineno, "invalid head '" + std::string(cols[6]) + "'");

    Token t;
    t.id = *id;
    t.form = cols[1];
    t.lemma = cols[2];
    t.upos = cols[3];
    t.xpos = cols[4];
    t.feats = cols[5];
    t.head = *head;
    t.deprel = cols[7];
    t.deps = cols[8];
    t.misc = cols[9];
    current_.tokens.push_back(std::move(t));
    token_lines_.push_back(lineno);
  }

  void finish(std::size_t lineno) {
    if (current_.tokens.empty()) {
      if (!current_.comments.empty())
        throw FormatError(lineno, "comment block without tokens");
      return;
    }
    const int n = static_cast<int>(current_.tokens.size());
    for (std::size_t i = 0; i < current_.tokens.size(); ++i) {
      if (current_.tokens[i].head > n)
        throw FormatError(token_lines_[i], "head " + std::to_string(current_.tokens[i].head) +
                                               " out of range (sentence has " +
                                               std::to_string(n) + " tokens)");
    }
    if (options_.mode == ParseMode::kStrict) {
      if (auto problem = find_tree_violation(current_))
        throw FormatError(start_line_, "sentence " + sentence_ref(current_, out_.size() + 1) +
                                           ": " + *problem);
    }
    out_.push_back(std::move(current_));
    current_ = Sentence{};
    token_lines_.clear();
  }

  const ParseOptions& options_;
  std::vector<Sentence> out_;
  Sentence current_;
  std::vector<std::size_t> token_lines_;
  std::size_t start_line_ = 0;
};

void put_field(std::ostream& out, std::string_view field) {
  if (field.empty())
    out << '_';
  else
    out << field;
}

}  // namespace

std::optional<std::string> Sentence::sent_id() const { return comment_value(*this, "sent_id"); }

std::optional<std::string> Sentence::text() const { return comment_value(*this, "text"); }

std::vector<Sentence> parse_conllu(std::istream& in, const ParseOptions& options) {
  return Reader(options).run(in);
}

std::vector<Sentence> parse_conllu(std::string_view text, const ParseOptions& options) {
  std::istringstream in{std::string(text)};
  return parse_conllu(in, options);
}

std::vector<Sentence> read_conllu_file(const std::filesystem::path& path,
                                       const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  try {
    return parse_conllu(in, options);
  } catch (const FormatError& e) {
    throw FormatError(0, path.string() + ": " + e.what());
  }
}

void write_sentence(std::ostream& out, const Sentence& sentence) {
  for (const auto& c : sentence.comments) out << c << '\n';
  for (const auto& t : sentence.tokens) {
    out << t.id << '\t';
    put_field(out, t.form);
    out << '\t';
    put_field(out, t.lemma);
    out << '\t';
    put_field(out, t.upos);
    out << '\t';
    put_field(out, t.xpos);
    out << '\t';
    put_field(out, t.feats);
    out << '\t' << t.head << '\t';
    put_field(out, t.deprel);
    out << '\t';
    put_field(out, t.deps);
    out << '\t';
    put_field(out, t.misc);
    out << '\n';
  }
  out << '\n';
}

void write_conllu(std::ostream& out, std::span<const Sentence> sentences) {
  for (const auto& s : sentences) write_sentence(out, s);
}

std::string emit_conllu(std::span<const Sentence> sentences) {
  std::ostringstream out;
  write_conllu(out, sentences);
  return std::move(out).str();
}

void write_conllu_file(const std::filesystem::path& path, std::span<const Sentence> sentences) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  write_conllu(out, sentences);
  if (!out) throw Error("write failed: " + path.string());
}

bool is_root_deprel(std::string_view deprel) noexcept {
  return main_relation(deprel) == "root";
}

std::string_view main_relation(std::string_view deprel) noexcept {
  return deprel.substr(0, deprel.find(':'));
}

std::optional<std::string> find_tree_violation(const Sentence& sentence) {
  const int n = static_cast<int>(sentence.tokens.size());
  if (n == 0) return "sentence has no tokens";
  int root = 0;
  for (const auto& t : sentence.tokens) {
    if (t.head < 0 || t.head > n)
      return "token " + std::to_string(t.id) + " has head " + std::to_string(t.head) +
             " out of range";
    if (t.head == t.id) return "token " + std::to_string(t.id) + " is its own head";
    if (t.head == 0) {
      if (root != 0)
        return "multiple roots (tokens " + std::to_string(root) + " and " +
               std::to_string(t.id) + ")";
      root = t.id;
    }
    if ((t.head == 0) != is_root_deprel(t.deprel))
      return "token " + std::to_string(t.id) + " has head " + std::to_string(t.head) +
             " with deprel '" + t.deprel + "'";
  }
  if (root == 0) return "no root token";

  // 0 = unvisited, 1 = on current path, 2 = reaches the root.
  std::vector<char> state(static_cast<std::size_t>(n) + 1, 0);
  state[0] = 2;
  std::vector<int> path;
  for (int start = 1; start <= n; ++start) {
    int node = start;
    path.clear();
    while (state[static_cast<std::size_t>(node)] == 0) {
      state[static_cast<std::size_t>(node)] = 1;
      path.push_back(node);
      node = sentence.tokens[static_cast<std::size_t>(node - 1)].head;
    }
    if (state[static_cast<std::size_t>(node)] == 1)
      return "cyclic head assignment through token " + std::to_string(node);
    for (int p : path) state[static_cast<std::size_t>(p)] = 2;
  }
  return std::nullopt;
}

std::string sentence_ref(const Sentence& sentence, std::size_t ordinal) {
  if (auto id = sentence.sent_id()) return *id;
  return "#" + std::to_string(ordinal);
}

std::vector<std::string> misc_items(std::string_view misc) {
  std::vector<std::string> items;
  if (misc.empty() || misc == "_") return items;
  std::size_t start = 0;
  while (start <= misc.size()) {
    auto pos = misc.find('|', start);
    if (pos == std::string_view::npos) pos = misc.size();
    if (pos > start) items.emplace_back(misc.substr(start, pos - start));
    start = pos + 1;
  }
  return items;
}

std::optional<std::string> misc_value(std::string_view misc, std::string_view key) {
  for (const auto& item : misc_items(misc)) {
    std::string_view v = item;
    auto eq = v.find('=');
    if (v.substr(0, eq) != key) continue;
    return eq == std::string_view::npos ? std::string() : std::string(v.substr(eq + 1));
  }
  return std::nullopt;
}

std::string join_misc(std::span<const std::string> items) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += '|';
    out += item;
  }
  return out.empty() ? std::string("_") : out;
}

}  // namespace morphud
