#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "morphud/conllu.hpp"
#include "morphud/corpus.hpp"
#include "morphud/error.hpp"
#include "morphud/eval.hpp"
#include "morphud/morph2word.hpp"
#include "morphud/tagmap.hpp"
#include "morphud/word2morph.hpp"

namespace morphud::cli {

namespace {

using json = nlohmann::json;

constexpr const char* kTagmapEnv = "MORPHUD_TAGMAP";

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

std::vector<Sentence> read_input(const std::string& path, ParseMode mode,
                                 std::vector<std::string>* warnings = nullptr) {
  ParseOptions options{mode, warnings};
  if (path == "-") return parse_conllu(std::cin, options);
  return read_conllu_file(path, options);
}

/// Writes through `out` for "-", otherwise to the named file.
template <typename Fn>
void write_output(const std::string& path, std::ostream& out, Fn&& fn) {
  if (path == "-") {
    fn(out);
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open " + path + " for writing");
  fn(file);
  if (!file) throw Error("write failed: " + path);
}

std::optional<std::string> env_tagmap() {
  const char* value = std::getenv(kTagmapEnv);
  if (value == nullptr || *value == '\0') return std::nullopt;
  return std::string(value);
}

std::string fixed4(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(4) << v;
  return s.str();
}

json eval_json(const EvalReport& r) {
  return {{"total", r.total},
          {"uas_correct", r.uas_correct},
          {"las_correct", r.las_correct},
          {"uas", r.uas()},
          {"las", r.las()}};
}

json direction_json(const DirectionConfusion& m) {
  json rows = json::array();
  for (const auto& row : m.counts) rows.push_back(row);
  return rows;
}

json depth_json(const DepthConfusion& m) {
  json rows = json::array();
  for (std::size_t g = 0; g <= m.cap(); ++g) {
    json row = json::array();
    for (std::size_t s = 0; s <= m.cap(); ++s) row.push_back(m.at(g, s));
    rows.push_back(std::move(row));
  }
  return rows;
}

json repair_json(const RepairReport& r) {
  return {{"total", r.total()},
          {"no_external_arc", r.no_external_arc},
          {"multiple_external_arcs", r.multiple_external_arcs},
          {"self_loops", r.self_loops},
          {"extra_roots", r.extra_roots},
          {"cycles", r.cycles},
          {"promoted_roots", r.promoted_roots},
          {"root_labels", r.root_labels},
          {"events", r.events}};
}

void print_eval_line(std::ostream& os, const EvalReport& r) {
  os << "LAS=" << fixed4(r.las()) << " UAS=" << fixed4(r.uas()) << '\n'
     << "tokens=" << r.total << " las_correct=" << r.las_correct
     << " uas_correct=" << r.uas_correct << '\n';
}

// --- subcommands -----------------------------------------------------------

struct W2mArgs {
  std::string tagmap;
  bool skip_bad = false;
  bool json = false;
  std::string input;
  std::string output;
};

int run_w2m(const W2mArgs& a, Streams io) {
  std::string tagmap_spec = a.tagmap;
  if (tagmap_spec.empty()) tagmap_spec = env_tagmap().value_or("");
  if (tagmap_spec.empty()) {
    io.err << "w2m: no tag map given (use --tagmap or set " << kTagmapEnv << ")\n";
    return kExitUsage;
  }
  const TagMap tagmap = TagMap::resolve(tagmap_spec);
  const auto input = read_input(a.input, ParseMode::kStrict);

  std::vector<std::string> warnings;
  std::vector<Sentence> output;
  const auto summary =
      convert_treebank(input, tagmap, output, {.skip_bad = a.skip_bad, .warnings = &warnings});
  write_output(a.output, io.out, [&](std::ostream& os) { write_conllu(os, output); });

  for (const auto& w : warnings) io.err << "warning: " << w << '\n';
  for (const auto& [tag, n] : summary.unknown_tags)
    io.err << "warning: unknown tag '" << tag << "' (" << n << " occurrences) mapped to "
           << tagmap.default_entry().upos << '\n';

  std::ostream& report = a.output == "-" ? io.err : io.out;
  if (a.json) {
    json j = {{"sentences", summary.sentences}, {"words", summary.words},
              {"morphemes", summary.morphemes}, {"mismatches", summary.mismatches},
              {"skipped", summary.skipped},     {"unknown_tags", summary.unknown_tags}};
    report << j.dump() << '\n';
  } else {
    report << summary.sentences << " sentences, " << summary.words << " words, "
           << summary.morphemes << " morphemes\n";
    if (summary.mismatches > 0 || summary.skipped > 0)
      report << summary.mismatches << " mismatch warnings, " << summary.skipped
             << " sentences skipped\n";
  }
  return kExitOk;
}

struct M2wArgs {
  std::string skeleton;
  std::string tagmap;
  std::string repair_report;
  bool json = false;
  std::string input;
  std::string output;
};

int run_m2w(const M2wArgs& a, Streams io) {
  std::optional<TagMap> tagmap;
  std::string tagmap_spec = a.tagmap.empty() ? env_tagmap().value_or("") : a.tagmap;
  if (!tagmap_spec.empty()) tagmap = TagMap::resolve(tagmap_spec);

  std::vector<std::string> warnings;
  const auto predicted = read_input(a.input, ParseMode::kLenient, &warnings);
  const auto skeleton = read_input(a.skeleton, ParseMode::kStrict);
  std::vector<Sentence> output;
  const auto summary = revert_treebank(predicted, skeleton, output, tagmap ? &*tagmap : nullptr);
  write_output(a.output, io.out, [&](std::ostream& os) { write_conllu(os, output); });

  for (const auto& w : warnings) io.err << "warning: " << w << '\n';
  if (!a.repair_report.empty()) {
    write_output(a.repair_report, io.out, [&](std::ostream& os) {
      if (a.json) {
        os << repair_json(summary.repairs).dump(2) << '\n';
        return;
      }
      const auto& r = summary.repairs;
      os << "repairs\t" << r.total() << '\n'
         << "no_external_arc\t" << r.no_external_arc << '\n'
         << "multiple_external_arcs\t" << r.multiple_external_arcs << '\n'
         << "self_loops\t" << r.self_loops << '\n'
         << "extra_roots\t" << r.extra_roots << '\n'
         << "cycles\t" << r.cycles << '\n'
         << "promoted_roots\t" << r.promoted_roots << '\n'
         << "root_labels\t" << r.root_labels << '\n';
      for (const auto& e : r.events) os << "event\t" << e << '\n';
    });
  }

  const bool data_on_out = a.output == "-" || a.repair_report == "-";
  std::ostream& report = data_on_out ? io.err : io.out;
  if (a.json) {
    json j = {{"sentences", summary.sentences},
              {"words", summary.words},
              {"morphemes", summary.morphemes},
              {"repairs", summary.repairs.total()}};
    report << j.dump() << '\n';
  } else {
    report << summary.sentences << " sentences, " << summary.words << " words, "
           << summary.morphemes << " morphemes, " << summary.repairs.total() << " repairs\n";
  }
  return kExitOk;
}

struct EvalArgs {
  std::string gold;
  std::string system;
  bool json = false;
  bool exact = false;
};

int run_eval(const EvalArgs& a, Streams io) {
  const auto gold = read_input(a.gold, ParseMode::kStrict);
  const auto system = read_input(a.system, ParseMode::kLenient);
  const auto report =
      score(gold, system, a.exact ? DeprelMatch::kExact : DeprelMatch::kMainRelation);
  if (a.json)
    io.out << eval_json(report).dump() << '\n';
  else
    print_eval_line(io.out, report);
  return kExitOk;
}

struct AnalyzeArgs {
  std::string gold;
  std::string system;
  std::string filter = "errors";
  std::size_t depth_cap = 10;
  bool root_zero = false;
  bool json = false;
  bool tsv = false;
};

int run_analyze(const AnalyzeArgs& a, Streams io) {
  const auto gold = read_input(a.gold, ParseMode::kStrict);
  const auto system = read_input(a.system, ParseMode::kLenient);
  const auto filter = a.filter == "all" ? ConfusionFilter::kAll : ConfusionFilter::kErrorsOnly;
  const auto convention =
      a.root_zero ? DepthConvention::kRootTokenZero : DepthConvention::kRootTokenOne;
  const auto report = score(gold, system);
  const auto direction = direction_confusion(gold, system, filter);
  const auto depth = depth_confusion(gold, system, a.depth_cap, filter, convention);

  constexpr Direction kAll[] = {Direction::kLeft, Direction::kRight, Direction::kToRoot};
  if (a.json) {
    json j = eval_json(report);
    j["filter"] = a.filter;
    j["depth_cap"] = a.depth_cap;
    j["depth_convention"] = a.root_zero ? "root-token-0" : "root-token-1";
    j["direction_labels"] = {"left", "right", "root"};
    j["direction_matrix"] = direction_json(direction);
    j["depth_matrix"] = depth_json(depth);
    io.out << j.dump() << '\n';
    return kExitOk;
  }
  if (a.tsv) {
    io.out << "matrix\tgold\tsystem\tcount\n";
    for (auto g : kAll)
      for (auto s : kAll)
        io.out << "direction\t" << to_string(g) << '\t' << to_string(s) << '\t'
               << direction.at(g, s) << '\n';
    for (std::size_t g = 0; g <= depth.cap(); ++g)
      for (std::size_t s = 0; s <= depth.cap(); ++s)
        io.out << "depth\t" << g << '\t' << s << '\t' << depth.at(g, s) << '\n';
    return kExitOk;
  }

  print_eval_line(io.out, report);
  io.out << "\narc direction (" << a.filter << "), rows = gold, columns = system\n";
  io.out << std::setw(8) << "";
  for (auto s : kAll) io.out << std::setw(8) << to_string(s);
  io.out << '\n';
  for (auto g : kAll) {
    io.out << std::setw(8) << to_string(g);
    for (auto s : kAll) io.out << std::setw(8) << direction.at(g, s);
    io.out << '\n';
  }
  io.out << "\narc depth (" << a.filter << ", cap " << depth.cap()
         << "), rows = gold, columns = system\n";
  io.out << std::setw(4) << "";
  for (std::size_t s = 0; s <= depth.cap(); ++s) io.out << std::setw(6) << s;
  io.out << '\n';
  for (std::size_t g = 0; g <= depth.cap(); ++g) {
    io.out << std::setw(4) << g;
    for (std::size_t s = 0; s <= depth.cap(); ++s) io.out << std::setw(6) << depth.at(g, s);
    io.out << '\n';
  }
  return kExitOk;
}

struct ExportArgs {
  std::string mode = "word";
  std::string input;
  std::string output = "-";
};

int run_export(const ExportArgs& a, Streams io) {
  const auto sentences = read_input(a.input, ParseMode::kStrict);
  const auto mode = a.mode == "morpheme" ? CorpusMode::kMorpheme : CorpusMode::kWord;
  CorpusStats stats;
  write_output(a.output, io.out,
               [&](std::ostream& os) { stats = export_corpus(sentences, mode, os); });
  std::ostream& report = a.output == "-" ? io.err : io.out;
  report << stats.lines << " lines, " << stats.tokens << " tokens\n";
  return kExitOk;
}

struct ValidateArgs {
  std::vector<std::string> inputs;
};

int run_validate(const ValidateArgs& a, Streams io) {
  int status = kExitOk;
  for (const auto& path : a.inputs) {
    try {
      std::vector<std::string> warnings;
      const auto sentences = read_input(path, ParseMode::kStrict, &warnings);
      std::size_t tokens = 0;
      for (const auto& s : sentences) tokens += s.size();
      io.out << path << ": OK (" << sentences.size() << " sentences, " << tokens
             << " tokens)\n";
    } catch (const Error& e) {
      io.err << path << ": " << e.what() << '\n';
      status = kExitDataError;
    }
  }
  return status;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convert Korean UD treebanks between eojeol and morpheme level, and score parses.",
               "morphud"};
  app.require_subcommand(1);

  W2mArgs w2m;
  auto* w2m_cmd = app.add_subcommand("w2m", "Convert an eojeol-level treebank to morpheme level");
  w2m_cmd->add_option("--tagmap", w2m.tagmap,
                      "Tag map file, or built-in profile 'sejong' / 'kaist' (default: $" +
                          std::string(kTagmapEnv) + ")");
  w2m_cmd->add_flag("--skip-bad", w2m.skip_bad, "Skip sentences that fail to convert");
  w2m_cmd->add_flag("--json", w2m.json, "Print the summary as JSON");
  w2m_cmd->add_option("input", w2m.input, "Word-level CoNLL-U ('-' for stdin)")->required();
  w2m_cmd->add_option("output", w2m.output, "Morpheme-level CoNLL-U ('-' for stdout)")->required();

  M2wArgs m2w;
  auto* m2w_cmd = app.add_subcommand("m2w", "Revert a morpheme-level treebank to eojeol level");
  m2w_cmd->add_option("--skeleton", m2w.skeleton, "Word-level CoNLL-U with the segmentation")
      ->required();
  m2w_cmd->add_option("--tagmap", m2w.tagmap, "Tag map used to pick heads when repairing");
  m2w_cmd->add_option("--repair-report", m2w.repair_report, "Write repair counts and events");
  m2w_cmd->add_flag("--json", m2w.json, "JSON summary and repair report");
  m2w_cmd->add_option("input", m2w.input, "Morpheme-level CoNLL-U ('-' for stdin)")->required();
  m2w_cmd->add_option("output", m2w.output, "Word-level CoNLL-U ('-' for stdout)")->required();

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "LAS/UAS of a system file against gold");
  eval_cmd->add_option("gold", eval.gold)->required();
  eval_cmd->add_option("system", eval.system)->required();
  eval_cmd->add_flag("--json", eval.json, "Print the report as JSON");
  eval_cmd->add_flag("--exact-deprel", eval.exact, "Compare full labels including subtypes");

  AnalyzeArgs analyze;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "Arc direction and arc depth confusion matrices");
  analyze_cmd->add_option("gold", analyze.gold)->required();
  analyze_cmd->add_option("system", analyze.system)->required();
  analyze_cmd->add_option("--filter", analyze.filter, "errors (default) or all")
      ->check(CLI::IsMember({"errors", "all"}));
  analyze_cmd->add_option("--depth-cap", analyze.depth_cap, "Largest depth bucket")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000}));
  analyze_cmd->add_flag("--depth-root-zero", analyze.root_zero,
                        "Count the root token as depth 0 instead of 1");
  auto* json_flag = analyze_cmd->add_flag("--json", analyze.json, "JSON report");
  auto* tsv_flag = analyze_cmd->add_flag("--tsv", analyze.tsv, "Long-form TSV matrices");
  json_flag->excludes(tsv_flag);

  ExportArgs exp;
  auto* export_cmd =
      app.add_subcommand("export-corpus", "One sentence per line of words or morphemes");
  export_cmd->add_option("--mode", exp.mode, "word (default) or morpheme")
      ->check(CLI::IsMember({"word", "morpheme"}));
  export_cmd->add_option("input", exp.input)->required();
  export_cmd->add_option("output", exp.output, "Output file (default stdout)");

  ValidateArgs validate;
  auto* validate_cmd = app.add_subcommand("validate", "Strict CoNLL-U and tree validation");
  validate_cmd->add_option("inputs", validate.inputs)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return kExitUsage;
  }

  Streams io{out, err};
  try {
    if (*w2m_cmd) return run_w2m(w2m, io);
    if (*m2w_cmd) return run_m2w(m2w, io);
    if (*eval_cmd) return run_eval(eval, io);
    if (*analyze_cmd) return run_analyze(analyze, io);
    if (*export_cmd) return run_export(exp, io);
    if (*validate_cmd) return run_validate(validate, io);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace morphud::cli
