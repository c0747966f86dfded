#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "mmwe/compound.hpp"
#include "mmwe/grammar.hpp"
#include "mmwe/mwe.hpp"
#include "mmwe/parser.hpp"
#include "mmwe/phrase.hpp"
#include "mmwe/report.hpp"

namespace fs = std::filesystem;
using namespace mmwe;

namespace {

constexpr int kExitConfig = 2;

std::vector<std::string> tokenize(const std::string& s) {
  // whitespace split, surrounding punctuation stripped
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  auto is_punct = [](unsigned char c) {
    return c == '.' || c == ',' || c == '!' || c == '?' || c == ';' || c == ':';
  };
  while (in >> tok) {
    while (!tok.empty() && is_punct(tok.front())) tok.erase(tok.begin());
    while (!tok.empty() && is_punct(tok.back())) tok.pop_back();
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    size_t next = s.find(',', pos);
    if (next == std::string::npos) {
      out.push_back(s.substr(pos));
      break;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GrammarError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

struct DetectOptions {
  std::string grammar_path, langs, corpus_path, out_dir;
  int cap = kDefaultAmbiguityCap;
};

int run_detect(const DetectOptions& opt) {
  Grammar g = load_grammar_file(opt.grammar_path);
  auto langs = split_csv(opt.langs);
  if (langs.size() != 2) throw GrammarError("--langs expects exactly two codes, e.g. eng,swe");
  for (const auto& l : langs)
    if (!g.concretes.count(l)) throw GrammarError("grammar has no language " + l);

  std::istringstream corpus(read_file(opt.corpus_path));
  std::vector<DetectionReport> reports;
  std::string line;
  int line_no = 0;
  while (std::getline(corpus, line)) {
    line_no++;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto t1 = line.find('\t');
    auto t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) {
      std::cerr << "corpus line " << line_no << ": expected id<TAB>x<TAB>y, skipped\n";
      continue;
    }
    SentencePair pair;
    pair.id = line.substr(0, t1);
    pair.lang_x = langs[0];
    pair.lang_y = langs[1];
    pair.tokens_x = tokenize(line.substr(t1 + 1, t2 - t1 - 1));
    pair.tokens_y = tokenize(line.substr(t2 + 1));
    if (pair.tokens_x.empty() || pair.tokens_y.empty()) {
      std::cerr << "corpus line " << line_no << ": empty sentence, skipped\n";
      continue;
    }
    reports.push_back(detect_pair(pair, g, opt.cap));
  }

  fs::create_directories(opt.out_dir);
  std::string jsonl;
  for (const auto& r : reports) jsonl += report_to_json(r) + "\n";
  write_file(fs::path(opt.out_dir) / "reports.jsonl", jsonl);
  Summary s = summarize(reports);
  std::string table = render_summary(s);
  write_file(fs::path(opt.out_dir) / "summary.txt", table + summary_to_json(s) + "\n");
  std::cout << table;
  return 0;
}

struct SplitOptions {
  std::string lexicon_path, linkers = ",s,en";
  int min_component = 3;
  std::vector<std::string> words;
};

int run_split(const SplitOptions& opt) {
  Lexicon lex = load_lexicon_file(opt.lexicon_path);
  for (int line_no : lex.bad_lines)
    std::cerr << "lexicon line " << line_no << ": malformed, skipped\n";
  SplitConfig cfg;
  cfg.linkers = split_csv(opt.linkers);
  if (std::find(cfg.linkers.begin(), cfg.linkers.end(), "") == cfg.linkers.end())
    cfg.linkers.insert(cfg.linkers.begin(), "");
  cfg.min_component_length = opt.min_component;
  CompoundSplitter splitter(lex, cfg);

  std::vector<std::string> words = opt.words;
  if (words.empty()) {
    std::string w;
    while (std::cin >> w) words.push_back(w);
  }
  for (const auto& w : words) {
    auto split = splitter.split(w);
    if (!split) {
      std::cout << w << "\tNONE\n";
      continue;
    }
    std::string tree;
    try {
      tree = serialize(to_tree(*split));
    } catch (const GrammarError&) {
      // linker without a compounding rule: report the split, no tree
      tree = "NO_RULE";
    }
    std::cout << w << '\t' << split->joined() << '\t' << tree << '\n';
  }
  return 0;
}

struct ExtractOptions {
  std::string grammar_path, lexicon_path, table_path, out_dir;
  std::string format = "moses", language = "eng", linkers = ",s,en";
  double threshold = 0.1;
  int score_index = 0, min_component = 3;
  bool require_constituent = false;
};

int run_extract(const ExtractOptions& opt) {
  Grammar g = load_grammar_file(opt.grammar_path);
  Lexicon lex = load_lexicon_file(opt.lexicon_path);
  TableFormat fmt;
  if (opt.format == "moses")
    fmt = TableFormat::Moses;
  else if (opt.format == "tsv")
    fmt = TableFormat::Tsv;
  else
    throw GrammarError("unknown phrase-table format " + opt.format);
  PhraseTable table = load_phrase_table_file(opt.table_path, fmt, opt.score_index);
  for (int line_no : table.bad_lines)
    std::cerr << "phrase table line " << line_no << ": malformed, skipped\n";

  auto candidates =
      filter_candidates(table.entries, opt.threshold, g, opt.language, opt.require_constituent);
  SplitConfig cfg;
  cfg.linkers = split_csv(opt.linkers);
  if (std::find(cfg.linkers.begin(), cfg.linkers.end(), "") == cfg.linkers.end())
    cfg.linkers.insert(cfg.linkers.begin(), "");
  cfg.min_component_length = opt.min_component;
  auto [accepted, rejects] = build_compound_lexicon(candidates, lex, cfg, g, opt.language);

  fs::create_directories(opt.out_dir);
  write_file(fs::path(opt.out_dir) / "lexicon.tsv", export_lexicon(accepted, LexFormat::Tsv));
  write_file(fs::path(opt.out_dir) / "lexicon.gf", export_lexicon(accepted, LexFormat::Gf));

  std::map<std::string, int> by_reason;
  for (const auto& r : rejects) by_reason[r.reason]++;
  std::cerr << "loaded " << table.entries.size() << ", filtered " << candidates.size()
            << ", accepted " << accepted.size() << ", rejected " << rejects.size();
  for (const auto& [reason, count] : by_reason) std::cerr << " " << reason << "=" << count;
  std::cerr << "\n";
  return 0;
}

struct GenOptions {
  std::string grammar_path, langs;
  int depth = 3;
};

int run_gen(const GenOptions& opt) {
  Grammar g = load_grammar_file(opt.grammar_path);
  std::vector<std::string> langs =
      opt.langs.empty() ? g.languages() : split_csv(opt.langs);
  for (const auto& l : langs)
    if (!g.concretes.count(l)) throw GrammarError("grammar has no language " + l);

  for (const auto& [cat, tree] : enumerate_all_trees(g, opt.depth)) {
    std::cout << cat << '\t' << serialize(tree);
    for (const auto& lang : langs) {
      if (!has_coverage(tree, g, lang)) continue;
      std::cout << '\t' << lang << ':';
      auto toks = linearize(tree, g, lang);
      for (size_t i = 0; i < toks.size(); i++) std::cout << (i ? " " : "") << toks[i];
    }
    std::cout << '\n';
  }
  return 0;
}

struct ReportOptions {
  std::string in_path;
};

int run_report(const ReportOptions& opt) {
  Summary s = summary_from_jsonl(read_file(opt.in_path));
  std::cout << render_summary(s);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multiword-expression detection and German compound extraction"};
  app.require_subcommand(1);

  DetectOptions det;
  auto* detect = app.add_subcommand("detect", "compare parallel sentences for MWE candidates");
  detect->add_option("--grammar", det.grammar_path)->required();
  detect->add_option("--langs", det.langs, "two language codes, e.g. eng,swe")->required();
  detect->add_option("--corpus", det.corpus_path, "TSV: id<TAB>sentence_x<TAB>sentence_y")
      ->required();
  detect->add_option("--out-dir", det.out_dir)->required();
  detect->add_option("--cap", det.cap, "ambiguity cap per sentence");

  SplitOptions spl;
  auto* split = app.add_subcommand("split", "split German compounds against a lexicon");
  split->add_option("--lexicon", spl.lexicon_path)->required();
  split->add_option("--linkers", spl.linkers, "comma-separated linking morphemes");
  split->add_option("--min-component", spl.min_component);
  split->add_option("words", spl.words, "words to split (stdin when omitted)");

  ExtractOptions ext;
  auto* extract = app.add_subcommand("extract", "build a bilingual compound lexicon");
  extract->add_option("--grammar", ext.grammar_path)->required();
  extract->add_option("--lexicon", ext.lexicon_path)->required();
  extract->add_option("--phrase-table", ext.table_path)->required();
  extract->add_option("--format", ext.format, "moses|tsv");
  extract->add_option("--threshold", ext.threshold, "keep entries with probability > threshold");
  extract->add_option("--score-index", ext.score_index, "moses score column");
  extract->add_flag("--require-constituent", ext.require_constituent);
  extract->add_option("--language", ext.language, "source-side language code");
  extract->add_option("--linkers", ext.linkers);
  extract->add_option("--min-component", ext.min_component);
  extract->add_option("--out-dir", ext.out_dir)->required();

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "enumerate trees with their linearizations");
  gen_cmd->add_option("--grammar", gen.grammar_path)->required();
  gen_cmd->add_option("--depth", gen.depth);
  gen_cmd->add_option("--langs", gen.langs, "restrict output languages");

  ReportOptions rep;
  auto* report = app.add_subcommand("report", "summarize a reports.jsonl file");
  report->add_option("--in", rep.in_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*detect) return run_detect(det);
    if (*split) return run_split(spl);
    if (*extract) return run_extract(ext);
    if (*gen_cmd) return run_gen(gen);
    if (*report) return run_report(rep);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return 0;
}
