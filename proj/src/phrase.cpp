#include "mmwe/phrase.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "mmwe/parser.hpp"

namespace mmwe {

namespace {

std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> split_on(const std::string& s, const std::string& sep) {
  std::vector<std::string> parts;
  size_t pos = 0;
  while (true) {
    size_t next = s.find(sep, pos);
    if (next == std::string::npos) {
      parts.push_back(s.substr(pos));
      break;
    }
    parts.push_back(s.substr(pos, next - pos));
    pos = next + sep.size();
  }
  return parts;
}

bool parse_prob(const std::string& s, double& out) {
  try {
    size_t used = 0;
    out = std::stod(s, &used);
    return used == s.size() && out >= 0.0 && out <= 1.0;
  } catch (...) {
    return false;
  }
}

}  // namespace

PhraseTable load_phrase_table(const std::string& source, TableFormat format, int score_index) {
  PhraseTable table;
  std::istringstream in(source);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    line_no++;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;

    PhraseEntry e;
    e.line_no = line_no;
    if (format == TableFormat::Moses) {
      auto fields = split_on(line, "|||");
      if (fields.size() < 3) {
        table.bad_lines.push_back(line_no);
        continue;
      }
      e.source = split_tokens(fields[0]);
      e.target = split_tokens(fields[1]);
      auto scores = split_tokens(fields[2]);
      if (e.source.empty() || e.target.empty() ||
          score_index >= static_cast<int>(scores.size()) ||
          !parse_prob(scores[score_index], e.probability)) {
        table.bad_lines.push_back(line_no);
        continue;
      }
    } else {
      auto fields = split_on(line, "\t");
      if (fields.size() < 3) {
        table.bad_lines.push_back(line_no);
        continue;
      }
      e.source = split_tokens(fields[0]);
      e.target = split_tokens(fields[1]);
      if (e.source.empty() || e.target.empty() || !parse_prob(fields[2], e.probability)) {
        table.bad_lines.push_back(line_no);
        continue;
      }
      if (fields.size() >= 4 && !fields[3].empty()) {
        e.is_constituent = true;
        e.constituent_label = fields[3];
      }
    }
    table.entries.push_back(std::move(e));
  }
  return table;
}

PhraseTable load_phrase_table_file(const std::string& path, TableFormat format, int score_index) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GrammarError("cannot open phrase table " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_phrase_table(buf.str(), format, score_index);
}

std::vector<PhraseEntry> filter_candidates(const std::vector<PhraseEntry>& entries,
                                           double threshold, const Grammar& g,
                                           const std::string& language,
                                           bool require_constituent) {
  std::vector<PhraseEntry> out;
  for (const auto& e : entries) {
    if (!(e.probability > threshold)) continue;
    if (e.target.size() != 1) continue;
    if (require_constituent && !(e.is_constituent && e.constituent_label == "NP")) continue;
    if (parse(e.source, g, language, "NP").empty()) continue;
    out.push_back(e);
  }
  return out;
}

std::pair<std::vector<CompoundLexEntry>, std::vector<Reject>> build_compound_lexicon(
    const std::vector<PhraseEntry>& candidates, const Lexicon& lexicon,
    const SplitConfig& config, const Grammar& g, const std::string& language) {
  std::vector<CompoundLexEntry> accepted;
  std::vector<Reject> rejects;
  std::map<std::string, size_t> by_pair;  // serialized (eng, ger) -> index

  for (const auto& e : candidates) {
    if (e.target.size() != 1) {
      rejects.push_back({e, "not-single-word"});
      continue;
    }
    auto split = split_compound(e.target[0], lexicon, config);
    if (!split) {
      rejects.push_back({e, "no-split"});
      continue;
    }
    AbstractTree german;
    try {
      german = to_tree(*split);
    } catch (const GrammarError&) {
      rejects.push_back({e, "bad-linker"});
      continue;
    }
    auto english_forest = parse(e.source, g, language, "NP");
    if (english_forest.empty()) {
      rejects.push_back({e, "no-np-parse"});
      continue;
    }
    CompoundLexEntry entry{english_forest.front(), german, e, e.probability};
    std::string key = serialize(entry.english_tree) + "\x01" + serialize(entry.german_tree);
    auto it = by_pair.find(key);
    if (it != by_pair.end()) {
      accepted[it->second].probability =
          std::max(accepted[it->second].probability, entry.probability);
    } else {
      by_pair[key] = accepted.size();
      accepted.push_back(std::move(entry));
    }
  }
  return {accepted, rejects};
}

namespace {

std::string join(const std::vector<std::string>& toks) {
  std::string out;
  for (const auto& t : toks) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

std::string format_prob(double p) {
  std::ostringstream s;
  s << p;
  return s.str();
}

}  // namespace

std::string export_lexicon(const std::vector<CompoundLexEntry>& entries, LexFormat format) {
  std::ostringstream out;
  if (format == LexFormat::Tsv) {
    out << "english\tgerman\ttree\tprobability\n";
    for (const auto& e : entries) {
      out << join(e.source_entry.source) << '\t' << e.source_entry.target[0] << '\t'
          << serialize(e.german_tree) << '\t' << format_prob(e.probability) << '\n';
    }
  } else {
    out << "-- compound lexicon\n";
    int i = 0;
    for (const auto& e : entries) {
      out << "lin compound_" << i++ << " = " << serialize(e.german_tree) << " ; -- "
          << join(e.source_entry.source) << "\n";
    }
  }
  return out.str();
}

}  // namespace mmwe
