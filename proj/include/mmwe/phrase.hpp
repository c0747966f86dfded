#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mmwe/compound.hpp"
#include "mmwe/grammar.hpp"

namespace mmwe {

enum class TableFormat { Moses, Tsv };

struct PhraseEntry {
  std::vector<std::string> source;  // English tokens
  std::vector<std::string> target;  // German tokens
  double probability = 0.0;
  bool is_constituent = false;
  std::string constituent_label;
  int line_no = 0;
};

struct PhraseTable {
  std::vector<PhraseEntry> entries;
  std::vector<int> bad_lines;  // malformed, skipped
};

// moses: "src ||| tgt ||| p1 p2 p3 p4 ..."; tsv: "src<TAB>tgt<TAB>p[<TAB>label]".
// score_index picks which moses score column is the probability.
PhraseTable load_phrase_table(const std::string& source, TableFormat format, int score_index = 0);
PhraseTable load_phrase_table_file(const std::string& path, TableFormat format,
                                   int score_index = 0);

// Keeps entries with probability strictly above the threshold whose English
// side parses as an NP and whose German side is a single word; order
// preserving. With require_constituent, additionally demands an NP
// constituent label.
std::vector<PhraseEntry> filter_candidates(const std::vector<PhraseEntry>& entries,
                                           double threshold, const Grammar& g,
                                           const std::string& language = "eng",
                                           bool require_constituent = false);

struct CompoundLexEntry {
  AbstractTree english_tree;  // NP
  AbstractTree german_tree;   // CN, from to_tree
  PhraseEntry source_entry;
  double probability = 0.0;
};

struct Reject {
  PhraseEntry entry;
  std::string reason;  // "no-split", "bad-linker", "no-np-parse"
};

// Splits each candidate's German word and pairs the compound tree with the
// first English NP parse; deduplicates on (english_tree, german_tree) keeping
// the maximum probability.
std::pair<std::vector<CompoundLexEntry>, std::vector<Reject>> build_compound_lexicon(
    const std::vector<PhraseEntry>& candidates, const Lexicon& lexicon,
    const SplitConfig& config, const Grammar& g, const std::string& language = "eng");

enum class LexFormat { Gf, Tsv };

std::string export_lexicon(const std::vector<CompoundLexEntry>& entries, LexFormat format);

}  // namespace mmwe
