#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mmwe/grammar.hpp"

namespace mmwe {

struct LexEntry {
  std::string lemma;
  Category category;
};

struct Lexicon {
  std::vector<LexEntry> entries;
  std::string source_tag;
  std::vector<int> bad_lines;  // line numbers skipped during loading

  size_t size() const { return entries.size(); }
};

// TSV, one "lemma<TAB>category" per line. Malformed lines are recorded in
// bad_lines and skipped; duplicates collapse to one entry.
Lexicon load_lexicon(const std::string& source, const std::string& tag = "");
Lexicon load_lexicon_file(const std::string& path);

struct SplitConfig {
  std::vector<std::string> linkers = {"", "s", "en"};  // "" is always present
  int min_component_length = 3;                        // in code points
};

struct Component {
  std::string lemma;   // canonical (lexicon) capitalization
  std::string linker;  // "" on the final component
};

struct CompoundSplit {
  std::vector<Component> components;
  std::string surface;

  // "Leben+s|Mittel" style
  std::string joined() const;
};

bool operator==(const CompoundSplit& a, const CompoundSplit& b);

// Lowercases ASCII letters and the Latin-1 supplement block (covers German
// umlauts); leaves everything else alone.
std::string lower_de(const std::string& s);

// Count of UTF-8 code points.
size_t utf8_length(const std::string& s);

// Splits many words against one lexicon; building the lemma index once is
// what makes batch splitting cheap.
class CompoundSplitter {
 public:
  CompoundSplitter(const Lexicon& lexicon, SplitConfig config = {});
  ~CompoundSplitter();
  CompoundSplitter(const CompoundSplitter&) = delete;
  CompoundSplitter& operator=(const CompoundSplitter&) = delete;
  CompoundSplitter(CompoundSplitter&&) noexcept;
  CompoundSplitter& operator=(CompoundSplitter&&) noexcept;

  // Minimal-component decomposition: every component a lexicon lemma,
  // non-final components optionally followed by a linker, at least two
  // components. Ties broken by longest head, then lexicographically smallest
  // joined form. nullopt when no decomposition exists.
  std::optional<CompoundSplit> split(const std::string& word) const;

  // Exhaustive enumeration of valid decompositions, ordered by component
  // count then tie-break order, truncated to cap. split() equals the first
  // element whenever the list is non-empty.
  std::vector<CompoundSplit> enumerate(const std::string& word, int cap) const;

  const SplitConfig& config() const { return config_; }

  struct Index;

 private:
  SplitConfig config_;
  std::unique_ptr<Index> index_;
};

// One-shot conveniences over CompoundSplitter.
std::optional<CompoundSplit> split_compound(const std::string& word, const Lexicon& lexicon,
                                            const SplitConfig& config = {});
std::vector<CompoundSplit> enumerate_splits(const std::string& word, const Lexicon& lexicon,
                                            const SplitConfig& config, int cap);

// Right-folded compound tree: Cons_sCN(Leben_N, UseN(Mittel_N)) for
// Leben+s|Mittel. Throws GrammarError for linkers outside {"", "s", "en"}.
AbstractTree to_tree(const CompoundSplit& split);

// N/CN grammar fragment (UseN, ConsNomCN, Cons_sCN, Cons_enCN plus one
// lexical N function per lexicon lemma), for validating compound trees.
Grammar compound_grammar(const Lexicon& lexicon);

}  // namespace mmwe
