#include "mmwe/compound.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace mmwe {

std::string lower_de(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (size_t i = 0; i < s.size(); i++) {
    unsigned char c = s[i];
    if (c >= 'A' && c <= 'Z') {
      out += static_cast<char>(c + 32);
    } else if (c == 0xC3 && i + 1 < s.size()) {
      // Latin-1 supplement uppercase block (À..Þ except ×)
      unsigned char d = s[i + 1];
      out += static_cast<char>(c);
      if (d >= 0x80 && d <= 0x9E && d != 0x97)
        out += static_cast<char>(d + 0x20);
      else
        out += static_cast<char>(d);
      i++;
    } else {
      out += static_cast<char>(c);
    }
  }
  return out;
}

size_t utf8_length(const std::string& s) {
  size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) n++;
  return n;
}

Lexicon load_lexicon(const std::string& source, const std::string& tag) {
  Lexicon lex;
  lex.source_tag = tag;
  std::set<std::pair<std::string, std::string>> seen;
  std::istringstream in(source);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    line_no++;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size()) {
      lex.bad_lines.push_back(line_no);
      continue;
    }
    std::string lemma = line.substr(0, tab);
    std::string cat = line.substr(tab + 1);
    if (lemma.find(' ') != std::string::npos || cat.find('\t') != std::string::npos) {
      lex.bad_lines.push_back(line_no);
      continue;
    }
    if (seen.insert({lemma, cat}).second) lex.entries.push_back({lemma, cat});
  }
  return lex;
}

Lexicon load_lexicon_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GrammarError("cannot open lexicon file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_lexicon(buf.str(), path);
}

std::string CompoundSplit::joined() const {
  std::string out;
  for (size_t i = 0; i < components.size(); i++) {
    if (i) out += '|';
    out += components[i].lemma;
    if (!components[i].linker.empty()) out += '+' + components[i].linker;
  }
  return out;
}

bool operator==(const CompoundSplit& a, const CompoundSplit& b) {
  return a.surface == b.surface && a.joined() == b.joined();
}

namespace {

struct LemmaMatch {
  std::string lowered;
  std::string canonical;
};

}  // namespace

// Lowercased lemmas bucketed by first byte for prefix matching.
struct CompoundSplitter::Index {
  std::unordered_map<char, std::vector<LemmaMatch>> by_first;

  Index(const Lexicon& lex, const SplitConfig& cfg) {
    std::set<std::string> seen;
    for (const auto& e : lex.entries) {
      if (utf8_length(e.lemma) < static_cast<size_t>(cfg.min_component_length)) continue;
      std::string low = lower_de(e.lemma);
      if (low.empty() || !seen.insert(low).second) continue;
      by_first[low[0]].push_back({std::move(low), e.lemma});
    }
    for (auto& [_, v] : by_first)
      std::sort(v.begin(), v.end(),
                [](const LemmaMatch& a, const LemmaMatch& b) { return a.lowered < b.lowered; });
  }

  // All lemmas matching word at byte position pos.
  void matches_at(const std::string& word, size_t pos, std::vector<const LemmaMatch*>& out) const {
    out.clear();
    if (pos >= word.size()) return;
    auto it = by_first.find(word[pos]);
    if (it == by_first.end()) return;
    for (const auto& m : it->second) {
      if (m.lowered.size() <= word.size() - pos &&
          word.compare(pos, m.lowered.size(), m.lowered) == 0)
        out.push_back(&m);
    }
  }
};

namespace {

// Tie-break order shared by split() and enumerate().
bool split_better(const CompoundSplit& a, const CompoundSplit& b) {
  if (a.components.size() != b.components.size())
    return a.components.size() < b.components.size();
  size_t ha = utf8_length(a.components.back().lemma);
  size_t hb = utf8_length(b.components.back().lemma);
  if (ha != hb) return ha > hb;  // longest head wins
  return a.joined() < b.joined();
}

struct Enumerator {
  const std::string& word;       // lowercased surface
  const std::string& surface;    // original
  const CompoundSplitter::Index& index;
  const SplitConfig& config;
  std::vector<CompoundSplit> found;

  void enumerate(size_t pos, std::vector<Component>& acc) {
    std::vector<const LemmaMatch*> ms;
    index.matches_at(word, pos, ms);
    for (const auto* m : ms) {
      size_t end = pos + m->lowered.size();
      if (end == word.size()) {
        if (acc.size() + 1 >= 2) {
          acc.push_back({m->canonical, ""});
          found.push_back(CompoundSplit{acc, surface});
          acc.pop_back();
        }
        continue;
      }
      for (const auto& linker : config.linkers) {
        size_t next = end + linker.size();
        if (next >= word.size()) continue;
        if (!linker.empty() && word.compare(end, linker.size(), linker) != 0) continue;
        acc.push_back({m->canonical, linker});
        enumerate(next, acc);
        acc.pop_back();
      }
    }
  }
};

}  // namespace

CompoundSplitter::CompoundSplitter(const Lexicon& lexicon, SplitConfig config)
    : config_(std::move(config)), index_(std::make_unique<Index>(lexicon, config_)) {}

CompoundSplitter::~CompoundSplitter() = default;
CompoundSplitter::CompoundSplitter(CompoundSplitter&&) noexcept = default;
CompoundSplitter& CompoundSplitter::operator=(CompoundSplitter&&) noexcept = default;

std::vector<CompoundSplit> CompoundSplitter::enumerate(const std::string& word, int cap) const {
  std::vector<CompoundSplit> out;
  if (word.empty() || cap < 1) return out;
  std::string low = lower_de(word);
  std::vector<Component> acc;
  Enumerator e{low, word, *index_, config_, {}};
  e.enumerate(0, acc);
  std::sort(e.found.begin(), e.found.end(), split_better);
  if (static_cast<int>(e.found.size()) > cap) e.found.resize(cap);
  return e.found;
}

std::optional<CompoundSplit> CompoundSplitter::split(const std::string& word) const {
  if (word.empty()) return std::nullopt;
  const Index& index = *index_;
  const SplitConfig& config = config_;
  std::string low = lower_de(word);
  const size_t n = low.size();

  // best[pos] = min components covering the suffix [pos, n); -1 = impossible
  std::vector<int> best(n + 1, -1);
  std::vector<const LemmaMatch*> ms;
  for (size_t pos = n; pos-- > 0;) {
    index.matches_at(low, pos, ms);
    int b = -1;
    for (const auto* m : ms) {
      size_t end = pos + m->lowered.size();
      if (end == n) {
        if (b < 0 || b > 1) b = 1;
        continue;
      }
      for (const auto& linker : config.linkers) {
        size_t next = end + linker.size();
        if (next >= n) continue;
        if (!linker.empty() && low.compare(end, linker.size(), linker) != 0) continue;
        if (best[next] < 0) continue;
        int cand = 1 + best[next];
        if (b < 0 || cand < b) b = cand;
      }
    }
    best[pos] = b;
  }

  // Minimal count among decompositions with >= 2 components: the first
  // component must not already consume the whole word.
  index.matches_at(low, 0, ms);
  int total = -1;
  for (const auto* m : ms) {
    size_t end = m->lowered.size();
    if (end == n) continue;
    for (const auto& linker : config.linkers) {
      size_t next = end + linker.size();
      if (next >= n) continue;
      if (!linker.empty() && low.compare(end, linker.size(), linker) != 0) continue;
      if (best[next] < 0) continue;
      int cand = 1 + best[next];
      if (total < 0 || cand < total) total = cand;
    }
  }
  if (total < 0) return std::nullopt;

  // Backtrack only along optimal transitions and apply the tie-break.
  std::optional<CompoundSplit> winner;
  std::vector<Component> acc;
  std::vector<const LemmaMatch*> local;
  auto backtrack = [&](auto&& self, size_t pos, int remaining) -> void {
    index.matches_at(low, pos, local);
    std::vector<const LemmaMatch*> ms_here = local;  // matches_at reuses the buffer
    for (const auto* m : ms_here) {
      size_t end = pos + m->lowered.size();
      if (end == n) {
        if (remaining == 1 && acc.size() >= 1) {
          acc.push_back({m->canonical, ""});
          CompoundSplit split{acc, word};
          if (!winner || split_better(split, *winner)) winner = split;
          acc.pop_back();
        }
        continue;
      }
      if (remaining <= 1) continue;
      for (const auto& linker : config.linkers) {
        size_t next = end + linker.size();
        if (next >= n) continue;
        if (!linker.empty() && low.compare(end, linker.size(), linker) != 0) continue;
        if (best[next] != remaining - 1) continue;
        acc.push_back({m->canonical, linker});
        self(self, next, remaining - 1);
        acc.pop_back();
      }
    }
  };
  backtrack(backtrack, 0, total);
  return winner;
}

std::optional<CompoundSplit> split_compound(const std::string& word, const Lexicon& lexicon,
                                            const SplitConfig& config) {
  return CompoundSplitter(lexicon, config).split(word);
}

std::vector<CompoundSplit> enumerate_splits(const std::string& word, const Lexicon& lexicon,
                                            const SplitConfig& config, int cap) {
  return CompoundSplitter(lexicon, config).enumerate(word, cap);
}

AbstractTree to_tree(const CompoundSplit& split) {
  if (split.components.size() < 2)
    throw GrammarError("compound split must have at least two components");
  auto leaf = [](const std::string& lemma) { return AbstractTree{lemma + "_N", {}}; };
  auto cons_fun = [](const std::string& linker) -> std::string {
    if (linker.empty()) return "ConsNomCN";
    if (linker == "s") return "Cons_sCN";
    if (linker == "en") return "Cons_enCN";
    throw GrammarError("no compounding rule for linker '" + linker + "'");
  };
  const auto& comps = split.components;
  AbstractTree tree{"UseN", {leaf(comps.back().lemma)}};
  for (size_t i = comps.size() - 1; i-- > 0;)
    tree = AbstractTree{cons_fun(comps[i].linker), {leaf(comps[i].lemma), tree}};
  return tree;
}

Grammar compound_grammar(const Lexicon& lexicon) {
  Grammar g;
  g.categories = {"N", "CN"};
  g.functions.push_back({"UseN", {"N"}, "CN"});
  g.functions.push_back({"ConsNomCN", {"N", "CN"}, "CN"});
  g.functions.push_back({"Cons_sCN", {"N", "CN"}, "CN"});
  g.functions.push_back({"Cons_enCN", {"N", "CN"}, "CN"});
  g.start_category = "CN";
  std::set<std::string> seen;
  for (const auto& e : lexicon.entries) {
    std::string name = e.lemma + "_N";
    if (seen.insert(name).second) g.functions.push_back({name, {}, "N"});
  }
  return g;
}

}  // namespace mmwe
