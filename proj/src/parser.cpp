#include "mmwe/parser.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace mmwe {

namespace {

// A chart cell keeps its trees keyed by serialized form so truncation to the
// cap drops the lexicographically largest trees first.
struct Cell {
  std::map<std::string, AbstractTree> trees;

  bool insert(const AbstractTree& t, int cap) {
    std::string key = serialize(t);
    if (trees.count(key)) return false;
    trees.emplace(std::move(key), t);
    if (static_cast<int>(trees.size()) > cap) {
      auto last = std::prev(trees.end());
      bool dropped_new = last->second == t;
      trees.erase(last);
      return !dropped_new;
    }
    return true;
  }
};

struct Chart {
  // cell index: (category, i, j) over token spans [i, j)
  std::map<std::tuple<Category, int, int>, Cell> cells;

  Cell& at(const Category& c, int i, int j) { return cells[{c, i, j}]; }
  const Cell* find(const Category& c, int i, int j) const {
    auto it = cells.find({c, i, j});
    return it == cells.end() ? nullptr : &it->second;
  }
};

struct RuleMatcher {
  const std::vector<std::string>& tokens;
  const Grammar& g;
  Chart& chart;
  const FunctionDecl& decl;
  const LinRule& rule;
  int span_begin, span_end, cap;
  std::vector<const AbstractTree*> args;
  bool inserted_any = false;

  // Minimal token width of items[k..): each item consumes at least one token.
  int min_width(size_t k) const { return static_cast<int>(rule.items.size() - k); }

  void match(size_t item_idx, int pos) {
    if (item_idx == rule.items.size()) {
      if (pos != span_end) return;
      AbstractTree t{decl.name, {}};
      t.children.reserve(decl.arity());
      for (const auto* a : args) t.children.push_back(*a);
      if (chart.at(decl.result, span_begin, span_end).insert(t, cap)) inserted_any = true;
      return;
    }
    const LinItem& item = rule.items[item_idx];
    if (!item.is_arg) {
      if (pos < span_end && tokens[pos] == item.token) match(item_idx + 1, pos + 1);
      return;
    }
    const Category& arg_cat = decl.args[item.arg];
    int max_end = span_end - min_width(item_idx + 1);
    for (int end = pos + 1; end <= max_end; end++) {
      const Cell* cell = chart.find(arg_cat, pos, end);
      if (!cell) continue;
      // snapshot: inserting into the chart during the walk may touch this cell
      std::vector<AbstractTree> candidates;
      candidates.reserve(cell->trees.size());
      for (const auto& [_, tree] : cell->trees) candidates.push_back(tree);
      for (const auto& tree : candidates) {
        args[item.arg] = &tree;
        match(item_idx + 1, end);
      }
    }
    args[item.arg] = nullptr;
  }
};

Chart build_chart(const std::vector<std::string>& tokens, const Grammar& g,
                  const std::string& language, int cap) {
  Chart chart;
  const int n = static_cast<int>(tokens.size());
  auto lang_it = g.concretes.find(language);
  if (lang_it == g.concretes.end()) return chart;
  const auto& rules = lang_it->second;

  for (int len = 1; len <= n; len++) {
    for (int i = 0; i + len <= n; i++) {
      // Repeat until fixpoint so same-span unary rules compose. The pass
      // bound cuts off unary cycles, which the cap semantics already
      // truncates.
      bool changed = true;
      int passes = 0;
      while (changed && passes < 64) {
        changed = false;
        passes++;
        for (const auto& [fname, rule] : rules) {
          const FunctionDecl* decl = g.find_function(fname);
          if (!decl) continue;
          if (static_cast<int>(rule.items.size()) > len) continue;
          RuleMatcher m{tokens, g, chart, *decl, rule, i, i + len, cap, {}};
          m.args.assign(decl->arity(), nullptr);
          m.match(0, i);
          if (m.inserted_any) changed = true;
        }
      }
    }
  }
  return chart;
}

}  // namespace

std::vector<AbstractTree> parse(const std::vector<std::string>& tokens, const Grammar& g,
                                const std::string& language, const Category& start, int cap) {
  std::vector<AbstractTree> out;
  if (tokens.empty() || cap < 1) return out;
  Chart chart = build_chart(tokens, g, language, cap);
  const Cell* cell = chart.find(start, 0, static_cast<int>(tokens.size()));
  if (!cell) return out;
  for (const auto& [_, tree] : cell->trees) out.push_back(tree);
  return out;
}

ParseOutcome chunk_parse(const std::vector<std::string>& tokens, const Grammar& g,
                         const std::string& language, int cap) {
  ParseOutcome outcome;
  outcome.language = language;
  if (tokens.empty()) {
    outcome.status = ParseStatus::Failed;
    return outcome;
  }
  outcome.forest = parse(tokens, g, language, g.start_category, cap);
  if (!outcome.forest.empty()) {
    outcome.status = ParseStatus::Full;
    return outcome;
  }

  const int n = static_cast<int>(tokens.size());
  Chart chart = build_chart(tokens, g, language, cap);
  AbstractTree chunks{kChunksNode, {}};
  int pos = 0;
  while (pos < n) {
    bool matched = false;
    for (int len = n - pos; len >= 1 && !matched; len--) {
      for (const auto& cat : g.chunk_categories) {
        const Cell* cell = chart.find(cat, pos, pos + len);
        if (cell && !cell->trees.empty()) {
          chunks.children.push_back(cell->trees.begin()->second);
          pos += len;
          matched = true;
          break;
        }
      }
    }
    if (!matched) {
      chunks.children.push_back(AbstractTree{kUnkChunkNode, {AbstractTree{tokens[pos], {}}}});
      pos++;
    }
  }
  outcome.status = ParseStatus::Chunked;
  outcome.chunk_tree = chunks;
  return outcome;
}

namespace {

void collect_chunks(const AbstractTree& t, const Grammar& g, std::vector<AbstractTree>& out) {
  auto cat = tree_category(t, g);
  if (cat && std::find(g.chunk_categories.begin(), g.chunk_categories.end(), *cat) !=
                 g.chunk_categories.end()) {
    out.push_back(t);
    return;
  }
  for (const auto& c : t.children) collect_chunks(c, g, out);
}

}  // namespace

AbstractTree project_chunks(const AbstractTree& tree, const Grammar& g) {
  if (tree.function == kChunksNode) return tree;  // already projected
  AbstractTree chunks{kChunksNode, {}};
  collect_chunks(tree, g, chunks.children);
  return chunks;
}

std::vector<AbstractTree> enumerate_trees(const Grammar& g, const Category& category, int depth) {
  // by_cat[d][cat] = all trees of that category with depth exactly <= d
  std::map<Category, std::vector<AbstractTree>> prev, cur;
  for (int d = 1; d <= depth; d++) {
    cur.clear();
    for (const auto& f : g.functions) {
      if (f.lexical()) {
        cur[f.result].push_back(AbstractTree{f.name, {}});
        continue;
      }
      if (d == 1) continue;
      // cartesian product over argument choices from depth d-1 pools
      std::vector<AbstractTree> partial{AbstractTree{f.name, {}}};
      for (const auto& arg_cat : f.args) {
        auto pool = prev.find(arg_cat);
        if (pool == prev.end() || pool->second.empty()) {
          partial.clear();
          break;
        }
        std::vector<AbstractTree> next;
        for (const auto& p : partial) {
          for (const auto& child : pool->second) {
            AbstractTree t = p;
            t.children.push_back(child);
            next.push_back(std::move(t));
          }
        }
        partial = std::move(next);
      }
      auto& dst = cur[f.result];
      dst.insert(dst.end(), partial.begin(), partial.end());
    }
    prev = cur;
  }
  auto it = prev.find(category);
  std::vector<AbstractTree> out = it == prev.end() ? std::vector<AbstractTree>{} : it->second;
  std::sort(out.begin(), out.end(), tree_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<Category, AbstractTree>> enumerate_all_trees(const Grammar& g, int depth) {
  std::vector<std::pair<Category, AbstractTree>> out;
  for (const auto& cat : g.categories)
    for (auto& t : enumerate_trees(g, cat, depth)) out.emplace_back(cat, std::move(t));
  return out;
}

}  // namespace mmwe
