#include "mmwe/mwe.hpp"

#include <algorithm>
#include <set>

namespace mmwe {

std::string to_string(Verdict v) {
  return v == Verdict::NotCandidate ? "NotCandidate" : "Candidate";
}

std::string to_string(CandidateKind k) {
  switch (k) {
    case CandidateKind::FalsePositiveSuspect: return "FalsePositiveSuspect";
    case CandidateKind::LexicalMWE: return "LexicalMWE";
    case CandidateKind::Predicate: return "Predicate";
  }
  return "?";
}

std::vector<AbstractTree> forest_intersect(const std::vector<AbstractTree>& a,
                                           const std::vector<AbstractTree>& b) {
  std::set<std::string> keys_b;
  for (const auto& t : b) keys_b.insert(serialize(t));
  std::map<std::string, AbstractTree> out;
  for (const auto& t : a) {
    std::string key = serialize(t);
    if (keys_b.count(key)) out.emplace(std::move(key), t);
  }
  std::vector<AbstractTree> result;
  for (auto& [_, t] : out) result.push_back(std::move(t));
  return result;
}

namespace {

void diff_into(const AbstractTree& x, const AbstractTree& y, std::vector<int>& path,
               std::vector<TreeDiff>& out) {
  if (x.function == y.function && x.children.size() == y.children.size()) {
    for (size_t i = 0; i < x.children.size(); i++) {
      path.push_back(static_cast<int>(i));
      diff_into(x.children[i], y.children[i], path, out);
      path.pop_back();
    }
    return;
  }
  out.push_back(TreeDiff{path, x, y});
}

}  // namespace

std::vector<TreeDiff> tree_diff(const AbstractTree& x, const AbstractTree& y) {
  std::vector<TreeDiff> out;
  std::vector<int> path;
  diff_into(x, y, path, out);
  return out;
}

BestPair best_pair(const std::vector<AbstractTree>& fx, const std::vector<AbstractTree>& fy) {
  if (fx.empty() || fy.empty()) throw GrammarError("best_pair requires non-empty forests");
  const AbstractTree* bx = nullptr;
  const AbstractTree* by = nullptr;
  std::vector<TreeDiff> best_diffs;
  size_t best_cost = 0;
  for (const auto& x : fx) {
    for (const auto& y : fy) {
      auto diffs = tree_diff(x, y);
      size_t cost = 0;
      for (const auto& d : diffs) cost += d.left.node_count() + d.right.node_count();
      bool better = false;
      if (!bx) {
        better = true;
      } else if (cost != best_cost) {
        better = cost < best_cost;
      } else {
        auto key = serialize(x) + "\x01" + serialize(y);
        auto best_key = serialize(*bx) + "\x01" + serialize(*by);
        better = key < best_key;
      }
      if (better) {
        bx = &x;
        by = &y;
        best_diffs = std::move(diffs);
        best_cost = cost;
      }
    }
  }
  return BestPair{*bx, *by, std::move(best_diffs)};
}

namespace {

// Leaf, or a chain of single-child wrappers ending in a leaf.
bool lexicalish(const AbstractTree& t) {
  if (t.leaf()) return true;
  return t.children.size() == 1 && lexicalish(t.children[0]);
}

}  // namespace

CandidateKind classify_candidate(const DetectionReport& report) {
  if (report.verdict != Verdict::Candidate)
    throw GrammarError("classify_candidate called on a NotCandidate report");
  if (report.outcome_x.status != ParseStatus::Full ||
      report.outcome_y.status != ParseStatus::Full)
    return CandidateKind::FalsePositiveSuspect;
  for (const auto& d : report.diffs)
    if (!lexicalish(d.left) || !lexicalish(d.right)) return CandidateKind::Predicate;
  return CandidateKind::LexicalMWE;
}

DetectionReport detect_pair(const SentencePair& pair, const Grammar& g, int cap) {
  if (!g.concretes.count(pair.lang_x))
    throw GrammarError("no concrete syntax for language " + pair.lang_x);
  if (!g.concretes.count(pair.lang_y))
    throw GrammarError("no concrete syntax for language " + pair.lang_y);

  DetectionReport report;
  report.pair_id = pair.id;
  report.outcome_x = chunk_parse(pair.tokens_x, g, pair.lang_x, cap);
  report.outcome_y = chunk_parse(pair.tokens_y, g, pair.lang_y, cap);

  auto comparison_set = [&](const ParseOutcome& o) -> std::vector<AbstractTree> {
    if (o.status == ParseStatus::Full) return o.forest;
    if (o.status == ParseStatus::Chunked) return {*o.chunk_tree};
    return {};
  };
  std::vector<AbstractTree> set_x = comparison_set(report.outcome_x);
  std::vector<AbstractTree> set_y = comparison_set(report.outcome_y);

  // Full vs. Chunked: the full side is additionally projected to chunks so
  // the two representations are comparable.
  if (report.outcome_x.status == ParseStatus::Full &&
      report.outcome_y.status == ParseStatus::Chunked) {
    for (const auto& t : report.outcome_x.forest) set_x.push_back(project_chunks(t, g));
  } else if (report.outcome_y.status == ParseStatus::Full &&
             report.outcome_x.status == ParseStatus::Chunked) {
    for (const auto& t : report.outcome_y.forest) set_y.push_back(project_chunks(t, g));
  }

  bool shared = !forest_intersect(set_x, set_y).empty();
  report.verdict = shared ? Verdict::NotCandidate : Verdict::Candidate;
  if (report.verdict == Verdict::Candidate && !set_x.empty() && !set_y.empty()) {
    BestPair best = best_pair(set_x, set_y);
    report.best = {best.x, best.y};
    report.diffs = std::move(best.diffs);
  }
  if (report.verdict == Verdict::Candidate) report.kind = classify_candidate(report);
  return report;
}

namespace {

bool contains_subtree(const AbstractTree& haystack, const AbstractTree& needle) {
  if (haystack == needle) return true;
  for (const auto& c : haystack.children)
    if (contains_subtree(c, needle)) return true;
  return false;
}

// Maximal subtrees of x that also occur somewhere in y, in leaf order.
void shared_subtrees(const AbstractTree& x, const AbstractTree& y,
                     std::vector<AbstractTree>& out) {
  if (contains_subtree(y, x)) {
    out.push_back(x);
    return;
  }
  for (const auto& c : x.children) shared_subtrees(c, y, out);
}

std::string join(const std::vector<std::string>& toks) {
  std::string out;
  for (const auto& t : toks) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

}  // namespace

std::string emit_construction(const TreeDiff& diff, const std::string& name, const Grammar& g,
                              const std::string& lang_x, const std::string& lang_y) {
  auto result_cat = tree_category(diff.left, g);
  if (!result_cat) throw GrammarError("ill-typed subtree: " + serialize(diff.left));
  auto check = validate_tree(diff.left, g);
  if (!check.ok) throw GrammarError("ill-typed subtree: " + check.message);
  check = validate_tree(diff.right, g);
  if (!check.ok) throw GrammarError("ill-typed subtree: " + check.message);

  std::vector<AbstractTree> shared;
  shared_subtrees(diff.left, diff.right, shared);
  // one argument per distinct shared subtree, first-occurrence order
  std::vector<AbstractTree> args;
  for (const auto& t : shared) {
    if (std::find(args.begin(), args.end(), t) == args.end()) args.push_back(t);
  }

  std::string out = "fun " + name + " : ";
  for (const auto& a : args) {
    auto cat = tree_category(a, g);
    if (!cat) throw GrammarError("ill-typed subtree: " + serialize(a));
    out += *cat + " -> ";
  }
  out += *result_cat + " ;";
  out += " -- " + join(linearize(diff.left, g, lang_x)) + " / " +
         join(linearize(diff.right, g, lang_y));
  return out;
}

}  // namespace mmwe
