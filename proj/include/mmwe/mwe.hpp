#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mmwe/grammar.hpp"
#include "mmwe/parser.hpp"

namespace mmwe {

struct SentencePair {
  std::string id;
  std::string lang_x, lang_y;
  std::vector<std::string> tokens_x, tokens_y;
};

enum class Verdict { NotCandidate, Candidate };

enum class CandidateKind { FalsePositiveSuspect, LexicalMWE, Predicate };

std::string to_string(Verdict v);
std::string to_string(CandidateKind k);

struct TreeDiff {
  std::vector<int> path;  // child-index path from the root to the mismatch
  AbstractTree left, right;
};

struct DetectionReport {
  std::string pair_id;
  ParseOutcome outcome_x, outcome_y;
  Verdict verdict = Verdict::NotCandidate;
  std::optional<CandidateKind> kind;
  std::vector<TreeDiff> diffs;
  std::optional<std::pair<AbstractTree, AbstractTree>> best;
};

// Exact structural intersection, sorted by serialized form.
std::vector<AbstractTree> forest_intersect(const std::vector<AbstractTree>& a,
                                           const std::vector<AbstractTree>& b);

// Maximal mismatching positions between two trees; empty iff the trees are
// identical.
std::vector<TreeDiff> tree_diff(const AbstractTree& x, const AbstractTree& y);

struct BestPair {
  AbstractTree x, y;
  std::vector<TreeDiff> diffs;
};

// The (x, y) pair minimizing the total node count of differing subtrees; ties
// broken by serialized order of (x, y). Throws GrammarError on empty input.
BestPair best_pair(const std::vector<AbstractTree>& fx, const std::vector<AbstractTree>& fy);

// Buckets a Candidate report. Throws GrammarError on a NotCandidate report.
CandidateKind classify_candidate(const DetectionReport& report);

// Parses both sides (full, falling back to chunks) and compares the forests.
DetectionReport detect_pair(const SentencePair& pair, const Grammar& g,
                            int cap = kDefaultAmbiguityCap);

// Construction signature for a diff site, in the style
//   fun where_go_QCl : NP -> QCl ; -- where did X go / vart gick X
// Argument categories come from the maximal subtrees shared by both sides of
// the diff; the surface comment linearizes each side in its language.
std::string emit_construction(const TreeDiff& diff, const std::string& name, const Grammar& g,
                              const std::string& lang_x, const std::string& lang_y);

}  // namespace mmwe
