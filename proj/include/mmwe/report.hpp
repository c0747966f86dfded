#pragma once

#include <string>
#include <vector>

#include "mmwe/mwe.hpp"

namespace mmwe {

struct Summary {
  int not_candidates = 0;
  int candidates = 0;
  int false_positives = 0;
  int lexical_mwes = 0;
  int predicates = 0;

  int total() const { return not_candidates + candidates; }
  bool balanced() const {
    return false_positives + lexical_mwes + predicates == candidates;
  }
};

Summary summarize(const std::vector<DetectionReport>& reports);

// One JSON object per report: pair_id, verdict, kind, diffs, best pair.
std::string report_to_json(const DetectionReport& report);
Summary summary_from_jsonl(const std::string& jsonl);

// Five-row table: not-candidates, candidates (false positives / lexical MWEs
// / predicates), total.
std::string render_summary(const Summary& s);

std::string summary_to_json(const Summary& s);

}  // namespace mmwe
