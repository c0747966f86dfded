#include "mmwe/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace mmwe {

using nlohmann::json;

Summary summarize(const std::vector<DetectionReport>& reports) {
  Summary s;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::NotCandidate) {
      s.not_candidates++;
      continue;
    }
    s.candidates++;
    if (!r.kind) continue;
    switch (*r.kind) {
      case CandidateKind::FalsePositiveSuspect: s.false_positives++; break;
      case CandidateKind::LexicalMWE: s.lexical_mwes++; break;
      case CandidateKind::Predicate: s.predicates++; break;
    }
  }
  return s;
}

namespace {

json outcome_to_json(const ParseOutcome& o) {
  json j;
  switch (o.status) {
    case ParseStatus::Full: j["status"] = "Full"; break;
    case ParseStatus::Chunked: j["status"] = "Chunked"; break;
    case ParseStatus::Failed: j["status"] = "Failed"; break;
  }
  j["language"] = o.language;
  json forest = json::array();
  for (const auto& t : o.forest) forest.push_back(serialize(t));
  j["forest"] = forest;
  if (o.chunk_tree) j["chunk_tree"] = serialize(*o.chunk_tree);
  return j;
}

}  // namespace

std::string report_to_json(const DetectionReport& r) {
  json j;
  j["pair_id"] = r.pair_id;
  j["verdict"] = to_string(r.verdict);
  if (r.kind) j["kind"] = to_string(*r.kind);
  j["outcome_x"] = outcome_to_json(r.outcome_x);
  j["outcome_y"] = outcome_to_json(r.outcome_y);
  json diffs = json::array();
  for (const auto& d : r.diffs) {
    json dj;
    dj["path"] = d.path;
    dj["x"] = serialize(d.left);
    dj["y"] = serialize(d.right);
    diffs.push_back(dj);
  }
  j["diffs"] = diffs;
  if (r.best) {
    j["best_x"] = serialize(r.best->first);
    j["best_y"] = serialize(r.best->second);
  }
  return j.dump();
}

Summary summary_from_jsonl(const std::string& jsonl) {
  Summary s;
  std::istringstream in(jsonl);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    if (j.value("verdict", "") == "NotCandidate") {
      s.not_candidates++;
      continue;
    }
    s.candidates++;
    std::string kind = j.value("kind", "");
    if (kind == "FalsePositiveSuspect") s.false_positives++;
    else if (kind == "LexicalMWE") s.lexical_mwes++;
    else if (kind == "Predicate") s.predicates++;
  }
  return s;
}

std::string render_summary(const Summary& s) {
  std::ostringstream out;
  auto row = [&](const std::string& label, int value, bool indent) {
    out << (indent ? "    " : "") << std::left << std::setw(indent ? 20 : 24) << label
        << std::right << std::setw(6) << value << "\n";
  };
  row("Not MWE candidates", s.not_candidates, false);
  row("MWE candidates", s.candidates, false);
  row("False positives", s.false_positives, true);
  row("Lexical MWEs", s.lexical_mwes, true);
  row("Predicates", s.predicates, true);
  row("All sentences", s.total(), false);
  return out.str();
}

std::string summary_to_json(const Summary& s) {
  json j;
  j["not_candidates"] = s.not_candidates;
  j["candidates"] = s.candidates;
  j["false_positives"] = s.false_positives;
  j["lexical_mwes"] = s.lexical_mwes;
  j["predicates"] = s.predicates;
  j["total"] = s.total();
  return j.dump();
}

}  // namespace mmwe
