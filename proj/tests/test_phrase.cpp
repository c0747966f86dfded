#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "mmwe/phrase.hpp"

using namespace mmwe;

namespace {

const PhraseTable& moses_table() {
  static PhraseTable t =
      load_phrase_table_file(data_path("phrase_table_10.moses"), TableFormat::Moses);
  return t;
}

const PhraseTable& tsv_table() {
  static PhraseTable t =
      load_phrase_table_file(data_path("phrase_table_100.tsv"), TableFormat::Tsv);
  return t;
}

std::set<int> line_set(const std::vector<PhraseEntry>& entries) {
  std::set<int> out;
  for (const auto& e : entries) out.insert(e.line_no);
  return out;
}

}  // namespace

TEST_CASE("moses loading") {
  const PhraseTable& t = moses_table();
  CHECK(t.entries.size() == 10);
  CHECK(t.bad_lines.empty());
  CHECK(t.entries[0].source == std::vector<std::string>{"the", "apple", "juice"});
  CHECK(t.entries[0].target == std::vector<std::string>{"Apfelsaft"});
  CHECK(t.entries[0].probability == doctest::Approx(0.4));
  CHECK(t.entries[3].target.size() == 2);

  // score_index selects another moses column
  auto t2 = load_phrase_table_file(data_path("phrase_table_10.moses"), TableFormat::Moses, 1);
  CHECK(t2.entries[0].probability == doctest::Approx(0.1));
}

TEST_CASE("moses malformed lines are skipped and recorded") {
  auto t = load_phrase_table(
      "a ||| b ||| 0.5\n"
      "\n"
      "no separators here\n"
      "a ||| b ||| nan?\n"
      "a ||| b ||| 1.5\n"
      " ||| b ||| 0.5\n"
      "c ||| d ||| 1.0\n",
      TableFormat::Moses);
  CHECK(t.entries.size() == 2);
  CHECK(t.bad_lines == std::vector<int>{3, 4, 5, 6});
  CHECK(t.entries[1].probability == doctest::Approx(1.0));
  CHECK(t.entries[1].line_no == 7);
}

TEST_CASE("tsv loading keeps constituent labels") {
  const PhraseTable& t = tsv_table();
  CHECK(t.entries.size() == 100);
  CHECK(t.bad_lines.empty());
  CHECK(t.entries[0].is_constituent);
  CHECK(t.entries[0].constituent_label == "NP");
  CHECK(t.entries[6].constituent_label == "S");
  CHECK_FALSE(t.entries[9].is_constituent);
}

TEST_CASE("filter_candidates on the small table") {
  const Grammar& g = toy_grammar();
  auto kept = filter_candidates(moses_table().entries, 0.1, g);
  REQUIRE(kept.size() == 3);
  CHECK(kept[0].target[0] == "Apfelsaft");
  CHECK(kept[1].target[0] == "Krankenwagen");
  CHECK(kept[2].target[0] == "Banane");
}

TEST_CASE("filter is strict at the threshold") {
  const Grammar& g = toy_grammar();
  std::vector<PhraseEntry> entries = {
      {{"the", "banana"}, {"Banane"}, 0.5, false, "", 1},
  };
  CHECK(filter_candidates(entries, 0.5, g).empty());
  CHECK(filter_candidates(entries, 0.49, g).size() == 1);
}

TEST_CASE("filter contract on the 100-entry table") {
  const Grammar& g = toy_grammar();
  const auto& entries = tsv_table().entries;
  CHECK(filter_candidates(entries, 0.0, g).size() == 64);
  CHECK(filter_candidates(entries, 0.1, g).size() == 58);
  CHECK(filter_candidates(entries, 0.5, g).size() == 34);
  CHECK(filter_candidates(entries, 1.0, g).empty());
  CHECK(filter_candidates(entries, 0.1, g, "eng", true).size() == 42);
}

TEST_CASE("raising the threshold keeps a subset") {
  const Grammar& g = toy_grammar();
  const auto& entries = tsv_table().entries;
  auto prev = filter_candidates(entries, 0.0, g);
  for (double t : {0.1, 0.5, 1.0}) {
    auto next = filter_candidates(entries, t, g);
    CHECK(next.size() <= prev.size());
    auto prev_lines = line_set(prev);
    for (int line : line_set(next)) CHECK(prev_lines.count(line) == 1);
    prev = std::move(next);
  }
}

TEST_CASE("filter is idempotent") {
  const Grammar& g = toy_grammar();
  auto once = filter_candidates(tsv_table().entries, 0.1, g);
  auto twice = filter_candidates(once, 0.1, g);
  CHECK(line_set(once) == line_set(twice));
}

TEST_CASE("build_compound_lexicon on the small table") {
  const Grammar& g = toy_grammar();
  auto kept = filter_candidates(moses_table().entries, 0.1, g);
  auto [accepted, rejects] = build_compound_lexicon(kept, de_lexicon(), {}, g);
  REQUIRE(accepted.size() == 2);
  CHECK(serialize(accepted[0].german_tree) == "(ConsNomCN Apfel_N (UseN Saft_N))");
  CHECK(serialize(accepted[1].german_tree) == "(Cons_enCN Krank_N (UseN Wagen_N))");
  CHECK(accepted[0].probability == doctest::Approx(0.4));
  REQUIRE(rejects.size() == 1);
  CHECK(rejects[0].entry.target[0] == "Banane");
  CHECK(rejects[0].reason == "no-split");
}

TEST_CASE("build dedups on trees keeping the maximum probability") {
  const Grammar& g = toy_grammar();
  std::vector<PhraseEntry> entries = {
      {{"the", "apple", "juice"}, {"Apfelsaft"}, 0.3, false, "", 1},
      {{"the", "apple", "juice"}, {"Apfelsaft"}, 0.7, false, "", 2},
      {{"the", "apple", "juice"}, {"Apfelsaft"}, 0.5, false, "", 3},
  };
  auto [accepted, rejects] = build_compound_lexicon(entries, de_lexicon(), {}, g);
  CHECK(rejects.empty());
  REQUIRE(accepted.size() == 1);
  CHECK(accepted[0].probability == doctest::Approx(0.7));
  CHECK(accepted[0].source_entry.line_no == 1);
}

TEST_CASE("build rejects by reason") {
  const Grammar& g = toy_grammar();
  std::vector<PhraseEntry> entries = {
      {{"juice", "the"}, {"Apfelsaft"}, 0.9, false, "", 1},
      {{"the", "banana"}, {"Banane"}, 0.9, false, "", 2},
      {{"the", "apple", "juice"}, {"der", "Apfelsaft"}, 0.9, false, "", 3},
  };
  auto [accepted, rejects] = build_compound_lexicon(entries, de_lexicon(), {}, g);
  CHECK(accepted.empty());
  REQUIRE(rejects.size() == 3);
  CHECK(rejects[0].reason == "no-np-parse");
  CHECK(rejects[1].reason == "no-split");
  CHECK(rejects[2].reason == "not-single-word");
}

TEST_CASE("export_lexicon formats") {
  const Grammar& g = toy_grammar();
  auto kept = filter_candidates(moses_table().entries, 0.1, g);
  auto [accepted, rejects] = build_compound_lexicon(kept, de_lexicon(), {}, g);

  std::string gf = export_lexicon(accepted, LexFormat::Gf);
  CHECK(gf ==
        "-- compound lexicon\n"
        "lin compound_0 = (ConsNomCN Apfel_N (UseN Saft_N)) ; -- the apple juice\n"
        "lin compound_1 = (Cons_enCN Krank_N (UseN Wagen_N)) ; -- the ambulance\n");

  std::string tsv = export_lexicon(accepted, LexFormat::Tsv);
  CHECK(tsv ==
        "english\tgerman\ttree\tprobability\n"
        "the apple juice\tApfelsaft\t(ConsNomCN Apfel_N (UseN Saft_N))\t0.4\n"
        "the ambulance\tKrankenwagen\t(Cons_enCN Krank_N (UseN Wagen_N))\t0.6\n");

  // every exported tree line round-trips through the tree reader
  for (const auto& e : accepted) {
    CHECK(parse_tree_text(serialize(e.german_tree)) == e.german_tree);
  }
}

TEST_CASE("export of an empty lexicon is header-only") {
  CHECK(export_lexicon({}, LexFormat::Tsv) == "english\tgerman\ttree\tprobability\n");
  CHECK(export_lexicon({}, LexFormat::Gf) == "-- compound lexicon\n");
}
