#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "mmwe/parser.hpp"

using namespace mmwe;

namespace {

// Independent oracle: enumerate all well-typed trees whose yield in the
// language has at most max_len tokens, by recursion over function
// declarations. Does not touch the chart parser.
void oracle_enumerate(const Grammar& g, const std::string& lang, const Category& cat,
                      int max_len, std::vector<AbstractTree>& out) {
  struct Gen {
    const Grammar& g;
    const std::string& lang;
    int max_len;

    std::vector<std::pair<AbstractTree, int>> trees_of(const Category& cat, int budget) {
      std::vector<std::pair<AbstractTree, int>> result;
      if (budget <= 0) return result;
      for (const auto& f : g.functions) {
        if (f.result != cat) continue;
        const LinRule* rule = g.find_rule(lang, f.name);
        if (!rule) continue;
        int literals = 0;
        for (const auto& item : rule->items)
          if (!item.is_arg) literals++;
        int child_budget = budget - literals;
        if (child_budget < static_cast<int>(f.arity())) continue;
        std::vector<std::pair<AbstractTree, int>> partial{{AbstractTree{f.name, {}}, literals}};
        for (size_t a = 0; a < f.args.size(); a++) {
          const auto& arg_cat = f.args[a];
          // each later argument still needs at least one token of the budget
          int reserved = static_cast<int>(f.args.size() - a - 1);
          std::vector<std::pair<AbstractTree, int>> next;
          for (const auto& [p, used] : partial) {
            for (const auto& [child, child_used] : trees_of(arg_cat, budget - used - reserved)) {
              AbstractTree t = p;
              t.children.push_back(child);
              next.push_back({std::move(t), used + child_used});
            }
          }
          partial = std::move(next);
        }
        for (auto& [t, used] : partial)
          if (used <= budget) result.push_back({std::move(t), used});
      }
      return result;
    }
  } gen{g, lang, max_len};
  for (auto& [t, _] : gen.trees_of(cat, max_len)) out.push_back(std::move(t));
}

}  // namespace

TEST_CASE("single token parses to the lexical tree") {
  auto forest = parse({"apple"}, toy_grammar(), "eng", "N");
  REQUIRE(forest.size() == 1);
  CHECK(serialize(forest[0]) == "apple_N");
}

TEST_CASE("paper direction question parses in Swedish") {
  auto forest = parse({"vart", "gick", "X"}, toy_grammar(), "swe", "QCl");
  REQUIRE(forest.size() == 1);
  CHECK(serialize(forest[0]) == "(where_go_QCl X_NP)");
}

TEST_CASE("ambiguous sentence yields a two-tree forest") {
  // "hello" is both a bare interjection utterance and a greeting clause
  auto forest = parse({"hello"}, toy_grammar(), "eng", "S");
  REQUIRE(forest.size() == 2);
  CHECK(serialize(forest[0]) == "(UttCl (greet_Cl hello_Interj))");
  CHECK(serialize(forest[1]) == "(UttInterj hello_Interj)");
}

TEST_CASE("cap truncates deterministically") {
  auto forest = parse({"hello"}, toy_grammar(), "eng", "S", 1);
  REQUIRE(forest.size() == 1);
  CHECK(serialize(forest[0]) == "(UttCl (greet_Cl hello_Interj))");
}

TEST_CASE("parse soundness: every returned tree linearizes to the input") {
  const Grammar& g = toy_grammar();
  std::vector<std::vector<std::string>> inputs = {
      {"the", "glass", "of", "water"},
      {"where", "did", "the", "dog", "go"},
      {"the", "little", "car"},
      {"it", "is", "warm"},
  };
  for (const auto& tokens : inputs) {
    for (const auto& t : parse(tokens, g, "eng", g.start_category)) {
      CHECK(linearize(t, g, "eng") == tokens);
    }
  }
}

TEST_CASE("parse completeness against brute-force enumeration") {
  const Grammar& g = toy_grammar();
  for (const std::string lang : {"eng", "swe"}) {
    std::vector<AbstractTree> oracle;
    oracle_enumerate(g, lang, g.start_category, 5, oracle);
    REQUIRE(oracle.size() > 50);
    for (const auto& t : oracle) {
      auto tokens = linearize(t, g, lang);
      if (tokens.size() > 5) continue;
      auto forest = parse(tokens, g, lang, g.start_category, 1000);
      bool found = std::any_of(forest.begin(), forest.end(),
                               [&](const AbstractTree& p) { return p == t; });
      CHECK_MESSAGE(found, "missing ", serialize(t), " for yield of '", lang, "'");
    }
  }
}

TEST_CASE("chunk_parse falls back on out-of-grammar words") {
  const Grammar& g = toy_grammar();

  auto full = chunk_parse({"the", "dog", "runs"}, g, "eng");
  CHECK(full.status == ParseStatus::Full);

  auto chunked = chunk_parse({"en", "hund", "springer", "tyvärr"}, g, "swe");
  REQUIRE(chunked.status == ParseStatus::Chunked);
  const AbstractTree& chunks = *chunked.chunk_tree;
  CHECK(chunks.function == kChunksNode);
  REQUIRE(chunks.children.size() == 3);
  CHECK(serialize(chunks.children[0]) == "(DetCN (UseN dog_N))");
  CHECK(serialize(chunks.children[1]) == "(UseV run_V)");
  CHECK(serialize(chunks.children[2]) == "(UnkChunk tyvärr)");

  CHECK(chunk_parse({}, g, "eng").status == ParseStatus::Failed);
}

TEST_CASE("chunk cover: chunk yields concatenate to the input") {
  const Grammar& g = toy_grammar();
  std::vector<std::vector<std::string>> inputs = {
      {"en", "hund", "springer", "tyvärr"},
      {"hej", "vän"},
      {"en", "bok", "är", "tung"},
      {"zzz"},
  };
  for (const auto& tokens : inputs) {
    auto outcome = chunk_parse(tokens, g, "swe");
    REQUIRE(outcome.status == ParseStatus::Chunked);
    std::vector<std::string> cover;
    for (const auto& child : outcome.chunk_tree->children) {
      if (child.function == kUnkChunkNode) {
        cover.push_back(child.children.at(0).function);
      } else {
        auto toks = linearize(child, g, "swe");
        cover.insert(cover.end(), toks.begin(), toks.end());
      }
    }
    CHECK(cover == tokens);
  }
}

TEST_CASE("chunk children keep their local structure") {
  const Grammar& g = toy_grammar();
  auto outcome = chunk_parse({"en", "stor", "hus", "tyvärr"}, g, "swe");
  REQUIRE(outcome.status == ParseStatus::Chunked);
  // "en stor hus" stays a full NP subtree, not flattened tokens
  CHECK(serialize(outcome.chunk_tree->children[0]) == "(DetCN (AdjCN big_A (UseN house_N)))");
}

TEST_CASE("project_chunks extracts maximal chunk-category subtrees") {
  const Grammar& g = toy_grammar();
  auto forest = parse({"the", "dog", "runs"}, g, "eng", "S");
  REQUIRE(forest.size() == 1);
  AbstractTree projected = project_chunks(forest[0], g);
  CHECK(serialize(projected) == "(Chunks (DetCN (UseN dog_N)) (UseV run_V))");
  // idempotent
  CHECK(project_chunks(projected, g) == projected);

  // a tree that is itself a chunk category projects to a single child
  AbstractTree np = parse_tree_text("(DetCN (UseN dog_N))");
  AbstractTree p = project_chunks(np, g);
  REQUIRE(p.children.size() == 1);
  CHECK(p.children[0] == np);
}

TEST_CASE("project_chunks children preserve leaf order and yield") {
  const Grammar& g = toy_grammar();
  auto forest = parse({"she", "runs", "now"}, g, "eng", "S");
  REQUIRE(!forest.empty());
  AbstractTree projected = project_chunks(forest[0], g);
  std::vector<std::string> cover;
  for (const auto& c : projected.children) {
    auto toks = linearize(c, g, "eng");
    cover.insert(cover.end(), toks.begin(), toks.end());
  }
  CHECK(cover == std::vector<std::string>{"she", "runs", "now"});
}

TEST_CASE("enumerate_trees depth semantics") {
  const Grammar& g = toy_grammar();
  auto depth1 = enumerate_trees(g, "N", 1);
  int lexical_n = 0;
  for (const auto& f : g.functions)
    if (f.lexical() && f.result == "N") lexical_n++;
  CHECK(static_cast<int>(depth1.size()) == lexical_n);

  auto depth2 = enumerate_trees(g, "CN", 2);
  auto depth3 = enumerate_trees(g, "CN", 3);
  CHECK(depth3.size() > depth2.size());
  // monotone: every depth-2 tree appears at depth 3
  for (const auto& t : depth2)
    CHECK(std::find(depth3.begin(), depth3.end(), t) != depth3.end());
}
