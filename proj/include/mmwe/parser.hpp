#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mmwe/grammar.hpp"

namespace mmwe {

inline constexpr int kDefaultAmbiguityCap = 64;

// Synthetic node names used by the chunking fallback.
inline constexpr const char* kChunksNode = "Chunks";
inline constexpr const char* kUnkChunkNode = "UnkChunk";

enum class ParseStatus { Full, Chunked, Failed };

struct ParseOutcome {
  ParseStatus status = ParseStatus::Failed;
  std::vector<AbstractTree> forest;          // non-empty iff Full
  std::optional<AbstractTree> chunk_tree;    // present iff Chunked
  std::string language;
};

// All distinct well-typed trees with the given result category whose
// linearization equals `tokens`, in lexicographic order of serialized form,
// truncated to `cap`.
std::vector<AbstractTree> parse(const std::vector<std::string>& tokens, const Grammar& g,
                                const std::string& language, const Category& start,
                                int cap = kDefaultAmbiguityCap);

// Full parse at the grammar's start category when possible; otherwise a greedy
// longest-prefix cover with the grammar's chunk categories. Unknown tokens
// become (UnkChunk <token>) leaves. Failed only for empty input.
ParseOutcome chunk_parse(const std::vector<std::string>& tokens, const Grammar& g,
                         const std::string& language, int cap = kDefaultAmbiguityCap);

// Chunks-rooted tree whose children are the maximal subtrees of `tree` (in
// leaf order) with a category in chunk_categories. Idempotent.
AbstractTree project_chunks(const AbstractTree& tree, const Grammar& g);

// All well-typed trees of the category with depth <= depth (a leaf has
// depth 1), sorted by serialized form.
std::vector<AbstractTree> enumerate_trees(const Grammar& g, const Category& category, int depth);

// Same, across every declared category.
std::vector<std::pair<Category, AbstractTree>> enumerate_all_trees(const Grammar& g, int depth);

}  // namespace mmwe
