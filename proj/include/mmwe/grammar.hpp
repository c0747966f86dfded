#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mmwe {

struct GrammarError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Category = std::string;

// fun name : A1 -> ... -> An -> R
struct FunctionDecl {
  std::string name;
  std::vector<Category> args;
  Category result;

  bool lexical() const { return args.empty(); }
  size_t arity() const { return args.size(); }
};

// One slot of a linearization template: a literal surface token or a
// 0-based argument reference.
struct LinItem {
  bool is_arg = false;
  std::string token;  // valid when !is_arg
  int arg = -1;       // valid when is_arg
};

struct LinRule {
  std::string function;
  std::vector<LinItem> items;
};

struct AbstractTree {
  std::string function;
  std::vector<AbstractTree> children;

  bool leaf() const { return children.empty(); }
  size_t node_count() const;
};

bool operator==(const AbstractTree& a, const AbstractTree& b);
bool operator!=(const AbstractTree& a, const AbstractTree& b);

// Parenthesized prefix form: leaves are bare names, internal nodes are
// "(fun child ...)".
std::string serialize(const AbstractTree& tree);
// Accepts both "name" and "(name)" for leaves.
AbstractTree parse_tree_text(const std::string& text);

// Total order consistent with lexicographic order of serialized forms.
bool tree_less(const AbstractTree& a, const AbstractTree& b);

struct Grammar {
  std::vector<Category> categories;  // declaration order
  std::vector<FunctionDecl> functions;
  // language code -> function name -> rule
  std::map<std::string, std::map<std::string, LinRule>> concretes;
  Category start_category;
  std::vector<Category> chunk_categories;  // declaration order, used for tie-breaks

  bool has_category(const Category& c) const;
  const FunctionDecl* find_function(const std::string& name) const;
  const LinRule* find_rule(const std::string& language, const std::string& function) const;
  std::vector<std::string> languages() const;
};

// Line-oriented grammar format:
//   cat NP ;
//   fun apple_N : N ;
//   fun glass_of_CN : NP -> CN ;
//   lin eng apple_N = "apple" ;
//   lin swe where_go_QCl = "vart" "gick" $0 ;
//   start S ;
//   chunkcats NP VP AP Adv ;
// "--" starts a comment.
Grammar load_grammar(const std::string& source);
Grammar load_grammar_file(const std::string& path);

// Round-trips through load_grammar.
std::string serialize_grammar(const Grammar& g);

struct TypeVerdict {
  bool ok = true;
  std::vector<int> path;  // child-index path to the first ill-typed node
  std::string message;
};

TypeVerdict validate_tree(const AbstractTree& tree, const Grammar& g);

// Result category of the root function, if declared.
std::optional<Category> tree_category(const AbstractTree& tree, const Grammar& g);

// Throws GrammarError if some function in the tree has no rule for the language.
std::vector<std::string> linearize(const AbstractTree& tree, const Grammar& g,
                                   const std::string& language);

// True when every function in the tree has a rule for the language.
bool has_coverage(const AbstractTree& tree, const Grammar& g, const std::string& language);

}  // namespace mmwe
