#include "mmwe/grammar.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace mmwe {

size_t AbstractTree::node_count() const {
  size_t n = 1;
  for (const auto& c : children) n += c.node_count();
  return n;
}

bool operator==(const AbstractTree& a, const AbstractTree& b) {
  return a.function == b.function && a.children == b.children;
}

bool operator!=(const AbstractTree& a, const AbstractTree& b) { return !(a == b); }

static void serialize_into(const AbstractTree& t, std::string& out) {
  if (t.leaf()) {
    out += t.function;
    return;
  }
  out += '(';
  out += t.function;
  for (const auto& c : t.children) {
    out += ' ';
    serialize_into(c, out);
  }
  out += ')';
}

std::string serialize(const AbstractTree& tree) {
  std::string out;
  serialize_into(tree, out);
  return out;
}

bool tree_less(const AbstractTree& a, const AbstractTree& b) {
  return serialize(a) < serialize(b);
}

namespace {

struct TreeTextParser {
  const std::string& s;
  size_t pos = 0;

  explicit TreeTextParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) pos++;
  }

  std::string name() {
    size_t start = pos;
    while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) &&
           s[pos] != '(' && s[pos] != ')')
      pos++;
    if (pos == start) throw GrammarError("tree syntax error at offset " + std::to_string(pos));
    return s.substr(start, pos - start);
  }

  AbstractTree node() {
    skip_ws();
    if (pos >= s.size()) throw GrammarError("unexpected end of tree text");
    if (s[pos] != '(') return AbstractTree{name(), {}};
    pos++;  // '('
    skip_ws();
    AbstractTree t{name(), {}};
    skip_ws();
    while (pos < s.size() && s[pos] != ')') {
      t.children.push_back(node());
      skip_ws();
    }
    if (pos >= s.size()) throw GrammarError("unbalanced parenthesis in tree text");
    pos++;  // ')'
    return t;
  }
};

}  // namespace

AbstractTree parse_tree_text(const std::string& text) {
  TreeTextParser p(text);
  AbstractTree t = p.node();
  p.skip_ws();
  if (p.pos != text.size())
    throw GrammarError("trailing characters in tree text at offset " + std::to_string(p.pos));
  return t;
}

bool Grammar::has_category(const Category& c) const {
  return std::find(categories.begin(), categories.end(), c) != categories.end();
}

const FunctionDecl* Grammar::find_function(const std::string& name) const {
  for (const auto& f : functions)
    if (f.name == name) return &f;
  return nullptr;
}

const LinRule* Grammar::find_rule(const std::string& language, const std::string& function) const {
  auto lang = concretes.find(language);
  if (lang == concretes.end()) return nullptr;
  auto rule = lang->second.find(function);
  if (rule == lang->second.end()) return nullptr;
  return &rule->second;
}

std::vector<std::string> Grammar::languages() const {
  std::vector<std::string> out;
  for (const auto& [lang, _] : concretes) out.push_back(lang);
  return out;
}

namespace {

[[noreturn]] void fail(int line_no, const std::string& msg) {
  throw GrammarError("line " + std::to_string(line_no) + ": " + msg);
}

std::string strip_comment(const std::string& line) {
  // "--" outside of a quoted token starts a comment
  bool quoted = false;
  for (size_t i = 0; i < line.size(); i++) {
    if (line[i] == '"') quoted = !quoted;
    if (!quoted && line[i] == '-' && i + 1 < line.size() && line[i + 1] == '-')
      return line.substr(0, i);
  }
  return line;
}

std::vector<std::string> lex_line(const std::string& line, int line_no) {
  std::vector<std::string> toks;
  size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      i++;
    } else if (c == '"') {
      size_t end = line.find('"', i + 1);
      if (end == std::string::npos) fail(line_no, "unterminated quoted token");
      toks.push_back(line.substr(i, end - i + 1));  // keep quotes
      i = end + 1;
    } else if (c == ';' || c == '=') {
      toks.push_back(std::string(1, c));
      i++;
    } else {
      size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
             line[i] != ';' && line[i] != '=' && line[i] != '"')
        i++;
      toks.push_back(line.substr(start, i - start));
    }
  }
  return toks;
}

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  for (unsigned char c : s)
    if (!(std::isalnum(c) || c == '_' || c >= 0x80)) return false;
  return true;
}

}  // namespace

Grammar load_grammar(const std::string& source) {
  Grammar g;
  std::set<std::string> seen_cats;
  std::set<std::string> seen_funs;

  std::istringstream in(source);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    line_no++;
    auto toks = lex_line(strip_comment(raw), line_no);
    if (toks.empty()) continue;
    if (toks.back() != ";") fail(line_no, "declaration must end with ';'");
    toks.pop_back();
    if (toks.empty()) continue;

    const std::string& kw = toks[0];
    if (kw == "cat") {
      if (toks.size() != 2 || !valid_identifier(toks[1]))
        fail(line_no, "expected 'cat <Name> ;'");
      if (!seen_cats.insert(toks[1]).second) fail(line_no, "duplicate category " + toks[1]);
      g.categories.push_back(toks[1]);
    } else if (kw == "fun") {
      // fun name : C1 -> C2 -> ... -> Cres
      if (toks.size() < 4 || toks[2] != ":")
        fail(line_no, "expected 'fun <name> : <C1> -> ... -> <Cres> ;'");
      FunctionDecl f;
      f.name = toks[1];
      if (!valid_identifier(f.name)) fail(line_no, "invalid function name '" + f.name + "'");
      if (!seen_funs.insert(f.name).second) fail(line_no, "duplicate function " + f.name);
      std::vector<std::string> cats;
      for (size_t i = 3; i < toks.size(); i++) {
        if (i % 2 == 1) {
          if (!valid_identifier(toks[i])) fail(line_no, "invalid category '" + toks[i] + "'");
          cats.push_back(toks[i]);
        } else if (toks[i] != "->") {
          fail(line_no, "expected '->' in function signature");
        }
      }
      if (cats.empty() || toks.size() % 2 != 0)
        fail(line_no, "malformed function signature");
      f.result = cats.back();
      cats.pop_back();
      f.args = cats;
      for (const auto& c : f.args)
        if (!seen_cats.count(c)) fail(line_no, "undeclared category " + c);
      if (!seen_cats.count(f.result)) fail(line_no, "undeclared category " + f.result);
      g.functions.push_back(f);
    } else if (kw == "lin") {
      // lin lang name = item*
      if (toks.size() < 5 || toks[3] != "=")
        fail(line_no, "expected 'lin <lang> <name> = <item*> ;'");
      const std::string& lang = toks[1];
      const std::string& fname = toks[2];
      if (!seen_funs.count(fname)) fail(line_no, "rule for undeclared function " + fname);
      const FunctionDecl* decl = g.find_function(fname);
      LinRule rule;
      rule.function = fname;
      std::set<int> used_args;
      for (size_t i = 4; i < toks.size(); i++) {
        const std::string& t = toks[i];
        LinItem item;
        if (t.size() >= 2 && t.front() == '"' && t.back() == '"') {
          item.token = t.substr(1, t.size() - 2);
          if (item.token.empty()) fail(line_no, "empty literal token");
          for (unsigned char c : item.token)
            if (std::isspace(c)) fail(line_no, "literal token contains whitespace");
        } else if (t.size() >= 2 && t[0] == '$') {
          item.is_arg = true;
          try {
            item.arg = std::stoi(t.substr(1));
          } catch (...) {
            fail(line_no, "bad argument reference '" + t + "'");
          }
          if (item.arg < 0 || item.arg >= static_cast<int>(decl->arity()))
            fail(line_no, "argument index " + std::to_string(item.arg) + " out of range for " + fname);
          if (!used_args.insert(item.arg).second)
            fail(line_no, "argument $" + std::to_string(item.arg) + " used twice");
        } else {
          fail(line_no, "expected quoted token or $<k>, got '" + t + "'");
        }
        rule.items.push_back(item);
      }
      if (rule.items.empty()) fail(line_no, "empty linearization for " + fname);
      if (used_args.size() != decl->arity())
        fail(line_no, "rule for " + fname + " must use every argument exactly once");
      auto& by_fun = g.concretes[lang];
      if (by_fun.count(fname)) fail(line_no, "duplicate rule for " + fname + " in " + lang);
      by_fun[fname] = rule;
    } else if (kw == "start") {
      if (toks.size() != 2) fail(line_no, "expected 'start <Cat> ;'");
      if (!seen_cats.count(toks[1])) fail(line_no, "undeclared start category " + toks[1]);
      g.start_category = toks[1];
    } else if (kw == "chunkcats") {
      for (size_t i = 1; i < toks.size(); i++) {
        if (!seen_cats.count(toks[i])) fail(line_no, "undeclared chunk category " + toks[i]);
        g.chunk_categories.push_back(toks[i]);
      }
    } else {
      fail(line_no, "unknown declaration '" + kw + "'");
    }
  }
  return g;
}

Grammar load_grammar_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GrammarError("cannot open grammar file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_grammar(buf.str());
}

std::string serialize_grammar(const Grammar& g) {
  std::ostringstream out;
  for (const auto& c : g.categories) out << "cat " << c << " ;\n";
  for (const auto& f : g.functions) {
    out << "fun " << f.name << " :";
    for (const auto& a : f.args) out << " " << a << " ->";
    out << " " << f.result << " ;\n";
  }
  for (const auto& [lang, rules] : g.concretes) {
    for (const auto& [fname, rule] : rules) {
      out << "lin " << lang << " " << fname << " =";
      for (const auto& item : rule.items) {
        if (item.is_arg)
          out << " $" << item.arg;
        else
          out << " \"" << item.token << "\"";
      }
      out << " ;\n";
    }
  }
  if (!g.start_category.empty()) out << "start " << g.start_category << " ;\n";
  if (!g.chunk_categories.empty()) {
    out << "chunkcats";
    for (const auto& c : g.chunk_categories) out << " " << c;
    out << " ;\n";
  }
  return out.str();
}

namespace {

bool check_tree(const AbstractTree& t, const Grammar& g, std::vector<int>& path,
                TypeVerdict& verdict) {
  const FunctionDecl* f = g.find_function(t.function);
  if (!f) {
    verdict = {false, path, "undeclared function " + t.function};
    return false;
  }
  if (t.children.size() != f->arity()) {
    verdict = {false, path,
               t.function + " expects " + std::to_string(f->arity()) + " arguments, got " +
                   std::to_string(t.children.size())};
    return false;
  }
  for (size_t i = 0; i < t.children.size(); i++) {
    const FunctionDecl* cf = g.find_function(t.children[i].function);
    path.push_back(static_cast<int>(i));
    if (cf && cf->result != f->args[i]) {
      verdict = {false, path,
                 "argument " + std::to_string(i) + " of " + t.function + " has category " +
                     cf->result + ", expected " + f->args[i]};
      return false;
    }
    if (!check_tree(t.children[i], g, path, verdict)) return false;
    path.pop_back();
  }
  return true;
}

}  // namespace

TypeVerdict validate_tree(const AbstractTree& tree, const Grammar& g) {
  TypeVerdict verdict;
  std::vector<int> path;
  check_tree(tree, g, path, verdict);
  return verdict;
}

std::optional<Category> tree_category(const AbstractTree& tree, const Grammar& g) {
  const FunctionDecl* f = g.find_function(tree.function);
  if (!f) return std::nullopt;
  return f->result;
}

namespace {

void linearize_into(const AbstractTree& t, const Grammar& g, const std::string& language,
                    std::vector<std::string>& out) {
  const LinRule* rule = g.find_rule(language, t.function);
  if (!rule)
    throw GrammarError("no linearization rule for " + t.function + " in " + language);
  for (const auto& item : rule->items) {
    if (item.is_arg) {
      if (item.arg >= static_cast<int>(t.children.size()))
        throw GrammarError("tree for " + t.function + " is missing argument " +
                           std::to_string(item.arg));
      linearize_into(t.children[item.arg], g, language, out);
    } else {
      out.push_back(item.token);
    }
  }
}

}  // namespace

std::vector<std::string> linearize(const AbstractTree& tree, const Grammar& g,
                                   const std::string& language) {
  std::vector<std::string> out;
  linearize_into(tree, g, language, out);
  return out;
}

bool has_coverage(const AbstractTree& tree, const Grammar& g, const std::string& language) {
  if (!g.find_rule(language, tree.function)) return false;
  for (const auto& c : tree.children)
    if (!has_coverage(c, g, language)) return false;
  return true;
}

}  // namespace mmwe
