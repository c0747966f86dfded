#pragma once

#include <string>

#include "mmwe/compound.hpp"
#include "mmwe/grammar.hpp"

inline std::string data_path(const std::string& name) {
  return std::string(MMWE_DATA_DIR) + "/" + name;
}

inline const mmwe::Grammar& toy_grammar() {
  static mmwe::Grammar g = mmwe::load_grammar_file(data_path("toy.gf"));
  return g;
}

inline const mmwe::Lexicon& de_lexicon() {
  static mmwe::Lexicon lex = mmwe::load_lexicon_file(data_path("lexicon_de.tsv"));
  return lex;
}
