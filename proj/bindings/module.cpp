#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mmwe/compound.hpp"
#include "mmwe/grammar.hpp"
#include "mmwe/mwe.hpp"
#include "mmwe/parser.hpp"
#include "mmwe/phrase.hpp"
#include "mmwe/report.hpp"

namespace py = pybind11;
using namespace mmwe;

PYBIND11_MODULE(_mmwe, m) {
  m.doc() = "multiword-expression detection and German compound splitting";

  py::register_exception<GrammarError>(m, "GrammarError");

  py::class_<AbstractTree>(m, "AbstractTree")
      .def(py::init([](const std::string& text) { return parse_tree_text(text); }))
      .def_readonly("function", &AbstractTree::function)
      .def_readonly("children", &AbstractTree::children)
      .def("node_count", &AbstractTree::node_count)
      .def("__str__", [](const AbstractTree& t) { return serialize(t); })
      .def("__repr__", [](const AbstractTree& t) { return "AbstractTree(" + serialize(t) + ")"; })
      .def("__eq__", [](const AbstractTree& a, const AbstractTree& b) { return a == b; });

  py::class_<Grammar>(m, "Grammar")
      .def_static("loads", &load_grammar)
      .def_static("load", &load_grammar_file)
      .def_readonly("start_category", &Grammar::start_category)
      .def_readonly("chunk_categories", &Grammar::chunk_categories)
      .def("languages", &Grammar::languages)
      .def("dumps", [](const Grammar& g) { return serialize_grammar(g); });

  m.def("validate_tree", [](const AbstractTree& t, const Grammar& g) {
    auto v = validate_tree(t, g);
    return py::make_tuple(v.ok, v.path, v.message);
  });
  m.def("linearize", &linearize, py::arg("tree"), py::arg("grammar"), py::arg("language"));
  m.def("parse", &parse, py::arg("tokens"), py::arg("grammar"), py::arg("language"),
        py::arg("start"), py::arg("cap") = kDefaultAmbiguityCap);

  py::enum_<ParseStatus>(m, "ParseStatus")
      .value("Full", ParseStatus::Full)
      .value("Chunked", ParseStatus::Chunked)
      .value("Failed", ParseStatus::Failed);

  py::class_<ParseOutcome>(m, "ParseOutcome")
      .def_readonly("status", &ParseOutcome::status)
      .def_readonly("forest", &ParseOutcome::forest)
      .def_readonly("chunk_tree", &ParseOutcome::chunk_tree)
      .def_readonly("language", &ParseOutcome::language);

  m.def("chunk_parse", &chunk_parse, py::arg("tokens"), py::arg("grammar"), py::arg("language"),
        py::arg("cap") = kDefaultAmbiguityCap);
  m.def("project_chunks", &project_chunks);
  m.def("enumerate_trees", &enumerate_trees, py::arg("grammar"), py::arg("category"),
        py::arg("depth"));

  py::enum_<Verdict>(m, "Verdict")
      .value("NotCandidate", Verdict::NotCandidate)
      .value("Candidate", Verdict::Candidate);
  py::enum_<CandidateKind>(m, "CandidateKind")
      .value("FalsePositiveSuspect", CandidateKind::FalsePositiveSuspect)
      .value("LexicalMWE", CandidateKind::LexicalMWE)
      .value("Predicate", CandidateKind::Predicate);

  py::class_<SentencePair>(m, "SentencePair")
      .def(py::init([](std::string id, std::string lang_x, std::string lang_y,
                       std::vector<std::string> tokens_x, std::vector<std::string> tokens_y) {
             return SentencePair{std::move(id), std::move(lang_x), std::move(lang_y),
                                 std::move(tokens_x), std::move(tokens_y)};
           }),
           py::arg("id"), py::arg("lang_x"), py::arg("lang_y"), py::arg("tokens_x"),
           py::arg("tokens_y"));

  py::class_<TreeDiff>(m, "TreeDiff")
      .def_readonly("path", &TreeDiff::path)
      .def_readonly("left", &TreeDiff::left)
      .def_readonly("right", &TreeDiff::right);

  py::class_<DetectionReport>(m, "DetectionReport")
      .def_readonly("pair_id", &DetectionReport::pair_id)
      .def_readonly("verdict", &DetectionReport::verdict)
      .def_readonly("kind", &DetectionReport::kind)
      .def_readonly("diffs", &DetectionReport::diffs)
      .def_readonly("outcome_x", &DetectionReport::outcome_x)
      .def_readonly("outcome_y", &DetectionReport::outcome_y)
      .def("to_json", &report_to_json);

  m.def("detect_pair", &detect_pair, py::arg("pair"), py::arg("grammar"),
        py::arg("cap") = kDefaultAmbiguityCap);
  m.def("tree_diff", &tree_diff);

  py::class_<LexEntry>(m, "LexEntry")
      .def_readonly("lemma", &LexEntry::lemma)
      .def_readonly("category", &LexEntry::category);
  py::class_<Lexicon>(m, "Lexicon")
      .def_static("loads", [](const std::string& s) { return load_lexicon(s, ""); })
      .def_static("load", &load_lexicon_file)
      .def_readonly("entries", &Lexicon::entries)
      .def("__len__", &Lexicon::size);

  py::class_<SplitConfig>(m, "SplitConfig")
      .def(py::init<>())
      .def_readwrite("linkers", &SplitConfig::linkers)
      .def_readwrite("min_component_length", &SplitConfig::min_component_length);

  py::class_<Component>(m, "Component")
      .def_readonly("lemma", &Component::lemma)
      .def_readonly("linker", &Component::linker);
  py::class_<CompoundSplit>(m, "CompoundSplit")
      .def_readonly("components", &CompoundSplit::components)
      .def_readonly("surface", &CompoundSplit::surface)
      .def("joined", &CompoundSplit::joined);

  py::class_<CompoundSplitter>(m, "CompoundSplitter")
      .def(py::init<const Lexicon&, SplitConfig>(), py::arg("lexicon"),
           py::arg("config") = SplitConfig{})
      .def("split", &CompoundSplitter::split)
      .def("enumerate", &CompoundSplitter::enumerate, py::arg("word"), py::arg("cap") = 1000);

  m.def("split_compound", &split_compound, py::arg("word"), py::arg("lexicon"),
        py::arg("config") = SplitConfig{});
  m.def("to_tree", &to_tree);

  py::class_<PhraseEntry>(m, "PhraseEntry")
      .def_readonly("source", &PhraseEntry::source)
      .def_readonly("target", &PhraseEntry::target)
      .def_readonly("probability", &PhraseEntry::probability)
      .def_readonly("is_constituent", &PhraseEntry::is_constituent)
      .def_readonly("constituent_label", &PhraseEntry::constituent_label);

  py::enum_<TableFormat>(m, "TableFormat")
      .value("Moses", TableFormat::Moses)
      .value("Tsv", TableFormat::Tsv);

  py::class_<PhraseTable>(m, "PhraseTable")
      .def_readonly("entries", &PhraseTable::entries)
      .def_readonly("bad_lines", &PhraseTable::bad_lines);

  m.def("load_phrase_table", &load_phrase_table, py::arg("source"), py::arg("format"),
        py::arg("score_index") = 0);
  m.def("filter_candidates", &filter_candidates, py::arg("entries"), py::arg("threshold"),
        py::arg("grammar"), py::arg("language") = "eng", py::arg("require_constituent") = false);

  py::class_<CompoundLexEntry>(m, "CompoundLexEntry")
      .def_readonly("english_tree", &CompoundLexEntry::english_tree)
      .def_readonly("german_tree", &CompoundLexEntry::german_tree)
      .def_readonly("probability", &CompoundLexEntry::probability);
  py::class_<Reject>(m, "Reject")
      .def_readonly("entry", &Reject::entry)
      .def_readonly("reason", &Reject::reason);

  m.def("build_compound_lexicon", &build_compound_lexicon, py::arg("candidates"),
        py::arg("lexicon"), py::arg("config"), py::arg("grammar"), py::arg("language") = "eng");

  py::enum_<LexFormat>(m, "LexFormat").value("Gf", LexFormat::Gf).value("Tsv", LexFormat::Tsv);
  m.def("export_lexicon", &export_lexicon);

  py::class_<Summary>(m, "Summary")
      .def_readonly("not_candidates", &Summary::not_candidates)
      .def_readonly("candidates", &Summary::candidates)
      .def_readonly("false_positives", &Summary::false_positives)
      .def_readonly("lexical_mwes", &Summary::lexical_mwes)
      .def_readonly("predicates", &Summary::predicates)
      .def("total", &Summary::total)
      .def("balanced", &Summary::balanced);
  m.def("summarize", &summarize);
  m.def("render_summary", &render_summary);
}
