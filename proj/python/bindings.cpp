#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "simplicorpus/corpus.hpp"
#include "simplicorpus/error.hpp"
#include "simplicorpus/parallel.hpp"
#include "simplicorpus/sari.hpp"
#include "simplicorpus/selector.hpp"
#include "simplicorpus/textmetrics.hpp"

namespace py = pybind11;
namespace sc = simplicorpus;

namespace {

// Python callers hand pairs over as SentencePair objects or (source, target)
// tuples; ordinals are assigned by position when tuples are used.
std::vector<sc::SentencePair> to_pairs(const py::iterable& items) {
  std::vector<sc::SentencePair> pairs;
  for (const auto& item : items) {
    if (py::isinstance<sc::SentencePair>(item)) {
      pairs.push_back(item.cast<sc::SentencePair>());
      continue;
    }
    auto [source, target] = item.cast<std::pair<std::string, std::string>>();
    pairs.push_back({std::move(source), std::move(target), pairs.size()});
  }
  return pairs;
}

sc::SariInstance make_instance(const std::string& original, const std::string& system,
                               const std::vector<std::string>& references) {
  sc::SariInstance inst;
  inst.original = sc::sari_tokens(original);
  inst.system = sc::sari_tokens(system);
  for (const auto& r : references) inst.references.push_back(sc::sari_tokens(r));
  return inst;
}

sc::SariOptions sari_options(bool del_f1) {
  sc::SariOptions options;
  options.del = del_f1 ? sc::DeleteMode::kF1 : sc::DeleteMode::kPrecision;
  return options;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pseudo simplification corpus construction and SARI scoring";

  auto base = py::register_exception<sc::Error>(m, "Error", PyExc_ValueError);
  py::register_exception<sc::EmptySentence>(m, "EmptySentence", base);
  py::register_exception<sc::EmptyCorpus>(m, "EmptyCorpus", base);
  py::register_exception<sc::EmptyReferences>(m, "EmptyReferences", base);
  py::register_exception<sc::RaggedReferences>(m, "RaggedReferences", base);
  py::register_exception<sc::Unscoreable>(m, "Unscoreable", base);

  py::class_<sc::TokenizedSentence>(m, "TokenizedSentence")
      .def_readonly("tokens", &sc::TokenizedSentence::tokens)
      .def_readonly("word_count", &sc::TokenizedSentence::word_count)
      .def_readonly("syllable_count", &sc::TokenizedSentence::syllable_count)
      .def_readonly("sentence_count", &sc::TokenizedSentence::sentence_count)
      .def("__repr__", [](const sc::TokenizedSentence& s) {
        return "<TokenizedSentence words=" + std::to_string(s.word_count) +
               " syllables=" + std::to_string(s.syllable_count) + ">";
      });

  m.def("tokenize", &sc::tokenize, py::arg("line"));
  m.def("count_syllables", &sc::count_syllables, py::arg("word"));
  m.def("fres", [](const sc::TokenizedSentence& s) { return sc::fres(s).value; }, py::arg("sentence"));
  m.def("fres", [](const std::string& line) { return sc::fres(sc::tokenize(line)).value; },
        py::arg("line"));
  m.def("fres_delta", [](const std::string& source, const std::string& target) {
    return sc::fres_delta(sc::tokenize(source), sc::tokenize(target));
  }, py::arg("source"), py::arg("target"));

  py::class_<sc::SentencePair>(m, "SentencePair")
      .def(py::init([](std::string source, std::string target, std::uint64_t ordinal) {
             return sc::SentencePair{std::move(source), std::move(target), ordinal};
           }),
           py::arg("source"), py::arg("target"), py::arg("ordinal") = 0)
      .def_readwrite("source", &sc::SentencePair::source)
      .def_readwrite("target", &sc::SentencePair::target)
      .def_readwrite("ordinal", &sc::SentencePair::ordinal)
      .def("__eq__", [](const sc::SentencePair& a, const sc::SentencePair& b) { return a == b; });

  py::enum_<sc::Orientation>(m, "Orientation")
      .value("auto", sc::Orientation::kAuto)
      .value("keep_order", sc::Orientation::kKeepOrder);
  py::enum_<sc::Comparison>(m, "Comparison")
      .value("strict_greater", sc::Comparison::kStrictGreater)
      .value("greater_equal", sc::Comparison::kGreaterEqual);

  py::class_<sc::SelectorConfig>(m, "SelectorConfig")
      .def(py::init([](double threshold, sc::Orientation orientation, sc::Comparison comparison) {
             sc::SelectorConfig c{threshold, orientation, comparison};
             c.validate();
             return c;
           }),
           py::arg("threshold") = 10.0, py::arg("orientation") = sc::Orientation::kAuto,
           py::arg("comparison") = sc::Comparison::kStrictGreater)
      .def_readwrite("threshold", &sc::SelectorConfig::threshold)
      .def_readwrite("orientation", &sc::SelectorConfig::orientation)
      .def_readwrite("comparison", &sc::SelectorConfig::comparison);

  py::class_<sc::OrientedPair>(m, "OrientedPair")
      .def_readonly("complex", &sc::OrientedPair::complex)
      .def_readonly("simple", &sc::OrientedPair::simple)
      .def_readonly("fres_complex", &sc::OrientedPair::fres_complex)
      .def_readonly("fres_simple", &sc::OrientedPair::fres_simple)
      .def_readonly("delta", &sc::OrientedPair::delta)
      .def_readonly("ordinal", &sc::OrientedPair::ordinal);

  py::class_<sc::SelectorReport>(m, "SelectorReport")
      .def_readonly("read", &sc::SelectorReport::read)
      .def_readonly("kept", &sc::SelectorReport::kept)
      .def_readonly("dropped_below_threshold", &sc::SelectorReport::dropped_below_threshold)
      .def_readonly("dropped_unscoreable", &sc::SelectorReport::dropped_unscoreable);

  m.def("orient", [](const std::string& source, const std::string& target, sc::Orientation policy) {
    return sc::orient({source, target, 0}, policy);
  }, py::arg("source"), py::arg("target"), py::arg("policy") = sc::Orientation::kAuto);
  m.def("select", &sc::select, py::arg("pair"), py::arg("config") = sc::SelectorConfig{});
  m.def("build_pseudo_corpus", [](const py::iterable& items, const sc::SelectorConfig& config, unsigned threads) {
    const auto pairs = to_pairs(items);
    py::gil_scoped_release release;
    return sc::build_pseudo_corpus(pairs, config, threads);
  }, py::arg("pairs"), py::arg("config") = sc::SelectorConfig{}, py::arg("threads") = 1);

  m.def("sample", [](const py::iterable& items, std::size_t n, std::uint64_t seed) {
    if (n == 0) throw py::value_error("n must be >= 1");
    return sc::sample(to_pairs(items), n, seed);
  }, py::arg("pairs"), py::arg("n"), py::arg("seed") = 0);

  py::class_<sc::CorpusStats>(m, "CorpusStats")
      .def_readonly("vocab_complex", &sc::CorpusStats::vocab_complex)
      .def_readonly("vocab_simple", &sc::CorpusStats::vocab_simple)
      .def_readonly("avg_complex", &sc::CorpusStats::avg_complex)
      .def_readonly("avg_simple", &sc::CorpusStats::avg_simple)
      .def_readonly("total_pairs", &sc::CorpusStats::total_pairs);
  m.def("compute_stats", [](const py::iterable& items) -> sc::CorpusStats {
    std::vector<sc::OrientedPair> oriented;
    std::vector<py::handle> rest;
    for (const auto& item : items) {
      if (py::isinstance<sc::OrientedPair>(item)) {
        oriented.push_back(item.cast<sc::OrientedPair>());
      } else {
        rest.push_back(item);
      }
    }
    if (!oriented.empty() && rest.empty()) return sc::compute_stats(std::span<const sc::OrientedPair>(oriented));
    if (!oriented.empty()) throw py::type_error("mixed OrientedPair and raw pairs");
    py::list raw;
    for (const auto& h : rest) raw.append(h);
    return sc::compute_stats(to_pairs(raw));
  }, py::arg("pairs"));

  py::class_<sc::SariScore>(m, "SariScore")
      .def_readonly("overall", &sc::SariScore::overall)
      .def_readonly("keep", &sc::SariScore::keep_f1)
      .def_readonly("add", &sc::SariScore::add_f1)
      .def_readonly("delete", &sc::SariScore::del_score)
      .def_property_readonly("per_n", [](const sc::SariScore& s) {
        py::list out;
        for (const auto& o : s.per_n) out.append(py::make_tuple(o.keep, o.add, o.del));
        return out;
      });

  m.def("ngram_counts", [](const std::vector<std::string>& tokens, std::size_t n) {
    py::dict out;
    for (const auto& [gram, count] : sc::ngram_counts(tokens, n)) {
      out[py::tuple(py::cast(gram))] = count;
    }
    return out;
  }, py::arg("tokens"), py::arg("n"));

  m.def("sari_sentence", [](const std::string& original, const std::string& system,
                            const std::vector<std::string>& references, bool del_f1) {
    return sc::sari_sentence(make_instance(original, system, references), sari_options(del_f1));
  }, py::arg("original"), py::arg("system"), py::arg("references"), py::arg("del_f1") = false);

  m.def("sari_corpus", [](const std::vector<std::string>& originals, const std::vector<std::string>& systems,
                          const std::vector<std::vector<std::string>>& references, bool del_f1) {
    if (originals.size() != systems.size() || originals.size() != references.size()) {
      throw py::value_error("originals, systems and references must have equal length");
    }
    std::vector<sc::SariInstance> instances;
    for (std::size_t i = 0; i < originals.size(); ++i) {
      instances.push_back(make_instance(originals[i], systems[i], references[i]));
    }
    return sc::sari_corpus(instances, sari_options(del_f1));
  }, py::arg("originals"), py::arg("systems"), py::arg("references"), py::arg("del_f1") = false,
     "references[i] holds every reference for sentence i");
}
