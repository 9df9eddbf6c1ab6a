// python/singlex_py.cc

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <string>
#include <vector>

#include "singlex/adapt.h"
#include "singlex/align.h"
#include "singlex/confusion.h"
#include "singlex/errors.h"
#include "singlex/lexicon.h"
#include "singlex/report.h"
#include "singlex/score.h"
#include "singlex/text.h"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace singlex;

namespace {

// pybind11 holders cannot be pointer-to-const; PhoneSet has no mutating
// members, so the cast is harmless.
using PhoneSetPtr = std::shared_ptr<PhoneSet>;
using TokenLists = std::vector<std::vector<std::string>>;

std::shared_ptr<const PhoneSet> OrDefault(const PhoneSetPtr &ps) {
  return ps ? std::shared_ptr<const PhoneSet>(ps) : PhoneSet::DefaultShared();
}

// Positional utterance lists become ids "0", "1", ...
UtteranceSet ToUtterances(const TokenLists &lists) {
  UtteranceSet out;
  out.reserve(lists.size());
  for (std::size_t i = 0; i < lists.size(); ++i) out.push_back({std::to_string(i), lists[i]});
  return out;
}

UtteranceSet NormalizedUtterances(const TokenLists &lists) {
  UtteranceSet out = ToUtterances(lists);
  for (auto &u : out) {
    std::vector<std::string> tokens;
    for (const auto &t : u.tokens)
      if (auto w = NormalizeWord(t); !w.empty()) tokens.push_back(std::move(w));
    u.tokens = std::move(tokens);
  }
  return out;
}

std::set<Phoneme> ToPhonemeSet(const std::vector<std::string> &symbols, const PhoneSet &ps) {
  std::set<Phoneme> out;
  for (const auto &s : symbols) out.insert(ps.Get(s));
  return out;
}

py::list PathToList(const AlignmentPath<std::string> &path) {
  py::list out;
  for (const auto &op : path.ops) {
    py::object ref = op.ref ? py::object(py::str(*op.ref)) : py::object(py::none());
    py::object hyp = op.hyp ? py::object(py::str(*op.hyp)) : py::object(py::none());
    out.append(py::make_tuple(std::string(EditKindCode(op.kind)), ref, hyp));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = R"pbdoc(
        Phoneme confusion analysis, singing-adapted lexicons, and WER/CER scoring.

        Functions returning structured results hand back JSON text; the
        ``singlex`` package wrapper decodes it into dicts.
    )pbdoc";

  auto base_error = py::register_exception<Error>(m, "SinglexError", PyExc_ValueError);
  py::register_exception<UnknownPhonemeError>(m, "UnknownPhonemeError", base_error.ptr());
  py::register_exception<ParseError>(m, "ParseError", base_error.ptr());
  py::register_exception<OovError>(m, "OovError", base_error.ptr());
  py::register_exception<MissingUtteranceError>(m, "MissingUtteranceError", base_error.ptr());

  py::class_<PhoneSet, PhoneSetPtr>(m, "PhoneSet")
      .def_static(
          "default",
          [] { return std::const_pointer_cast<PhoneSet>(PhoneSet::DefaultShared()); },
          "The 39-phoneme CMU set")
      .def_static("from_file",
                  [](const std::string &path) {
                    return std::make_shared<PhoneSet>(PhoneSet::ReadFile(path));
                  })
      .def("__len__", &PhoneSet::size)
      .def("__contains__", &PhoneSet::Contains)
      .def("symbols",
           [](const PhoneSet &ps) {
             std::vector<std::string> out;
             for (const auto &mem : ps.members()) out.push_back(mem.symbol);
             return out;
           })
      .def("category_of",
           [](const PhoneSet &ps, const std::string &s) {
             return std::string(CategoryName(ps.CategoryOf(std::string_view(s))));
           })
      .def("is_vowel", [](const PhoneSet &ps, const std::string &s) {
        return ps.IsVowel(std::string_view(s));
      });

  py::class_<Lexicon>(m, "Lexicon")
      .def_static(
          "parse",
          [](const std::string &text, const PhoneSetPtr &ps) {
            return ParseLexicon(std::string_view(text), OrDefault(ps));
          },
          py::arg("text"), py::arg("phoneset") = nullptr)
      .def_static(
          "from_file",
          [](const std::string &path, const PhoneSetPtr &ps) {
            return ReadLexiconFile(path, OrDefault(ps));
          },
          py::arg("path"), py::arg("phoneset") = nullptr)
      .def(
          "serialize",
          [](const Lexicon &lex, bool tags) { return SerializeLexicon(lex, {tags}); },
          py::arg("variant_tags") = false)
      .def("__len__", &Lexicon::size)
      .def("__contains__", &Lexicon::Contains)
      .def("__eq__", &Lexicon::operator==)
      .def("words",
           [](const Lexicon &lex) {
             std::vector<std::string> out;
             for (const auto &e : lex.entries()) out.push_back(e.word);
             return out;
           })
      .def("prons",
           [](const Lexicon &lex, const std::string &word) {
             const LexiconEntry *e = lex.Find(word);
             if (e == nullptr) throw OovError(word);
             std::vector<std::pair<std::vector<std::string>, std::string>> out;
             for (const auto &p : e->prons) {
               std::vector<std::string> phones;
               for (Phoneme q : p.phones) phones.push_back(lex.phone_set().Symbol(q));
               out.emplace_back(std::move(phones), std::string(VariantOriginName(p.origin)));
             }
             return out;
           })
      .def(
          "phonemize",
          [](const Lexicon &lex, const std::vector<std::string> &words, const std::string &oov) {
            auto r = Phonemize(words, lex,
                               {oov == "skip" ? OovPolicy::kSkip : OovPolicy::kStrict,
                                PronChoice::kFirst});
            std::vector<std::string> phones;
            for (Phoneme q : r.phones) phones.push_back(lex.phone_set().Symbol(q));
            return py::make_tuple(phones, r.word_index, r.oov);
          },
          py::arg("words"), py::arg("oov") = "strict")
      .def("words_ending_with", [](const Lexicon &lex, const std::vector<std::string> &finals) {
        return WordsEndingWith(lex, ToPhonemeSet(finals, lex.phone_set()));
      });

  m.def(
      "align",
      [](const std::vector<std::string> &hyp, const std::vector<std::string> &ref) {
        return PathToList(Align(hyp, ref));
      },
      py::arg("hyp"), py::arg("ref"),
      "Alignment path as (op, ref, hyp) tuples; op is C/S/I/D, gaps are None");
  m.def(
      "edit_distance",
      [](const std::vector<std::string> &hyp, const std::vector<std::string> &ref) {
        return EditDistance<std::string>(hyp, ref);
      },
      py::arg("hyp"), py::arg("ref"));

  m.def(
      "confidence",
      [](std::uint64_t c, std::uint64_t s, std::uint64_t i, std::uint64_t d) {
        return Confidence(PhonemeCounts{c, s, i, d});
      },
      py::arg("C"), py::arg("S"), py::arg("I"), py::arg("D"));

  m.def(
      "analyze_json",
      [](const TokenLists &hyps, const TokenLists &refs, const PhoneSetPtr &ps_in,
         std::size_t topn) {
        auto ps = OrDefault(ps_in);
        if (hyps.size() != refs.size()) throw Error("hyps and refs differ in length");
        PhonemeStats stats;
        for (std::size_t k = 0; k < refs.size(); ++k) {
          std::vector<Phoneme> h, r;
          for (const auto &t : hyps[k]) h.push_back(ps->Get(t));
          for (const auto &t : refs[k]) r.push_back(ps->Get(t));
          stats.Accumulate(Align(h, r));
        }
        return AnalysisToJson(ConfidenceTable(stats, *ps, topn), CategoryMatrix(stats, *ps), *ps)
            .dump();
      },
      py::arg("hyps"), py::arg("refs"), py::arg("phoneset") = nullptr,
      py::arg("topn") = kDefaultConfusionSetSize);

  m.def(
      "adapt_lexicon",
      [](const Lexicon &lex, const std::string &mode, const std::vector<std::string> &finals,
         int max_vowel_repeat, bool cross_compose) {
        AdaptationConfig cfg;
        auto parsed = ParseVariantMode(mode);
        if (!parsed) throw py::value_error("mode must be l1, l2 or l3");
        cfg.mode = *parsed;
        cfg.drop_finals = ToPhonemeSet(finals, lex.phone_set());
        cfg.max_vowel_repeat = max_vowel_repeat;
        cfg.cross_compose = cross_compose;
        AdaptSummary summary;
        Lexicon out = AdaptLexicon(lex, cfg, &summary);
        return py::make_tuple(std::move(out), summary.words_touched, summary.prons_added);
      },
      py::arg("lexicon"), py::arg("mode") = "l3",
      py::arg("drop_finals") = std::vector<std::string>{"D", "T", "DH", "Z"},
      py::arg("max_vowel_repeat") = 2, py::arg("cross_compose") = true);

  m.def(
      "word_error_report_json",
      [](const TokenLists &hyps, const TokenLists &refs) {
        return ErrorReportToJson(WordErrorReport(NormalizedUtterances(hyps), NormalizedUtterances(refs)))
            .dump();
      },
      py::arg("hyps"), py::arg("refs"));
  m.def(
      "char_error_report_json",
      [](const TokenLists &hyps, const TokenLists &refs) {
        return ErrorReportToJson(CharErrorReport(NormalizedUtterances(hyps), NormalizedUtterances(refs)))
            .dump();
      },
      py::arg("hyps"), py::arg("refs"));
  m.def(
      "subset_word_report_json",
      [](const TokenLists &hyps, const TokenLists &refs, const Lexicon &lex,
         const std::vector<std::string> &finals, bool exclude_insertions) {
        return ErrorReportToJson(SubsetWordReport(NormalizedUtterances(hyps),
                                                  NormalizedUtterances(refs), lex,
                                                  ToPhonemeSet(finals, lex.phone_set()),
                                                  {exclude_insertions}))
            .dump();
      },
      py::arg("hyps"), py::arg("refs"), py::arg("lexicon"),
      py::arg("finals") = std::vector<std::string>{"D", "T", "DH", "Z"},
      py::arg("exclude_insertions") = false);
  m.def(
      "vowel_error_report_json",
      [](const TokenLists &hyps, const TokenLists &refs, const PhoneSetPtr &ps,
         bool exclude_insertions) {
        return ErrorReportToJson(VowelErrorReport(ToUtterances(hyps), ToUtterances(refs),
                                                  *OrDefault(ps), {exclude_insertions}))
            .dump();
      },
      py::arg("hyps"), py::arg("refs"), py::arg("phoneset") = nullptr,
      py::arg("exclude_insertions") = false);

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
