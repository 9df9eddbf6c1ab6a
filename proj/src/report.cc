// singlex/report.cc

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

#include "singlex/report.h"

#include <charconv>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "singlex/errors.h"

namespace singlex {

namespace {

Json OptionalNumber(std::optional<double> v) { return v ? Json(*v) : Json(nullptr); }

std::string Fixed2(std::optional<double> v) {
  if (!v) return "N/A";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", *v);
  return buf;
}

std::string JoinSymbols(const std::vector<Phoneme> &phones, const PhoneSet &ps,
                        std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < phones.size(); ++i) {
    if (i) out += sep;
    out += ps.Symbol(phones[i]);
  }
  return out;
}

}  // namespace

std::string FormatNumber(std::optional<double> v) {
  if (!v) return "N/A";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), *v);
  return std::string(buf, res.ptr);
}

void WriteConfidenceCsv(std::ostream &os, const std::vector<ConfidenceRow> &rows,
                        const PhoneSet &ps) {
  os << "phoneme,c_q,rank,confusions\n";
  for (const auto &row : rows) {
    os << ps.Symbol(row.phoneme) << ',' << FormatNumber(row.confidence) << ','
       << (row.rank ? std::to_string(*row.rank) : "N/A") << ','
       << JoinSymbols(row.confusion_set, ps, " ") << '\n';
  }
}

void WriteCategoryMatrixCsv(std::ostream &os, const CategoryConfusionMatrix &m) {
  using M = CategoryConfusionMatrix;
  os << "ground_truth";
  for (std::size_t c = 0; c < M::kSize; ++c) os << ',' << M::Label(c);
  os << '\n';
  for (std::size_t r = 0; r < M::kSize; ++r) {
    os << M::Label(r);
    for (std::size_t c = 0; c < M::kSize; ++c) os << ',' << FormatNumber(m(r, c));
    os << '\n';
  }
}

void WriteConfidenceText(std::ostream &os, const std::vector<ConfidenceRow> &rows,
                         const PhoneSet &ps) {
  os << std::left << std::setw(8) << "phoneme" << std::setw(13) << "category" << std::right
     << std::setw(8) << "c_q" << std::setw(6) << "rank" << std::setw(8) << "C" << std::setw(8)
     << "S" << std::setw(8) << "I" << std::setw(8) << "D" << "  confusions\n";
  for (const auto &row : rows) {
    os << std::left << std::setw(8) << ps.Symbol(row.phoneme) << std::setw(13)
       << CategoryName(ps.CategoryOf(row.phoneme)) << std::right << std::setw(8)
       << Fixed2(row.confidence) << std::setw(6)
       << (row.rank ? std::to_string(*row.rank) : "N/A") << std::setw(8) << row.counts.correct
       << std::setw(8) << row.counts.substituted << std::setw(8) << row.counts.inserted
       << std::setw(8) << row.counts.deleted << "  " << JoinSymbols(row.confusion_set, ps, ", ")
       << '\n';
  }
}

void WriteCategoryMatrixText(std::ostream &os, const CategoryConfusionMatrix &m) {
  using M = CategoryConfusionMatrix;
  os << std::left << std::setw(13) << "truth\\pred" << std::right;
  for (std::size_t c = 0; c < M::kSize; ++c) os << std::setw(12) << M::Label(c);
  os << '\n';
  for (std::size_t r = 0; r < M::kSize; ++r) {
    os << std::left << std::setw(13) << M::Label(r) << std::right;
    for (std::size_t c = 0; c < M::kSize; ++c) os << std::setw(12) << Fixed2(m(r, c));
    os << '\n';
  }
}

Json ConfidenceRowToJson(const ConfidenceRow &row, const PhoneSet &ps) {
  Json confusions = Json::array();
  for (Phoneme p : row.confusion_set) confusions.push_back(ps.Symbol(p));
  return Json{{"phoneme", ps.Symbol(row.phoneme)},
              {"c_q", OptionalNumber(row.confidence)},
              {"rank", row.rank ? Json(*row.rank) : Json(nullptr)},
              {"confusions", std::move(confusions)},
              {"C", row.counts.correct},
              {"S", row.counts.substituted},
              {"I", row.counts.inserted},
              {"D", row.counts.deleted}};
}

ConfidenceRow ConfidenceRowFromJson(const Json &j, const PhoneSet &ps) {
  ConfidenceRow row{ps.Get(j.at("phoneme").get<std::string>()), {}, std::nullopt, std::nullopt, {}};
  row.counts = {j.at("C").get<std::uint64_t>(), j.at("S").get<std::uint64_t>(),
                j.at("I").get<std::uint64_t>(), j.at("D").get<std::uint64_t>()};
  if (!j.at("c_q").is_null()) row.confidence = j.at("c_q").get<double>();
  if (!j.at("rank").is_null()) row.rank = j.at("rank").get<int>();
  for (const auto &s : j.at("confusions")) row.confusion_set.push_back(ps.Get(s.get<std::string>()));
  return row;
}

Json CategoryMatrixToJson(const CategoryConfusionMatrix &m) {
  using M = CategoryConfusionMatrix;
  Json labels = Json::array(), counts = Json::array(), normalized = Json::array();
  for (std::size_t r = 0; r < M::kSize; ++r) {
    labels.push_back(M::Label(r));
    Json crow = Json::array(), nrow = Json::array();
    for (std::size_t c = 0; c < M::kSize; ++c) {
      crow.push_back(m.raw(r, c));
      nrow.push_back(m(r, c));
    }
    counts.push_back(std::move(crow));
    normalized.push_back(std::move(nrow));
  }
  return Json{{"labels", std::move(labels)},
              {"counts", std::move(counts)},
              {"normalized", std::move(normalized)}};
}

CategoryConfusionMatrix CategoryMatrixFromJson(const Json &j) {
  using M = CategoryConfusionMatrix;
  const Json &labels = j.at("labels");
  const Json &counts = j.at("counts");
  if (labels.size() != M::kSize || counts.size() != M::kSize)
    throw Error("category matrix must be " + std::to_string(M::kSize) + " x " +
                std::to_string(M::kSize));
  M::RawCounts raw{};
  for (std::size_t r = 0; r < M::kSize; ++r) {
    if (labels[r].get<std::string>() != M::Label(r))
      throw Error("unexpected category label '" + labels[r].get<std::string>() + "'");
    if (counts[r].size() != M::kSize) throw Error("category matrix row has wrong width");
    for (std::size_t c = 0; c < M::kSize; ++c) raw[r][c] = counts[r][c].get<std::uint64_t>();
  }
  return M::FromRaw(raw);
}

Json AnalysisToJson(const std::vector<ConfidenceRow> &rows, const CategoryConfusionMatrix &m,
                    const PhoneSet &ps) {
  Json table = Json::array();
  for (const auto &row : rows) table.push_back(ConfidenceRowToJson(row, ps));
  return Json{{"confidence", std::move(table)}, {"category_matrix", CategoryMatrixToJson(m)}};
}

Json ErrorReportToJson(const ErrorReport &r) {
  return Json{{"N", r.ref_tokens()},
              {"C", r.counts.match},
              {"S", r.counts.sub},
              {"I", r.counts.ins},
              {"D", r.counts.del},
              {"defined", r.defined()},
              {"ER", OptionalNumber(r.ErrorRate())},
              {"S_rate", OptionalNumber(r.SubRate())},
              {"I_rate", OptionalNumber(r.InsRate())},
              {"D_rate", OptionalNumber(r.DelRate())},
              {"unclassified", r.unclassified}};
}

ErrorReport ErrorReportFromJson(const Json &j) {
  ErrorReport r;
  r.counts = {j.at("C").get<std::size_t>(), j.at("S").get<std::size_t>(),
              j.at("I").get<std::size_t>(), j.at("D").get<std::size_t>()};
  if (r.ref_tokens() != j.at("N").get<std::size_t>())
    throw Error("error report: N does not equal C + S + D");
  r.unclassified = j.at("unclassified").get<std::vector<std::string>>();
  return r;
}

void WriteErrorReportsText(std::ostream &os, const std::vector<NamedReport> &reports) {
  std::size_t width = 6;
  for (const auto &nr : reports) width = std::max(width, nr.name.size() + 2);
  os << std::left << std::setw(static_cast<int>(width)) << "set" << std::right << std::setw(8)
     << "N" << std::setw(8) << "C" << std::setw(8) << "S" << std::setw(8) << "I" << std::setw(8)
     << "D" << std::setw(9) << "ER" << std::setw(9) << "S%" << std::setw(9) << "I%"
     << std::setw(9) << "D%" << '\n';
  for (const auto &[name, r] : reports) {
    os << std::left << std::setw(static_cast<int>(width)) << name << std::right << std::setw(8)
       << r.ref_tokens() << std::setw(8) << r.counts.match << std::setw(8) << r.counts.sub
       << std::setw(8) << r.counts.ins << std::setw(8) << r.counts.del << std::setw(9)
       << Fixed2(r.ErrorRate()) << std::setw(9) << Fixed2(r.SubRate()) << std::setw(9)
       << Fixed2(r.InsRate()) << std::setw(9) << Fixed2(r.DelRate()) << '\n';
  }
  for (const auto &[name, r] : reports) {
    if (!r.defined()) os << "# " << name << ": no reference tokens, rates undefined\n";
    if (!r.unclassified.empty())
      os << "# " << name << ": " << r.unclassified.size() << " word(s) not in lexicon\n";
  }
}

void WriteErrorReportsCsv(std::ostream &os, const std::vector<NamedReport> &reports) {
  os << "set,N,C,S,I,D,ER,S_rate,I_rate,D_rate\n";
  for (const auto &[name, r] : reports) {
    os << name << ',' << r.ref_tokens() << ',' << r.counts.match << ',' << r.counts.sub << ','
       << r.counts.ins << ',' << r.counts.del << ',' << FormatNumber(r.ErrorRate()) << ','
       << FormatNumber(r.SubRate()) << ',' << FormatNumber(r.InsRate()) << ','
       << FormatNumber(r.DelRate()) << '\n';
  }
}

Json LexiconToJson(const Lexicon &lex) {
  const PhoneSet &ps = lex.phone_set();
  Json entries = Json::array();
  for (const auto &e : lex.entries()) {
    Json prons = Json::array();
    for (const auto &p : e.prons) {
      Json phones = Json::array();
      for (Phoneme q : p.phones) phones.push_back(ps.Symbol(q));
      prons.push_back(Json{{"phones", std::move(phones)}, {"origin", VariantOriginName(p.origin)}});
    }
    entries.push_back(Json{{"word", e.word}, {"prons", std::move(prons)}});
  }
  return Json{{"entries", std::move(entries)}};
}

Lexicon LexiconFromJson(const Json &j, std::shared_ptr<const PhoneSet> phone_set) {
  Lexicon lex(std::move(phone_set));
  for (const auto &e : j.at("entries")) {
    const auto word = e.at("word").get<std::string>();
    for (const auto &p : e.at("prons")) {
      Pronunciation pron;
      for (const auto &s : p.at("phones")) pron.phones.push_back(lex.phone_set().Get(s.get<std::string>()));
      auto origin = ParseVariantOrigin(p.at("origin").get<std::string>());
      if (!origin) throw Error("unknown variant origin in lexicon JSON");
      pron.origin = *origin;
      try {
        lex.Add(word, std::move(pron));
      } catch (const std::invalid_argument &ex) {
        throw Error(std::string("lexicon JSON: ") + ex.what());
      }
    }
  }
  return lex;
}

}  // namespace singlex
