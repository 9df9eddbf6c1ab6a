// singlex/report.h

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

// Text, CSV and JSON renderings of analysis results. Output is a pure
// function of the input: fixed column order, shortest round-trip number
// formatting, no timestamps.
//
// JSON schemas (all keys always present):
//
//   confidence row: {"phoneme": str, "c_q": num|null, "rank": int|null,
//                    "confusions": [str], "C": int, "S": int, "I": int, "D": int}
//   category matrix: {"labels": [str x 9], "counts": [[int x 9] x 9],
//                     "normalized": [[num x 9] x 9]}
//   analysis: {"confidence": [row], "category_matrix": matrix}
//   error report: {"N": int, "C": int, "S": int, "I": int, "D": int,
//                  "defined": bool, "ER": num|null, "S_rate": num|null,
//                  "I_rate": num|null, "D_rate": num|null,
//                  "unclassified": [str]}
//   lexicon: {"entries": [{"word": str, "prons": [{"phones": [str],
//                                                  "origin": str}]}]}

#ifndef SINGLEX_REPORT_H_
#define SINGLEX_REPORT_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "singlex/confusion.h"
#include "singlex/lexicon.h"
#include "singlex/score.h"

namespace singlex {

using Json = nlohmann::ordered_json;

// Shortest decimal that round-trips, "N/A" for nullopt.
std::string FormatNumber(std::optional<double> v);

// Header: phoneme,c_q,rank,confusions. Confusions are space-separated.
void WriteConfidenceCsv(std::ostream &os, const std::vector<ConfidenceRow> &rows,
                        const PhoneSet &ps);
// Header: ground_truth,<8 categories>,eps. Normalized values.
void WriteCategoryMatrixCsv(std::ostream &os, const CategoryConfusionMatrix &m);

void WriteConfidenceText(std::ostream &os, const std::vector<ConfidenceRow> &rows,
                         const PhoneSet &ps);
void WriteCategoryMatrixText(std::ostream &os, const CategoryConfusionMatrix &m);

Json ConfidenceRowToJson(const ConfidenceRow &row, const PhoneSet &ps);
ConfidenceRow ConfidenceRowFromJson(const Json &j, const PhoneSet &ps);
Json CategoryMatrixToJson(const CategoryConfusionMatrix &m);
CategoryConfusionMatrix CategoryMatrixFromJson(const Json &j);
Json AnalysisToJson(const std::vector<ConfidenceRow> &rows, const CategoryConfusionMatrix &m,
                    const PhoneSet &ps);

Json ErrorReportToJson(const ErrorReport &r);
ErrorReport ErrorReportFromJson(const Json &j);

// One aligned row per named report: N C S I D ER S% I% D%.
struct NamedReport {
  std::string name;
  ErrorReport report;
};
void WriteErrorReportsText(std::ostream &os, const std::vector<NamedReport> &reports);
void WriteErrorReportsCsv(std::ostream &os, const std::vector<NamedReport> &reports);

Json LexiconToJson(const Lexicon &lex);
Lexicon LexiconFromJson(const Json &j,
                        std::shared_ptr<const PhoneSet> phone_set = PhoneSet::DefaultShared());

}  // namespace singlex

#endif  // SINGLEX_REPORT_H_
