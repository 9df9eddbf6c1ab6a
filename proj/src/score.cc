// singlex/score.cc

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

#include "singlex/score.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "singlex/errors.h"
#include "singlex/text.h"

namespace singlex {

namespace {

const std::vector<std::string> kEmpty;

const std::vector<std::string> &HypTokens(const UtterancePair &p) {
  return p.hyp ? p.hyp->tokens : kEmpty;
}

// Tallies ops for which keep(op) is true.
template <typename Token, typename Pred>
void CountFiltered(const AlignmentPath<Token> &path, Pred keep, bool exclude_insertions,
                   EditCounts &counts) {
  for (const auto &op : path.ops) {
    if (exclude_insertions && op.kind == EditKind::kInsert) continue;
    if (keep(op.kind == EditKind::kInsert ? *op.hyp : *op.ref)) counts.Add(op.kind);
  }
}

}  // namespace

UtteranceSet ReadTranscripts(std::istream &is, TokenNormalization norm) {
  UtteranceSet out;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto fields = SplitWhitespace(line);
    if (fields.empty()) continue;
    Utterance utt{std::string(fields[0]), {}};
    if (!seen.insert(utt.id).second) throw ParseError(lineno, "duplicate utterance id '" + utt.id + "'");
    for (std::size_t i = 1; i < fields.size(); ++i) {
      std::string tok = norm == TokenNormalization::kWords ? NormalizeWord(fields[i])
                                                           : std::string(fields[i]);
      if (!tok.empty()) utt.tokens.push_back(std::move(tok));
    }
    out.push_back(std::move(utt));
  }
  return out;
}

UtteranceSet ReadTranscriptFile(const std::string &path, TokenNormalization norm) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open transcript '" + path + "'");
  return ReadTranscripts(is, norm);
}

UtteranceSet ParseTranscripts(const std::string &text, TokenNormalization norm) {
  std::istringstream is(text);
  return ReadTranscripts(is, norm);
}

std::optional<double> ErrorReport::Rate(std::size_t n) const {
  if (!defined()) return std::nullopt;
  return 100.0 * static_cast<double>(n) / static_cast<double>(ref_tokens());
}

std::vector<UtterancePair> PairUtterances(const UtteranceSet &hyps, const UtteranceSet &refs) {
  std::unordered_map<std::string_view, const Utterance *> by_id;
  for (const auto &h : hyps) by_id.emplace(h.id, &h);
  std::unordered_set<std::string_view> ref_ids;
  for (const auto &r : refs) ref_ids.insert(r.id);
  std::vector<std::string> missing;
  for (const auto &h : hyps)
    if (!ref_ids.contains(h.id)) missing.push_back(h.id);
  if (!missing.empty()) throw MissingUtteranceError(std::move(missing));

  std::vector<UtterancePair> pairs;
  pairs.reserve(refs.size());
  for (const auto &r : refs) {
    auto it = by_id.find(r.id);
    pairs.push_back({it == by_id.end() ? nullptr : it->second, &r});
  }
  return pairs;
}

std::vector<std::string> CharTokens(const std::vector<std::string> &words) {
  std::string joined;
  for (const auto &w : words) {
    if (!joined.empty()) joined += ' ';
    joined += w;
  }
  return Utf8Chars(joined);
}

ErrorReport WordErrorReport(const UtteranceSet &hyps, const UtteranceSet &refs) {
  ErrorReport report;
  for (const auto &p : PairUtterances(hyps, refs))
    report.counts += Align(HypTokens(p), p.ref->tokens).counts;
  return report;
}

ErrorReport CharErrorReport(const UtteranceSet &hyps, const UtteranceSet &refs) {
  ErrorReport report;
  for (const auto &p : PairUtterances(hyps, refs))
    report.counts += Align(CharTokens(HypTokens(p)), CharTokens(p.ref->tokens)).counts;
  return report;
}

ErrorReport SubsetWordReport(const UtteranceSet &hyps, const UtteranceSet &refs,
                             const Lexicon &lex, const std::set<Phoneme> &finals,
                             ScoreOptions opts) {
  const std::set<std::string> subset = WordsEndingWith(lex, finals);
  std::set<std::string> unclassified;
  auto keep = [&](const std::string &word) {
    if (!lex.Contains(word)) {
      unclassified.insert(word);
      return false;
    }
    return subset.contains(word);
  };
  ErrorReport report;
  for (const auto &p : PairUtterances(hyps, refs))
    CountFiltered(Align(HypTokens(p), p.ref->tokens), keep, opts.exclude_insertions,
                  report.counts);
  report.unclassified.assign(unclassified.begin(), unclassified.end());
  return report;
}

ErrorReport PhonemeKindReport(const UtteranceSet &hyp_phones, const UtteranceSet &ref_phones,
                              const PhoneSet &ps, Kind kind, ScoreOptions opts) {
  auto to_phones = [&ps](const std::vector<std::string> &tokens) {
    std::vector<Phoneme> out;
    out.reserve(tokens.size());
    for (const auto &t : tokens) out.push_back(ps.Get(t));
    return out;
  };
  auto keep = [&](Phoneme q) { return KindOf(ps.CategoryOf(q)) == kind; };
  ErrorReport report;
  for (const auto &p : PairUtterances(hyp_phones, ref_phones))
    CountFiltered(Align(to_phones(HypTokens(p)), to_phones(p.ref->tokens)), keep,
                  opts.exclude_insertions, report.counts);
  return report;
}

}  // namespace singlex
