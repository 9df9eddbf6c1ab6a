// singlex/score.h

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

// Word and character error rates with S/I/D breakdown, pooled over
// utterances, plus subset reports restricted to a class of reference tokens.

#ifndef SINGLEX_SCORE_H_
#define SINGLEX_SCORE_H_

#include <functional>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "singlex/align.h"
#include "singlex/lexicon.h"
#include "singlex/phoneset.h"

namespace singlex {

struct Utterance {
  std::string id;
  std::vector<std::string> tokens;
};

using UtteranceSet = std::vector<Utterance>;

enum class TokenNormalization {
  kWords,   // NormalizeWord on each token; tokens that become empty are dropped
  kVerbatim,
};

// `<utterance-id> <token> <token> ...` per line. Blank lines are skipped.
// Throws ParseError on a duplicate id.
UtteranceSet ReadTranscripts(std::istream &is,
                             TokenNormalization norm = TokenNormalization::kWords);
UtteranceSet ReadTranscriptFile(const std::string &path,
                                TokenNormalization norm = TokenNormalization::kWords);
UtteranceSet ParseTranscripts(const std::string &text,
                              TokenNormalization norm = TokenNormalization::kWords);

struct ErrorReport {
  EditCounts counts;
  // Distinct words that could not be classified (subset reports only).
  std::vector<std::string> unclassified;

  std::size_t ref_tokens() const { return counts.ref_length(); }
  // Rates are undefined when there are no reference tokens.
  bool defined() const { return ref_tokens() > 0; }
  // Percentages.
  std::optional<double> ErrorRate() const { return Rate(counts.errors()); }
  std::optional<double> SubRate() const { return Rate(counts.sub); }
  std::optional<double> InsRate() const { return Rate(counts.ins); }
  std::optional<double> DelRate() const { return Rate(counts.del); }

  bool operator==(const ErrorReport &) const = default;

 private:
  std::optional<double> Rate(std::size_t n) const;
};

struct ScoreOptions {
  // Drop insertions from subset reports.
  bool exclude_insertions = false;
};

// References without a hypothesis are scored against an empty hypothesis.
// Throws MissingUtteranceError for hypotheses without a reference.
ErrorReport WordErrorReport(const UtteranceSet &hyps, const UtteranceSet &refs);
ErrorReport CharErrorReport(const UtteranceSet &hyps, const UtteranceSet &refs);

// Word-level alignment over whole utterances, then only ops whose reference
// word (for insertions: hypothesis word) is in WordsEndingWith(lex, finals).
ErrorReport SubsetWordReport(const UtteranceSet &hyps, const UtteranceSet &refs,
                             const Lexicon &lex, const std::set<Phoneme> &finals,
                             ScoreOptions opts = {});

// Phoneme-level alignment, then only ops whose reference phoneme (for
// insertions: hypothesis phoneme) has the given kind. Throws
// UnknownPhonemeError.
ErrorReport PhonemeKindReport(const UtteranceSet &hyp_phones, const UtteranceSet &ref_phones,
                              const PhoneSet &ps, Kind kind, ScoreOptions opts = {});
inline ErrorReport VowelErrorReport(const UtteranceSet &hyp_phones,
                                    const UtteranceSet &ref_phones, const PhoneSet &ps,
                                    ScoreOptions opts = {}) {
  return PhonemeKindReport(hyp_phones, ref_phones, ps, Kind::kVowel, opts);
}

// Characters of the space-joined tokens, one UTF-8 code point each.
std::vector<std::string> CharTokens(const std::vector<std::string> &words);

// (hyp, ref) pairs in reference order. Exposed for callers that shard work.
struct UtterancePair {
  const Utterance *hyp;  // nullptr when the reference has no hypothesis
  const Utterance *ref;
};
std::vector<UtterancePair> PairUtterances(const UtteranceSet &hyps, const UtteranceSet &refs);

}  // namespace singlex

#endif  // SINGLEX_SCORE_H_
