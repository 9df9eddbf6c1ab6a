// singlex/lexicon.h

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

#ifndef SINGLEX_LEXICON_H_
#define SINGLEX_LEXICON_H_

#include <iosfwd>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "singlex/phoneset.h"

namespace singlex {

// Where a pronunciation came from. Everything read from a plain dictionary is
// kBase; the adaptation pass tags what it adds.
enum class VariantOrigin { kBase, kConsonantDrop, kVowelExtend };

std::string_view VariantOriginName(VariantOrigin origin);
std::optional<VariantOrigin> ParseVariantOrigin(std::string_view name);

struct Pronunciation {
  std::vector<Phoneme> phones;
  VariantOrigin origin = VariantOrigin::kBase;

  bool operator==(const Pronunciation &) const = default;
};

struct LexiconEntry {
  std::string word;
  std::vector<Pronunciation> prons;

  // First pronunciation, which is always kBase.
  const Pronunciation &base() const { return prons.front(); }
  bool HasPhones(std::span<const Phoneme> phones) const;
};

// Word -> pronunciations, in insertion order. Words are stored normalized
// (see NormalizeWord). Every phoneme belongs to phone_set().
class Lexicon {
 public:
  explicit Lexicon(std::shared_ptr<const PhoneSet> phone_set = PhoneSet::DefaultShared());

  const PhoneSet &phone_set() const { return *phone_set_; }
  const std::shared_ptr<const PhoneSet> &phone_set_ptr() const { return phone_set_; }

  // Adds a pronunciation to `word`, creating the entry if needed. Returns
  // false if the word already has this phone sequence. Throws
  // std::invalid_argument on an empty pronunciation, an empty word, or a new
  // entry whose first pronunciation is not kBase.
  bool Add(std::string_view word, Pronunciation pron);

  const LexiconEntry *Find(std::string_view word) const;
  bool Contains(std::string_view word) const { return Find(word) != nullptr; }

  std::span<const LexiconEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::size_t NumPronunciations() const;

  bool operator==(const Lexicon &other) const;

 private:
  std::shared_ptr<const PhoneSet> phone_set_;
  std::vector<LexiconEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

// CMU dictionary text: `WORD  PH1 PH2 ...`, alternates as `WORD(2)`,
// comment lines starting with ";;;". A trailing `;; variant=<Tag>` comment
// restores the origin tag written by SerializeLexicon. Throws ParseError and
// UnknownPhonemeError (both carrying the line number).
Lexicon ParseLexicon(std::istream &is,
                     std::shared_ptr<const PhoneSet> phone_set = PhoneSet::DefaultShared());
Lexicon ParseLexicon(std::string_view text,
                     std::shared_ptr<const PhoneSet> phone_set = PhoneSet::DefaultShared());
Lexicon ReadLexiconFile(const std::string &path,
                        std::shared_ptr<const PhoneSet> phone_set = PhoneSet::DefaultShared());

struct SerializeOptions {
  bool variant_tags = false;
};

void SerializeLexicon(const Lexicon &lex, std::ostream &os, SerializeOptions opts = {});
std::string SerializeLexicon(const Lexicon &lex, SerializeOptions opts = {});

enum class OovPolicy { kStrict, kSkip };

// Which pronunciation represents a word when phonemizing.
enum class PronChoice { kFirst, kShortest, kLongest };

struct PhonemizeOptions {
  OovPolicy oov = OovPolicy::kStrict;
  PronChoice choice = PronChoice::kFirst;
};

struct PhonemizeResult {
  std::vector<Phoneme> phones;
  // word_index[k] is the position in the input of the word phones[k] came
  // from. Non-decreasing.
  std::vector<std::size_t> word_index;
  // Input words skipped under OovPolicy::kSkip, in input order.
  std::vector<std::string> oov;
};

// Throws OovError under OovPolicy::kStrict.
PhonemizeResult Phonemize(std::span<const std::string> words, const Lexicon &lex,
                          PhonemizeOptions opts = {});

// Words whose base pronunciation ends in one of `finals`.
std::set<std::string> WordsEndingWith(const Lexicon &lex, const std::set<Phoneme> &finals);

}  // namespace singlex

#endif  // SINGLEX_LEXICON_H_
