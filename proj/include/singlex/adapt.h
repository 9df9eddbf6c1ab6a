// singlex/adapt.h

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

// Singing-adapted lexicons. Two variant generators run over the Base
// pronunciations of each word:
//
//  - final-consonant drop: a pronunciation ending in one of drop_finals gets
//    a copy without its last phoneme (AND: AE N D -> AE N);
//  - vowel extension: for each vowel position, one copy with that vowel
//    repeated max_vowel_repeat times (OCEANS: OW SH AH N Z -> OW OW SH AH N Z,
//    OW SH AH AH N Z).
//
// Only Base pronunciations seed variants, so adapting an adapted lexicon
// changes nothing.

#ifndef SINGLEX_ADAPT_H_
#define SINGLEX_ADAPT_H_

#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "singlex/lexicon.h"

namespace singlex {

enum class VariantMode {
  kConsonantDrop,  // L1
  kVowelExtend,    // L2
  kCombined,       // L3
};

// Accepts "l1"/"l2"/"l3" and the enum names, case-insensitive.
std::optional<VariantMode> ParseVariantMode(std::string_view s);
std::string_view VariantModeName(VariantMode mode);

struct AdaptationConfig {
  std::set<Phoneme> drop_finals;
  int max_vowel_repeat = 2;
  VariantMode mode = VariantMode::kCombined;
  // In kCombined mode, also vowel-extend the consonant-dropped variants.
  bool cross_compose = true;

  // drop_finals = {D, T, DH, Z} from `ps`, other fields at their defaults.
  static AdaptationConfig Default(const PhoneSet &ps);

  // Throws std::invalid_argument if drop_finals holds a vowel or
  // max_vowel_repeat < 1.
  void Validate(const PhoneSet &ps) const;
};

std::vector<Pronunciation> DropFinalConsonant(const LexiconEntry &entry,
                                              const AdaptationConfig &cfg);
std::vector<Pronunciation> ExtendVowels(const LexiconEntry &entry, const AdaptationConfig &cfg,
                                        const PhoneSet &ps);

struct AdaptSummary {
  std::size_t words_touched = 0;
  std::size_t prons_added = 0;
};

// Output keeps every input pronunciation in place and appends new variants
// after them: consonant-drop variants, then vowel-extension variants. Never
// adds or removes words.
Lexicon AdaptLexicon(const Lexicon &lex, const AdaptationConfig &cfg,
                     AdaptSummary *summary = nullptr);

}  // namespace singlex

#endif  // SINGLEX_ADAPT_H_
