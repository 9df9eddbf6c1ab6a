// singlex/adapt.cc

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

#include "singlex/adapt.h"

#include <algorithm>
#include <stdexcept>

#include "singlex/text.h"

namespace singlex {

namespace {

bool Contains(const std::vector<Pronunciation> &prons, const std::vector<Phoneme> &phones) {
  return std::any_of(prons.begin(), prons.end(),
                     [&](const Pronunciation &p) { return p.phones == phones; });
}

std::vector<Pronunciation> DropFinal(const Pronunciation &pron, const AdaptationConfig &cfg) {
  if (pron.phones.size() < 2 || !cfg.drop_finals.contains(pron.phones.back())) return {};
  Pronunciation out{pron.phones, VariantOrigin::kConsonantDrop};
  out.phones.pop_back();
  return {std::move(out)};
}

void ExtendInto(const Pronunciation &pron, const AdaptationConfig &cfg, const PhoneSet &ps,
                std::vector<Pronunciation> &out) {
  if (cfg.max_vowel_repeat <= 1) return;
  const auto extra = static_cast<std::size_t>(cfg.max_vowel_repeat - 1);
  for (std::size_t i = 0; i < pron.phones.size(); ++i) {
    if (!ps.IsVowel(pron.phones[i])) continue;
    Pronunciation v{{}, VariantOrigin::kVowelExtend};
    v.phones.reserve(pron.phones.size() + extra);
    v.phones.insert(v.phones.end(), pron.phones.begin(), pron.phones.begin() + i + 1);
    v.phones.insert(v.phones.end(), extra, pron.phones[i]);
    v.phones.insert(v.phones.end(), pron.phones.begin() + i + 1, pron.phones.end());
    if (!Contains(out, v.phones)) out.push_back(std::move(v));
  }
}

}  // namespace

std::optional<VariantMode> ParseVariantMode(std::string_view s) {
  std::string u = ToUpperAscii(s);
  if (u == "L1" || u == "CONSONANTDROP") return VariantMode::kConsonantDrop;
  if (u == "L2" || u == "VOWELEXTEND") return VariantMode::kVowelExtend;
  if (u == "L3" || u == "COMBINED") return VariantMode::kCombined;
  return std::nullopt;
}

std::string_view VariantModeName(VariantMode mode) {
  switch (mode) {
    case VariantMode::kConsonantDrop: return "ConsonantDrop";
    case VariantMode::kVowelExtend: return "VowelExtend";
    case VariantMode::kCombined: return "Combined";
  }
  return "?";
}

AdaptationConfig AdaptationConfig::Default(const PhoneSet &ps) {
  AdaptationConfig cfg;
  for (const char *s : {"D", "T", "DH", "Z"})
    if (auto p = ps.Find(s)) cfg.drop_finals.insert(*p);
  return cfg;
}

void AdaptationConfig::Validate(const PhoneSet &ps) const {
  if (max_vowel_repeat < 1) throw std::invalid_argument("max_vowel_repeat must be >= 1");
  for (Phoneme p : drop_finals) {
    if (p.index() >= ps.size()) throw std::invalid_argument("drop-final outside the phone set");
    if (ps.IsVowel(p))
      throw std::invalid_argument("drop-final '" + ps.Symbol(p) + "' is not a consonant");
  }
}

std::vector<Pronunciation> DropFinalConsonant(const LexiconEntry &entry,
                                              const AdaptationConfig &cfg) {
  std::vector<Pronunciation> out;
  for (const auto &pron : entry.prons) {
    if (pron.origin != VariantOrigin::kBase) continue;
    for (auto &v : DropFinal(pron, cfg))
      if (!Contains(out, v.phones)) out.push_back(std::move(v));
  }
  return out;
}

std::vector<Pronunciation> ExtendVowels(const LexiconEntry &entry, const AdaptationConfig &cfg,
                                        const PhoneSet &ps) {
  std::vector<Pronunciation> out;
  for (const auto &pron : entry.prons)
    if (pron.origin == VariantOrigin::kBase) ExtendInto(pron, cfg, ps, out);
  return out;
}

Lexicon AdaptLexicon(const Lexicon &lex, const AdaptationConfig &cfg, AdaptSummary *summary) {
  const PhoneSet &ps = lex.phone_set();
  cfg.Validate(ps);
  const bool drop = cfg.mode != VariantMode::kVowelExtend;
  const bool extend = cfg.mode != VariantMode::kConsonantDrop;

  Lexicon out(lex.phone_set_ptr());
  AdaptSummary local;
  for (const auto &entry : lex.entries()) {
    for (const auto &pron : entry.prons) out.Add(entry.word, pron);

    std::vector<Pronunciation> dropped, extended;
    if (drop) dropped = DropFinalConsonant(entry, cfg);
    if (extend) {
      extended = ExtendVowels(entry, cfg, ps);
      if (drop && cfg.cross_compose)
        for (const auto &d : dropped) ExtendInto(d, cfg, ps, extended);
    }

    std::size_t added = 0;
    for (auto &v : dropped) added += out.Add(entry.word, std::move(v));
    for (auto &v : extended) added += out.Add(entry.word, std::move(v));
    if (added > 0) {
      ++local.words_touched;
      local.prons_added += added;
    }
  }
  if (summary != nullptr) *summary = local;
  return out;
}

}  // namespace singlex
