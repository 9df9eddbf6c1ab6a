// singlex/lexicon.cc

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

#include "singlex/lexicon.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "singlex/errors.h"
#include "singlex/text.h"

namespace singlex {

namespace {

constexpr std::array<std::string_view, 3> kOriginNames = {"Base", "ConsonantDrop",
                                                          "VowelExtend"};

// Splits "WORD(3)" into ("WORD", 3). Plain words get index 1.
std::pair<std::string_view, int> SplitAlternateMarker(std::string_view token,
                                                       std::size_t lineno) {
  if (token.size() < 3 || token.back() != ')') return {token, 1};
  std::size_t open = token.rfind('(');
  if (open == std::string_view::npos || open == 0) return {token, 1};
  std::string_view digits = token.substr(open + 1, token.size() - open - 2);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError(lineno, "malformed alternate marker in '" + std::string(token) + "'");
  return {token.substr(0, open), std::stoi(std::string(digits))};
}

}  // namespace

std::string_view VariantOriginName(VariantOrigin origin) {
  return kOriginNames[static_cast<std::size_t>(origin)];
}

std::optional<VariantOrigin> ParseVariantOrigin(std::string_view name) {
  for (std::size_t i = 0; i < kOriginNames.size(); ++i)
    if (kOriginNames[i] == name) return static_cast<VariantOrigin>(i);
  return std::nullopt;
}

bool LexiconEntry::HasPhones(std::span<const Phoneme> phones) const {
  return std::any_of(prons.begin(), prons.end(), [&](const Pronunciation &p) {
    return std::equal(p.phones.begin(), p.phones.end(), phones.begin(), phones.end());
  });
}

Lexicon::Lexicon(std::shared_ptr<const PhoneSet> phone_set) : phone_set_(std::move(phone_set)) {
  if (!phone_set_) throw std::invalid_argument("lexicon requires a phone set");
}

bool Lexicon::Add(std::string_view word, Pronunciation pron) {
  if (pron.phones.empty()) throw std::invalid_argument("empty pronunciation");
  for (Phoneme p : pron.phones)
    if (p.index() >= phone_set_->size())
      throw std::invalid_argument("phoneme outside the lexicon's phone set");
  std::string key = NormalizeWord(word);
  if (key.empty()) throw std::invalid_argument("empty word '" + std::string(word) + "'");
  auto it = index_.find(key);
  if (it == index_.end()) {
    if (pron.origin != VariantOrigin::kBase)
      throw std::invalid_argument("first pronunciation of '" + key + "' must be Base");
    index_.emplace(key, entries_.size());
    entries_.push_back({std::move(key), {std::move(pron)}});
    return true;
  }
  LexiconEntry &entry = entries_[it->second];
  if (entry.HasPhones(pron.phones)) return false;
  entry.prons.push_back(std::move(pron));
  return true;
}

const LexiconEntry *Lexicon::Find(std::string_view word) const {
  auto it = index_.find(NormalizeWord(word));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

std::size_t Lexicon::NumPronunciations() const {
  std::size_t n = 0;
  for (const auto &e : entries_) n += e.prons.size();
  return n;
}

bool Lexicon::operator==(const Lexicon &other) const {
  if (phone_set_ != other.phone_set_) {
    auto a = phone_set_->members(), b = other.phone_set_->members();
    if (!std::equal(a.begin(), a.end(), b.begin(), b.end(), [](const auto &x, const auto &y) {
          return x.symbol == y.symbol && x.category == y.category;
        }))
      return false;
  }
  if (entries_.size() != other.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].word != other.entries_[i].word ||
        entries_[i].prons != other.entries_[i].prons)
      return false;
  }
  return true;
}

Lexicon ParseLexicon(std::istream &is, std::shared_ptr<const PhoneSet> phone_set) {
  Lexicon lex(std::move(phone_set));
  const PhoneSet &ps = lex.phone_set();
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto tokens = SplitWhitespace(line);
    if (tokens.empty() || tokens.front().starts_with(";;;")) continue;

    auto [word, alt] = SplitAlternateMarker(tokens.front(), lineno);
    Pronunciation pron;
    std::size_t k = 1;
    for (; k < tokens.size() && tokens[k] != ";;"; ++k) {
      auto p = ps.Find(tokens[k]);
      if (!p) throw UnknownPhonemeError(std::string(tokens[k]), lineno);
      pron.phones.push_back(*p);
    }
    if (pron.phones.empty())
      throw ParseError(lineno, "no pronunciation for '" + std::string(tokens.front()) + "'");
    // Trailing ";; variant=<Tag>" comment.
    for (++k; k < tokens.size(); ++k) {
      if (!tokens[k].starts_with("variant=")) continue;
      auto origin = ParseVariantOrigin(tokens[k].substr(8));
      if (!origin) throw ParseError(lineno, "unknown variant tag '" + std::string(tokens[k]) + "'");
      pron.origin = *origin;
    }
    if (alt < 1) throw ParseError(lineno, "alternate index must be >= 1");
    if (NormalizeWord(word).empty())
      throw ParseError(lineno, "word '" + std::string(word) + "' is empty after normalization");
    try {
      // Duplicates (e.g. alternates differing only in stress) are dropped.
      lex.Add(word, std::move(pron));
    } catch (const std::invalid_argument &e) {
      throw ParseError(lineno, e.what());
    }
  }
  return lex;
}

Lexicon ParseLexicon(std::string_view text, std::shared_ptr<const PhoneSet> phone_set) {
  std::istringstream is{std::string(text)};
  return ParseLexicon(is, std::move(phone_set));
}

Lexicon ReadLexiconFile(const std::string &path, std::shared_ptr<const PhoneSet> phone_set) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open lexicon '" + path + "'");
  return ParseLexicon(is, std::move(phone_set));
}

void SerializeLexicon(const Lexicon &lex, std::ostream &os, SerializeOptions opts) {
  const PhoneSet &ps = lex.phone_set();
  for (const auto &entry : lex.entries()) {
    for (std::size_t k = 0; k < entry.prons.size(); ++k) {
      const auto &pron = entry.prons[k];
      os << entry.word;
      if (k > 0) os << '(' << (k + 1) << ')';
      os << "  " << ps.Join(pron.phones);
      if (opts.variant_tags) os << "  ;; variant=" << VariantOriginName(pron.origin);
      os << '\n';
    }
  }
}

std::string SerializeLexicon(const Lexicon &lex, SerializeOptions opts) {
  std::ostringstream os;
  SerializeLexicon(lex, os, opts);
  return os.str();
}

PhonemizeResult Phonemize(std::span<const std::string> words, const Lexicon &lex,
                          PhonemizeOptions opts) {
  PhonemizeResult result;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const LexiconEntry *entry = lex.Find(words[i]);
    if (entry == nullptr) {
      if (opts.oov == OovPolicy::kStrict) throw OovError(words[i]);
      result.oov.push_back(words[i]);
      continue;
    }
    const Pronunciation *chosen = &entry->base();
    for (const auto &pron : entry->prons) {
      if ((opts.choice == PronChoice::kShortest && pron.phones.size() < chosen->phones.size()) ||
          (opts.choice == PronChoice::kLongest && pron.phones.size() > chosen->phones.size()))
        chosen = &pron;
    }
    result.phones.insert(result.phones.end(), chosen->phones.begin(), chosen->phones.end());
    result.word_index.insert(result.word_index.end(), chosen->phones.size(), i);
  }
  return result;
}

std::set<std::string> WordsEndingWith(const Lexicon &lex, const std::set<Phoneme> &finals) {
  std::set<std::string> out;
  if (finals.empty()) return out;
  for (const auto &entry : lex.entries())
    if (finals.contains(entry.base().phones.back())) out.insert(entry.word);
  return out;
}

}  // namespace singlex
