// singlex/phoneset.cc

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

#include "singlex/phoneset.h"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "singlex/errors.h"
#include "singlex/text.h"

namespace singlex {

namespace {

constexpr std::array<std::string_view, kNumCategories> kCategoryNames = {
    "ShortVowel", "LongVowel", "Diphthong", "Plosive",
    "Affricate",  "Nasal",     "Fricative", "Approximant",
};

std::vector<PhoneSet::Member> CmuMembers() {
  using C = Category;
  std::vector<PhoneSet::Member> m;
  auto add = [&m](C c, std::initializer_list<const char *> symbols) {
    for (const char *s : symbols) m.push_back({s, c});
  };
  add(C::kShortVowel, {"AE", "AH", "EH", "IH", "UH"});
  add(C::kLongVowel, {"AA", "AO", "ER", "IY", "UW"});
  add(C::kDiphthong, {"AY", "AW", "EY", "OW", "OY"});
  add(C::kPlosive, {"B", "D", "G", "K", "P", "T"});
  add(C::kAffricate, {"CH", "JH"});
  add(C::kNasal, {"M", "N", "NG"});
  add(C::kFricative, {"DH", "F", "HH", "S", "SH", "TH", "V", "Z", "ZH"});
  add(C::kApproximant, {"L", "R", "W", "Y"});
  return m;
}

}  // namespace

std::string_view CategoryName(Category c) {
  return kCategoryNames[static_cast<std::size_t>(c)];
}

std::optional<Category> ParseCategory(std::string_view name) {
  for (std::size_t i = 0; i < kNumCategories; ++i)
    if (kCategoryNames[i] == name) return kAllCategories[i];
  return std::nullopt;
}

std::pair<std::string, bool> NormalizePhoneSymbol(std::string_view token) {
  std::string s = ToUpperAscii(token);
  bool stressed = false;
  if (s.size() > 1 && s.back() >= '0' && s.back() <= '2') {
    s.pop_back();
    stressed = true;
  }
  return {s, stressed};
}

PhoneSet::PhoneSet(std::vector<Member> members) : members_(std::move(members)) {
  if (members_.size() > UINT16_MAX)
    throw std::invalid_argument("phone set too large");
  for (std::size_t i = 0; i < members_.size(); ++i) {
    auto &sym = members_[i].symbol;
    if (sym.empty()) throw std::invalid_argument("empty phoneme symbol");
    sym = ToUpperAscii(sym);
    if (!index_.emplace(sym, static_cast<std::uint16_t>(i)).second)
      throw std::invalid_argument("duplicate phoneme symbol '" + sym + "'");
  }
}

const PhoneSet &PhoneSet::Default() { return *DefaultShared(); }

std::shared_ptr<const PhoneSet> PhoneSet::DefaultShared() {
  static const auto kDefault = std::make_shared<const PhoneSet>(CmuMembers());
  return kDefault;
}

PhoneSet PhoneSet::Read(std::istream &is) {
  std::vector<Member> members;
  std::unordered_map<std::string, std::size_t> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string_view body = Trim(line);
    if (body.empty() || body.front() == '#') continue;
    auto fields = SplitWhitespace(body);
    if (fields.size() != 2)
      throw ParseError(lineno, "expected SYMBOL<TAB>CATEGORY");
    auto category = ParseCategory(fields[1]);
    if (!category)
      throw ParseError(lineno, "unknown category '" + std::string(fields[1]) + "'");
    std::string symbol = ToUpperAscii(fields[0]);
    if (!seen.emplace(symbol, lineno).second)
      throw ParseError(lineno, "duplicate phoneme '" + symbol + "'");
    members.push_back({std::move(symbol), *category});
  }
  if (members.empty()) throw ParseError(lineno, "phone set is empty");
  return PhoneSet(std::move(members));
}

PhoneSet PhoneSet::ReadFile(const std::string &path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open phone set '" + path + "'");
  return Read(is);
}

void PhoneSet::Write(std::ostream &os) const {
  for (const auto &m : members_)
    os << m.symbol << '\t' << CategoryName(m.category) << '\n';
}

Phoneme PhoneSet::at(std::size_t index) const {
  if (index >= members_.size()) throw std::out_of_range("phoneme index");
  return Phoneme(static_cast<std::uint16_t>(index));
}

std::optional<Phoneme> PhoneSet::Find(std::string_view token) const {
  auto [symbol, stressed] = NormalizePhoneSymbol(token);
  auto it = index_.find(symbol);
  if (it == index_.end()) return std::nullopt;
  Phoneme p(it->second);
  // Stress digits are only meaningful on vowels.
  if (stressed && !IsVowel(p)) return std::nullopt;
  return p;
}

Phoneme PhoneSet::Get(std::string_view token) const {
  if (auto p = Find(token)) return *p;
  throw UnknownPhonemeError(std::string(token));
}

std::vector<Phoneme> PhoneSet::Members(Category c) const {
  std::vector<Phoneme> out;
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i].category == c) out.push_back(at(i));
  return out;
}

std::vector<Phoneme> PhoneSet::All() const {
  std::vector<Phoneme> out;
  out.reserve(members_.size());
  for (std::size_t i = 0; i < members_.size(); ++i) out.push_back(at(i));
  return out;
}

std::vector<Phoneme> PhoneSet::ParseList(std::string_view text) const {
  std::string spaced(text);
  for (char &ch : spaced)
    if (ch == ',') ch = ' ';
  std::vector<Phoneme> out;
  for (auto tok : SplitWhitespace(spaced)) out.push_back(Get(tok));
  return out;
}

std::string PhoneSet::Join(std::span<const Phoneme> phones, char sep) const {
  std::string out;
  for (std::size_t i = 0; i < phones.size(); ++i) {
    if (i) out += sep;
    out += Symbol(phones[i]);
  }
  return out;
}

}  // namespace singlex
