// singlex/phoneset.h

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

#ifndef SINGLEX_PHONESET_H_
#define SINGLEX_PHONESET_H_

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace singlex {

enum class Category : std::uint8_t {
  kShortVowel,
  kLongVowel,
  kDiphthong,
  kPlosive,
  kAffricate,
  kNasal,
  kFricative,
  kApproximant,
};

inline constexpr std::size_t kNumCategories = 8;

inline constexpr std::array<Category, kNumCategories> kAllCategories = {
    Category::kShortVowel, Category::kLongVowel, Category::kDiphthong,
    Category::kPlosive,    Category::kAffricate, Category::kNasal,
    Category::kFricative,  Category::kApproximant,
};

enum class Kind : std::uint8_t { kVowel, kConsonant };

constexpr Kind KindOf(Category c) {
  return c <= Category::kDiphthong ? Kind::kVowel : Kind::kConsonant;
}

// "ShortVowel", "LongVowel", ... as spelled in phone-set files.
std::string_view CategoryName(Category c);
std::optional<Category> ParseCategory(std::string_view name);

// A validated member of some PhoneSet. Only a PhoneSet can mint one; the
// index is the member's position in that set.
class Phoneme {
 public:
  constexpr std::uint16_t index() const { return index_; }
  friend constexpr auto operator<=>(Phoneme, Phoneme) = default;

 private:
  friend class PhoneSet;
  constexpr explicit Phoneme(std::uint16_t index) : index_(index) {}
  std::uint16_t index_;
};

// Uppercases and strips a trailing lexical-stress digit (0-2). Returns the
// bare symbol and whether a stress digit was present.
std::pair<std::string, bool> NormalizePhoneSymbol(std::string_view token);

// Closed phoneme inventory with one category per member. Immutable after
// construction.
class PhoneSet {
 public:
  struct Member {
    std::string symbol;
    Category category;
  };

  // Throws std::invalid_argument on empty or duplicate symbols.
  explicit PhoneSet(std::vector<Member> members);

  // The 39-symbol CMU set.
  static const PhoneSet &Default();
  static std::shared_ptr<const PhoneSet> DefaultShared();

  // `SYMBOL<TAB>CATEGORY` per line, '#' comment lines. Throws ParseError.
  static PhoneSet Read(std::istream &is);
  static PhoneSet ReadFile(const std::string &path);
  void Write(std::ostream &os) const;

  std::size_t size() const { return members_.size(); }
  std::span<const Member> members() const { return members_; }
  Phoneme at(std::size_t index) const;

  // Accepts stress-marked vowels ("AH0") and lowercase. Throws
  // UnknownPhonemeError.
  Phoneme Get(std::string_view token) const;
  std::optional<Phoneme> Find(std::string_view token) const;
  bool Contains(std::string_view token) const { return Find(token).has_value(); }

  const std::string &Symbol(Phoneme p) const { return members_[p.index()].symbol; }
  Category CategoryOf(Phoneme p) const { return members_[p.index()].category; }
  Category CategoryOf(std::string_view token) const { return CategoryOf(Get(token)); }
  bool IsVowel(Phoneme p) const { return KindOf(CategoryOf(p)) == Kind::kVowel; }
  bool IsVowel(std::string_view token) const { return IsVowel(Get(token)); }

  std::vector<Phoneme> Members(Category c) const;
  std::vector<Phoneme> All() const;

  // Parses a whitespace- or comma-separated phoneme list.
  std::vector<Phoneme> ParseList(std::string_view text) const;
  std::string Join(std::span<const Phoneme> phones, char sep = ' ') const;

 private:
  std::vector<Member> members_;
  std::unordered_map<std::string, std::uint16_t> index_;
};

}  // namespace singlex

#endif  // SINGLEX_PHONESET_H_
