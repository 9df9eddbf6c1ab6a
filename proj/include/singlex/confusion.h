// singlex/confusion.h

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

// Per-phoneme confusion statistics over aligned utterances.
//
// Attribution of edit operations to a phoneme type:
//   Match(q)          -> C[q]
//   Substitute(q->q') -> S[q] and pairs[(q, q')]   (ground-truth side)
//   Delete(q)         -> D[q]                      (ground-truth side)
//   Insert(q')        -> I[q']                     (predicted side; the
//                                                   ground truth is empty)

#ifndef SINGLEX_CONFUSION_H_
#define SINGLEX_CONFUSION_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "singlex/align.h"
#include "singlex/phoneset.h"

namespace singlex {

struct PhonemeCounts {
  std::uint64_t correct = 0;
  std::uint64_t substituted = 0;
  std::uint64_t inserted = 0;
  std::uint64_t deleted = 0;

  std::uint64_t errors() const { return substituted + inserted + deleted; }
  std::uint64_t total() const { return correct + errors(); }
  PhonemeCounts &operator+=(const PhonemeCounts &o);
  bool operator==(const PhonemeCounts &) const = default;
};

// Commutative monoid: merging is pointwise addition.
class PhonemeStats {
 public:
  using PairKey = std::pair<Phoneme, Phoneme>;  // (ground truth, predicted)

  void Accumulate(const AlignmentPath<Phoneme> &path);
  PhonemeStats &operator+=(const PhonemeStats &other);
  friend PhonemeStats operator+(PhonemeStats a, const PhonemeStats &b) { return a += b; }

  // Zero counts for phonemes never seen.
  PhonemeCounts counts(Phoneme q) const;
  const std::map<Phoneme, PhonemeCounts> &all_counts() const { return counts_; }
  const std::map<PairKey, std::uint64_t> &substitution_pairs() const { return pairs_; }

  // Direct counter updates, for building stats from external tallies.
  void AddCounts(Phoneme q, const PhonemeCounts &c);
  void AddSubstitutions(Phoneme ref, Phoneme hyp, std::uint64_t n);

  bool empty() const { return counts_.empty(); }
  bool operator==(const PhonemeStats &) const = default;

 private:
  std::map<Phoneme, PhonemeCounts> counts_;
  std::map<PairKey, std::uint64_t> pairs_;
};

// (C - (S + I + D)) / (C + S + I + D); nullopt when q was never observed.
std::optional<double> Confidence(const PhonemeStats &stats, Phoneme q);
std::optional<double> Confidence(const PhonemeCounts &counts);

inline constexpr std::size_t kDefaultConfusionSetSize = 3;

struct ConfidenceRow {
  Phoneme phoneme;
  PhonemeCounts counts;
  std::optional<double> confidence;  // nullopt: unobserved
  std::optional<int> rank;           // 1 = highest confidence; nullopt: unranked
  std::vector<Phoneme> confusion_set;
};

// One row per phoneme of `ps`, observed phonemes first in rank order (ties by
// ascending symbol), then unobserved phonemes in phone-set order. Throws
// std::invalid_argument if top_n == 0.
std::vector<ConfidenceRow> ConfidenceTable(const PhonemeStats &stats, const PhoneSet &ps,
                                           std::size_t top_n = kDefaultConfusionSetSize);

// Up to top_n predicted phonemes most often substituted for `ref`, by
// descending count then ascending symbol.
std::vector<Phoneme> ConfusionSet(const PhonemeStats &stats, const PhoneSet &ps, Phoneme ref,
                                  std::size_t top_n = kDefaultConfusionSetSize);

// Category-level error matrix. Rows are ground truth, columns are
// predictions; index kEpsilon is the empty side (row: insertions, column:
// deletions). Correct matches are excluded. Each non-zero row sums to 1.
class CategoryConfusionMatrix {
 public:
  static constexpr std::size_t kEpsilon = kNumCategories;
  static constexpr std::size_t kSize = kNumCategories + 1;
  using RawCounts = std::array<std::array<std::uint64_t, kSize>, kSize>;

  // Normalizes each non-zero row of `raw` to unit sum.
  static CategoryConfusionMatrix FromRaw(const RawCounts &raw);

  double operator()(std::size_t row, std::size_t col) const { return normalized_[row][col]; }
  std::uint64_t raw(std::size_t row, std::size_t col) const { return raw_[row][col]; }
  double at(Category row, Category col) const {
    return normalized_[Index(row)][Index(col)];
  }
  const RawCounts &raw() const { return raw_; }
  double RowSum(std::size_t row) const;

  static std::size_t Index(Category c) { return static_cast<std::size_t>(c); }
  // Category name, or "eps".
  static std::string_view Label(std::size_t index);

 private:
  RawCounts raw_{};
  std::array<std::array<double, kSize>, kSize> normalized_{};
};

CategoryConfusionMatrix CategoryMatrix(const PhonemeStats &stats, const PhoneSet &ps);

}  // namespace singlex

#endif  // SINGLEX_CONFUSION_H_
