// singlex/confusion.cc

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

#include "singlex/confusion.h"

#include <algorithm>
#include <stdexcept>

namespace singlex {

PhonemeCounts &PhonemeCounts::operator+=(const PhonemeCounts &o) {
  correct += o.correct;
  substituted += o.substituted;
  inserted += o.inserted;
  deleted += o.deleted;
  return *this;
}

void PhonemeStats::Accumulate(const AlignmentPath<Phoneme> &path) {
  for (const auto &op : path.ops) {
    switch (op.kind) {
      case EditKind::kMatch:
        ++counts_[*op.ref].correct;
        break;
      case EditKind::kSubstitute:
        ++counts_[*op.ref].substituted;
        ++pairs_[{*op.ref, *op.hyp}];
        break;
      case EditKind::kDelete:
        ++counts_[*op.ref].deleted;
        break;
      case EditKind::kInsert:
        ++counts_[*op.hyp].inserted;
        break;
    }
  }
}

PhonemeStats &PhonemeStats::operator+=(const PhonemeStats &other) {
  for (const auto &[q, c] : other.counts_) counts_[q] += c;
  for (const auto &[key, n] : other.pairs_) pairs_[key] += n;
  return *this;
}

PhonemeCounts PhonemeStats::counts(Phoneme q) const {
  auto it = counts_.find(q);
  return it == counts_.end() ? PhonemeCounts{} : it->second;
}

void PhonemeStats::AddCounts(Phoneme q, const PhonemeCounts &c) {
  if (c.total() > 0) counts_[q] += c;
}

void PhonemeStats::AddSubstitutions(Phoneme ref, Phoneme hyp, std::uint64_t n) {
  if (ref == hyp) throw std::invalid_argument("substitution requires distinct phonemes");
  if (n == 0) return;
  pairs_[{ref, hyp}] += n;
  counts_[ref].substituted += n;
}

std::optional<double> Confidence(const PhonemeCounts &c) {
  if (c.total() == 0) return std::nullopt;
  double correct = static_cast<double>(c.correct);
  double errors = static_cast<double>(c.errors());
  return (correct - errors) / (correct + errors);
}

std::optional<double> Confidence(const PhonemeStats &stats, Phoneme q) {
  return Confidence(stats.counts(q));
}

std::vector<Phoneme> ConfusionSet(const PhonemeStats &stats, const PhoneSet &ps, Phoneme ref,
                                  std::size_t top_n) {
  std::vector<std::pair<Phoneme, std::uint64_t>> subs;
  auto lo = stats.substitution_pairs().lower_bound({ref, ps.at(0)});
  for (auto it = lo; it != stats.substitution_pairs().end() && it->first.first == ref; ++it)
    subs.emplace_back(it->first.second, it->second);
  std::sort(subs.begin(), subs.end(), [&ps](const auto &a, const auto &b) {
    if (a.second != b.second) return a.second > b.second;
    return ps.Symbol(a.first) < ps.Symbol(b.first);
  });
  std::vector<Phoneme> out;
  for (std::size_t i = 0; i < subs.size() && i < top_n; ++i) out.push_back(subs[i].first);
  return out;
}

std::vector<ConfidenceRow> ConfidenceTable(const PhonemeStats &stats, const PhoneSet &ps,
                                           std::size_t top_n) {
  if (top_n == 0) throw std::invalid_argument("confusion-set size must be >= 1");
  std::vector<ConfidenceRow> observed, unobserved;
  for (Phoneme q : ps.All()) {
    ConfidenceRow row{q, stats.counts(q), Confidence(stats, q), std::nullopt,
                      ConfusionSet(stats, ps, q, top_n)};
    (row.confidence ? observed : unobserved).push_back(std::move(row));
  }
  std::sort(observed.begin(), observed.end(), [&ps](const auto &a, const auto &b) {
    if (*a.confidence != *b.confidence) return *a.confidence > *b.confidence;
    return ps.Symbol(a.phoneme) < ps.Symbol(b.phoneme);
  });
  for (std::size_t i = 0; i < observed.size(); ++i) observed[i].rank = static_cast<int>(i + 1);
  observed.insert(observed.end(), std::make_move_iterator(unobserved.begin()),
                  std::make_move_iterator(unobserved.end()));
  return observed;
}

double CategoryConfusionMatrix::RowSum(std::size_t row) const {
  double sum = 0.0;
  for (double v : normalized_[row]) sum += v;
  return sum;
}

std::string_view CategoryConfusionMatrix::Label(std::size_t index) {
  return index == kEpsilon ? std::string_view("eps") : CategoryName(kAllCategories[index]);
}

CategoryConfusionMatrix CategoryConfusionMatrix::FromRaw(const RawCounts &raw) {
  CategoryConfusionMatrix m;
  m.raw_ = raw;
  for (std::size_t r = 0; r < kSize; ++r) {
    std::uint64_t total = 0;
    for (std::uint64_t v : raw[r]) total += v;
    if (total == 0) continue;
    for (std::size_t c = 0; c < kSize; ++c)
      m.normalized_[r][c] = static_cast<double>(raw[r][c]) / static_cast<double>(total);
  }
  return m;
}

CategoryConfusionMatrix CategoryMatrix(const PhonemeStats &stats, const PhoneSet &ps) {
  using M = CategoryConfusionMatrix;
  M::RawCounts raw{};
  auto idx = [&ps](Phoneme q) { return M::Index(ps.CategoryOf(q)); };
  for (const auto &[key, n] : stats.substitution_pairs()) raw[idx(key.first)][idx(key.second)] += n;
  for (const auto &[q, c] : stats.all_counts()) {
    raw[idx(q)][M::kEpsilon] += c.deleted;
    raw[M::kEpsilon][idx(q)] += c.inserted;
  }
  return M::FromRaw(raw);
}

}  // namespace singlex
