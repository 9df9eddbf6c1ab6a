// singlex/align.h

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

// Unit-cost Levenshtein alignment between a hypothesis and a reference token
// sequence. Works for any equality-comparable token type: phonemes, words,
// characters.
//
// Orientation: the score matrix has one row per hypothesis prefix and one
// column per reference prefix. A Delete consumes a reference token with no
// hypothesis counterpart; an Insert consumes a hypothesis token with no
// reference counterpart.

#ifndef SINGLEX_ALIGN_H_
#define SINGLEX_ALIGN_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace singlex {

enum class EditKind : std::uint8_t { kMatch, kSubstitute, kInsert, kDelete };

// "C", "S", "I", "D".
std::string_view EditKindCode(EditKind kind);

template <typename Token>
struct EditOp {
  EditKind kind;
  std::optional<Token> ref;  // nullopt for kInsert
  std::optional<Token> hyp;  // nullopt for kDelete

  bool operator==(const EditOp &) const = default;
};

struct EditCounts {
  std::size_t match = 0;
  std::size_t sub = 0;
  std::size_t ins = 0;
  std::size_t del = 0;

  std::size_t errors() const { return sub + ins + del; }
  std::size_t ref_length() const { return match + sub + del; }
  std::size_t hyp_length() const { return match + sub + ins; }

  void Add(EditKind kind) {
    switch (kind) {
      case EditKind::kMatch: ++match; break;
      case EditKind::kSubstitute: ++sub; break;
      case EditKind::kInsert: ++ins; break;
      case EditKind::kDelete: ++del; break;
    }
  }
  EditCounts &operator+=(const EditCounts &o) {
    match += o.match;
    sub += o.sub;
    ins += o.ins;
    del += o.del;
    return *this;
  }
  friend EditCounts operator+(EditCounts a, const EditCounts &b) { return a += b; }
  bool operator==(const EditCounts &) const = default;
};

template <typename Token>
struct AlignmentPath {
  std::vector<EditOp<Token>> ops;
  EditCounts counts;

  std::size_t distance() const { return counts.errors(); }
  bool operator==(const AlignmentPath &) const = default;
};

// (hyp_len + 1) x (ref_len + 1) DP table, row-major.
class ScoreMatrix {
 public:
  ScoreMatrix(std::size_t hyp_len, std::size_t ref_len)
      : rows_(hyp_len + 1), cols_(ref_len + 1), cells_(rows_ * cols_, 0) {}

  std::size_t hyp_length() const { return rows_ - 1; }
  std::size_t ref_length() const { return cols_ - 1; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }
  std::uint32_t &operator()(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }
  std::uint32_t distance() const { return cells_.back(); }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> cells_;
};

template <typename Token>
ScoreMatrix LevenshteinMatrix(std::span<const Token> hyp, std::span<const Token> ref) {
  ScoreMatrix m(hyp.size(), ref.size());
  for (std::size_t j = 0; j <= ref.size(); ++j) m(0, j) = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= hyp.size(); ++i) {
    m(i, 0) = static_cast<std::uint32_t>(i);
    for (std::size_t j = 1; j <= ref.size(); ++j) {
      std::uint32_t diag = m(i - 1, j - 1) + (hyp[i - 1] == ref[j - 1] ? 0 : 1);
      std::uint32_t del = m(i, j - 1) + 1;
      std::uint32_t ins = m(i - 1, j) + 1;
      m(i, j) = std::min({diag, del, ins});
    }
  }
  return m;
}

// Walks back from the bottom-right cell. When several predecessors are
// optimal, the diagonal (match/substitute) wins, then Delete, then Insert.
template <typename Token>
AlignmentPath<Token> Traceback(const ScoreMatrix &m, std::span<const Token> hyp,
                               std::span<const Token> ref) {
  if (m.hyp_length() != hyp.size() || m.ref_length() != ref.size())
    throw std::invalid_argument("score matrix does not match sequence lengths");
  AlignmentPath<Token> path;
  path.ops.reserve(std::max(hyp.size(), ref.size()));
  std::size_t i = hyp.size(), j = ref.size();
  while (i > 0 || j > 0) {
    std::uint32_t here = m(i, j);
    if (i > 0 && j > 0) {
      bool same = hyp[i - 1] == ref[j - 1];
      if (m(i - 1, j - 1) + (same ? 0u : 1u) == here) {
        --i;
        --j;
        path.ops.push_back({same ? EditKind::kMatch : EditKind::kSubstitute, ref[j], hyp[i]});
        continue;
      }
    }
    if (j > 0 && m(i, j - 1) + 1 == here) {
      --j;
      path.ops.push_back({EditKind::kDelete, ref[j], std::nullopt});
      continue;
    }
    if (i > 0 && m(i - 1, j) + 1 == here) {
      --i;
      path.ops.push_back({EditKind::kInsert, std::nullopt, hyp[i]});
      continue;
    }
    throw std::invalid_argument("score matrix is not a Levenshtein table for these sequences");
  }
  std::reverse(path.ops.begin(), path.ops.end());
  for (const auto &op : path.ops) path.counts.Add(op.kind);
  return path;
}

template <typename Token>
AlignmentPath<Token> Align(std::span<const Token> hyp, std::span<const Token> ref) {
  return Traceback(LevenshteinMatrix(hyp, ref), hyp, ref);
}

template <typename Token>
AlignmentPath<Token> Align(const std::vector<Token> &hyp, const std::vector<Token> &ref) {
  return Align(std::span<const Token>(hyp), std::span<const Token>(ref));
}

// Edit distance only, two rows of memory.
template <typename Token>
std::size_t EditDistance(std::span<const Token> hyp, std::span<const Token> ref) {
  std::vector<std::size_t> prev(ref.size() + 1), cur(ref.size() + 1);
  for (std::size_t j = 0; j <= ref.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= hyp.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= ref.size(); ++j)
      cur[j] = std::min({prev[j - 1] + (hyp[i - 1] == ref[j - 1] ? 0 : 1), cur[j - 1] + 1,
                         prev[j] + 1});
    std::swap(prev, cur);
  }
  return prev[ref.size()];
}

// Renders a path as "S(AE->EH) C(N) D(D) C(AY)". Insertions show the
// hypothesis token.
template <typename Token, typename ToString>
std::string FormatPath(const AlignmentPath<Token> &path, ToString &&to_string) {
  std::string out;
  for (const auto &op : path.ops) {
    if (!out.empty()) out += ' ';
    out += EditKindCode(op.kind);
    out += '(';
    if (op.kind == EditKind::kSubstitute) {
      out += to_string(*op.ref);
      out += "->";
      out += to_string(*op.hyp);
    } else {
      out += to_string(op.ref ? *op.ref : *op.hyp);
    }
    out += ')';
  }
  return out;
}

}  // namespace singlex

#endif  // SINGLEX_ALIGN_H_
