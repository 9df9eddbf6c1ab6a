// tests/oracles.h

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

// Test-only reference implementations. Nothing here shares code with the
// library's DP engine.

#ifndef SINGLEX_TESTS_ORACLES_H_
#define SINGLEX_TESTS_ORACLES_H_

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace singlex::testing {

// Plain exponential recursion over (i, j) suffixes; no memo table.
template <typename T>
std::size_t RecursiveEditDistance(const std::vector<T> &a, std::size_t i, const std::vector<T> &b,
                                  std::size_t j) {
  if (i == a.size()) return b.size() - j;
  if (j == b.size()) return a.size() - i;
  if (a[i] == b[j]) {
    // Matching heads can always be taken greedily; still explore the gaps to
    // keep the oracle a literal transcription of the definition.
    std::size_t best = RecursiveEditDistance(a, i + 1, b, j + 1);
    if (best == 0) return 0;
    best = std::min(best, 1 + RecursiveEditDistance(a, i + 1, b, j));
    best = std::min(best, 1 + RecursiveEditDistance(a, i, b, j + 1));
    return best;
  }
  return 1 + std::min({RecursiveEditDistance(a, i + 1, b, j + 1),
                       RecursiveEditDistance(a, i + 1, b, j), RecursiveEditDistance(a, i, b, j + 1)});
}

template <typename T>
std::size_t RecursiveEditDistance(const std::vector<T> &a, const std::vector<T> &b) {
  return RecursiveEditDistance(a, 0, b, 0);
}

// One alignment step as text: "C:x", "S:x>y" (ref>hyp), "D:x", "I:y".
using OpSeq = std::vector<std::string>;

// Enumerates every alignment of hyp against ref, returning those of minimal
// cost.
template <typename T>
std::vector<OpSeq> AllOptimalAlignments(const std::vector<T> &hyp, const std::vector<T> &ref) {
  std::vector<OpSeq> all;
  std::vector<std::size_t> costs;
  OpSeq cur;
  auto rec = [&](auto &self, std::size_t i, std::size_t j, std::size_t cost) -> void {
    if (i == hyp.size() && j == ref.size()) {
      all.push_back(cur);
      costs.push_back(cost);
      return;
    }
    if (i < hyp.size() && j < ref.size()) {
      bool same = hyp[i] == ref[j];
      cur.push_back(same ? "C:" + std::string(ref[j]) : "S:" + std::string(ref[j]) + ">" + std::string(hyp[i]));
      self(self, i + 1, j + 1, cost + (same ? 0 : 1));
      cur.pop_back();
    }
    if (j < ref.size()) {
      cur.push_back("D:" + std::string(ref[j]));
      self(self, i, j + 1, cost + 1);
      cur.pop_back();
    }
    if (i < hyp.size()) {
      cur.push_back("I:" + std::string(hyp[i]));
      self(self, i + 1, j, cost + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0, 0);
  std::size_t best = *std::min_element(costs.begin(), costs.end());
  std::vector<OpSeq> out;
  for (std::size_t k = 0; k < all.size(); ++k)
    if (costs[k] == best) out.push_back(all[k]);
  return out;
}

// Among optimal alignments, the one a backward walk prefers when it favours
// diagonal steps, then deletions, then insertions: the lexicographically
// smallest sequence read from the end with C/S < D < I.
inline OpSeq PreferredAlignment(const std::vector<OpSeq> &optimal) {
  auto rank = [](const std::string &op) { return op[0] == 'C' || op[0] == 'S' ? 0 : op[0] == 'D' ? 1 : 2; };
  auto less = [&](const OpSeq &a, const OpSeq &b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend(),
                                        [&](const std::string &x, const std::string &y) {
                                          return rank(x) < rank(y);
                                        });
  };
  return *std::min_element(optimal.begin(), optimal.end(), less);
}

inline std::vector<std::string> RandomTokens(std::mt19937 &rng, std::size_t max_len,
                                             const std::vector<std::string> &alphabet) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::vector<std::string> out(len(rng));
  for (auto &t : out) t = alphabet[pick(rng)];
  return out;
}

}  // namespace singlex::testing

#endif  // SINGLEX_TESTS_ORACLES_H_
