// tests/confusion_test.cc

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "generators.h"
#include "singlex/confusion.h"

using namespace singlex;

namespace {

const PhoneSet &PS() { return PhoneSet::Default(); }
Phoneme Q(const char *s) { return PS().Get(s); }
std::vector<Phoneme> P(const char *text) { return PS().ParseList(text); }

PhonemeStats StatsFor(const char *hyp, const char *ref) {
  PhonemeStats s;
  s.Accumulate(Align(P(hyp), P(ref)));
  return s;
}

const ConfidenceRow &RowOf(const std::vector<ConfidenceRow> &rows, Phoneme q) {
  for (const auto &r : rows)
    if (r.phoneme == q) return r;
  throw std::logic_error("row not found");
}

}  // namespace

TEST_CASE("accumulate attributes ops to phonemes") {
  PhonemeStats s = StatsFor("EH N AY", "AE N D AY");
  CHECK(s.counts(Q("N")) == PhonemeCounts{1, 0, 0, 0});
  CHECK(s.counts(Q("AY")) == PhonemeCounts{1, 0, 0, 0});
  CHECK(s.counts(Q("AE")) == PhonemeCounts{0, 1, 0, 0});
  CHECK(s.counts(Q("D")) == PhonemeCounts{0, 0, 0, 1});
  CHECK(s.counts(Q("EH")) == PhonemeCounts{});
  REQUIRE(s.substitution_pairs().size() == 1);
  CHECK(s.substitution_pairs().at({Q("AE"), Q("EH")}) == 1);
}

TEST_CASE("insertions attach to the predicted phoneme") {
  PhonemeStats s = StatsFor("D R IY M M EY", "D R IY M EY");
  CHECK(s.counts(Q("M")).inserted == 1);
  CHECK(s.counts(Q("M")).correct == 1);
}

TEST_CASE("empty path leaves stats unchanged") {
  PhonemeStats s = StatsFor("AE", "AE");
  PhonemeStats before = s;
  s.Accumulate(AlignmentPath<Phoneme>{});
  CHECK(s == before);
}

TEST_CASE("accumulation order does not matter") {
  auto a = Align(P("EH N AY"), P("AE N D AY"));
  auto b = Align(P("S AH N"), P("S AH N Z"));
  PhonemeStats x, y;
  x.Accumulate(a);
  x.Accumulate(b);
  y.Accumulate(b);
  y.Accumulate(a);
  CHECK(x == y);
}

TEST_CASE("confidence anchors") {
  CHECK(*Confidence(PhonemeCounts{10, 0, 0, 0}) == 1.0);
  CHECK(*Confidence(PhonemeCounts{0, 5, 3, 2}) == -1.0);
  CHECK(*Confidence(PhonemeCounts{3, 1, 1, 1}) == 0.0);
  CHECK_FALSE(Confidence(PhonemeCounts{}).has_value());
  PhonemeStats empty;
  CHECK_FALSE(Confidence(empty, Q("ZH")).has_value());
}

TEST_CASE("confidence table ranks observed phonemes and leaves the rest unranked") {
  PhonemeStats s;
  s.AddCounts(Q("S"), {4, 0, 0, 0});
  auto rows = ConfidenceTable(s, PS());
  REQUIRE(rows.size() == 39);
  CHECK(rows[0].phoneme == Q("S"));
  CHECK(rows[0].rank == 1);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK_FALSE(rows[i].rank.has_value());
    CHECK_FALSE(rows[i].confidence.has_value());
  }
}

TEST_CASE("ranking ties break by symbol") {
  PhonemeStats s;
  s.AddCounts(Q("Z"), {1, 0, 0, 0});
  s.AddCounts(Q("B"), {2, 0, 0, 0});
  s.AddCounts(Q("AE"), {1, 1, 0, 0});
  auto rows = ConfidenceTable(s, PS());
  CHECK(rows[0].phoneme == Q("B"));
  CHECK(rows[1].phoneme == Q("Z"));
  CHECK(rows[2].phoneme == Q("AE"));
  CHECK(rows[2].rank == 3);
}

TEST_CASE("confusion sets sort by count and truncate") {
  PhonemeStats s;
  s.AddSubstitutions(Q("AE"), Q("AH"), 5);
  s.AddSubstitutions(Q("AE"), Q("EH"), 3);
  s.AddSubstitutions(Q("AE"), Q("AA"), 1);
  CHECK(ConfusionSet(s, PS(), Q("AE"), 2) == std::vector<Phoneme>{Q("AH"), Q("EH")});
  CHECK(ConfusionSet(s, PS(), Q("AE"), 3) == std::vector<Phoneme>{Q("AH"), Q("EH"), Q("AA")});
  CHECK(ConfusionSet(s, PS(), Q("EH")).empty());
  CHECK(RowOf(ConfidenceTable(s, PS(), 2), Q("AE")).confusion_set ==
        std::vector<Phoneme>{Q("AH"), Q("EH")});
  CHECK_THROWS_AS(ConfidenceTable(s, PS(), 0), std::invalid_argument);
  CHECK_THROWS_AS(s.AddSubstitutions(Q("AE"), Q("AE"), 1), std::invalid_argument);
}

TEST_CASE("category matrix examples") {
  SUBCASE("single substitution") {
    auto m = CategoryMatrix(StatsFor("AH", "AE"), PS());
    for (std::size_t r = 0; r < CategoryConfusionMatrix::kSize; ++r)
      for (std::size_t c = 0; c < CategoryConfusionMatrix::kSize; ++c)
        CHECK(m(r, c) == (r == 0 && c == 0 ? 1.0 : 0.0));
  }
  SUBCASE("deletion and substitution of plosives") {
    PhonemeStats s;
    s.AddCounts(Q("B"), {0, 0, 0, 1});
    s.AddSubstitutions(Q("B"), Q("P"), 1);
    auto m = CategoryMatrix(s, PS());
    CHECK(m.at(Category::kPlosive, Category::kPlosive) == 0.5);
    CHECK(m(CategoryConfusionMatrix::Index(Category::kPlosive), CategoryConfusionMatrix::kEpsilon) == 0.5);
    CHECK(m.RowSum(CategoryConfusionMatrix::Index(Category::kPlosive)) == 1.0);
  }
  SUBCASE("empty stats") {
    auto m = CategoryMatrix(PhonemeStats{}, PS());
    for (std::size_t r = 0; r < CategoryConfusionMatrix::kSize; ++r) CHECK(m.RowSum(r) == 0.0);
  }
  SUBCASE("insertions land in the eps row, correct matches are ignored") {
    auto m = CategoryMatrix(StatsFor("AE N N", "AE N"), PS());
    std::size_t nasal = CategoryConfusionMatrix::Index(Category::kNasal);
    CHECK(m(CategoryConfusionMatrix::kEpsilon, nasal) == 1.0);
    CHECK(m.RowSum(nasal) == 0.0);
    CHECK(m(CategoryConfusionMatrix::kEpsilon, CategoryConfusionMatrix::kEpsilon) == 0.0);
  }
}

namespace {

struct RandomCorpus {
  std::vector<std::vector<Phoneme>> hyps, refs;
};

RandomCorpus MakeCorpus(std::mt19937 &rng, std::size_t n) {
  RandomCorpus c;
  for (std::size_t k = 0; k < n; ++k) {
    c.refs.push_back(testing::RandomPhones(rng, PS(), 0, 12));
    auto hyp = c.refs.back();
    std::uniform_int_distribution<int> edit(0, 5);
    for (auto &p : hyp)
      if (edit(rng) == 0) p = testing::RandomPhones(rng, PS(), 1, 1)[0];
    if (!hyp.empty() && edit(rng) == 0) hyp.pop_back();
    if (edit(rng) == 0) hyp.push_back(testing::RandomPhones(rng, PS(), 1, 1)[0]);
    c.hyps.push_back(std::move(hyp));
  }
  return c;
}

}  // namespace

TEST_CASE("property: monoid merge, bounds, and count identities") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    auto corpus = MakeCorpus(rng, 40);
    PhonemeStats all, left, right;
    std::size_t ins_ops = 0, del_ops = 0;
    for (std::size_t k = 0; k < corpus.refs.size(); ++k) {
      auto path = Align(corpus.hyps[k], corpus.refs[k]);
      all.Accumulate(path);
      (k % 3 == 0 ? left : right).Accumulate(path);
      ins_ops += path.counts.ins;
      del_ops += path.counts.del;
    }
    CHECK(left + right == all);
    CHECK(right + left == all);

    std::uint64_t s_total = 0, i_total = 0, d_total = 0, pair_total = 0;
    for (const auto &[q, c] : all.all_counts()) {
      s_total += c.substituted;
      i_total += c.inserted;
      d_total += c.deleted;
      auto conf = Confidence(all, q);
      REQUIRE(conf.has_value());
      CHECK(*conf >= -1.0);
      CHECK(*conf <= 1.0);
    }
    for (const auto &[key, n] : all.substitution_pairs()) {
      CHECK(key.first != key.second);
      pair_total += n;
    }
    CHECK(s_total == pair_total);
    CHECK(i_total == ins_ops);
    CHECK(d_total == del_ops);

    for (const auto &row : ConfidenceTable(all, PS()))
      for (Phoneme p : row.confusion_set) CHECK(p != row.phoneme);

    auto m = CategoryMatrix(all, PS());
    for (std::size_t r = 0; r < CategoryConfusionMatrix::kSize; ++r) {
      double sum = m.RowSum(r);
      CHECK((sum == 0.0 || std::abs(sum - 1.0) <= 1e-12));
      for (std::size_t c = 0; c < CategoryConfusionMatrix::kSize; ++c) CHECK(m(r, c) >= 0.0);
    }
  }
}
