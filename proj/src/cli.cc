// singlex/cli.cc

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

#include "singlex/cli.h"

#include <algorithm>
#include <fstream>
#include <future>
#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "singlex/adapt.h"
#include "singlex/confusion.h"
#include "singlex/errors.h"
#include "singlex/lexicon.h"
#include "singlex/report.h"
#include "singlex/score.h"

namespace singlex {

namespace {

enum class Format { kText, kCsv, kJson };

// Bad flag values detected after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string phoneset;
  std::string format = "text";
  std::string out;
};

struct AlignOptions {
  std::string hyp, ref, utt, level = "word";
};

struct AnalyzeOptions {
  std::string hyp, ref, lexicon, matrix_out, oov = "skip";
  std::size_t topn = kDefaultConfusionSetSize;
  unsigned jobs = 1;
};

struct AdaptOptions {
  std::string lexicon, mode = "l3", drop_finals = "D,T,DH,Z";
  int max_vowel_repeat = 2;
  bool no_cross = false;
  bool variant_tags = false;
};

struct ScoreOpts {
  std::string hyp, ref, lexicon, hyp_phones, ref_phones, drop_finals = "D,T,DH,Z";
  bool exclude_insertions = false;
};

Format ParseFormat(const std::string &s) {
  if (s == "text") return Format::kText;
  if (s == "csv") return Format::kCsv;
  return Format::kJson;
}

std::shared_ptr<const PhoneSet> LoadPhoneSet(const CommonOptions &common) {
  if (common.phoneset.empty()) return PhoneSet::DefaultShared();
  return std::make_shared<const PhoneSet>(PhoneSet::ReadFile(common.phoneset));
}

std::set<Phoneme> ParseFinals(const std::string &text, const PhoneSet &ps) {
  try {
    auto list = ps.ParseList(text);
    return {list.begin(), list.end()};
  } catch (const UnknownPhonemeError &e) {
    throw UsageError(std::string("--drop-finals: ") + e.what());
  }
}

// Writes to --out when given, otherwise to the command's stdout stream.
class Sink {
 public:
  Sink(const std::string &path, std::ostream &fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error("cannot write '" + path + "'");
      os_ = &file_;
    }
  }
  std::ostream &stream() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream *os_;
};

// Phoneme sequences for each reference utterance, in reference order; the
// hypothesis side is either phoneme tokens or words phonemized by `lex`.
struct PhonePair {
  std::vector<Phoneme> hyp, ref;
};

std::vector<PhonePair> BuildPhonePairs(const UtteranceSet &hyps, const UtteranceSet &refs,
                                       const PhoneSet &ps, const Lexicon *lex, OovPolicy oov,
                                       std::vector<std::string> *oov_words) {
  std::vector<PhonePair> out;
  for (const auto &p : PairUtterances(hyps, refs)) {
    PhonePair pp;
    for (const auto &t : p.ref->tokens) pp.ref.push_back(ps.Get(t));
    if (p.hyp != nullptr) {
      if (lex != nullptr) {
        auto r = Phonemize(p.hyp->tokens, *lex, {oov, PronChoice::kFirst});
        pp.hyp = std::move(r.phones);
        oov_words->insert(oov_words->end(), r.oov.begin(), r.oov.end());
      } else {
        for (const auto &t : p.hyp->tokens) pp.hyp.push_back(ps.Get(t));
      }
    }
    out.push_back(std::move(pp));
  }
  return out;
}

// Aligns shards concurrently and merges in shard order.
PhonemeStats AccumulateSharded(const std::vector<PhonePair> &pairs, unsigned jobs) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(pairs.size())));
  auto work = [&pairs, jobs](unsigned shard) {
    PhonemeStats s;
    for (std::size_t i = shard; i < pairs.size(); i += jobs)
      s.Accumulate(Align(pairs[i].hyp, pairs[i].ref));
    return s;
  };
  if (jobs == 1) return work(0);
  std::vector<std::future<PhonemeStats>> futures;
  for (unsigned k = 0; k < jobs; ++k) futures.push_back(std::async(std::launch::async, work, k));
  PhonemeStats total;
  for (auto &f : futures) total += f.get();
  return total;
}

int RunAlign(const CommonOptions &common, const AlignOptions &opts, std::ostream &out) {
  const Format fmt = ParseFormat(common.format);
  const bool phones = opts.level == "phone";
  auto ps = LoadPhoneSet(common);
  auto norm = phones ? TokenNormalization::kVerbatim : TokenNormalization::kWords;
  auto hyps = ReadTranscriptFile(opts.hyp, norm);
  auto refs = ReadTranscriptFile(opts.ref, norm);

  Sink sink(common.out, out);
  std::ostream &os = sink.stream();
  Json all = Json::array();
  bool found = opts.utt.empty();
  if (fmt == Format::kCsv) os << "utterance,index,op,ref,hyp\n";
  for (const auto &p : PairUtterances(hyps, refs)) {
    if (!opts.utt.empty() && p.ref->id != opts.utt) continue;
    found = true;
    std::vector<std::string> hyp = p.hyp ? p.hyp->tokens : std::vector<std::string>{};
    std::vector<std::string> ref = p.ref->tokens;
    if (phones) {
      // Validate and canonicalize ("ah0" -> "AH").
      for (auto *seq : {&hyp, &ref})
        for (auto &t : *seq) t = ps->Symbol(ps->Get(t));
    } else if (opts.level == "char") {
      hyp = CharTokens(hyp);
      ref = CharTokens(ref);
    }
    auto path = Align(hyp, ref);
    const auto &c = path.counts;
    switch (fmt) {
      case Format::kText:
        os << p.ref->id << "  C=" << c.match << " S=" << c.sub << " I=" << c.ins
           << " D=" << c.del << "\n  " << FormatPath(path, [](const std::string &s) { return s; })
           << '\n';
        break;
      case Format::kCsv:
        for (std::size_t k = 0; k < path.ops.size(); ++k) {
          const auto &op = path.ops[k];
          os << p.ref->id << ',' << k << ',' << EditKindCode(op.kind) << ','
             << op.ref.value_or("") << ',' << op.hyp.value_or("") << '\n';
        }
        break;
      case Format::kJson: {
        Json ops = Json::array();
        for (const auto &op : path.ops)
          ops.push_back(Json{{"op", EditKindCode(op.kind)},
                             {"ref", op.ref ? Json(*op.ref) : Json(nullptr)},
                             {"hyp", op.hyp ? Json(*op.hyp) : Json(nullptr)}});
        all.push_back(Json{{"id", p.ref->id},
                           {"ops", std::move(ops)},
                           {"C", c.match},
                           {"S", c.sub},
                           {"I", c.ins},
                           {"D", c.del}});
        break;
      }
    }
  }
  if (!found) throw Error("no reference utterance '" + opts.utt + "'");
  if (fmt == Format::kJson) os << Json{{"alignments", std::move(all)}}.dump(2) << '\n';
  return kExitOk;
}

int RunAnalyze(const CommonOptions &common, const AnalyzeOptions &opts, std::ostream &out,
               std::ostream &err) {
  const Format fmt = ParseFormat(common.format);
  auto ps = LoadPhoneSet(common);
  const OovPolicy oov = opts.oov == "strict" ? OovPolicy::kStrict : OovPolicy::kSkip;
  std::unique_ptr<Lexicon> lex;
  if (!opts.lexicon.empty()) lex = std::make_unique<Lexicon>(ReadLexiconFile(opts.lexicon, ps));

  auto hyps = ReadTranscriptFile(
      opts.hyp, lex ? TokenNormalization::kWords : TokenNormalization::kVerbatim);
  auto refs = ReadTranscriptFile(opts.ref, TokenNormalization::kVerbatim);
  std::vector<std::string> oov_words;
  auto pairs = BuildPhonePairs(hyps, refs, *ps, lex.get(), oov, &oov_words);
  if (!oov_words.empty()) {
    std::set<std::string> distinct(oov_words.begin(), oov_words.end());
    err << "analyze: skipped " << oov_words.size() << " OOV token(s):";
    for (const auto &w : distinct) err << ' ' << w;
    err << '\n';
  }

  PhonemeStats stats = AccumulateSharded(pairs, opts.jobs);
  auto rows = ConfidenceTable(stats, *ps, opts.topn);
  auto matrix = CategoryMatrix(stats, *ps);

  Sink sink(common.out, out);
  std::ostream &os = sink.stream();
  switch (fmt) {
    case Format::kText:
      WriteConfidenceText(os, rows, *ps);
      os << '\n';
      WriteCategoryMatrixText(os, matrix);
      break;
    case Format::kCsv:
      WriteConfidenceCsv(os, rows, *ps);
      if (opts.matrix_out.empty()) {
        os << '\n';
        WriteCategoryMatrixCsv(os, matrix);
      } else {
        Sink msink(opts.matrix_out, out);
        WriteCategoryMatrixCsv(msink.stream(), matrix);
      }
      break;
    case Format::kJson:
      os << AnalysisToJson(rows, matrix, *ps).dump(2) << '\n';
      break;
  }
  return kExitOk;
}

int RunAdapt(const CommonOptions &common, const AdaptOptions &opts, std::ostream &out,
             std::ostream &err) {
  const Format fmt = ParseFormat(common.format);
  auto ps = LoadPhoneSet(common);
  AdaptationConfig cfg;
  auto mode = ParseVariantMode(opts.mode);
  if (!mode) throw UsageError("--mode must be l1, l2 or l3");
  cfg.mode = *mode;
  cfg.drop_finals = ParseFinals(opts.drop_finals, *ps);
  cfg.max_vowel_repeat = opts.max_vowel_repeat;
  cfg.cross_compose = !opts.no_cross;
  try {
    cfg.Validate(*ps);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }

  Lexicon lex = ReadLexiconFile(opts.lexicon, ps);
  AdaptSummary summary;
  Lexicon adapted = AdaptLexicon(lex, cfg, &summary);

  Sink sink(common.out, out);
  std::ostream &os = sink.stream();
  if (fmt == Format::kJson) {
    Json j{{"mode", VariantModeName(cfg.mode)},
           {"words_touched", summary.words_touched},
           {"prons_added", summary.prons_added}};
    j["lexicon"] = LexiconToJson(adapted);
    os << j.dump(2) << '\n';
  } else {
    SerializeLexicon(adapted, os, {opts.variant_tags});
  }
  err << "adapt (" << VariantModeName(cfg.mode) << "): " << summary.words_touched
      << " words touched, " << summary.prons_added << " prons added\n";
  return kExitOk;
}

int RunScore(const CommonOptions &common, const ScoreOpts &opts, std::ostream &out,
             std::ostream &err) {
  const Format fmt = ParseFormat(common.format);
  auto ps = LoadPhoneSet(common);
  if (opts.hyp_phones.empty() != opts.ref_phones.empty())
    throw UsageError("--hyp-phones and --ref-phones must be given together");
  ScoreOptions sopts{opts.exclude_insertions};

  auto hyps = ReadTranscriptFile(opts.hyp);
  auto refs = ReadTranscriptFile(opts.ref);
  std::vector<NamedReport> reports;
  reports.push_back({"word", WordErrorReport(hyps, refs)});
  reports.push_back({"character", CharErrorReport(hyps, refs)});
  if (!opts.lexicon.empty()) {
    auto finals = ParseFinals(opts.drop_finals, *ps);
    Lexicon lex = ReadLexiconFile(opts.lexicon, ps);
    std::string name = "word_final_" + ps->Join(std::vector<Phoneme>(finals.begin(), finals.end()), '_');
    reports.push_back({name, SubsetWordReport(hyps, refs, lex, finals, sopts)});
    if (!reports.back().report.unclassified.empty()) {
      err << "score: " << reports.back().report.unclassified.size()
          << " word(s) not in lexicon:";
      for (const auto &w : reports.back().report.unclassified) err << ' ' << w;
      err << '\n';
    }
  }
  if (!opts.hyp_phones.empty()) {
    auto hp = ReadTranscriptFile(opts.hyp_phones, TokenNormalization::kVerbatim);
    auto rp = ReadTranscriptFile(opts.ref_phones, TokenNormalization::kVerbatim);
    reports.push_back({"vowel", VowelErrorReport(hp, rp, *ps, sopts)});
  }

  Sink sink(common.out, out);
  std::ostream &os = sink.stream();
  switch (fmt) {
    case Format::kText:
      WriteErrorReportsText(os, reports);
      break;
    case Format::kCsv:
      WriteErrorReportsCsv(os, reports);
      break;
    case Format::kJson: {
      Json j = Json::object();
      for (const auto &[name, r] : reports) j[name] = ErrorReportToJson(r);
      os << j.dump(2) << '\n';
      break;
    }
  }
  return kExitOk;
}

void AddCommon(CLI::App *cmd, CommonOptions &common) {
  cmd->add_option("--phoneset", common.phoneset, "Phone-set file (SYMBOL<TAB>CATEGORY)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  cmd->add_option("--out", common.out, "Output path (default: stdout)");
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Phoneme confusion analysis, singing-adapted lexicons, and WER/CER scoring",
               "singlex"};
  app.require_subcommand(1);

  CommonOptions common;
  AlignOptions align_opts;
  AnalyzeOptions analyze_opts;
  AdaptOptions adapt_opts;
  ScoreOpts score_opts;

  auto *align = app.add_subcommand("align", "Dump alignment paths between two transcripts");
  AddCommon(align, common);
  align->add_option("--hyp", align_opts.hyp, "Hypothesis transcript")
      ->required()
      ->check(CLI::ExistingFile);
  align->add_option("--ref", align_opts.ref, "Reference transcript")
      ->required()
      ->check(CLI::ExistingFile);
  align->add_option("--utt", align_opts.utt, "Only this utterance id");
  align->add_option("--level", align_opts.level, "Token level")
      ->check(CLI::IsMember({"word", "char", "phone"}));

  auto *analyze = app.add_subcommand("analyze", "Per-phoneme confidence and confusion analysis");
  AddCommon(analyze, common);
  analyze->add_option("--hyp", analyze_opts.hyp,
                      "Predicted phoneme transcript (word transcript with --lexicon)")
      ->required()
      ->check(CLI::ExistingFile);
  analyze->add_option("--ref", analyze_opts.ref, "Annotated phoneme transcript")
      ->required()
      ->check(CLI::ExistingFile);
  analyze->add_option("--lexicon", analyze_opts.lexicon, "Phonemize --hyp words with this lexicon")
      ->check(CLI::ExistingFile);
  analyze->add_option("--oov", analyze_opts.oov, "OOV policy when phonemizing")
      ->check(CLI::IsMember({"strict", "skip"}));
  analyze->add_option("--topn", analyze_opts.topn, "Confusion-set size")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--jobs", analyze_opts.jobs, "Alignment worker threads")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--matrix-out", analyze_opts.matrix_out,
                      "With --format csv, write the category matrix here");

  auto *adapt = app.add_subcommand("adapt", "Generate a singing-adapted lexicon");
  AddCommon(adapt, common);
  adapt->add_option("--lexicon", adapt_opts.lexicon, "Input CMU-format lexicon")
      ->required()
      ->check(CLI::ExistingFile);
  adapt->add_option("--mode", adapt_opts.mode, "l1 (consonant drop), l2 (vowel extend), l3 (both)")
      ->check(CLI::IsMember({"l1", "l2", "l3"}));
  adapt->add_option("--drop-finals", adapt_opts.drop_finals, "Final consonants to drop");
  adapt->add_option("--max-vowel-repeat", adapt_opts.max_vowel_repeat,
                    "Total occurrences of an extended vowel")
      ->check(CLI::PositiveNumber);
  adapt->add_flag("--no-cross-compose", adapt_opts.no_cross,
                  "In l3, do not vowel-extend consonant-dropped variants");
  adapt->add_flag("--variant-tags", adapt_opts.variant_tags,
                  "Append ';; variant=<tag>' comments");

  auto *score = app.add_subcommand("score", "WER/CER with substitution/insertion/deletion rates");
  AddCommon(score, common);
  score->add_option("--hyp", score_opts.hyp, "Hypothesis word transcript")
      ->required()
      ->check(CLI::ExistingFile);
  score->add_option("--ref", score_opts.ref, "Reference word transcript")
      ->required()
      ->check(CLI::ExistingFile);
  score->add_option("--lexicon", score_opts.lexicon, "Enables the word-final subset report")
      ->check(CLI::ExistingFile);
  score->add_option("--drop-finals", score_opts.drop_finals, "Final phonemes defining the subset");
  score->add_option("--hyp-phones", score_opts.hyp_phones, "Predicted phoneme transcript")
      ->check(CLI::ExistingFile);
  score->add_option("--ref-phones", score_opts.ref_phones, "Annotated phoneme transcript")
      ->check(CLI::ExistingFile);
  score->add_flag("--exclude-insertions", score_opts.exclude_insertions,
                  "Leave insertions out of subset reports");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (align->parsed()) return RunAlign(common, align_opts, out);
    if (analyze->parsed()) return RunAnalyze(common, analyze_opts, out, err);
    if (adapt->parsed()) return RunAdapt(common, adapt_opts, out, err);
    if (score->parsed()) return RunScore(common, score_opts, out, err);
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  } catch (const Json::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitUsage;
}

}  // namespace singlex
