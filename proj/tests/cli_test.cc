// tests/cli_test.cc

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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "json.hpp"
#include "singlex/cli.h"
#include "singlex/lexicon.h"

using namespace singlex;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("singlex_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string Write(const std::string &name, const std::string &content) const {
    fs::path p = path_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string Path(const std::string &name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

struct Run {
  int code;
  std::string out, err;
};

Run Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Slurp(const std::string &path) {
  std::ifstream is(path);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(Cli({}).code == kExitUsage);
  CHECK(Cli({"frobnicate"}).code == kExitUsage);
  CHECK(Cli({"align", "--hyp", "/nonexistent/x", "--ref", "/nonexistent/y"}).code == kExitUsage);
  TempDir dir;
  auto lex = dir.Write("lex.dict", "AND  AE N D\n");
  CHECK(Cli({"adapt", "--lexicon", lex, "--mode", "l9"}).code == kExitUsage);
  CHECK(Cli({"adapt", "--lexicon", lex, "--format", "yaml"}).code == kExitUsage);
  CHECK(Cli({"adapt", "--lexicon", lex, "--drop-finals", "AE"}).code == kExitUsage);
  CHECK(Cli({"--help"}).code == kExitOk);
}

TEST_CASE("align dumps the path") {
  TempDir dir;
  auto hyp = dir.Write("hyp.txt", "u1 EH N AY\n");
  auto ref = dir.Write("ref.txt", "u1 AE N D AY\n");
  auto r = Cli({"align", "--hyp", hyp, "--ref", ref, "--level", "phone"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("S(AE->EH) C(N) D(D) C(AY)") != std::string::npos);
}

TEST_CASE("analyze") {
  TempDir dir;
  auto ref = dir.Write("ref.txt", "u1 AE N D AY\nu2 S AH N\n");
  SUBCASE("hyp equals ref") {
    auto r = Cli({"analyze", "--hyp", ref, "--ref", ref, "--format", "json"});
    REQUIRE(r.code == kExitOk);
    auto j = nlohmann::json::parse(r.out);
    for (const auto &row : j["confidence"]) {
      if (row["c_q"].is_null()) continue;
      CHECK(row["c_q"].get<double>() == 1.0);
      CHECK(row["confusions"].empty());
    }
  }
  SUBCASE("one substitution shows up as the AE confusion") {
    auto hyp = dir.Write("hyp.txt", "u1 EH N AY\n");
    auto one = dir.Write("one.txt", "u1 AE N D AY\n");
    auto r = Cli({"analyze", "--hyp", hyp, "--ref", one, "--format", "json"});
    REQUIRE(r.code == kExitOk);
    auto j = nlohmann::json::parse(r.out);
    bool found = false;
    for (const auto &row : j["confidence"]) {
      if (row["phoneme"] != "AE") continue;
      found = true;
      CHECK(row["confusions"] == nlohmann::json::array({"EH"}));
    }
    CHECK(found);
  }
  SUBCASE("csv rows stay in range, and jobs do not change the output") {
    auto hyp = dir.Write("hyp.txt", "u1 EH N AY\nu2 S AH N N\n");
    auto r1 = Cli({"analyze", "--hyp", hyp, "--ref", ref, "--format", "csv"});
    auto r4 = Cli({"analyze", "--hyp", hyp, "--ref", ref, "--format", "csv", "--jobs", "4"});
    REQUIRE(r1.code == kExitOk);
    CHECK(r1.out == r4.out);
    CHECK(r1.out.rfind("phoneme,c_q,rank,confusions\n", 0) == 0);
  }
  SUBCASE("word hypotheses via lexicon, strict OOV fails") {
    auto lex = dir.Write("lex.dict", "AND  AE N D\nI  AY\n");
    auto words = dir.Write("words.txt", "u1 and i\nu2 sun\n");
    auto skip = Cli({"analyze", "--hyp", words, "--ref", ref, "--lexicon", lex});
    CHECK(skip.code == kExitOk);
    CHECK(skip.err.find("SUN") != std::string::npos);
    auto strict = Cli({"analyze", "--hyp", words, "--ref", ref, "--lexicon", lex, "--oov", "strict"});
    CHECK(strict.code == kExitDataError);
  }
  SUBCASE("unknown phoneme is a data error") {
    auto bad = dir.Write("bad.txt", "u1 QQ\n");
    CHECK(Cli({"analyze", "--hyp", bad, "--ref", ref}).code == kExitDataError);
  }
}

TEST_CASE("adapt") {
  TempDir dir;
  SUBCASE("OCEANS under l2") {
    auto lex = dir.Write("lex.dict", "OCEANS  OW1 SH AH0 N Z\n");
    auto r = Cli({"adapt", "--lexicon", lex, "--mode", "l2"});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out ==
          "OCEANS  OW SH AH N Z\n"
          "OCEANS(2)  OW OW SH AH N Z\n"
          "OCEANS(3)  OW SH AH AH N Z\n");
  }
  SUBCASE("SUN under l1") {
    auto lex = dir.Write("lex.dict", "SUN  S AH1 N\n");
    auto r = Cli({"adapt", "--lexicon", lex, "--mode", "l1"});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out == "SUN  S AH N\n");
    CHECK(r.err.find("0 prons added") != std::string::npos);
  }
  SUBCASE("identity config re-serializes byte for byte") {
    auto lex = dir.Write("lex.dict", "A  AH\nA(2)  EY\nAND  AE N D\n");
    auto r = Cli({"adapt", "--lexicon", lex, "--mode", "l3", "--drop-finals", "",
                  "--max-vowel-repeat", "1", "--out", dir.Path("out.dict")});
    REQUIRE(r.code == kExitOk);
    CHECK(Slurp(dir.Path("out.dict")) == Slurp(lex));
  }
  SUBCASE("json payload parses back into the lexicon") {
    auto lex = dir.Write("lex.dict", "AND  AE N D\n");
    auto r = Cli({"adapt", "--lexicon", lex, "--format", "json"});
    REQUIRE(r.code == kExitOk);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["prons_added"] == 3);
    CHECK(j["lexicon"]["entries"][0]["prons"].size() == 4);
  }
  SUBCASE("parse errors exit 1") {
    auto lex = dir.Write("lex.dict", "AND  AE N QQ\n");
    auto r = Cli({"adapt", "--lexicon", lex});
    CHECK(r.code == kExitDataError);
    CHECK(r.err.find("line 1") != std::string::npos);
  }
}

TEST_CASE("score") {
  TempDir dir;
  auto ref = dir.Write("ref.txt", "u1 and i love you\n");
  SUBCASE("hyp equals ref") {
    auto r = Cli({"score", "--hyp", ref, "--ref", ref, "--format", "csv"});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.find("word,4,4,0,0,0,0,0,0,0\n") != std::string::npos);
    CHECK(r.out.find("character,14,14,0,0,0,0,0,0,0\n") != std::string::npos);
  }
  SUBCASE("single deletion row") {
    auto hyp = dir.Write("hyp.txt", "u1 and love you\n");
    auto r = Cli({"score", "--hyp", hyp, "--ref", ref, "--format", "json"});
    REQUIRE(r.code == kExitOk);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["word"]["N"] == 4);
    CHECK(j["word"]["D"] == 1);
    CHECK(j["word"]["ER"] == 25.0);
    CHECK(j.contains("character"));
  }
  SUBCASE("subset and vowel reports") {
    auto lex = dir.Write("lex.dict", "AND  AE N D\nAN  AE N\nI  AY\n");
    auto hyp = dir.Write("hyp.txt", "u1 an i\n");
    auto r2 = dir.Write("ref2.txt", "u1 and i\n");
    auto hp = dir.Write("hp.txt", "u1 EH N AY\n");
    auto rp = dir.Write("rp.txt", "u1 AE N D AY\n");
    auto r = Cli({"score", "--hyp", hyp, "--ref", r2, "--lexicon", lex, "--hyp-phones", hp,
                  "--ref-phones", rp, "--format", "csv"});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.find("word_final_D_T_DH_Z,1,0,1,0,0,100,100,0,0\n") != std::string::npos);
    CHECK(r.out.find("vowel,2,1,1,0,0,50,50,0,0\n") != std::string::npos);
  }
  SUBCASE("hyp id missing from refs exits 1 naming it") {
    auto hyp = dir.Write("hyp.txt", "u1 and i love you\nghost hello\n");
    auto r = Cli({"score", "--hyp", hyp, "--ref", ref});
    CHECK(r.code == kExitDataError);
    CHECK(r.err.find("ghost") != std::string::npos);
  }
  SUBCASE("half-specified phone inputs are a usage error") {
    auto hp = dir.Write("hp.txt", "u1 AE\n");
    CHECK(Cli({"score", "--hyp", ref, "--ref", ref, "--hyp-phones", hp}).code == kExitUsage);
  }
}

TEST_CASE("outputs are identical across runs") {
  TempDir dir;
  auto hyp = dir.Write("hyp.txt", "u1 EH N AY\nu2 S AH N N\n");
  auto ref = dir.Write("ref.txt", "u1 AE N D AY\nu2 S AH N\n");
  for (const char *fmt : {"text", "csv", "json"}) {
    auto a = Cli({"analyze", "--hyp", hyp, "--ref", ref, "--format", fmt});
    auto b = Cli({"analyze", "--hyp", hyp, "--ref", ref, "--format", fmt});
    CHECK(a.out == b.out);
  }
}
