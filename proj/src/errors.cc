// singlex/errors.cc

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

#include "singlex/errors.h"

#include <utility>

namespace singlex {

namespace {

std::string UnknownPhonemeMessage(const std::string &symbol, std::size_t line) {
  std::string msg = "unknown phoneme '" + symbol + "'";
  if (line > 0) msg += " at line " + std::to_string(line);
  return msg;
}

std::string JoinIds(const std::vector<std::string> &ids) {
  std::string out;
  for (const auto &id : ids) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

}  // namespace

UnknownPhonemeError::UnknownPhonemeError(std::string symbol, std::size_t line)
    : Error(UnknownPhonemeMessage(symbol, line)),
      symbol_(std::move(symbol)),
      line_(line) {}

ParseError::ParseError(std::size_t line, const std::string &what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

OovError::OovError(std::string word)
    : Error("out-of-vocabulary word '" + word + "'"), word_(std::move(word)) {}

MissingUtteranceError::MissingUtteranceError(std::vector<std::string> ids)
    : Error("no reference for utterance(s): " + JoinIds(ids)),
      ids_(std::move(ids)) {}

}  // namespace singlex
