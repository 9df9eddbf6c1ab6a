// singlex/errors.h

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

#ifndef SINGLEX_ERRORS_H_
#define SINGLEX_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace singlex {

// Base class for every data error raised by the library. The CLI maps these
// to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownPhonemeError : public Error {
 public:
  explicit UnknownPhonemeError(std::string symbol, std::size_t line = 0);
  const std::string &symbol() const { return symbol_; }
  std::size_t line() const { return line_; }

 private:
  std::string symbol_;
  std::size_t line_;
};

// Malformed input line. line is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string &what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class OovError : public Error {
 public:
  explicit OovError(std::string word);
  const std::string &word() const { return word_; }

 private:
  std::string word_;
};

// Hypothesis utterances without a matching reference.
class MissingUtteranceError : public Error {
 public:
  explicit MissingUtteranceError(std::vector<std::string> ids);
  const std::vector<std::string> &ids() const { return ids_; }

 private:
  std::vector<std::string> ids_;
};

}  // namespace singlex

#endif  // SINGLEX_ERRORS_H_
