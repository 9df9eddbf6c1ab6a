// singlex/text.h

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

// Small string helpers shared by the parsers and scorers.

#ifndef SINGLEX_TEXT_H_
#define SINGLEX_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace singlex {

std::string ToUpperAscii(std::string_view s);
std::string_view Trim(std::string_view s);
std::vector<std::string_view> SplitWhitespace(std::string_view s);

// Uppercase, strip leading/trailing punctuation other than apostrophes.
// Internal punctuation is kept. May return an empty string.
std::string NormalizeWord(std::string_view word);

// Splits UTF-8 text into code points, each returned as its byte sequence.
// Invalid bytes are passed through one at a time.
std::vector<std::string> Utf8Chars(std::string_view s);

}  // namespace singlex

#endif  // SINGLEX_TEXT_H_
