// singlex/align.cc

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

#include "singlex/align.h"

namespace singlex {

std::string_view EditKindCode(EditKind kind) {
  switch (kind) {
    case EditKind::kMatch: return "C";
    case EditKind::kSubstitute: return "S";
    case EditKind::kInsert: return "I";
    case EditKind::kDelete: return "D";
  }
  return "?";
}

}  // namespace singlex
