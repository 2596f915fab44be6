// Copyright 2026 The kindc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Line-oriented text form of a context. After the `kindkb 1` header each
// line holds one statement:
//
//   inherit <child> <parent>
//   include <part> <whole>
//   realize <instance> <kindexpr>
//   equiv <a> <b>
//   pequiv <lesser> <greater>
//   textequiv <asset> "<literal>"
//   interp <from> <to> full|partial agent <id> [context <label>]
//          [template "<expr>"]
//   canon <kind> -> <kind> { <old>=<new>, ... }
//   ground <kind> [local]
//
// optionally followed by `claim [by <author>]` or
// `belief <p/q> [by <author>]`. Positions fix the sort of each name except
// in equiv and pequiv, where names are instances unless written
// `kind:<name>`. Blank lines and lines starting with '#' are ignored.

#ifndef KINDC_KB_FORMAT_H_
#define KINDC_KB_FORMAT_H_

#include <string>
#include <string_view>

#include "kindc/kind_store.h"

namespace kindc {

inline constexpr int kKbVersion = 1;

// Asserted facts, rules and grounds, one per line, sorted by statement
// keyword and then lexically. Derived facts are not saved.
std::string SaveKb(const Context& ctx);

// Throws VersionMismatch for a header other than `kindkb 1` and
// KbParseError, positioned at the offending line, for anything else.
Context LoadKb(std::string_view text);

// Applies a single statement line to `ctx`.
Context AddKbStatement(const Context& ctx, std::string_view line);

// Quotes and escapes `"`, `\` and newlines.
std::string QuoteLiteral(std::string_view s);

}  // namespace kindc

#endif  // KINDC_KB_FORMAT_H_
