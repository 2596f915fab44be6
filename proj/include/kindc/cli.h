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

// The kindc command line.
//
//   kindc kind <files...>
//   kindc check <provider> <consumer>
//   kindc compose <provider> <consumer>
//   kindc kb list
//   kindc kb add <statement...>
//   kindc chain <from> <to>
//
// Flags: --kb <path>, --max-chain <n>, --out <dir>, --strict-tags, --json.
// The KB path defaults to $KINDC_KB, then to ./kindc.kb.

#ifndef KINDC_CLI_H_
#define KINDC_CLI_H_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace kindc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitIncompatible = 2;
inline constexpr int kExitUnknown = 3;

struct CliConfig {
  std::string kb_path = "kindc.kb";
  std::size_t max_chain_len = 8;
  std::string output_dir = ".";
  bool strict_tags = false;
  bool json = false;
};

// Runs one command. `args` excludes the program name. Results go to `out`,
// diagnostics to `err`. Returns the exit code.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace kindc

#endif  // KINDC_CLI_H_
