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

// Shared fixtures: test data files and the worked date scenarios.

#ifndef KINDC_TESTS_SUPPORT_FIXTURES_H_
#define KINDC_TESTS_SUPPORT_FIXTURES_H_

#include <filesystem>
#include <string>
#include <vector>

#include "kindc/kind_store.h"
#include "kindc/kinding.h"

namespace kindc::testing {

std::filesystem::path TestdataPath(const std::string& name);
std::string ReadTestdata(const std::string& name);
std::string ReadFile(const std::filesystem::path& path);

// Kinds every component of `sidl` into `ctx`.
Context KindSource(Context ctx, const std::string& sidl);

struct Scenario {
  Context ctx;
  ComponentKind provider;
  ComponentKind consumer;
};

// Loads `kb_file` (if non-empty) and kinds `sidl_file` from testdata.
Scenario LoadScenario(const std::string& sidl_file, const std::string& kb_file,
                      const std::string& provider, const std::string& consumer);

// Date and SetDate with the realizes claims and rename rules.
Scenario RenameScenario();
// ISODate and SetDate; `variant` is "isodate", "isodate_guarantee" or
// "isodate_reversed".
Scenario ReorderScenario(const std::string& variant = "isodate");
// OffsetDate and ISODateUser over the calendar ontology.
Scenario OntologyScenario();

// A fresh empty directory under the system temp dir.
std::filesystem::path MakeTempDir(const std::string& tag);

}  // namespace kindc::testing

#endif  // KINDC_TESTS_SUPPORT_FIXTURES_H_
