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

#include "fixtures.h"

#include <unistd.h>

#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "kindc/kb_format.h"
#include "kindc/sidl.h"

#ifndef KINDC_TESTDATA_DIR
#error "KINDC_TESTDATA_DIR must be defined"
#endif

namespace kindc::testing {

std::filesystem::path TestdataPath(const std::string& name) {
  return std::filesystem::path(KINDC_TESTDATA_DIR) / name;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string ReadTestdata(const std::string& name) {
  return ReadFile(TestdataPath(name));
}

Context KindSource(Context ctx, const std::string& sidl) {
  for (const auto& decl : ParseComponents(sidl)) {
    ctx = KindComponent(ctx, decl).context;
  }
  return ctx;
}

Scenario LoadScenario(const std::string& sidl_file, const std::string& kb_file,
                      const std::string& provider,
                      const std::string& consumer) {
  Context ctx = kb_file.empty() ? Context() : LoadKb(ReadTestdata(kb_file));
  ctx = KindSource(ctx, ReadTestdata(sidl_file));
  return Scenario{ctx, ComponentKindFromContext(ctx, provider),
                  ComponentKindFromContext(ctx, consumer)};
}

Scenario RenameScenario() {
  return LoadScenario("date.sidl", "date.kb", "Date", "SetDate");
}

Scenario ReorderScenario(const std::string& variant) {
  return LoadScenario(variant + ".sidl", "", "ISODate", "SetDate");
}

Scenario OntologyScenario() {
  return LoadScenario("offsetdate.sidl", "calendar.kb", "OffsetDate",
                      "ISODateUser");
}

std::filesystem::path MakeTempDir(const std::string& tag) {
  static std::atomic<int> counter{0};
  auto base = std::filesystem::temp_directory_path() /
              ("kindc_" + tag + "_" + std::to_string(::getpid()) + "_" +
               std::to_string(counter++));
  std::filesystem::remove_all(base);
  std::filesystem::create_directories(base);
  return base;
}

}  // namespace kindc::testing
