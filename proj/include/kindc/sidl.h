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

// Semantic IDL front end.
//
//   /** @realizes Date */
//   Class SetDate
//       -- requires: year > 0
//       callmethod writeDate(day: Integer; month: Integer; year: Integer);
//   end;
//
// `method` declares a provided feature, `callmethod` a required one. A
// component ends with `end;`, `EndClass` or `EndType`. Documentation
// comments carry semantic properties as `@tag value description` lines.

#ifndef KINDC_SIDL_H_
#define KINDC_SIDL_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kindc/contract.h"
#include "kindc/errors.h"

namespace kindc {

// The semantic property vocabulary, in table order.
const std::vector<std::string_view>& SemanticPropertyTags();
bool IsSemanticPropertyTag(std::string_view tag);

struct SemanticProperty {
  std::string tag;
  std::string value;
  std::string description;

  bool operator==(const SemanticProperty&) const = default;
};

struct Diagnostic {
  SourcePos pos;
  std::string message;
};

struct PropertyBlock {
  std::vector<SemanticProperty> properties;
  // One UnknownTag warning per unrecognized tag.
  std::vector<Diagnostic> diagnostics;
};

// `comment_block` may include the `/**` and `*/` delimiters. `origin`
// shifts diagnostic positions to where the block sits in a larger file.
PropertyBlock ParseProperties(std::string_view comment_block,
                              SourcePos origin = {1, 1});

struct Param {
  std::string name;
  std::string type_name;
  bool operator==(const Param&) const = default;
};

enum class Direction { kProvided, kRequired };

struct MethodDecl {
  std::string name;
  std::vector<Param> params;
  std::optional<std::string> return_type;
  std::optional<ContractExpr> precondition;
  std::vector<SemanticProperty> properties;
  SourcePos pos;  // not part of equality

  // First property with `tag`, if any.
  const SemanticProperty* FindProperty(std::string_view tag) const;
  bool operator==(const MethodDecl& o) const;
};

enum class DeclSort { kClass, kType };

struct ComponentDecl {
  std::string name;
  DeclSort decl_sort = DeclSort::kClass;
  std::vector<MethodDecl> provided;
  std::vector<MethodDecl> required;
  std::vector<SemanticProperty> properties;
  SourcePos pos;
  std::vector<Diagnostic> diagnostics;  // warnings; not part of equality

  const SemanticProperty* FindProperty(std::string_view tag) const;
  bool operator==(const ComponentDecl& o) const;
};

// Parses every component in `source`. Throws SyntaxError or UnknownKeyword.
std::vector<ComponentDecl> ParseComponents(std::string_view source);
// Exactly one component; throws SyntaxError otherwise.
ComponentDecl ParseComponent(std::string_view source);

std::string PrintComponent(const ComponentDecl& decl);
std::string PrintComponents(const std::vector<ComponentDecl>& decls);

}  // namespace kindc

#endif  // KINDC_SIDL_H_
