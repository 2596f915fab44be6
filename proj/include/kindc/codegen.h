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

// Adapter planning and emission. An adapter wraps the provider and exposes
// the consumer's required signatures.

#ifndef KINDC_CODEGEN_H_
#define KINDC_CODEGEN_H_

#include <string>
#include <string_view>
#include <vector>

#include "kindc/bridge.h"
#include "kindc/contract.h"
#include "kindc/sidl.h"
#include "kindc/template_expr.h"

namespace kindc {

// `type_name var = expr;`
struct PlanStep {
  std::string var;
  std::string type_name;
  TemplateExpr expr;
  std::string comment;  // "Year -> Month"

  bool operator==(const PlanStep&) const = default;
};

struct PlanMethod {
  // Exposed signature, equal to the consumer's required one.
  std::string name;
  std::string return_type;
  std::vector<Param> params;
  // Conversion steps in chain order.
  std::vector<PlanStep> steps;
  // Runtime checks over parameter and step variables.
  std::vector<ContractExpr> guards;
  std::string delegate_method;
  // One variable name per delegate argument.
  std::vector<std::string> arguments;

  bool operator==(const PlanMethod&) const = default;
};

struct AdapterPlan {
  std::string adapter_name;  // <Consumer>To<Provider>Adapter
  std::string consumer;
  std::string delegate;
  std::vector<PlanMethod> methods;

  bool operator==(const AdapterPlan&) const = default;
};

// Throws UnrealizableConversion when a conversion edge cannot be emitted.
AdapterPlan PlanAdapter(const SemanticBridge& bridge);

// Registered emission styles; "java-like" is the only one.
std::vector<std::string> AdapterStyles();

// Throws Error for an unknown style.
std::string EmitAdapter(const AdapterPlan& plan,
                        std::string_view style = "java-like");

// "<AdapterName>.gen.txt".
std::string AdapterFileName(const AdapterPlan& plan);

// "adapter <name> consumer <C> provider <P> features <n>".
std::string ManifestLine(const AdapterPlan& plan);

// Contract text with spaced operators: "year > 1970 && t != null".
std::string GuardText(const ContractExpr& e);

}  // namespace kindc

#endif  // KINDC_CODEGEN_H_
