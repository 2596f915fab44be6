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

#include "kindc/codegen.h"

#include <functional>
#include <map>
#include <set>

#include "kindc/errors.h"
#include "kindc/vocabulary.h"

namespace kindc {

namespace {

std::string OperandText(const Operand& o) {
  if (const auto* n = std::get_if<std::int64_t>(&o)) return std::to_string(*n);
  if (const auto* v = std::get_if<Variable>(&o)) return v->name;
  return "null";
}

std::string Escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

// Picks `base`, or `base_<j>` for the least j making it unused.
std::string Fresh(const std::string& base, std::set<std::string>& used) {
  std::string name = base;
  for (int j = 1; used.count(name); ++j) {
    name = base + "_" + std::to_string(j);
  }
  used.insert(name);
  return name;
}

PlanMethod PlanFeature(const FeatureMap& map) {
  CheckRealizable(map);
  const FeatureKind& c = map.consumer_feature;
  const FeatureKind& p = map.provider_feature;
  PlanMethod m;
  m.name = c.name;
  m.return_type = c.return_type;
  m.delegate_method = p.name;
  std::set<std::string> used;
  for (const auto& param : c.params) {
    m.params.push_back({param.name, param.type_name});
    used.insert(param.name);
  }

  std::map<std::string, std::string> provider_to_local;
  for (std::size_t j = 0; j < map.bindings.size(); ++j) {
    const ArgumentBinding& b = map.bindings[j];
    const ParameterKind& target = p.params[j];
    if (b.consumer_index) {
      const std::string& arg = c.params[*b.consumer_index].name;
      m.arguments.push_back(arg);
      provider_to_local[target.name] = arg;
      continue;
    }
    const ChainConversion& conv = *b.conversion;
    std::string running = c.params[conv.inputs.front()].name;
    const auto& edges = conv.chain.edges;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const InterpEdge& e = edges[k];
      std::map<std::string, TemplateExpr> subst{
          {e.from.name(), TemplateExpr::Name(running)}};
      if (conv.edge_inputs[k]) {
        subst.emplace(e.to.name(),
                      TemplateExpr::Name(
                          c.params[conv.inputs[*conv.edge_inputs[k]]].name));
      }
      bool last = k + 1 == edges.size();
      std::string var = Fresh(
          last ? target.name : target.name + "_" + std::to_string(k), used);
      m.steps.push_back(
          {var, target.type_name,
           ParseTemplate(*e.conversion_template).Substitute(subst),
           e.from.name() + " -> " + e.to.name()});
      running = var;
    }
    if (edges.empty()) {
      throw UnrealizableConversion("empty conversion chain for " + target.name);
    }
    m.arguments.push_back(running);
    provider_to_local[target.name] = running;
  }
  if (map.guard) m.guards.push_back(map.guard->Renamed(provider_to_local));
  return m;
}

std::string EmitJavaLike(const AdapterPlan& plan) {
  std::string out;
  out += "// Generated by kindc. Do not edit.\n";
  out += "// Adapts " + plan.delegate + " to the requirements of " +
         plan.consumer + ".\n";
  out += "public final class " + plan.adapter_name + " {\n";
  out += "    private final " + plan.delegate + " delegate;\n\n";
  out += "    public " + plan.adapter_name + "(" + plan.delegate +
         " delegate) {\n";
  out += "        this.delegate = delegate;\n";
  out += "    }\n";
  for (const auto& m : plan.methods) {
    out += "\n    public " + m.return_type + " " + m.name + "(";
    for (std::size_t i = 0; i < m.params.size(); ++i) {
      if (i) out += ", ";
      out += m.params[i].type_name + " " + m.params[i].name;
    }
    out += ") {\n";
    for (const auto& s : m.steps) {
      out += "        // " + s.comment + "\n";
      out += "        " + s.type_name + " " + s.var + " = " +
             s.expr.ToString() + ";\n";
    }
    for (const auto& g : m.guards) {
      std::string text = GuardText(g);
      out += "        if (!(" + text + ")) throw new ContractViolation(\"" +
             Escape(text) + "\");\n";
    }
    out += "        ";
    if (m.return_type != vocab::kVoid) out += "return ";
    out += "delegate." + m.delegate_method + "(";
    for (std::size_t i = 0; i < m.arguments.size(); ++i) {
      if (i) out += ", ";
      out += m.arguments[i];
    }
    out += ");\n    }\n";
  }
  out += "}\n";
  return out;
}

using Emitter = std::function<std::string(const AdapterPlan&)>;

const std::map<std::string, Emitter, std::less<>>& Registry() {
  static const auto* registry = new std::map<std::string, Emitter, std::less<>>{
      {"java-like", EmitJavaLike}};
  return *registry;
}

}  // namespace

std::string GuardText(const ContractExpr& e) {
  if (e.is_true()) return "true";
  std::string out;
  for (std::size_t i = 0; i < e.conjuncts().size(); ++i) {
    const Comparison& c = e.conjuncts()[i];
    if (i) out += " && ";
    out += OperandText(c.lhs) + " " + std::string(ToString(c.op)) + " " +
           OperandText(c.rhs);
  }
  return out;
}

AdapterPlan PlanAdapter(const SemanticBridge& bridge) {
  AdapterPlan plan;
  plan.consumer = bridge.consumer.name();
  plan.delegate = bridge.provider.name();
  plan.adapter_name = plan.consumer + "To" + plan.delegate + "Adapter";
  for (const auto& map : bridge.feature_maps) {
    plan.methods.push_back(PlanFeature(map));
  }
  return plan;
}

std::vector<std::string> AdapterStyles() {
  std::vector<std::string> out;
  for (const auto& [name, _] : Registry()) out.push_back(name);
  return out;
}

std::string EmitAdapter(const AdapterPlan& plan, std::string_view style) {
  auto it = Registry().find(style);
  if (it == Registry().end()) {
    throw Error("unknown adapter style '" + std::string(style) + "'");
  }
  return it->second(plan);
}

std::string AdapterFileName(const AdapterPlan& plan) {
  return plan.adapter_name + ".gen.txt";
}

std::string ManifestLine(const AdapterPlan& plan) {
  return "adapter " + plan.adapter_name + " consumer " + plan.consumer +
         " provider " + plan.delegate + " features " +
         std::to_string(plan.methods.size());
}

}  // namespace kindc
