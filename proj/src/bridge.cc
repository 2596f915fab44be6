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

#include "kindc/bridge.h"

#include <algorithm>

#include "kindc/errors.h"
#include "kindc/template_expr.h"

namespace kindc {

ConversionSpec ConversionSpec::Rename(
    std::map<std::string, std::string> renames) {
  ConversionSpec s;
  s.form = Form::kRename;
  s.renames = std::move(renames);
  return s;
}

ConversionSpec ConversionSpec::Reorder(std::vector<std::size_t> permutation) {
  ConversionSpec s;
  s.form = Form::kReorder;
  s.permutation = std::move(permutation);
  return s;
}

ConversionSpec ConversionSpec::Expr(const InterpEdge& edge) {
  ConversionSpec s;
  s.form = Form::kExpr;
  s.from_kind = edge.from.name();
  s.to_kind = edge.to.name();
  s.expr_template = edge.conversion_template;
  return s;
}

ConversionSpec ConversionSpec::Composite(std::vector<ConversionSpec> steps) {
  ConversionSpec s;
  s.form = Form::kComposite;
  s.steps = std::move(steps);
  return s;
}

std::string ConversionSpec::ToString() const {
  std::string out;
  switch (form) {
    case Form::kRename: {
      out = "rename{";
      bool first = true;
      for (const auto& [from, to] : renames) {
        if (!first) out += ",";
        first = false;
        out += from + "=" + to;
      }
      return out + "}";
    }
    case Form::kReorder: {
      out = "reorder[";
      for (std::size_t i = 0; i < permutation.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(permutation[i]);
      }
      return out + "]";
    }
    case Form::kExpr:
      return "expr(" + from_kind + "->" + to_kind + ")";
    case Form::kComposite: {
      out = "composite(";
      for (std::size_t i = 0; i < steps.size(); ++i) {
        if (i) out += ", ";
        out += steps[i].ToString();
      }
      return out + ")";
    }
  }
  return out;
}

std::string_view Obligation::Status() const {
  switch (result) {
    case Implication::kTrue:
      return "discharged";
    case Implication::kFalse:
      return "failed";
    case Implication::kUndecidable:
      break;
  }
  return "undecidable";
}

std::string Obligation::ToString() const {
  return antecedent.ToString() + " => " + consequent.ToString() + " : " +
         std::string(Status());
}

std::string SemanticBridge::ToString() const {
  std::string out =
      "bridge " + consumer.name() + " -> " + provider.name() + "\n";
  for (const auto& m : feature_maps) {
    out += "  map " + m.required_name + " -> " + m.provided_name + " via " +
           m.conversion.ToString() + " args [";
    for (std::size_t i = 0; i < m.bindings.size(); ++i) {
      if (i) out += ",";
      const auto& b = m.bindings[i];
      if (b.consumer_index) {
        out += std::to_string(*b.consumer_index);
      } else {
        out += "chain(";
        for (std::size_t k = 0; k < b.conversion->inputs.size(); ++k) {
          if (k) out += " ";
          out += std::to_string(b.conversion->inputs[k]);
        }
        out += ": " + b.conversion->chain.ToString() + ")";
      }
    }
    out += "] guard " + (m.guard ? m.guard->ToString() : "none") + "\n";
  }
  for (const auto& o : obligations) {
    out += "  obligation " + o.feature + ": " + o.ToString() + "\n";
  }
  return out;
}

ContractAnalysis AnalyzeContracts(
    const FeatureKind& required, const FeatureKind& provided,
    const std::vector<ArgumentBinding>& bindings) {
  ContractAnalysis out;
  if (!provided.precondition) return out;
  const ContractExpr& pre = *provided.precondition;

  std::map<std::string, std::string> names;
  for (std::size_t j = 0; j < bindings.size(); ++j) {
    if (bindings[j].consumer_index) {
      names[required.params[*bindings[j].consumer_index].name] =
          provided.params[j].name;
    }
  }
  auto in_provider_terms =
      [&](const ContractExpr& e) -> std::optional<ContractExpr> {
    for (const auto& v : e.Variables()) {
      if (!names.count(v)) return std::nullopt;
    }
    return e.Renamed(names);
  };

  bool covered = false;
  bool residue = false;
  auto add = [&](ObligationKind kind, const ContractExpr& consumer_side) {
    covered = true;
    Obligation o{required.name, kind, {}, {}, Implication::kUndecidable};
    auto renamed = in_provider_terms(consumer_side);
    ContractExpr side = renamed.value_or(consumer_side);
    if (kind == ObligationKind::kRequires) {
      o.antecedent = pre;
      o.consequent = side;
    } else {
      o.antecedent = side;
      o.consequent = pre;
    }
    if (renamed) o.result = Implies(o.antecedent, o.consequent);
    if (o.result == Implication::kUndecidable) residue = true;
    out.obligations.push_back(std::move(o));
  };
  if (required.precondition) {
    add(ObligationKind::kRequires, *required.precondition);
  }
  if (required.guarantee) add(ObligationKind::kGuarantee, *required.guarantee);
  if (!covered || residue) out.guard = pre;
  return out;
}

namespace {

std::size_t IndexOf(const FeatureKind& f, const AssetId& param) {
  for (std::size_t i = 0; i < f.params.size(); ++i) {
    if (f.params[i].asset == param) return i;
  }
  throw NoBridge("parameter " + param.name() + " is not part of " +
                 f.feature.name());
}

ChainConversion ToConversion(const ConversionGroup& g,
                             const FeatureKind& consumer) {
  ChainConversion c{{}, g.Spliced(), {}};
  for (const auto& in : g.inner) c.inputs.push_back(IndexOf(consumer, in));
  for (std::size_t s = 0; s < g.segments.size(); ++s) {
    for (std::size_t e = 0; e < g.segments[s].edges.size(); ++e) {
      bool binds_next =
          s + 1 < g.segments.size() && e + 1 == g.segments[s].edges.size();
      c.edge_inputs.push_back(binds_next ? std::optional<std::size_t>(s + 1)
                                         : std::nullopt);
    }
  }
  return c;
}

}  // namespace

SemanticBridge BuildBridge(const Context& ctx, const ComponentKind& provider,
                           const ComponentKind& consumer,
                           const BridgeOptions& opts) {
  Context closed = Close(ctx);
  CanonicalAsset inner = CanonicalForm(closed, consumer.requires_iface);
  CanonicalAsset outer = CanonicalForm(closed, provider.provides_iface);
  auto emb = FindContainment(closed, inner, outer, {opts.max_chain_len});
  if (!emb) {
    throw NoBridge("no interpretation takes " + consumer.requires_iface.name() +
                   " into " + provider.provides_iface.name());
  }

  SemanticBridge bridge{provider.component, consumer.component, {}, {}};
  for (const FeatureKind* f : consumer.Required()) {
    auto target = emb->MatchOf(f->feature);
    auto it =
        target ? provider.features.find(*target) : provider.features.end();
    if (it == provider.features.end() ||
        it->second.direction != Direction::kProvided) {
      throw NoBridge("required feature " + f->name + " has no mapping");
    }
    const FeatureKind& p = it->second;

    FeatureMap map{f->feature, p.feature, f->name, p.name, {}, {}, {}, *f, p};
    bool direct = true;
    std::vector<std::size_t> perm;
    for (const auto& param : p.params) {
      ArgumentBinding b;
      for (std::size_t i = 0; i < f->params.size() && !b.consumer_index; ++i) {
        if (emb->MatchOf(f->params[i].asset) == param.asset) {
          b.consumer_index = i;
        }
      }
      if (!b.consumer_index) {
        for (const auto& g : emb->conversions) {
          if (g.outer == param.asset) {
            b.conversion = ToConversion(g, *f);
            break;
          }
        }
      }
      if (!b.consumer_index && !b.conversion) {
        throw NoBridge("argument " + param.name + " of " + p.name +
                       " is not supplied by " + f->name);
      }
      if (b.consumer_index) {
        perm.push_back(*b.consumer_index);
      } else {
        direct = false;
      }
      map.bindings.push_back(std::move(b));
    }

    auto rename = ConversionSpec::Rename({{f->name, p.name}});
    bool identity = true;
    for (std::size_t i = 0; i < perm.size(); ++i) identity &= perm[i] == i;
    if (direct && identity) {
      map.conversion = rename;
    } else if (direct) {
      map.conversion =
          ConversionSpec::Composite({rename, ConversionSpec::Reorder(perm)});
    } else {
      std::vector<ConversionSpec> steps{rename};
      for (const auto& b : map.bindings) {
        if (!b.conversion) continue;
        for (const auto& e : b.conversion->chain.edges) {
          steps.push_back(ConversionSpec::Expr(e));
        }
      }
      map.conversion = ConversionSpec::Composite(std::move(steps));
    }

    ContractAnalysis contracts = AnalyzeContracts(*f, p, map.bindings);
    map.guard = contracts.guard;
    bridge.obligations.insert(bridge.obligations.end(),
                              contracts.obligations.begin(),
                              contracts.obligations.end());
    bridge.feature_maps.push_back(std::move(map));
  }
  std::stable_sort(bridge.feature_maps.begin(), bridge.feature_maps.end(),
                   [](const FeatureMap& a, const FeatureMap& b) {
                     return a.required_name < b.required_name;
                   });
  return bridge;
}

void CheckRealizable(const FeatureMap& map) {
  for (const auto& b : map.bindings) {
    if (!b.conversion) continue;
    const auto& edges = b.conversion->chain.edges;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const InterpEdge& e = edges[k];
      std::string label = e.from.name() + "->" + e.to.name();
      if (!e.conversion_template) {
        throw UnrealizableConversion("interpretation " + label +
                                     " has no conversion template");
      }
      std::set<std::string> names;
      try {
        names = ParseTemplate(*e.conversion_template).Names();
      } catch (const SyntaxError& err) {
        throw UnrealizableConversion("template of " + label + ": " +
                                     err.what());
      }
      for (const auto& n : names) {
        bool ok = n == e.from.name() ||
                  (n == e.to.name() && b.conversion->edge_inputs[k]);
        if (!ok) {
          throw UnrealizableConversion("template of " + label +
                                       " names unknown input '" + n + "'");
        }
      }
    }
  }
}

}  // namespace kindc
