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

#include "kindc/cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kindc/chain.h"
#include "kindc/codegen.h"
#include "kindc/compat.h"
#include "kindc/errors.h"
#include "kindc/kb_format.h"
#include "kindc/kinding.h"
#include "kindc/sidl.h"

namespace kindc {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

class CommandError : public Error {
 public:
  using Error::Error;
};

std::string ReadFile(const std::string& path) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) {
    throw CommandError("no such file: " + path);
  }
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in && !in.eof()) throw CommandError("cannot read " + path);
  return buf.str();
}

void WriteFile(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  out.close();
  if (!out) throw CommandError("cannot write " + path.string());
}

class Runner {
 public:
  Runner(CliConfig config, std::ostream& out, std::ostream& err)
      : config_(std::move(config)), out_(out), err_(err) {}

  int Kind(const std::vector<std::string>& files) {
    Context ctx = LoadContext();
    json components = json::array();
    for (const auto& file : files) {
      std::string source = ReadFile(file);
      std::vector<ComponentDecl> decls;
      try {
        decls = ParseComponents(source);
      } catch (const PositionedError& e) {
        throw CommandError(file + ":" + e.what());
      }
      for (const auto& decl : decls) {
        for (const auto& d : decl.diagnostics) {
          err_ << (config_.strict_tags ? "error: " : "warning: ") << file << ":"
               << d.pos.ToString() << ": " << d.message << "\n";
        }
        if (config_.strict_tags && !decl.diagnostics.empty()) {
          return kExitError;
        }
        std::optional<KindingResult> kinded;
        try {
          kinded = KindComponent(ctx, decl);
        } catch (const Error& e) {
          throw CommandError(file + ":" + std::to_string(decl.pos.line) + ": " +
                             e.what());
        }
        ctx = kinded->context;
        std::size_t provided = kinded->kind.Provided().size();
        std::size_t required = kinded->kind.Required().size();
        if (config_.json) {
          components.push_back({{"name", decl.name},
                                {"provided", provided},
                                {"required", required}});
        } else {
          out_ << "kinded " << decl.name << ": " << provided << " provided, "
               << required << " required\n";
        }
      }
    }
    SaveContext(ctx);
    if (config_.json) out_ << json{{"components", components}}.dump(2) << "\n";
    return kExitOk;
  }

  int Check(const std::string& provider, const std::string& consumer) {
    Context ctx = LoadContext();
    CompatibilityResult r = Compatibility(ctx, provider, consumer);
    if (config_.json) {
      out_ << ResultJson(r).dump(2) << "\n";
    } else {
      PrintResult(r);
    }
    return ExitFor(r.verdict);
  }

  int Compose(const std::string& provider, const std::string& consumer) {
    Context ctx = LoadContext();
    CompatibilityResult r = Compatibility(ctx, provider, consumer);
    json doc = ResultJson(r);
    if (!config_.json) PrintResult(r);
    if (r.witness) {
      AdapterPlan plan = PlanAdapter(*r.witness);
      fs::path dir(config_.output_dir);
      std::error_code ec;
      fs::create_directories(dir, ec);
      fs::path file = dir / AdapterFileName(plan);
      WriteFile(file, EmitAdapter(plan));
      std::string manifest = ManifestLine(plan);
      if (config_.json) {
        doc["adapter"] = {{"name", plan.adapter_name},
                          {"file", file.string()},
                          {"manifest", manifest}};
      } else {
        out_ << manifest << "\n";
      }
    }
    if (config_.json) out_ << doc.dump(2) << "\n";
    return ExitFor(r.verdict);
  }

  int KbList() {
    std::string text = SaveKb(LoadContext());
    if (!config_.json) {
      out_ << text;
      return kExitOk;
    }
    json statements = json::array();
    std::istringstream lines(text);
    std::string line;
    std::getline(lines, line);
    while (std::getline(lines, line)) statements.push_back(line);
    out_ << json{{"version", kKbVersion}, {"statements", statements}}.dump(2)
         << "\n";
    return kExitOk;
  }

  int KbAdd(const std::vector<std::string>& words) {
    std::string statement;
    for (const auto& w : words) {
      if (!statement.empty()) statement += " ";
      statement += w;
    }
    Context ctx;
    try {
      ctx = AddKbStatement(LoadContext(), statement);
    } catch (const PositionedError& e) {
      throw CommandError("statement:" + std::string(e.what()));
    }
    SaveContext(ctx);
    if (config_.json) {
      out_ << json{{"added", statement}}.dump(2) << "\n";
    } else {
      out_ << "added " << statement << "\n";
    }
    return kExitOk;
  }

  int FindChainCmd(const std::string& from, const std::string& to) {
    Context ctx = LoadContext();
    auto chain = FindChain(ctx, AssetId::Kind(from), AssetId::Kind(to),
                           config_.max_chain_len);
    if (config_.json) {
      json doc{{"from", from}, {"to", to}, {"found", chain.has_value()}};
      if (chain) {
        json path = json::array({from});
        for (const auto& e : chain->edges) path.push_back(e.to.name());
        doc["path"] = path;
        doc["length"] = chain->length();
        doc["full"] = chain->full();
      }
      out_ << doc.dump(2) << "\n";
    } else if (chain) {
      out_ << chain->ToString() << "\n"
           << "length " << chain->length() << " "
           << (chain->full() ? "full" : "partial") << "\n";
    } else {
      out_ << "no chain from " << from << " to " << to << "\n";
    }
    return chain ? kExitOk : kExitIncompatible;
  }

 private:
  Context LoadContext() {
    std::error_code ec;
    if (!fs::exists(config_.kb_path, ec)) return Context();
    std::string text = ReadFile(config_.kb_path);
    try {
      return LoadKb(text);
    } catch (const PositionedError& e) {
      throw CommandError(config_.kb_path + ":" + e.what());
    }
  }

  void SaveContext(const Context& ctx) {
    fs::path path(config_.kb_path);
    if (path.has_parent_path()) {
      std::error_code ec;
      fs::create_directories(path.parent_path(), ec);
    }
    WriteFile(path, SaveKb(ctx));
  }

  CompatibilityResult Compatibility(const Context& ctx,
                                    const std::string& provider,
                                    const std::string& consumer) {
    ComponentKind p = ComponentKindFromContext(ctx, provider);
    ComponentKind c = ComponentKindFromContext(ctx, consumer);
    CompatibilityResult r =
        CheckCompatibility(ctx, p, c, {config_.max_chain_len});
    for (const auto& d : r.diagnostics) err_ << "note: " << d << "\n";
    return r;
  }

  static int ExitFor(Verdict v) {
    switch (v) {
      case Verdict::kCompatible:
        return kExitOk;
      case Verdict::kIncompatible:
        return kExitIncompatible;
      case Verdict::kUnknown:
        return kExitUnknown;
    }
    return kExitError;
  }

  void PrintResult(const CompatibilityResult& r) {
    out_ << "verdict " << ToString(r.verdict) << "\n";
    if (r.witness) {
      for (const auto& m : r.witness->feature_maps) {
        out_ << "map " << m.required_name << " -> " << m.provided_name
             << " via " << m.conversion.ToString() << "\n";
        if (m.guard)
          out_ << "guard " << m.provided_name << ": " << m.guard->ToString()
               << "\n";
      }
    }
    for (const auto& o : r.obligations) {
      out_ << "obligation " << o.feature << ": " << o.ToString() << "\n";
    }
  }

  static json ResultJson(const CompatibilityResult& r) {
    json maps = json::array();
    if (r.witness) {
      for (const auto& m : r.witness->feature_maps) {
        maps.push_back(
            {{"required", m.required_name},
             {"provided", m.provided_name},
             {"conversion", m.conversion.ToString()},
             {"guard", m.guard ? json(m.guard->ToString()) : json(nullptr)}});
      }
    }
    json obligations = json::array();
    for (const auto& o : r.obligations) {
      obligations.push_back(
          {{"feature", o.feature},
           {"kind",
            o.kind == ObligationKind::kRequires ? "requires" : "guarantee"},
           {"antecedent", o.antecedent.ToString()},
           {"consequent", o.consequent.ToString()},
           {"result", o.Status()}});
    }
    return {{"verdict", ToString(r.verdict)},
            {"feature_maps", maps},
            {"obligations", obligations},
            {"diagnostics", r.diagnostics}};
  }

  CliConfig config_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CliConfig config;
  if (const char* env = std::getenv("KINDC_KB"); env && *env) {
    config.kb_path = env;
  }

  CLI::App app("Semantic component compatibility and adapter generation",
               "kindc");
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--kb", config.kb_path, "Knowledge base file");
  app.add_option("--max-chain", config.max_chain_len,
                 "Maximum interpretation chain length")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", config.output_dir, "Adapter output directory");
  app.add_flag("--strict-tags", config.strict_tags,
               "Treat unknown documentation tags as errors");
  app.add_flag("--json", config.json, "Machine-readable output");

  std::vector<std::string> files;
  auto* kind = app.add_subcommand("kind", "Kind SIDL files into the KB");
  kind->add_option("files", files, "SIDL files")->required();

  std::string provider, consumer;
  auto* check = app.add_subcommand("check", "Decide compatibility");
  check->add_option("provider", provider)->required();
  check->add_option("consumer", consumer)->required();

  auto* compose = app.add_subcommand("compose", "Emit an adapter");
  compose->add_option("provider", provider)->required();
  compose->add_option("consumer", consumer)->required();

  auto* kb = app.add_subcommand("kb", "Inspect or extend the KB");
  kb->require_subcommand(1);
  auto* kb_list = kb->add_subcommand("list", "Print the KB");
  std::vector<std::string> statement;
  auto* kb_add = kb->add_subcommand("add", "Add one statement");
  kb_add->add_option("statement", statement)->required();

  std::string from, to;
  auto* chain = app.add_subcommand("chain", "Find an interpretation chain");
  chain->add_option("from", from)->required();
  chain->add_option("to", to)->required();

  for (auto* sub : {kind, check, compose, kb, chain}) sub->fallthrough();
  kb_list->fallthrough();
  kb_add->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  Runner runner(config, out, err);
  try {
    if (*kind) return runner.Kind(files);
    if (*check) return runner.Check(provider, consumer);
    if (*compose) return runner.Compose(provider, consumer);
    if (*kb_list) return runner.KbList();
    if (*kb_add) return runner.KbAdd(statement);
    if (*chain) return runner.FindChainCmd(from, to);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace kindc
