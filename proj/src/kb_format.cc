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

#include "kindc/kb_format.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <utility>
#include <vector>

#include "kindc/errors.h"

namespace kindc {

namespace {

constexpr std::array<std::string_view, 9> kKeywords = {
    "inherit",   "include", "realize", "equiv", "pequiv",
    "textequiv", "interp",  "canon",   "ground"};

int KeywordRank(std::string_view kw) {
  auto it = std::find(kKeywords.begin(), kKeywords.end(), kw);
  return it == kKeywords.end() ? -1 : static_cast<int>(it - kKeywords.begin());
}

std::size_t MinArity(std::string_view kw) {
  if (kw == "ground") return 2;
  if (kw == "interp" || kw == "canon") return 6;
  return 3;
}

std::string Suffix(const std::optional<TruthStructure>& t) {
  if (!t) return "";
  std::string out;
  if (t->level == TruthLevel::kClaim) {
    out = " claim";
  } else {
    out = " belief " + t->degree->ToString();
  }
  if (!t->author.empty()) out += " by " + t->author;
  return out;
}

std::string EquivName(const AssetId& id) {
  return id.is_kind() ? "kind:" + id.name() : id.name();
}

std::string Render(const Fact& f) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Realization>) {
          return "realize " + v.instance.name() + " " + v.kind.ToString();
        } else if constexpr (std::is_same_v<T, Inheritance>) {
          return "inherit " + v.child.name() + " " + v.parent.name();
        } else if constexpr (std::is_same_v<T, Inclusion>) {
          return "include " + v.part.name() + " " + v.whole.name();
        } else if constexpr (std::is_same_v<T, FullEquiv>) {
          return "equiv " + EquivName(v.a) + " " + EquivName(v.b);
        } else if constexpr (std::is_same_v<T, PartialEquiv>) {
          return "pequiv " + EquivName(v.lesser) + " " + EquivName(v.greater);
        } else if constexpr (std::is_same_v<T, TextualEquiv>) {
          return "textequiv " + v.asset.name() + " " + QuoteLiteral(v.literal);
        } else {
          const InterpEdge& e = v.edge;
          std::string out =
              "interp " + e.from.name() + " " + e.to.name() +
              (e.kind == InterpKind::kFull ? " full" : " partial") + " agent " +
              e.agent;
          if (!e.context_label.empty()) out += " context " + e.context_label;
          if (e.conversion_template) {
            out += " template " + QuoteLiteral(*e.conversion_template);
          }
          return out;
        }
      },
      f);
}

std::string Render(const CanonicalizationRule& r) {
  std::string out =
      "canon " + r.source.name() + " -> " + r.target.name() + " {";
  bool first = true;
  for (const auto& [from, to] : r.feature_renames) {
    out += first ? " " : ", ";
    first = false;
    out += from + "=" + to;
  }
  return out + " }";
}

// ------------------------------------------------------------------ Lexing

enum class Tok { kWord, kString, kPunct };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

bool IsPunct(char c) { return c == '{' || c == '}' || c == ',' || c == '='; }

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no) : line_no_(line_no) {
    Lex(line);
  }

  Context Apply(const Context& ctx) {
    if (tokens_.empty()) return ctx;
    if (tokens_[0].kind != Tok::kWord || KeywordRank(tokens_[0].text) < 0) {
      Fail(0, "unknown statement '" + tokens_[0].text + "'");
    }
    const std::string kw = tokens_[0].text;
    auto provenance = StripSuffix(MinArity(kw));
    try {
      return Statement(ctx, kw, provenance);
    } catch (const PositionedError&) {
      throw;
    } catch (const Error& e) {
      Fail(0, e.what());
    }
  }

 private:
  [[noreturn]] void Fail(std::size_t token, const std::string& message) {
    std::size_t col =
        token < tokens_.size() ? tokens_[token].column : end_column_;
    throw KbParseError(SourcePos{line_no_, col}, message);
  }

  void Lex(std::string_view line) {
    std::size_t i = 0;
    while (i < line.size()) {
      char c = line[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      if (c == '"') {
        std::string text;
        ++i;
        bool closed = false;
        while (i < line.size()) {
          char d = line[i++];
          if (d == '"') {
            closed = true;
            break;
          }
          if (d == '\\') {
            if (i >= line.size()) break;
            char e = line[i++];
            if (e == 'n') {
              text += '\n';
            } else if (e == '"' || e == '\\') {
              text += e;
            } else {
              throw KbParseError(SourcePos{line_no_, i - 1},
                                 std::string("unknown escape \\") + e);
            }
          } else {
            text += d;
          }
        }
        if (!closed) {
          throw KbParseError(SourcePos{line_no_, start + 1},
                             "unterminated string");
        }
        tokens_.push_back({Tok::kString, std::move(text), start + 1});
        continue;
      }
      if (IsPunct(c)) {
        tokens_.push_back({Tok::kPunct, std::string(1, c), start + 1});
        ++i;
        continue;
      }
      while (i < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[i])) &&
             !IsPunct(line[i]) && line[i] != '"') {
        ++i;
      }
      tokens_.push_back(
          {Tok::kWord, std::string(line.substr(start, i - start)), start + 1});
    }
    end_column_ = line.size() + 1;
  }

  bool WordAt(std::size_t i, std::string_view text = {}) const {
    return i < tokens_.size() && tokens_[i].kind == Tok::kWord &&
           (text.empty() || tokens_[i].text == text);
  }

  std::optional<TruthStructure> StripSuffix(std::size_t min_arity) {
    const std::size_t n = tokens_.size();
    auto take = [&](std::size_t count,
                    TruthStructure t) -> std::optional<TruthStructure> {
      if (n - count < min_arity) return std::nullopt;
      tokens_.resize(n - count);
      return t;
    };
    auto degree = [&](std::size_t i) -> std::optional<Rational> {
      if (!WordAt(i)) return std::nullopt;
      try {
        return Rational::Parse(tokens_[i].text);
      } catch (const Error& e) {
        if (tokens_[i].text.find('/') != std::string::npos) Fail(i, e.what());
        return std::nullopt;
      }
    };
    if (n >= 4 && WordAt(n - 4, "belief") && WordAt(n - 2, "by") &&
        WordAt(n - 1) && degree(n - 3)) {
      if (auto t = take(
              4, TruthStructure::Belief(*degree(n - 3), tokens_[n - 1].text))) {
        return t;
      }
    }
    if (n >= 3 && WordAt(n - 3, "claim") && WordAt(n - 2, "by") &&
        WordAt(n - 1)) {
      if (auto t = take(3, TruthStructure::Claim(tokens_[n - 1].text))) {
        return t;
      }
    }
    if (n >= 2 && WordAt(n - 2, "belief") && degree(n - 1)) {
      if (auto t = take(2, TruthStructure::Belief(*degree(n - 1), ""))) {
        return t;
      }
    }
    if (n >= 1 && WordAt(n - 1, "claim")) {
      if (auto t = take(1, TruthStructure::Claim())) return t;
    }
    return std::nullopt;
  }

  const std::string& Word(std::size_t i, const char* what) {
    if (!WordAt(i)) Fail(i, std::string("expected ") + what);
    return tokens_[i].text;
  }

  const std::string& String(std::size_t i, const char* what) {
    if (i >= tokens_.size() || tokens_[i].kind != Tok::kString) {
      Fail(i, std::string("expected quoted ") + what);
    }
    return tokens_[i].text;
  }

  void Expect(std::size_t i, std::string_view text) {
    if (i >= tokens_.size() || tokens_[i].text != text ||
        tokens_[i].kind == Tok::kString) {
      Fail(i, "expected '" + std::string(text) + "'");
    }
  }

  void End(std::size_t i) {
    if (i < tokens_.size()) Fail(i, "unexpected '" + tokens_[i].text + "'");
  }

  AssetId Kind(std::size_t i) { return AssetId::Kind(Word(i, "a kind")); }
  AssetId Instance(std::size_t i) {
    return AssetId::Instance(Word(i, "an instance"));
  }
  AssetId Either(std::size_t i) {
    const std::string& w = Word(i, "an asset");
    if (w.rfind("kind:", 0) == 0) return AssetId::Kind(w.substr(5));
    return AssetId::Instance(w);
  }

  Context Statement(const Context& ctx, const std::string& kw,
                    const std::optional<TruthStructure>& prov) {
    auto assert_fact = [&](Fact f) {
      return ctx.Add(Assertion{std::move(f), prov});
    };
    if (kw == "inherit") {
      End(3);
      return assert_fact(Inheritance{Kind(1), Kind(2)});
    }
    if (kw == "include") {
      End(3);
      return assert_fact(Inclusion{Instance(1), Instance(2)});
    }
    if (kw == "equiv") {
      End(3);
      return assert_fact(FullEquiv{Either(1), Either(2)});
    }
    if (kw == "pequiv") {
      End(3);
      return assert_fact(PartialEquiv{Either(1), Either(2)});
    }
    if (kw == "textequiv") {
      AssetId a = Instance(1);
      std::string lit = String(2, "literal");
      End(3);
      return assert_fact(TextualEquiv{a, lit});
    }
    if (kw == "realize") {
      AssetId a = Instance(1);
      std::string expr;
      for (std::size_t i = 2; i < tokens_.size(); ++i) {
        if (tokens_[i].kind != Tok::kWord)
          Fail(i, "expected a kind expression");
        expr += (i > 2 ? " " : "") + tokens_[i].text;
      }
      if (expr.empty()) Fail(2, "expected a kind expression");
      return assert_fact(Realization{a, ParseKindExpr(expr)});
    }
    if (kw == "interp") {
      InterpEdge e{Kind(1),      Kind(2), InterpKind::kFull, "", "",
                   std::nullopt, false};
      const std::string& k = Word(3, "'full' or 'partial'");
      if (k == "full") {
        e.kind = InterpKind::kFull;
      } else if (k == "partial") {
        e.kind = InterpKind::kPartial;
      } else {
        Fail(3, "expected 'full' or 'partial'");
      }
      Expect(4, "agent");
      e.agent = Word(5, "an agent");
      std::size_t i = 6;
      if (WordAt(i, "context")) {
        e.context_label = Word(i + 1, "a context label");
        i += 2;
      }
      if (WordAt(i, "template")) {
        e.conversion_template = String(i + 1, "template");
        i += 2;
      }
      End(i);
      return assert_fact(Interpretation{e});
    }
    if (kw == "canon") {
      AssetId source = Kind(1);
      Expect(2, "->");
      AssetId target = Kind(3);
      Expect(4, "{");
      std::map<std::string, std::string> renames;
      std::size_t i = 5;
      if (i < tokens_.size() && tokens_[i].text != "}") {
        for (;;) {
          std::string from = Word(i, "a feature name");
          Expect(i + 1, "=");
          std::string to = Word(i + 2, "a feature name");
          if (!renames.emplace(from, to).second) {
            Fail(i, "feature '" + from + "' renamed twice");
          }
          i += 3;
          if (i < tokens_.size() && tokens_[i].text == ",") {
            ++i;
            continue;
          }
          break;
        }
      }
      Expect(i, "}");
      End(i + 1);
      return ctx.AddRule({source, target, std::move(renames), prov});
    }
    // ground
    AssetId kind = Kind(1);
    bool universal = true;
    std::size_t i = 2;
    if (WordAt(i, "local")) {
      universal = false;
      ++i;
    }
    End(i);
    return ctx.AddGround({kind, universal, prov});
  }

  std::size_t line_no_;
  std::size_t end_column_ = 1;
  std::vector<Token> tokens_;
};

bool IsBlankOrComment(std::string_view line) {
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '#';
  }
  return true;
}

}  // namespace

std::string QuoteLiteral(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out += c;
    }
  }
  return out + "\"";
}

std::string SaveKb(const Context& ctx) {
  std::vector<std::pair<int, std::string>> lines;
  for (const auto& a : ctx.asserted()) {
    std::string line = Render(a.fact);
    int rank = KeywordRank(line.substr(0, line.find(' ')));
    lines.emplace_back(rank, line + Suffix(a.provenance));
  }
  for (const auto& [_, rule] : ctx.rules()) {
    lines.emplace_back(KeywordRank("canon"),
                       Render(rule) + Suffix(rule.provenance));
  }
  for (const auto& g : ctx.grounds()) {
    lines.emplace_back(KeywordRank("ground"),
                       "ground " + g.kind.name() +
                           (g.universal ? "" : " local") +
                           Suffix(g.provenance));
  }
  std::sort(lines.begin(), lines.end());
  std::string out = "kindkb " + std::to_string(kKbVersion) + "\n";
  for (const auto& [_, line] : lines) out += line + "\n";
  return out;
}

Context LoadKb(std::string_view text) {
  Context ctx;
  bool header = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    start = end + 1;
    if (IsBlankOrComment(line)) continue;
    if (!header) {
      std::string_view rest = line;
      while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest[0])))
        rest.remove_prefix(1);
      if (rest.rfind("kindkb", 0) != 0) {
        throw KbParseError(SourcePos{line_no, 1}, "missing 'kindkb' header");
      }
      rest.remove_prefix(6);
      while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest[0])))
        rest.remove_prefix(1);
      while (!rest.empty() &&
             std::isspace(static_cast<unsigned char>(rest.back())))
        rest.remove_suffix(1);
      int version = 0;
      auto [ptr, ec] =
          std::from_chars(rest.data(), rest.data() + rest.size(), version);
      if (ec != std::errc() || ptr != rest.data() + rest.size()) {
        throw KbParseError(SourcePos{line_no, 1}, "malformed 'kindkb' header");
      }
      if (version != kKbVersion) {
        throw VersionMismatch(
            SourcePos{line_no, 1},
            "unsupported kindkb version " + std::to_string(version));
      }
      header = true;
      continue;
    }
    ctx = LineParser(line, line_no).Apply(ctx);
  }
  if (!header) throw KbParseError(SourcePos{1, 1}, "missing 'kindkb' header");
  return ctx;
}

Context AddKbStatement(const Context& ctx, std::string_view line) {
  if (IsBlankOrComment(line)) {
    throw KbParseError(SourcePos{1, 1}, "empty statement");
  }
  return LineParser(line, 1).Apply(ctx);
}

}  // namespace kindc
