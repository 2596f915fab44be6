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

#include "kindc/sidl.h"

#include <algorithm>
#include <cctype>
#include <set>

#include "kindc/kind_store.h"

namespace kindc {

const std::vector<std::string_view>& SemanticPropertyTags() {
  static const std::vector<std::string_view> kTags = {
      // meta-information
      "author", "bon", "bug", "copyright", "description", "history", "license",
      "title",
      // dependencies
      "references", "use",
      // inheritance
      "hides", "overrides", "realizes",
      // contracts
      "ensure", "generate", "invariant", "modifies", "require",
      // concurrency
      "concurrency",
      // usage
      "param", "return", "exception",
      // pending work
      "idea", "review", "todo",
      // versioning
      "version", "deprecated", "since",
      // documentation
      "design", "equivalent", "example", "see",
      // miscellaneous
      "guard", "values", "time-complexity", "space-complexity"};
  return kTags;
}

bool IsSemanticPropertyTag(std::string_view tag) {
  const auto& tags = SemanticPropertyTags();
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

namespace {

// Tags whose payload is a contract expression rather than a single word.
bool IsContractTag(std::string_view tag) {
  return tag == "require" || tag == "ensure" || tag == "invariant";
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

void AppendWords(std::string& out, std::string_view more) {
  more = Trim(more);
  if (more.empty()) return;
  if (!out.empty()) out += ' ';
  out += more;
}

}  // namespace

PropertyBlock ParseProperties(std::string_view comment_block,
                              SourcePos origin) {
  PropertyBlock block;
  std::string_view body = comment_block;
  std::size_t lead = 0;
  {
    std::string_view t = body;
    std::size_t ws = 0;
    while (ws < t.size() && std::isspace(static_cast<unsigned char>(t[ws]))) {
      ++ws;
    }
    if (t.substr(ws, 3) == "/**") lead = ws + 3;
  }
  body.remove_prefix(lead);
  {
    std::string_view t = Trim(body);
    if (t.size() >= 2 && t.substr(t.size() - 2) == "*/") {
      body = body.substr(0, body.rfind("*/"));
    }
  }

  SemanticProperty* current = nullptr;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t nl = body.find('\n', start);
    std::string_view raw =
        body.substr(start, nl == std::string_view::npos ? std::string_view::npos
                                                        : nl - start);
    std::size_t col_base = (line_no == 0 ? origin.column + lead : 1);
    std::size_t i = 0;
    while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) {
      ++i;
    }
    while (i < raw.size() && raw[i] == '*') ++i;
    std::string_view text = Trim(raw.substr(i));

    if (!text.empty() && text.front() == '@') {
      std::size_t at = raw.find('@');
      std::size_t end = 1;
      while (end < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[end])) ||
              text[end] == '-' || text[end] == '_')) {
        ++end;
      }
      std::string tag(text.substr(1, end - 1));
      std::string_view rest = Trim(text.substr(end));
      if (!IsSemanticPropertyTag(tag)) {
        block.diagnostics.push_back(
            {SourcePos{origin.line + line_no, col_base + at},
             "UnknownTag: @" + tag});
        current = nullptr;
      } else {
        SemanticProperty prop{tag, "", ""};
        if (IsContractTag(tag) && !rest.empty() && rest.front() == '(') {
          int depth = 0;
          std::size_t close = 0;
          for (; close < rest.size(); ++close) {
            if (rest[close] == '(') ++depth;
            if (rest[close] == ')' && --depth == 0) break;
          }
          if (close >= rest.size()) close = rest.size() - 1;
          prop.value = std::string(rest.substr(0, close + 1));
          prop.description = std::string(Trim(rest.substr(close + 1)));
        } else if (IsContractTag(tag)) {
          prop.value = std::string(rest);
        } else {
          std::size_t sp = 0;
          while (sp < rest.size() &&
                 !std::isspace(static_cast<unsigned char>(rest[sp]))) {
            ++sp;
          }
          prop.value = std::string(rest.substr(0, sp));
          prop.description = std::string(Trim(rest.substr(sp)));
        }
        block.properties.push_back(std::move(prop));
        current = &block.properties.back();
      }
    } else if (current != nullptr) {
      AppendWords(current->description, text);
    }

    if (nl == std::string_view::npos) break;
    start = nl + 1;
    ++line_no;
  }
  return block;
}

const SemanticProperty* MethodDecl::FindProperty(std::string_view tag) const {
  for (const auto& p : properties) {
    if (p.tag == tag) return &p;
  }
  return nullptr;
}

bool MethodDecl::operator==(const MethodDecl& o) const {
  return name == o.name && params == o.params && return_type == o.return_type &&
         precondition == o.precondition && properties == o.properties;
}

const SemanticProperty* ComponentDecl::FindProperty(
    std::string_view tag) const {
  for (const auto& p : properties) {
    if (p.tag == tag) return &p;
  }
  return nullptr;
}

bool ComponentDecl::operator==(const ComponentDecl& o) const {
  return name == o.name && decl_sort == o.decl_sort && provided == o.provided &&
         required == o.required && properties == o.properties;
}

// ------------------------------------------------------------------ lexer

namespace {

enum class Tok { kIdent, kPunct, kDoc, kRequires, kEof };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> Run() {
    std::vector<Token> out;
    while (true) {
      SkipSpace();
      SourcePos pos{line_, col_};
      if (i_ >= src_.size()) {
        out.push_back({Tok::kEof, "", pos});
        return out;
      }
      char c = src_[i_];
      if (src_.substr(i_, 3) == "/**") {
        std::size_t end = src_.find("*/", i_ + 3);
        if (end == std::string_view::npos) {
          throw SyntaxError(pos, "unterminated documentation comment");
        }
        std::string text(src_.substr(i_, end + 2 - i_));
        Advance(end + 2 - i_);
        out.push_back({Tok::kDoc, std::move(text), pos});
      } else if (src_.substr(i_, 2) == "--") {
        std::size_t end = src_.find('\n', i_);
        if (end == std::string_view::npos) end = src_.size();
        std::string_view body = src_.substr(i_ + 2, end - i_ - 2);
        std::size_t ws = 0;
        while (ws < body.size() &&
               std::isspace(static_cast<unsigned char>(body[ws]))) {
          ++ws;
        }
        constexpr std::string_view kRequires = "requires:";
        if (body.substr(ws, kRequires.size()) == kRequires) {
          SourcePos expr_pos{line_, col_ + 2 + ws + kRequires.size()};
          out.push_back({Tok::kRequires,
                         std::string(body.substr(ws + kRequires.size())),
                         expr_pos});
        }
        Advance(end - i_);
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = i_;
        while (i_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[i_])) ||
                src_[i_] == '_' || src_[i_] == '.')) {
          Advance(1);
        }
        out.push_back(
            {Tok::kIdent, std::string(src_.substr(start, i_ - start)), pos});
      } else if (c == '(' || c == ')' || c == ':' || c == ';' || c == ',') {
        Advance(1);
        out.push_back({Tok::kPunct, std::string(1, c), pos});
      } else {
        throw SyntaxError(pos, std::string("unexpected character '") + c + "'");
      }
    }
  }

 private:
  void Advance(std::size_t n) {
    for (std::size_t k = 0; k < n && i_ < src_.size(); ++k, ++i_) {
      if (src_[i_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
    }
  }

  void SkipSpace() {
    while (i_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[i_]))) {
      Advance(1);
    }
  }

  std::string_view src_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

// ----------------------------------------------------------------- parser

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(Lexer(src).Run()) {}

  std::vector<ComponentDecl> ParseAll() {
    std::vector<ComponentDecl> out;
    while (Peek().kind != Tok::kEof) out.push_back(ParseOne());
    return out;
  }

 private:
  const Token& Peek() const { return toks_[k_]; }
  const Token& Next() { return toks_[k_ < toks_.size() - 1 ? k_++ : k_]; }

  bool TryPunct(char c) {
    if (Peek().kind == Tok::kPunct && Peek().text[0] == c) {
      ++k_;
      return true;
    }
    return false;
  }

  void ExpectPunct(char c) {
    if (!TryPunct(c)) {
      throw SyntaxError(Peek().pos,
                        std::string("expected '") + c + "'" + Found());
    }
  }

  std::string Found() const {
    const Token& t = Peek();
    if (t.kind == Tok::kEof) return ", found end of input";
    return ", found '" + t.text + "'";
  }

  std::string ExpectName(const char* what, bool dotted) {
    const Token& t = Peek();
    if (t.kind != Tok::kIdent ||
        !(dotted ? IsDottedName(t.text) : IsIdentifier(t.text))) {
      throw SyntaxError(t.pos, std::string("expected ") + what + Found());
    }
    return Next().text;
  }

  PropertyBlock Properties(const Token& doc) {
    return ParseProperties(doc.text, doc.pos);
  }

  ContractExpr ParseContractAt(std::string_view text, SourcePos pos) {
    try {
      return ParseContract(text);
    } catch (const SyntaxError& e) {
      throw SyntaxError(SourcePos{pos.line, pos.column + e.pos().column - 1},
                        "in contract: " + e.message());
    }
  }

  ComponentDecl ParseOne() {
    ComponentDecl decl;
    while (Peek().kind == Tok::kDoc) {
      PropertyBlock block = Properties(Next());
      decl.properties.insert(decl.properties.end(), block.properties.begin(),
                             block.properties.end());
      decl.diagnostics.insert(decl.diagnostics.end(), block.diagnostics.begin(),
                              block.diagnostics.end());
    }
    const Token& head = Peek();
    if (head.kind == Tok::kRequires) {
      throw SyntaxError(head.pos, "requires comment outside a component");
    }
    if (head.kind != Tok::kIdent) {
      throw SyntaxError(head.pos, "expected 'Class' or 'Type'" + Found());
    }
    if (head.text == "Class") {
      decl.decl_sort = DeclSort::kClass;
    } else if (head.text == "Type") {
      decl.decl_sort = DeclSort::kType;
    } else {
      throw UnknownKeyword(head.pos, "unknown keyword '" + head.text + "'");
    }
    decl.pos = head.pos;
    Next();
    decl.name = ExpectName("a component name", false);

    std::set<std::string> method_names;
    std::vector<SemanticProperty> pending_props;
    std::vector<ContractExpr> pending_contracts;
    std::optional<SourcePos> pending_pos;

    while (true) {
      const Token& t = Peek();
      if (t.kind == Tok::kEof) {
        throw SyntaxError(t.pos, "missing terminator for " + decl.name);
      }
      if (t.kind == Tok::kDoc) {
        PropertyBlock block = Properties(t);
        for (auto& p : block.properties) {
          if (p.tag == "require") {
            pending_contracts.push_back(ParseContractAt(p.value, t.pos));
          } else {
            pending_props.push_back(std::move(p));
          }
        }
        decl.diagnostics.insert(decl.diagnostics.end(),
                                block.diagnostics.begin(),
                                block.diagnostics.end());
        if (!pending_pos) pending_pos = t.pos;
        Next();
        continue;
      }
      if (t.kind == Tok::kRequires) {
        pending_contracts.push_back(ParseContractAt(t.text, t.pos));
        if (!pending_pos) pending_pos = t.pos;
        Next();
        continue;
      }
      if (t.kind != Tok::kIdent) {
        throw SyntaxError(t.pos, "expected a member or terminator" + Found());
      }
      if (t.text == "end" || t.text == "EndClass" || t.text == "EndType") {
        if (!pending_contracts.empty()) {
          throw SyntaxError(*pending_pos,
                            "requires clause not followed by a method");
        }
        Next();
        TryPunct(';');
        return decl;
      }
      if (t.text != "method" && t.text != "callmethod") {
        throw UnknownKeyword(t.pos, "unknown keyword '" + t.text + "'");
      }
      bool provided = t.text == "method";
      Next();
      MethodDecl m = ParseMethod();
      if (!method_names.insert(m.name).second) {
        throw SyntaxError(m.pos,
                          "duplicate method '" + m.name + "' in " + decl.name);
      }
      if (!pending_contracts.empty()) {
        ContractExpr pre;
        for (const auto& c : pending_contracts) pre = pre.And(c);
        m.precondition = std::move(pre);
      }
      m.properties = std::move(pending_props);
      pending_props.clear();
      pending_contracts.clear();
      pending_pos.reset();
      (provided ? decl.provided : decl.required).push_back(std::move(m));
    }
  }

  MethodDecl ParseMethod() {
    MethodDecl m;
    m.pos = Peek().pos;
    m.name = ExpectName("a method name", false);
    ExpectPunct('(');
    std::set<std::string> seen;
    if (!TryPunct(')')) {
      while (true) {
        SourcePos ppos = Peek().pos;
        Param p;
        p.name = ExpectName("a parameter name", false);
        ExpectPunct(':');
        p.type_name = ExpectName("a type name", true);
        if (!seen.insert(p.name).second) {
          throw SyntaxError(ppos, "duplicate parameter '" + p.name + "'");
        }
        m.params.push_back(std::move(p));
        if (TryPunct(';') || TryPunct(',')) continue;
        ExpectPunct(')');
        break;
      }
    }
    if (TryPunct(':')) m.return_type = ExpectName("a return type", true);
    ExpectPunct(';');
    return m;
  }

  std::vector<Token> toks_;
  std::size_t k_ = 0;
};

void PrintProperties(const std::vector<SemanticProperty>& props,
                     const std::string& indent, std::string& out) {
  if (props.empty()) return;
  out += indent + "/**\n";
  for (const auto& p : props) {
    out += indent + " * @" + p.tag;
    if (!p.value.empty()) out += " " + p.value;
    out += "\n";
    if (!p.description.empty()) out += indent + " * " + p.description + "\n";
  }
  out += indent + " */\n";
}

void PrintMethod(const MethodDecl& m, bool provided, std::string& out) {
  PrintProperties(m.properties, "    ", out);
  if (m.precondition) {
    out += "    -- requires: " + m.precondition->ToString() + "\n";
  }
  out += provided ? "    method " : "    callmethod ";
  out += m.name + "(";
  for (std::size_t i = 0; i < m.params.size(); ++i) {
    if (i > 0) out += "; ";
    out += m.params[i].name + ": " + m.params[i].type_name;
  }
  out += ")";
  if (m.return_type) out += ": " + *m.return_type;
  out += ";\n";
}

}  // namespace

std::vector<ComponentDecl> ParseComponents(std::string_view source) {
  return Parser(source).ParseAll();
}

ComponentDecl ParseComponent(std::string_view source) {
  auto all = ParseComponents(source);
  if (all.size() != 1) {
    throw SyntaxError(
        SourcePos{1, 1},
        "expected exactly one component, found " + std::to_string(all.size()));
  }
  return std::move(all.front());
}

std::string PrintComponent(const ComponentDecl& decl) {
  std::string out;
  PrintProperties(decl.properties, "", out);
  out += (decl.decl_sort == DeclSort::kClass ? "Class " : "Type ") + decl.name +
         "\n";
  for (const auto& m : decl.provided) PrintMethod(m, true, out);
  for (const auto& m : decl.required) PrintMethod(m, false, out);
  out += decl.decl_sort == DeclSort::kClass ? "EndClass\n" : "EndType\n";
  return out;
}

std::string PrintComponents(const std::vector<ComponentDecl>& decls) {
  std::string out;
  for (std::size_t i = 0; i < decls.size(); ++i) {
    if (i > 0) out += "\n";
    out += PrintComponent(decls[i]);
  }
  return out;
}

}  // namespace kindc
