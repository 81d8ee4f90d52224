#include "ologism/dsl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <variant>

namespace ologism::dsl {

std::string SourceDiagnostic::to_string() const {
  return std::to_string(line) + ":" + std::to_string(column) + ": " +
         (severity == Severity::Error ? "error" : "warning") + ": [" + code + "] " + message;
}

bool is_ident(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  if (!alpha(s[0])) return false;
  return std::all_of(s.begin(), s.end(), [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); });
}

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

namespace {

// ---------------------------------------------------------------- lexer

enum class Tok { Ident, String, LBrace, RBrace, Colon, Arrow, Semi, Eq, LParen, RParen, Comma, End };

struct Pos {
  int line = 1;
  int column = 1;
};

struct Token {
  Tok kind;
  std::string text;
  Pos pos;
};

std::string tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::String: return "string";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Colon: return "':'";
    case Tok::Arrow: return "'->'";
    case Tok::Semi: return "';'";
    case Tok::Eq: return "'='";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::End: return "end of input";
  }
  return "?";
}

using Diags = std::vector<SourceDiagnostic>;

void error(Diags& d, Pos p, std::string code, std::string msg) {
  d.push_back({Severity::Error, std::move(code), std::move(msg), p.line, p.column});
}

void warning(Diags& d, Pos p, std::string code, std::string msg) {
  d.push_back({Severity::Warning, std::move(code), std::move(msg), p.line, p.column});
}

class Lexer {
 public:
  Lexer(std::string_view src, Diags& diags) : src_(src), diags_(diags) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Pos at = pos_;
      if (i_ >= src_.size()) {
        out.push_back({Tok::End, {}, at});
        return out;
      }
      char c = src_[i_];
      if (is_alpha(c)) {
        std::string text;
        while (i_ < src_.size() && (is_alpha(src_[i_]) || is_digit(src_[i_]))) text += advance();
        out.push_back({Tok::Ident, std::move(text), at});
      } else if (c == '"') {
        if (auto s = string_literal()) out.push_back({Tok::String, std::move(*s), at});
      } else if (c == '-' && i_ + 1 < src_.size() && src_[i_ + 1] == '>') {
        advance();
        advance();
        out.push_back({Tok::Arrow, "->", at});
      } else {
        Tok kind;
        switch (c) {
          case '{': kind = Tok::LBrace; break;
          case '}': kind = Tok::RBrace; break;
          case ':': kind = Tok::Colon; break;
          case ';': kind = Tok::Semi; break;
          case '=': kind = Tok::Eq; break;
          case '(': kind = Tok::LParen; break;
          case ')': kind = Tok::RParen; break;
          case ',': kind = Tok::Comma; break;
          default: {
            std::string shown = printable(c);
            advance();
            error(diags_, at, "UnexpectedCharacter", "unexpected character " + shown);
            continue;
          }
        }
        out.push_back({kind, std::string(1, advance()), at});
      }
    }
  }

 private:
  static bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  static std::string printable(char c) {
    auto u = static_cast<unsigned char>(c);
    if (u >= 0x20 && u < 0x7f) return std::string("'") + c + "'";
    static const char* hex = "0123456789abcdef";
    return std::string("byte 0x") + hex[u >> 4] + hex[u & 15];
  }

  char advance() {
    char c = src_[i_++];
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++pos_.column;  // count code points, not continuation bytes
    }
    return c;
  }

  void skip_space() {
    while (i_ < src_.size()) {
      char c = src_[i_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (i_ < src_.size() && src_[i_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::optional<std::string> string_literal() {
    Pos start = pos_;
    advance();  // opening quote
    std::string out;
    while (i_ < src_.size()) {
      char c = src_[i_];
      if (c == '\n') break;
      if (c == '"') {
        advance();
        return out;
      }
      if (c == '\\') {
        Pos esc = pos_;
        advance();
        if (i_ < src_.size() && (src_[i_] == '"' || src_[i_] == '\\')) {
          out += advance();
        } else {
          error(diags_, esc, "InvalidEscape", "only \\\" and \\\\ escapes are allowed");
        }
        continue;
      }
      out += advance();
    }
    error(diags_, start, "UnterminatedString", "string is not closed on this line");
    return std::nullopt;
  }

  std::string_view src_;
  Diags& diags_;
  std::size_t i_ = 0;
  Pos pos_;
};

// ---------------------------------------------------------------- syntax

struct Name {
  std::string text;
  Pos pos;
};

struct TypeItem {
  Name id;
  std::string label;
  Pos label_pos;
};

struct AspectItem {
  Name name, source, target;
};

struct PremissItem {
  Form form;
  Name subject, predicate;
  Pos pos;
};

struct PathSyntax {
  bool identity = false;
  Name type;                // identity only
  std::vector<Name> names;  // otherwise
  Pos pos;
};

struct FactItem {
  std::optional<std::string> name;
  PathSyntax lhs, rhs;
  Pos pos;
};

using Item = std::variant<TypeItem, AspectItem, PremissItem, FactItem>;

struct SyntaxError {};

class Parser {
 public:
  Parser(std::vector<Token> toks, Diags& diags) : toks_(std::move(toks)), diags_(diags) {}

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(i_ + ahead, toks_.size() - 1)];
  }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_word(std::string_view w) const { return at(Tok::Ident) && peek().text == w; }

  const Token& expect(Tok k, const char* what) {
    if (!at(k)) fail(what);
    return toks_[i_++];
  }

  void expect_word(std::string_view w) {
    if (!at_word(w)) fail(("expected '" + std::string(w) + "'").c_str());
    ++i_;
  }

  [[noreturn]] void fail(const char* what) {
    const auto& t = peek();
    std::string found = t.kind == Tok::Ident || t.kind == Tok::String ? tok_name(t.kind) + " '" + t.text + "'"
                                                                     : tok_name(t.kind);
    error(diags_, t.pos, "SyntaxError", std::string(what) + ", found " + found);
    throw SyntaxError{};
  }

  // Skip the rest of the offending line (but not a closing brace).
  void recover(int line) {
    while (!at(Tok::End) && !at(Tok::RBrace) && peek().pos.line == line) ++i_;
  }

  Name name(const char* what) {
    const auto& t = expect(Tok::Ident, what);
    return {t.text, t.pos};
  }

  PathSyntax path() {
    PathSyntax p;
    p.pos = peek().pos;
    if (at_word("id") && peek(1).kind == Tok::LParen) {
      i_ += 2;
      p.identity = true;
      p.type = name("expected a type identifier inside id( )");
      expect(Tok::RParen, "expected ')'");
      return p;
    }
    p.names.push_back(name("expected an aspect name or id(TYPE)"));
    while (at(Tok::Semi)) {
      ++i_;
      p.names.push_back(name("expected an aspect name after ';'"));
    }
    return p;
  }

  Item item() {
    const Token& head = peek();
    if (head.kind != Tok::Ident) fail("expected an item (type, aspect, A, E, I, O, fact)");
    if (head.text == "type") {
      ++i_;
      TypeItem t;
      t.id = name("expected a type identifier");
      t.label_pos = peek().pos;
      t.label = expect(Tok::String, "expected a quoted label").text;
      return t;
    }
    if (head.text == "aspect") {
      ++i_;
      AspectItem a;
      a.name = name("expected an aspect name");
      expect(Tok::Colon, "expected ':'");
      a.source = name("expected a source type");
      expect(Tok::Arrow, "expected '->'");
      a.target = name("expected a target type");
      return a;
    }
    if (head.text.size() == 1 && form_from_letter(head.text[0])) {
      ++i_;
      PremissItem p{*form_from_letter(head.text[0]), {}, {}, head.pos};
      p.subject = name("expected a subject type");
      p.predicate = name("expected a predicate type");
      return p;
    }
    if (head.text == "fact") {
      ++i_;
      FactItem f;
      f.pos = head.pos;
      if (at(Tok::String)) f.name = toks_[i_++].text;
      expect(Tok::Colon, "expected ':'");
      f.lhs = path();
      expect(Tok::Eq, "expected '='");
      f.rhs = path();
      return f;
    }
    fail("expected an item (type, aspect, A, E, I, O, fact)");
  }

  // Items until '}' with per-line recovery.
  std::vector<Item> items() {
    std::vector<Item> out;
    while (!at(Tok::RBrace) && !at(Tok::End)) {
      std::size_t start = i_;
      try {
        out.push_back(item());
        if (!at(Tok::RBrace) && !at(Tok::End) && peek().pos.line == toks_[i_ - 1].pos.line &&
            !starts_item(peek()))
          fail("expected end of item");
      } catch (const SyntaxError&) {
        recover(peek().pos.line);
        if (i_ == start) ++i_;
      }
    }
    return out;
  }

  static bool starts_item(const Token& t) {
    if (t.kind != Tok::Ident) return false;
    return t.text == "type" || t.text == "aspect" || t.text == "fact" ||
           (t.text.size() == 1 && form_from_letter(t.text[0]));
  }

  std::size_t index() const { return i_; }
  void set_index(std::size_t i) { i_ = i; }

 private:
  std::vector<Token> toks_;
  Diags& diags_;
  std::size_t i_ = 0;
};

// ---------------------------------------------------------------- semantics

class Builder {
 public:
  Builder(Ologism& o, Diags& diags) : o_(o), diags_(diags) {}

  void apply(const Item& item) {
    std::visit([this](const auto& it) { on(it); }, item);
  }

  // Document order: types, then aspects and premisses, then facts.
  void apply_all(const std::vector<Item>& items) {
    for (const auto& it : items)
      if (std::holds_alternative<TypeItem>(it)) apply(it);
    for (const auto& it : items)
      if (std::holds_alternative<AspectItem>(it) || std::holds_alternative<PremissItem>(it)) apply(it);
    for (const auto& it : items)
      if (std::holds_alternative<FactItem>(it)) apply(it);
  }

  // Resolve a fact without adding it.
  std::optional<Fact> resolve(const FactItem& f) {
    auto lhs = candidates(f.lhs);
    auto rhs = candidates(f.rhs);
    if (!lhs || !rhs) return std::nullopt;
    std::vector<std::pair<PathWord, PathWord>> parallel;
    for (const auto& l : *lhs)
      for (const auto& r : *rhs)
        if (l.source() == r.source() && l.target() == r.target()) parallel.emplace_back(l, r);
    if (parallel.empty()) {
      const auto& l = lhs->front();
      const auto& r = rhs->front();
      error(diags_, f.pos, "NonParallelFact",
            "sides are not parallel: " + l.to_string() + " : " + l.source() + " -> " + l.target() +
                " versus " + r.to_string() + " : " + r.source() + " -> " + r.target());
      return std::nullopt;
    }
    if (parallel.size() > 1) {
      error(diags_, f.pos, "AmbiguousPath", "the fact's paths can be read in " +
                                                 std::to_string(parallel.size()) + " different ways");
      return std::nullopt;
    }
    return Fact{f.name, parallel[0].first, parallel[0].second};
  }

  std::optional<Proposition> premiss_of(const PremissItem& p) {
    bool ok = known_type(p.subject) & known_type(p.predicate);
    if (!ok) return std::nullopt;
    return Proposition{p.form, p.subject.text, p.predicate.text};
  }

  bool known_type(const Name& n) {
    if (o_.has_type(n.text)) return true;
    error(diags_, n.pos, "UnknownType", "type '" + n.text + "' is not declared");
    return false;
  }

 private:
  void on(const TypeItem& t) {
    if (t.id.text == kIsAspect) {
      error(diags_, t.id.pos, "ReservedWord", "'is' is reserved and cannot name a type");
      return;
    }
    if (o_.has_type(t.id.text)) {
      error(diags_, t.id.pos, "DuplicateType", "type '" + t.id.text + "' is already declared");
      return;
    }
    if (t.label.empty()) {
      error(diags_, t.label_pos, "EmptyLabel", "type '" + t.id.text + "' needs a nonempty label");
      return;
    }
    add_type(o_, t.id.text, t.label);
  }

  void on(const AspectItem& a) {
    if (a.name.text == kIsAspect) {
      on(PremissItem{Form::A, a.source, a.target, a.name.pos});
      return;
    }
    bool ok = known_type(a.source) & known_type(a.target);
    if (!ok) return;
    Aspect asp{a.name.text, a.source.text, a.target.text};
    if (std::find(o_.aspects.begin(), o_.aspects.end(), asp) != o_.aspects.end()) {
      error(diags_, a.name.pos, "DuplicateAspect",
            "aspect " + a.name.text + " : " + a.source.text + " -> " + a.target.text + " is already declared");
      return;
    }
    add_aspect(o_, asp);
  }

  void on(const PremissItem& p) {
    auto prop = premiss_of(p);
    if (!prop) return;
    if (prop->form == Form::A && prop->subject == prop->predicate) {
      warning(diags_, p.pos, "IdentityPremiss",
              prop->to_string() + " holds for every type and is not stored");
      return;
    }
    auto canon = prop->canonical();
    for (const auto& q : o_.premisses)
      if (q.canonical() == canon) {
        error(diags_, p.pos, "DuplicatePremiss", prop->to_string() + " is already declared");
        return;
      }
    add_premiss(o_, *prop);
  }

  void on(const FactItem& f) {
    auto fact = resolve(f);
    if (!fact) return;
    for (const auto& g : o_.facts) {
      if (f.name && g.name == f.name) {
        error(diags_, f.pos, "DuplicateFact", "fact \"" + *f.name + "\" is already declared");
        return;
      }
      if ((g.lhs == fact->lhs && g.rhs == fact->rhs) || (g.lhs == fact->rhs && g.rhs == fact->lhs)) {
        error(diags_, f.pos, "DuplicateFact", "the same equation is already declared");
        return;
      }
    }
    o_.facts.push_back(std::move(*fact));
  }

  std::optional<std::vector<PathWord>> candidates(const PathSyntax& p) {
    if (p.identity) {
      if (!known_type(p.type)) return std::nullopt;
      return std::vector<PathWord>{PathWord::identity(p.type.text)};
    }
    bool ok = true;
    std::vector<std::string> names;
    for (const auto& n : p.names) {
      names.push_back(n.text);
      bool declared = std::any_of(o_.aspects.begin(), o_.aspects.end(),
                                  [&](const Aspect& a) { return a.name == n.text; });
      if (!declared) {
        error(diags_, n.pos, "UnknownAspect", "aspect '" + n.text + "' is not declared");
        ok = false;
      }
    }
    if (!ok) return std::nullopt;
    auto words = resolve_path(o_, names);
    if (words.empty()) {
      std::string joined;
      for (const auto& n : names) joined += (joined.empty() ? "" : " ; ") + n;
      error(diags_, p.pos, "UnresolvedPath", "aspects " + joined + " do not compose");
      return std::nullopt;
    }
    return words;
  }

  Ologism& o_;
  Diags& diags_;
};

bool has_error(const Diags& d) {
  return std::any_of(d.begin(), d.end(), [](const SourceDiagnostic& x) { return x.severity == Severity::Error; });
}

void sort_diags(Diags& d) {
  std::stable_sort(d.begin(), d.end(), [](const SourceDiagnostic& a, const SourceDiagnostic& b) {
    return std::tie(a.line, a.column) < std::tie(b.line, b.column);
  });
}

// Shared document frame: KEYWORD STRING [for STRING] { ... } END
template <class Body>
void parse_document(Parser& p, Diags& diags, std::string_view keyword, bool with_for,
                    std::string& name, std::string* for_name, Body body) {
  try {
    p.expect_word(keyword);
    name = p.expect(Tok::String, "expected a quoted document name").text;
    if (with_for) {
      p.expect_word("for");
      *for_name = p.expect(Tok::String, "expected the quoted name of an ologism").text;
    }
    p.expect(Tok::LBrace, "expected '{'");
  } catch (const SyntaxError&) {
    // Try to find the opening brace and carry on with the body.
    while (!p.at(Tok::End) && !p.at(Tok::LBrace)) p.set_index(p.index() + 1);
    if (p.at(Tok::End)) return;
    p.set_index(p.index() + 1);
  }
  body();
  try {
    p.expect(Tok::RBrace, "expected '}'");
    if (!p.at(Tok::End)) p.fail("expected end of input");
  } catch (const SyntaxError&) {
  }
  (void)diags;
}

}  // namespace

ParseResult<Ologism> parse_ologism(std::string_view source) {
  ParseResult<Ologism> result;
  Diags& diags = result.diagnostics;
  Parser p(Lexer(source, diags).run(), diags);
  Ologism o;
  std::vector<Item> items;
  parse_document(p, diags, "ologism", false, o.name, nullptr, [&] { items = p.items(); });
  Builder(o, diags).apply_all(items);
  sort_diags(diags);
  if (!has_error(diags)) result.value = std::move(o);
  return result;
}

namespace {

struct ModelParser {
  Parser& p;
  Diags& diags;
  model::Model& m;

  std::string elem() {
    if (p.at(Tok::Ident) || p.at(Tok::String)) {
      std::string s = p.peek().text;
      p.set_index(p.index() + 1);
      return s;
    }
    p.fail("expected an element (identifier or string)");
  }

  void entry() {
    Pos at = p.peek().pos;
    if (p.at_word("set")) {
      p.set_index(p.index() + 1);
      Name t = p.name("expected a type identifier");
      p.expect(Tok::Eq, "expected '='");
      p.expect(Tok::LBrace, "expected '{'");
      std::set<std::string> elems;
      if (!p.at(Tok::RBrace)) {
        for (;;) {
          Pos e = p.peek().pos;
          auto x = elem();
          if (!elems.insert(x).second) warning(diags, e, "DuplicateElement", "element " + x + " listed twice");
          if (!p.at(Tok::Comma)) break;
          p.set_index(p.index() + 1);
        }
      }
      p.expect(Tok::RBrace, "expected '}' or ','");
      if (m.carrier.count(t.text)) {
        error(diags, t.pos, "DuplicateSet", "set for type '" + t.text + "' is already given");
        return;
      }
      m.carrier[t.text] = std::move(elems);
      return;
    }
    if (p.at_word("map")) {
      p.set_index(p.index() + 1);
      Name a = p.name("expected an aspect name");
      p.expect(Tok::Colon, "expected ':'");
      std::map<std::string, std::string> fn;
      for (;;) {
        Pos e = p.peek().pos;
        auto x = elem();
        p.expect(Tok::Arrow, "expected '->'");
        auto y = elem();
        if (!fn.emplace(x, y).second)
          error(diags, e, "DuplicateMapping", a.text + " already sends " + x + " to " + fn[x]);
        if (!p.at(Tok::Comma)) break;
        p.set_index(p.index() + 1);
      }
      if (m.maps.count(a.text)) {
        error(diags, a.pos, "DuplicateMap", "map for aspect '" + a.text + "' is already given");
        return;
      }
      m.maps[a.text] = std::move(fn);
      return;
    }
    (void)at;
    p.fail("expected 'set' or 'map'");
  }

  void entries() {
    while (!p.at(Tok::RBrace) && !p.at(Tok::End)) {
      std::size_t start = p.index();
      try {
        entry();
      } catch (const SyntaxError&) {
        p.recover(p.peek().pos.line);
        if (p.index() == start) p.set_index(start + 1);
      }
    }
  }
};

}  // namespace

ParseResult<model::Model> parse_model(std::string_view source) {
  ParseResult<model::Model> result;
  Diags& diags = result.diagnostics;
  Parser p(Lexer(source, diags).run(), diags);
  model::Model m;
  parse_document(p, diags, "model", true, m.name, &m.ologism, [&] { ModelParser{p, diags, m}.entries(); });
  sort_diags(diags);
  if (!has_error(diags)) result.value = std::move(m);
  return result;
}

namespace {

std::optional<Item> single_item(std::string_view text, Diags& diags) {
  Parser p(Lexer(text, diags).run(), diags);
  if (has_error(diags)) return std::nullopt;
  try {
    Item it = p.item();
    if (!p.at(Tok::End)) p.fail("expected end of item");
    return it;
  } catch (const SyntaxError&) {
    return std::nullopt;
  }
}

bool path_uses(const PathWord& w, const Aspect& a) {
  return std::find(w.arcs().begin(), w.arcs().end(), a) != w.arcs().end();
}

bool fact_uses(const Ologism& o, const Aspect& a) {
  return std::any_of(o.facts.begin(), o.facts.end(),
                     [&](const Fact& f) { return path_uses(f.lhs, a) || path_uses(f.rhs, a); });
}

}  // namespace

std::vector<SourceDiagnostic> add_item(Ologism& o, std::string_view text) {
  Diags diags;
  auto item = single_item(text, diags);
  if (!item) return diags;
  Ologism copy = o;
  Builder(copy, diags).apply(*item);
  if (!has_error(diags)) o = std::move(copy);
  return diags;
}

std::vector<SourceDiagnostic> retract_item(Ologism& o, std::string_view text) {
  Diags diags;
  auto item = single_item(text, diags);
  if (!item) return diags;
  Pos at{1, 1};

  auto retract_aspect = [&](const Aspect& a) {
    auto it = std::find(o.aspects.begin(), o.aspects.end(), a);
    if (it == o.aspects.end()) {
      error(diags, at, "NotDeclared", "aspect " + a.name + " : " + a.source + " -> " + a.target + " is not declared");
      return;
    }
    if (fact_uses(o, a)) {
      error(diags, at, "InUse", "a fact still uses aspect " + a.name + " : " + a.source + " -> " + a.target);
      return;
    }
    o.aspects.erase(it);
    if (a.is_inclusion())
      std::erase(o.premisses, Proposition{Form::A, a.source, a.target});
  };

  if (auto* t = std::get_if<TypeItem>(&*item)) {
    const auto& id = t->id.text;
    bool used = std::any_of(o.aspects.begin(), o.aspects.end(),
                            [&](const Aspect& a) { return a.source == id || a.target == id; }) ||
                std::any_of(o.premisses.begin(), o.premisses.end(),
                            [&](const Proposition& p) { return p.subject == id || p.predicate == id; });
    if (!o.has_type(id)) {
      error(diags, t->id.pos, "NotDeclared", "type '" + id + "' is not declared");
    } else if (used) {
      error(diags, t->id.pos, "InUse", "type '" + id + "' is still used by aspects or premisses");
    } else {
      std::erase_if(o.types, [&](const TypeDecl& d) { return d.id == id; });
    }
  } else if (auto* a = std::get_if<AspectItem>(&*item)) {
    at = a->name.pos;
    retract_aspect(Aspect{a->name.text, a->source.text, a->target.text});
  } else if (auto* p = std::get_if<PremissItem>(&*item)) {
    at = p->pos;
    Proposition prop{p->form, p->subject.text, p->predicate.text};
    if (prop.form == Form::A) {
      retract_aspect(Aspect{std::string(kIsAspect), prop.subject, prop.predicate});
    } else {
      auto canon = prop.canonical();
      auto before = o.premisses.size();
      std::erase_if(o.premisses, [&](const Proposition& q) { return q.canonical() == canon; });
      if (before == o.premisses.size())
        error(diags, at, "NotDeclared", prop.to_string() + " is not a premiss");
    }
  } else if (auto* f = std::get_if<FactItem>(&*item)) {
    Builder b(o, diags);
    auto fact = b.resolve(*f);
    if (fact) {
      auto before = o.facts.size();
      std::erase_if(o.facts, [&](const Fact& g) {
        return (g.lhs == fact->lhs && g.rhs == fact->rhs) || (g.lhs == fact->rhs && g.rhs == fact->lhs);
      });
      if (before == o.facts.size()) error(diags, f->pos, "NotDeclared", "no such fact");
    }
  }
  return diags;
}

namespace {

[[noreturn]] void refuse(std::string code, std::string msg) {
  throw SerializeError(SourceDiagnostic{Severity::Error, std::move(code), std::move(msg), 0, 0});
}

std::string path_text(const PathWord& w) {
  if (w.empty()) return "id(" + w.source() + ")";
  std::string out;
  for (const auto& a : w.arcs()) out += (out.empty() ? "" : " ; ") + a.name;
  return out;
}

std::string elem_text(const std::string& e) { return is_ident(e) ? e : quote(e); }

bool printable_string(std::string_view s) {
  return std::none_of(s.begin(), s.end(), [](char c) { return c == '\n' || c == '\r'; });
}

}  // namespace

std::string serialize(const Ologism& input) {
  Ologism o = canonicalize(input);
  if (!printable_string(o.name)) refuse("Unprintable", "ologism name contains a line break");
  for (const auto& t : o.types) {
    if (t.id == kIsAspect) refuse("ReservedWord", "'is' cannot be written as a type id");
    if (!is_ident(t.id)) refuse("InvalidIdentifier", "type id '" + t.id + "' is not an identifier");
    if (!printable_string(t.label)) refuse("Unprintable", "label of " + t.id + " contains a line break");
  }
  for (const auto& a : o.aspects)
    if (!is_ident(a.name)) refuse("InvalidIdentifier", "aspect name '" + a.name + "' is not an identifier");

  std::ostringstream os;
  os << "ologism " << quote(o.name) << " {\n";
  for (const auto& t : o.types) os << "  type " << t.id << " " << quote(t.label) << "\n";
  for (const auto& a : o.aspects)
    if (!a.is_inclusion()) os << "  aspect " << a.name << " : " << a.source << " -> " << a.target << "\n";
  for (Form f : {Form::A, Form::E, Form::I, Form::O})
    for (const auto& p : o.premisses)
      if (p.form == f) os << "  " << form_letter(f) << " " << p.subject << " " << p.predicate << "\n";
  for (const auto& f : o.facts) {
    // The text must read back as exactly this pair of paths.
    Diags probe;
    Ologism scratch = o;
    FactItem item;
    item.name = f.name;
    auto syntax = [](const PathWord& w) {
      PathSyntax s;
      if (w.empty()) {
        s.identity = true;
        s.type = {w.source(), {}};
      } else {
        for (const auto& a : w.arcs()) s.names.push_back({a.name, {}});
      }
      return s;
    };
    item.lhs = syntax(f.lhs);
    item.rhs = syntax(f.rhs);
    auto back = Builder(scratch, probe).resolve(item);
    if (!back || back->lhs != f.lhs || back->rhs != f.rhs)
      refuse("AmbiguousPath", "fact " + path_text(f.lhs) + " = " + path_text(f.rhs) +
                                  " cannot be written unambiguously");
    if (f.name && !printable_string(*f.name)) refuse("Unprintable", "fact name contains a line break");
    os << "  fact ";
    if (f.name) os << quote(*f.name) << " ";
    os << ": " << path_text(f.lhs) << " = " << path_text(f.rhs) << "\n";
  }
  os << "}\n";
  return os.str();
}

std::string serialize(const model::Model& m) {
  for (const auto* s : {&m.name, &m.ologism})
    if (!printable_string(*s)) refuse("Unprintable", "model header contains a line break");
  std::ostringstream os;
  os << "model " << quote(m.name) << " for " << quote(m.ologism) << " {\n";
  for (const auto& [type, elems] : m.carrier) {
    if (!is_ident(type)) refuse("InvalidIdentifier", "type id '" + type + "' is not an identifier");
    os << "  set " << type << " = {";
    bool first = true;
    for (const auto& e : elems) {
      if (!printable_string(e)) refuse("Unprintable", "element contains a line break");
      os << (first ? "" : ", ") << elem_text(e);
      first = false;
    }
    os << "}\n";
  }
  for (const auto& [aspect, fn] : m.maps) {
    if (fn.empty()) continue;  // nothing to say; the grammar needs one mapping
    if (!is_ident(aspect)) refuse("InvalidIdentifier", "aspect name '" + aspect + "' is not an identifier");
    os << "  map " << aspect << " : ";
    bool first = true;
    for (const auto& [x, y] : fn) {
      if (!printable_string(x) || !printable_string(y)) refuse("Unprintable", "element contains a line break");
      os << (first ? "" : ", ") << elem_text(x) << " -> " << elem_text(y);
      first = false;
    }
    os << "\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ologism::dsl
