#include "ologism/core.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace ologism {

PathWord::PathWord(TypeId source, TypeId target, std::vector<Aspect> arcs)
    : source_(std::move(source)), target_(std::move(target)), arcs_(std::move(arcs)) {
  if (arcs_.empty()) {
    if (source_ != target_)
      throw CompositionError("empty path must start and end at the same type, got " + source_ +
                             " -> " + target_);
    return;
  }
  if (arcs_.front().source != source_)
    throw CompositionError("path starts at " + source_ + " but first arc '" +
                           arcs_.front().name + "' leaves " + arcs_.front().source);
  if (arcs_.back().target != target_)
    throw CompositionError("path ends at " + target_ + " but last arc '" + arcs_.back().name +
                           "' enters " + arcs_.back().target);
  for (std::size_t k = 0; k + 1 < arcs_.size(); ++k) {
    if (arcs_[k].target != arcs_[k + 1].source)
      throw CompositionError("arc '" + arcs_[k].name + "' ends at " + arcs_[k].target +
                             " but '" + arcs_[k + 1].name + "' starts at " +
                             arcs_[k + 1].source);
  }
}

PathWord PathWord::identity(TypeId on) {
  TypeId copy = on;
  return PathWord(std::move(on), std::move(copy), {});
}

PathWord PathWord::of(const Aspect& arc) { return PathWord(arc.source, arc.target, {arc}); }

std::string PathWord::to_string() const {
  if (arcs_.empty()) return "id(" + source_ + ")";
  std::string out;
  for (std::size_t k = 0; k < arcs_.size(); ++k) {
    if (k) out += " ; ";
    out += arcs_[k].name;
  }
  return out;
}

PathWord compose(const PathWord& p, const PathWord& q) {
  if (p.target() != q.source())
    throw CompositionError("cannot compose: " + p.to_string() + " ends at " + p.target() +
                           ", " + q.to_string() + " starts at " + q.source());
  std::vector<Aspect> arcs = p.arcs();
  arcs.insert(arcs.end(), q.arcs().begin(), q.arcs().end());
  return PathWord(p.source(), q.target(), std::move(arcs));
}

char form_letter(Form f) {
  switch (f) {
    case Form::A: return 'A';
    case Form::E: return 'E';
    case Form::I: return 'I';
    case Form::O: return 'O';
  }
  return '?';
}

std::optional<Form> form_from_letter(char c) {
  switch (c) {
    case 'A': return Form::A;
    case 'E': return Form::E;
    case 'I': return Form::I;
    case 'O': return Form::O;
    default: return std::nullopt;
  }
}

Proposition Proposition::canonical() const {
  Proposition p = *this;
  if ((form == Form::E || form == Form::I) && p.predicate < p.subject)
    std::swap(p.subject, p.predicate);
  return p;
}

std::string Proposition::to_string() const {
  return std::string(1, form_letter(form)) + "(" + subject + "," + predicate + ")";
}

namespace {

bool is_ident(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::optional<Proposition> parse_proposition_literal(std::string_view text) {
  text = trim(text);
  if (text.size() < 4) return std::nullopt;
  auto form = form_from_letter(text[0]);
  if (!form) return std::nullopt;
  std::string_view rest = text.substr(1);
  if (rest.front() == ':') {
    rest.remove_prefix(1);
  } else if (rest.front() == '(' && rest.back() == ')') {
    rest = rest.substr(1, rest.size() - 2);
  } else {
    return std::nullopt;
  }
  auto comma = rest.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  auto subject = trim(rest.substr(0, comma));
  auto predicate = trim(rest.substr(comma + 1));
  if (!is_ident(subject) || !is_ident(predicate)) return std::nullopt;
  return Proposition{*form, std::string(subject), std::string(predicate)};
}

const TypeDecl* Ologism::find_type(std::string_view id) const {
  for (const auto& t : types)
    if (t.id == id) return &t;
  return nullptr;
}

std::vector<Proposition> Ologism::premisses_of(Form f) const {
  std::vector<Proposition> out;
  for (const auto& p : premisses)
    if (p.form == f) out.push_back(p);
  return out;
}

std::vector<TypeId> Ologism::type_ids() const {
  std::vector<TypeId> ids;
  ids.reserve(types.size());
  for (const auto& t : types) ids.push_back(t.id);
  return ids;
}

void add_type(Ologism& o, TypeId id, std::string label) {
  o.types.push_back({std::move(id), std::move(label)});
}

void add_aspect(Ologism& o, Aspect a) {
  if (std::find(o.aspects.begin(), o.aspects.end(), a) != o.aspects.end()) return;
  if (a.is_inclusion()) {
    Proposition p{Form::A, a.source, a.target};
    if (std::find(o.premisses.begin(), o.premisses.end(), p) == o.premisses.end())
      o.premisses.push_back(p);
  }
  o.aspects.push_back(std::move(a));
}

void add_premiss(Ologism& o, Proposition p) {
  if (p.form == Form::A) {
    add_aspect(o, Aspect{std::string(kIsAspect), p.subject, p.predicate});
    return;
  }
  auto canon = p.canonical();
  for (const auto& q : o.premisses)
    if (q.canonical() == canon) return;
  o.premisses.push_back(std::move(p));
}

Ologism with_premisses(const Ologism& o, const std::vector<Proposition>& props) {
  Ologism out;
  out.name = o.name;
  out.types = o.types;
  for (const auto& a : o.aspects)
    if (!a.is_inclusion()) out.aspects.push_back(a);
  out.facts = o.facts;
  for (const auto& p : props) {
    if (p.form == Form::A && p.subject == p.predicate) continue;
    add_premiss(out, p);
  }
  // Facts may mention is-aspects that are no longer premisses; keep them.
  for (const auto& f : o.facts)
    for (const auto* side : {&f.lhs, &f.rhs})
      for (const auto& arc : side->arcs())
        if (arc.is_inclusion()) add_aspect(out, arc);
  return out;
}

Ologism canonicalize(const Ologism& o) {
  Ologism c = o;
  std::sort(c.types.begin(), c.types.end());
  c.types.erase(std::unique(c.types.begin(), c.types.end()), c.types.end());
  std::sort(c.aspects.begin(), c.aspects.end());
  c.aspects.erase(std::unique(c.aspects.begin(), c.aspects.end()), c.aspects.end());
  for (auto& p : c.premisses) p = p.canonical();
  std::sort(c.premisses.begin(), c.premisses.end());
  c.premisses.erase(std::unique(c.premisses.begin(), c.premisses.end()), c.premisses.end());
  std::sort(c.facts.begin(), c.facts.end());
  return c;
}

std::vector<Diagnostic> validate(const Ologism& o) {
  std::vector<Diagnostic> out;
  auto report = [&](std::string code, std::string message) {
    out.push_back({std::move(code), std::move(message)});
  };

  std::set<TypeId> seen_types;
  for (const auto& t : o.types) {
    if (t.id.empty()) report("EmptyTypeId", "type with empty id");
    if (t.label.empty()) report("EmptyLabel", "type '" + t.id + "' has an empty label");
    if (t.id == kIsAspect) report("ReservedWord", "'is' cannot be used as a type id");
    if (!seen_types.insert(t.id).second)
      report("DuplicateType", "type '" + t.id + "' declared more than once");
  }

  std::set<Aspect> seen_aspects;
  for (const auto& a : o.aspects) {
    for (const auto* end : {&a.source, &a.target})
      if (!seen_types.count(*end))
        report("UnknownType", "aspect '" + a.name + "' refers to undeclared type '" + *end + "'");
    if (!seen_aspects.insert(a).second)
      report("DuplicateAspect",
             "aspect '" + a.name + "' : " + a.source + " -> " + a.target + " declared twice");
  }

  for (std::size_t k = 0; k < o.facts.size(); ++k) {
    const auto& f = o.facts[k];
    std::string label = f.name ? "fact '" + *f.name + "'" : "fact #" + std::to_string(k + 1);
    for (const auto* side : {&f.lhs, &f.rhs}) {
      for (const auto& arc : side->arcs())
        if (!seen_aspects.count(arc))
          report("UnknownAspect", label + " uses undeclared aspect '" + arc.name + "' : " +
                                      arc.source + " -> " + arc.target);
      for (const auto* end : {&side->source(), &side->target()})
        if (!seen_types.count(*end))
          report("UnknownType", label + " refers to undeclared type '" + *end + "'");
    }
    if (f.lhs.source() != f.rhs.source() || f.lhs.target() != f.rhs.target())
      report("NonParallelFact", label + ": " + f.lhs.to_string() + " : " + f.lhs.source() +
                                    " -> " + f.lhs.target() + " is not parallel to " +
                                    f.rhs.to_string() + " : " + f.rhs.source() + " -> " +
                                    f.rhs.target());
  }

  std::set<Proposition> seen_props;
  for (const auto& p : o.premisses) {
    for (const auto* end : {&p.subject, &p.predicate})
      if (!seen_types.count(*end))
        report("UnknownPremissType",
               "premiss " + p.to_string() + " refers to undeclared type '" + *end + "'");
    if (!seen_props.insert(p.canonical()).second)
      report("DuplicatePremiss", "premiss " + p.to_string() + " declared twice");
    if (p.form == Form::A) {
      Aspect is{std::string(kIsAspect), p.subject, p.predicate};
      if (!seen_aspects.count(is))
        report("OrphanUniversalAffirmative",
               "premiss " + p.to_string() + " has no matching 'is' aspect");
    }
  }
  for (const auto& a : o.aspects) {
    if (!a.is_inclusion()) continue;
    if (!seen_props.count(Proposition{Form::A, a.source, a.target}))
      report("OrphanIsAspect",
             "'is' aspect " + a.source + " -> " + a.target + " has no matching A premiss");
  }
  return out;
}

std::vector<PathWord> resolve_path(const Ologism& o, const std::vector<std::string>& names) {
  std::vector<std::vector<Aspect>> partial{{}};
  for (const auto& name : names) {
    std::vector<std::vector<Aspect>> next;
    for (const auto& chain : partial)
      for (const auto& a : o.aspects) {
        if (a.name != name) continue;
        if (!chain.empty() && chain.back().target != a.source) continue;
        next.push_back(chain);
        next.back().push_back(a);
      }
    partial = std::move(next);
  }
  std::vector<PathWord> out;
  if (names.empty()) return out;
  for (auto& chain : partial) {
    auto source = chain.front().source;
    auto target = chain.back().target;
    out.emplace_back(std::move(source), std::move(target), std::move(chain));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string strip_article(const std::string& label) {
  for (std::string_view article : {"a ", "an ", "A ", "An "})
    if (label.size() > article.size() && label.compare(0, article.size(), article) == 0)
      return label.substr(article.size());
  return label;
}

const TypeDecl& require_type(const Ologism& o, const TypeId& id) {
  const auto* t = o.find_type(id);
  if (!t) throw LookupError("unknown type '" + id + "'");
  return *t;
}

}  // namespace

std::string reading(const Proposition& p, const Ologism& o) {
  const auto& subject = require_type(o, p.subject);
  const auto& predicate = require_type(o, p.predicate);
  std::string quantifier = p.is_universal() ? "Every" : "Some";
  std::string copula = p.is_affirmative() ? "is" : "is not";
  return quantifier + " " + strip_article(subject.label) + " " + copula + " " + predicate.label;
}

}  // namespace ologism
