#include "ologism/deduce.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace ologism::deduce {

std::string rule_tag_name(RuleTag r) {
  switch (r) {
    case RuleTag::Premiss: return "Premiss";
    case RuleTag::Identity: return "Identity";
    case RuleTag::Symmetry: return "Symmetry";
    case RuleTag::R1: return "R1";
    case RuleTag::R2: return "R2";
    case RuleTag::R3: return "R3";
    case RuleTag::R4: return "R4";
    case RuleTag::R5: return "R5";
    case RuleTag::R6: return "R6";
    case RuleTag::R7: return "R7";
    case RuleTag::R8: return "R8";
  }
  return "?";
}

bool Theory::contains(const Proposition& p) const {
  auto c = p.canonical();
  switch (c.form) {
    case Form::A: return alpha_star.count(c) > 0;
    case Form::E: return epsilon_star.count(c) > 0;
    case Form::I: return iota_star.count(c) > 0;
    case Form::O: return o_star.count(c) > 0;
  }
  return false;
}

std::vector<Proposition> Theory::propositions() const {
  std::vector<Proposition> out;
  for (const auto* s : {&alpha_star, &epsilon_star, &iota_star, &o_star})
    out.insert(out.end(), s->begin(), s->end());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Theory::size() const {
  return alpha_star.size() + epsilon_star.size() + iota_star.size() + o_star.size();
}

namespace {

using Table = std::map<Proposition, DerivationPtr>;

// Ordering used to keep one derivation per proposition: shallower first,
// then rule tag by name, then the conclusions of the operands in order.
auto key_of(const Derivation& d) {
  std::vector<Proposition> operands;
  for (const auto& c : d.children) operands.push_back(c->conclusion);
  return std::make_tuple(d.depth, rule_tag_name(d.rule), std::move(operands));
}

DerivationPtr make(Proposition p, RuleTag rule, std::vector<DerivationPtr> children) {
  std::size_t depth = 0;
  for (const auto& c : children) depth = std::max(depth, c->depth + 1);
  return std::make_shared<const Derivation>(Derivation{std::move(p), rule, std::move(children), depth});
}

DerivationPtr lookup(const Table& t, const Proposition& p) {
  auto it = t.find(p);
  return it == t.end() ? nullptr : it->second;
}

bool offer(Table& t, DerivationPtr candidate) {
  auto it = t.find(candidate->conclusion);
  if (it == t.end()) {
    t.emplace(candidate->conclusion, std::move(candidate));
    return true;
  }
  if (key_of(*candidate) < key_of(*it->second)) {
    it->second = std::move(candidate);
    return true;
  }
  return false;
}

// A binary rule: premisses (f1, a, b) and (f2, c, d) built from x, y, z.
struct Binary {
  RuleTag tag;
  Form result;
  Form left_form;
  Form right_form;
  // Index layout: 0 = X, 1 = Y, 2 = Z.
  int left_s, left_p, right_s, right_p;
};

// Conclusion is always (X, Z).
const Binary kR1{RuleTag::R1, Form::A, Form::A, Form::A, 0, 1, 1, 2};
const Binary kR2{RuleTag::R2, Form::E, Form::E, Form::A, 0, 1, 2, 1};
const Binary kR3{RuleTag::R3, Form::E, Form::A, Form::E, 0, 1, 1, 2};
const Binary kR4{RuleTag::R4, Form::I, Form::I, Form::A, 0, 1, 1, 2};
const Binary kR5{RuleTag::R5, Form::I, Form::A, Form::I, 1, 0, 1, 2};
const Binary kR6{RuleTag::R6, Form::O, Form::I, Form::E, 0, 1, 1, 2};
const Binary kR7{RuleTag::R7, Form::O, Form::A, Form::O, 1, 0, 1, 2};
const Binary kR8{RuleTag::R8, Form::O, Form::O, Form::A, 0, 1, 2, 1};

// Saturates `table` under the given rules (plus symmetry for E/I results)
// until no proposition gets a strictly better derivation.
void saturate(Table& table, const std::vector<TypeId>& types, const std::vector<Binary>& rules,
              const std::vector<Form>& symmetric) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<DerivationPtr> candidates;
    for (const auto& rule : rules) {
      for (const auto& x : types)
        for (const auto& y : types)
          for (const auto& z : types) {
            const TypeId* v[3] = {&x, &y, &z};
            auto left = lookup(table, {rule.left_form, *v[rule.left_s], *v[rule.left_p]});
            if (!left) continue;
            auto right = lookup(table, {rule.right_form, *v[rule.right_s], *v[rule.right_p]});
            if (!right) continue;
            candidates.push_back(make({rule.result, x, z}, rule.tag, {left, right}));
          }
    }
    for (Form f : symmetric)
      for (const auto& [p, d] : table)
        if (p.form == f) candidates.push_back(make({f, p.predicate, p.subject}, RuleTag::Symmetry, {d}));
    for (auto& c : candidates) changed |= offer(table, std::move(c));
  }
}

std::vector<TypeId> all_types(const Ologism& o) {
  std::set<TypeId> ids;
  for (const auto& t : o.types) ids.insert(t.id);
  for (const auto& p : o.premisses) {
    ids.insert(p.subject);
    ids.insert(p.predicate);
  }
  return {ids.begin(), ids.end()};
}

}  // namespace

Theory close(const Ologism& o) {
  Theory th;
  th.types = all_types(o);
  Table table;
  for (const auto& x : th.types) offer(table, make({Form::A, x, x}, RuleTag::Identity, {}));
  for (const auto& p : o.premisses) offer(table, make(p, RuleTag::Premiss, {}));

  saturate(table, th.types, {kR1}, {});
  saturate(table, th.types, {kR2, kR3, kR4, kR5}, {Form::E, Form::I});
  saturate(table, th.types, {kR6, kR7, kR8}, {});

  for (const auto& [p, d] : table) {
    auto c = p.canonical();
    switch (c.form) {
      case Form::A: th.alpha_star.insert(c); break;
      case Form::E: th.epsilon_star.insert(c); break;
      case Form::I: th.iota_star.insert(c); break;
      case Form::O: th.o_star.insert(c); break;
    }
  }
  th.derivations = std::move(table);
  return th;
}

std::vector<Proposition> derived_beyond_premisses(const Theory& t, const Ologism& o) {
  std::set<Proposition> given;
  for (const auto& p : o.premisses) given.insert(p.canonical());
  std::vector<Proposition> out;
  for (const auto& p : t.propositions()) {
    if (given.count(p)) continue;
    if (p.form == Form::A && p.subject == p.predicate) continue;
    out.push_back(p);
  }
  return out;
}

std::vector<Contradiction> contradictions(const Theory& t) {
  std::vector<Contradiction> out;
  for (const auto& p : t.o_star)
    if (p.subject == p.predicate) out.push_back({p.subject, t.derivations.at(p)});
  return out;
}

DerivationPtr explain(const Theory& t, const Proposition& p) {
  auto it = t.derivations.find(p);
  return it == t.derivations.end() ? nullptr : it->second;
}

namespace {

bool instantiates(const Binary& rule, const Proposition& concl, const Proposition& left,
                  const Proposition& right) {
  if (concl.form != rule.result || left.form != rule.left_form || right.form != rule.right_form)
    return false;
  // Recover X, Y, Z from the operands and check consistency.
  const TypeId* v[3] = {nullptr, nullptr, nullptr};
  auto bind = [&](int slot, const TypeId& id) {
    if (!v[slot]) {
      v[slot] = &id;
      return true;
    }
    return *v[slot] == id;
  };
  return bind(rule.left_s, left.subject) && bind(rule.left_p, left.predicate) &&
         bind(rule.right_s, right.subject) && bind(rule.right_p, right.predicate) &&
         bind(0, concl.subject) && bind(2, concl.predicate);
}

const Binary* binary_rule(RuleTag tag) {
  static const Binary* all[] = {&kR1, &kR2, &kR3, &kR4, &kR5, &kR6, &kR7, &kR8};
  for (const auto* r : all)
    if (r->tag == tag) return r;
  return nullptr;
}

}  // namespace

bool replays(const Derivation& d, const Ologism& o) {
  for (const auto& c : d.children)
    if (!c || !replays(*c, o)) return false;
  switch (d.rule) {
    case RuleTag::Premiss:
      return d.children.empty() &&
             std::find(o.premisses.begin(), o.premisses.end(), d.conclusion) != o.premisses.end();
    case RuleTag::Identity:
      return d.children.empty() && d.conclusion.form == Form::A &&
             d.conclusion.subject == d.conclusion.predicate;
    case RuleTag::Symmetry: {
      if (d.children.size() != 1) return false;
      const auto& c = d.children[0]->conclusion;
      return (c.form == Form::E || c.form == Form::I) && d.conclusion.form == c.form &&
             d.conclusion.subject == c.predicate && d.conclusion.predicate == c.subject;
    }
    default: {
      const auto* rule = binary_rule(d.rule);
      return rule && d.children.size() == 2 &&
             instantiates(*rule, d.conclusion, d.children[0]->conclusion,
                          d.children[1]->conclusion);
    }
  }
}

namespace {

void render_into(const Derivation& d, int depth, std::ostringstream& os) {
  os << std::string(static_cast<std::size_t>(depth) * 2, ' ') << d.conclusion.to_string() << "   ["
     << rule_tag_name(d.rule) << "]\n";
  for (const auto& c : d.children) render_into(*c, depth + 1, os);
}

}  // namespace

std::string render(const Derivation& d) {
  std::ostringstream os;
  render_into(d, 0, os);
  return os.str();
}

}  // namespace ologism::deduce
