#include "ologism/syll.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace ologism::syll {

std::size_t Diagram::bullet_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes.begin(), nodes.end(), [](const Node& n) { return n.bullet; }));
}

bool Diagram::is_diagram() const {
  if (nodes.empty() || arrows.size() + 1 != nodes.size()) return false;
  return !nodes.front().bullet && !nodes.back().bullet;
}

std::string Diagram::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    out += nodes[k].bullet ? "•" : nodes[k].term;
    if (k < arrows.size()) out += arrows[k] == Arrow::Right ? " → " : " ← ";
  }
  return out;
}

namespace {

Node T(const std::string& s) { return Node::term_node(s); }
Node B() { return Node::bullet_node(); }

}  // namespace

Diagram diagram_of(const Proposition& p) {
  const auto& s = p.subject;
  const auto& q = p.predicate;
  switch (p.form) {
    case Form::A: return {{T(s), T(q)}, {Arrow::Right}};
    case Form::E: return {{T(s), B(), T(q)}, {Arrow::Right, Arrow::Left}};
    case Form::I: return {{T(s), B(), T(q)}, {Arrow::Left, Arrow::Right}};
    case Form::O: return {{T(s), B(), B(), T(q)}, {Arrow::Left, Arrow::Right, Arrow::Left}};
  }
  return {};
}

Diagram reverse(const Diagram& d) {
  Diagram r;
  r.nodes.assign(d.nodes.rbegin(), d.nodes.rend());
  r.arrows.reserve(d.arrows.size());
  for (auto it = d.arrows.rbegin(); it != d.arrows.rend(); ++it) r.arrows.push_back(flip(*it));
  return r;
}

Diagram superpose(const Diagram& d1, const Diagram& d2) {
  if (d1.nodes.empty() || d2.nodes.empty())
    throw SuperpositionError("cannot superpose an empty diagram");
  const Node& last = d1.nodes.back();
  const Node& first = d2.nodes.front();
  if (last.bullet || first.bullet || last.term != first.term)
    throw SuperpositionError("no common extremal term between [" + d1.to_string() + "] and [" +
                             d2.to_string() + "]");
  Diagram out = d1;
  out.nodes.insert(out.nodes.end(), d2.nodes.begin() + 1, d2.nodes.end());
  out.arrows.insert(out.arrows.end(), d2.arrows.begin(), d2.arrows.end());
  return out;
}

std::optional<Proposition> classify(const Diagram& d) {
  if (!d.is_diagram()) return std::nullopt;
  const auto& n = d.nodes;
  const auto& a = d.arrows;
  auto all_bullets_inside = [&] {
    for (std::size_t k = 1; k + 1 < n.size(); ++k)
      if (!n[k].bullet) return false;
    return true;
  };
  if (!all_bullets_inside()) return std::nullopt;
  const auto& first = n.front().term;
  const auto& last = n.back().term;
  using enum Arrow;
  if (n.size() == 2)
    return a[0] == Right ? Proposition{Form::A, first, last} : Proposition{Form::A, last, first};
  if (n.size() == 3) {
    if (a[0] == Right && a[1] == Left) return Proposition{Form::E, first, last};
    if (a[0] == Left && a[1] == Right) return Proposition{Form::I, first, last};
    return std::nullopt;
  }
  if (n.size() == 4) {
    if (a[0] == Left && a[1] == Right && a[2] == Left) return Proposition{Form::O, first, last};
    if (a[0] == Right && a[1] == Left && a[2] == Right) return Proposition{Form::O, last, first};
  }
  return std::nullopt;
}

bool is_well_formed(const Diagram& d) {
  if (!d.is_diagram()) return false;
  std::size_t start = 0;
  for (std::size_t k = 1; k < d.nodes.size(); ++k) {
    if (d.nodes[k].bullet) continue;
    Diagram segment;
    segment.nodes.assign(d.nodes.begin() + static_cast<std::ptrdiff_t>(start),
                         d.nodes.begin() + static_cast<std::ptrdiff_t>(k) + 1);
    segment.arrows.assign(d.arrows.begin() + static_cast<std::ptrdiff_t>(start),
                          d.arrows.begin() + static_cast<std::ptrdiff_t>(k));
    if (!classify(segment)) return false;
    start = k;
  }
  return d.nodes.size() == 1 ? false : true;
}

std::string reason_name(Rejection::Reason r) {
  switch (r) {
    case Rejection::Reason::BulletCountMismatch: return "BulletCountMismatch";
    case Rejection::Reason::DiscordantArrows: return "DiscordantArrows";
    case Rejection::Reason::ResultNotWellFormed: return "ResultNotWellFormed";
    case Rejection::Reason::ConclusionMismatch: return "ConclusionMismatch";
  }
  return "?";
}

std::variant<Diagram, Rejection> delete_middle(const Diagram& d, const std::string& middle) {
  for (std::size_t k = 1; k + 1 < d.nodes.size(); ++k) {
    if (d.nodes[k].bullet || d.nodes[k].term != middle) continue;
    Arrow before = d.arrows[k - 1];
    Arrow after = d.arrows[k];
    if (before != after) {
      return Rejection{Rejection::Reason::DiscordantArrows,
                       middle + " sits between discordant arrows in " + d.to_string()};
    }
    Diagram out;
    out.nodes = d.nodes;
    out.nodes.erase(out.nodes.begin() + static_cast<std::ptrdiff_t>(k));
    out.arrows = d.arrows;
    out.arrows.erase(out.arrows.begin() + static_cast<std::ptrdiff_t>(k));
    return out;
  }
  throw std::invalid_argument("term '" + middle + "' is not an interior term of " +
                              d.to_string());
}

std::string rule_name(Rule r) {
  switch (r) {
    case Rule::AxiomPremiss: return "Axiom-Premiss";
    case Rule::AxiomExistentialImport: return "Axiom-ExistentialImport";
    case Rule::Reversal: return "Reversal";
    case Rule::Superposition: return "Superposition";
    case Rule::Composition: return "Composition";
  }
  return "?";
}

std::size_t ProofTree::count(Rule r) const {
  std::size_t n = rule == r ? 1 : 0;
  for (const auto& c : children) n += c.count(r);
  return n;
}

std::optional<Diagram> replay(const ProofTree& tree) {
  std::optional<Diagram> result;
  switch (tree.rule) {
    case Rule::AxiomPremiss:
    case Rule::AxiomExistentialImport:
      if (!tree.children.empty() || !tree.axiom) return std::nullopt;
      if (tree.rule == Rule::AxiomExistentialImport &&
          (tree.axiom->form != Form::I || tree.axiom->subject != tree.axiom->predicate))
        return std::nullopt;
      result = diagram_of(*tree.axiom);
      break;
    case Rule::Reversal: {
      if (tree.children.size() != 1) return std::nullopt;
      auto child = replay(tree.children[0]);
      if (!child) return std::nullopt;
      result = reverse(*child);
      break;
    }
    case Rule::Superposition: {
      if (tree.children.size() != 2) return std::nullopt;
      auto left = replay(tree.children[0]);
      auto right = replay(tree.children[1]);
      if (!left || !right) return std::nullopt;
      try {
        result = superpose(*left, *right);
      } catch (const SuperpositionError&) {
        return std::nullopt;
      }
      break;
    }
    case Rule::Composition: {
      if (tree.children.size() != 1) return std::nullopt;
      auto child = replay(tree.children[0]);
      if (!child) return std::nullopt;
      try {
        auto step = delete_middle(*child, tree.middle);
        if (std::holds_alternative<Rejection>(step)) return std::nullopt;
        result = std::get<Diagram>(step);
      } catch (const std::invalid_argument&) {
        return std::nullopt;
      }
      break;
    }
  }
  if (!result || !(*result == tree.root)) return std::nullopt;
  return result;
}

namespace {

void render_into(const ProofTree& t, int depth, std::ostringstream& os) {
  os << std::string(static_cast<std::size_t>(depth) * 2, ' ') << t.root.to_string() << "   ["
     << rule_name(t.rule);
  if (t.axiom) os << " " << t.axiom->to_string();
  if (t.rule == Rule::Composition) os << ": delete " << t.middle;
  os << "]\n";
  for (const auto& c : t.children) render_into(c, depth + 1, os);
}

ProofTree leaf(const Proposition& p, Rule rule) {
  return ProofTree{diagram_of(p), rule, {}, p, {}};
}

struct Attempt {
  std::optional<ProofTree> proof;
  std::optional<Rejection> failure;
};

int severity(Rejection::Reason r) {
  switch (r) {
    case Rejection::Reason::DiscordantArrows: return 1;
    case Rejection::Reason::ResultNotWellFormed: return 2;
    case Rejection::Reason::ConclusionMismatch: return 3;
    case Rejection::Reason::BulletCountMismatch: return 4;
  }
  return 0;
}

// One arrangement: premisses in `order`, premiss i reversed when bit i of
// `mask` is set.
Attempt try_chain(const std::vector<Proposition>& premisses, const std::vector<Rule>& rules,
                  const std::vector<std::size_t>& order, unsigned mask,
                  const Proposition& conclusion) {
  std::vector<ProofTree> parts;
  for (auto idx : order) {
    ProofTree t = leaf(premisses[idx], rules[idx]);
    if (mask & (1u << idx)) {
      Diagram r = reverse(t.root);
      t = ProofTree{std::move(r), Rule::Reversal, {std::move(t)}, std::nullopt, {}};
    }
    parts.push_back(std::move(t));
  }
  for (std::size_t k = 0; k + 1 < parts.size(); ++k) {
    const auto& a = parts[k].root.nodes.back();
    const auto& b = parts[k + 1].root.nodes.front();
    if (a.term != b.term) return {};
  }
  std::vector<std::string> junctions;
  ProofTree acc = std::move(parts[0]);
  for (std::size_t k = 1; k < parts.size(); ++k) {
    junctions.push_back(acc.root.nodes.back().term);
    Diagram joined = superpose(acc.root, parts[k].root);
    acc = ProofTree{std::move(joined), Rule::Superposition, {std::move(acc), std::move(parts[k])},
                    std::nullopt, {}};
  }
  for (const auto& middle : junctions) {
    auto step = delete_middle(acc.root, middle);
    if (auto* rej = std::get_if<Rejection>(&step)) return {std::nullopt, *rej};
    acc = ProofTree{std::get<Diagram>(std::move(step)), Rule::Composition, {std::move(acc)},
                    std::nullopt, middle};
  }
  auto got = classify(acc.root);
  if (!got)
    return {std::nullopt, Rejection{Rejection::Reason::ResultNotWellFormed,
                                    acc.root.to_string() + " is not a syllogistic diagram"}};
  if (!got->same_as(conclusion))
    return {std::nullopt,
            Rejection{Rejection::Reason::ConclusionMismatch,
                      "obtained " + got->to_string() + " but conclusion is " +
                          conclusion.to_string()}};
  return {std::move(acc), std::nullopt};
}

std::vector<unsigned> masks_by_popcount(std::size_t k) {
  std::vector<unsigned> masks(1u << k);
  std::iota(masks.begin(), masks.end(), 0u);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    return __builtin_popcount(a) < __builtin_popcount(b);
  });
  return masks;
}

ProofResult search(const std::vector<Proposition>& premisses, const std::vector<Rule>& rules,
                   const Proposition& conclusion) {
  std::size_t have = 0;
  for (const auto& p : premisses) have += diagram_of(p).bullet_count();
  std::size_t want = diagram_of(conclusion).bullet_count();
  if (have != want)
    return Rejection{Rejection::Reason::BulletCountMismatch,
                     "bullet count " + std::to_string(have) + " ≠ " + std::to_string(want)};

  std::optional<Rejection> best;
  const auto masks = masks_by_popcount(premisses.size());
  for (int reversals = 0; reversals <= static_cast<int>(premisses.size()); ++reversals) {
    std::vector<std::size_t> order(premisses.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    do {
      for (unsigned mask : masks) {
        if (__builtin_popcount(mask) != reversals) continue;
        auto attempt = try_chain(premisses, rules, order, mask, conclusion);
        if (attempt.proof) return std::move(*attempt.proof);
        if (attempt.failure &&
            (!best || severity(attempt.failure->reason) > severity(best->reason)))
          best = attempt.failure;
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  if (best) return *best;
  return Rejection{Rejection::Reason::ResultNotWellFormed, "no superposable arrangement"};
}

}  // namespace

std::string render(const ProofTree& tree) {
  std::ostringstream os;
  render_into(tree, 0, os);
  return os.str();
}

ProofResult prove(const std::vector<Proposition>& premisses, const Proposition& conclusion) {
  if (premisses.empty() || premisses.size() > 3)
    throw std::invalid_argument("prove expects one or two premisses plus an optional import premiss");
  std::vector<Rule> rules(premisses.size(), Rule::AxiomPremiss);
  if (premisses.size() == 3) {
    const auto& imp = premisses[2];
    if (imp.form != Form::I || imp.subject != imp.predicate)
      throw std::invalid_argument("third premiss must be an existential import I(X,X), got " +
                                  imp.to_string());
    rules[2] = Rule::AxiomExistentialImport;
  }
  return search(premisses, rules, conclusion);
}

std::optional<ProofTree> derive_contradiction(const Proposition& p, const Proposition& q) {
  auto diagonal = [](const Proposition& a, const Proposition& b) {
    if (a.form == Form::A && b.form == Form::O)
      return a.subject == b.subject && a.predicate == b.predicate;
    if (a.form == Form::I && b.form == Form::E) return a.canonical().subject == b.canonical().subject &&
                                                       a.canonical().predicate == b.canonical().predicate;
    return false;
  };
  if (!diagonal(p, q) && !diagonal(q, p)) return std::nullopt;
  std::vector<Proposition> premisses{p, q};
  std::vector<Rule> rules(2, Rule::AxiomPremiss);
  for (const auto& x : {p.subject, p.predicate}) {
    auto result = search(premisses, rules, Proposition{Form::O, x, x});
    if (auto* tree = std::get_if<ProofTree>(&result)) return std::move(*tree);
  }
  return std::nullopt;
}

namespace {

const std::map<std::string, std::string>& traditional_names() {
  static const std::map<std::string, std::string> names{
      {"1AAA", "Barbara"},   {"1EAE", "Celarent"},  {"1AII", "Darii"},     {"1EIO", "Ferio"},
      {"1AAI", "Barbari"},   {"1EAO", "Celaront"},  {"2EAE", "Cesare"},    {"2AEE", "Camestres"},
      {"2EIO", "Festino"},   {"2AOO", "Baroco"},    {"2EAO", "Cesaro"},    {"2AEO", "Camestros"},
      {"3IAI", "Disamis"},   {"3AII", "Datisi"},    {"3OAO", "Bocardo"},   {"3EIO", "Ferison"},
      {"3AAI", "Darapti"},   {"3EAO", "Felapton"},  {"4AEE", "Calemes"},   {"4IAI", "Dimatis"},
      {"4EIO", "Fresison"},  {"4AAI", "Bamalip"},   {"4EAO", "Fesapo"},    {"4AEO", "Calemos"},
  };
  return names;
}

bool proves(const std::vector<Proposition>& premisses, const Proposition& conclusion) {
  return std::holds_alternative<ProofTree>(prove(premisses, conclusion));
}

}  // namespace

MoodTable enumerate_moods(bool with_import) {
  static constexpr Form kForms[] = {Form::A, Form::E, Form::I, Form::O};
  const std::string S = "S", M = "M", P = "P";
  MoodTable table;
  table.with_import = with_import;
  for (int figure = 1; figure <= 4; ++figure) {
    for (Form fa : kForms) {
      for (Form fb : kForms) {
        for (Form fc : kForms) {
          MoodResult r;
          r.figure = figure;
          r.mood = {form_letter(fa), form_letter(fb), form_letter(fc)};
          bool major_mp = figure == 1 || figure == 3;
          bool minor_sm = figure == 1 || figure == 2;
          r.major = major_mp ? Proposition{fa, M, P} : Proposition{fa, P, M};
          r.minor = minor_sm ? Proposition{fb, S, M} : Proposition{fb, M, S};
          r.conclusion = Proposition{fc, S, P};
          r.valid = proves({r.major, r.minor}, r.conclusion);
          if (with_import && !r.valid) {
            for (const auto& x : {S, M, P})
              if (proves({r.major, r.minor, Proposition{Form::I, x, x}}, r.conclusion))
                r.import_terms.push_back(x);
          }
          if (r.valid_with_import()) {
            auto it = traditional_names().find(std::to_string(figure) + r.mood);
            if (it != traditional_names().end()) r.traditional_name = it->second;
          }
          if (r.valid) ++table.valid_count;
          if (with_import && !r.valid && !r.import_terms.empty()) {
            ++table.valid_count;
            ++table.import_only_count;
          }
          table.forms.push_back(std::move(r));
        }
      }
    }
  }
  return table;
}

}  // namespace ologism::syll
