#include "ologism/eqtheory.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace ologism::eq {

std::size_t default_bound(const Ologism& o, const PathWord& p, const PathWord& q) {
  std::size_t longest = 0;
  for (const auto& f : o.facts) longest = std::max({longest, f.lhs.length(), f.rhs.length()});
  return std::max({2 * longest + 2, std::size_t{8}, p.length(), q.length()});
}

namespace {

void require_known(const Ologism& o, const PathWord& w) {
  if (!o.has_type(w.source()) || !o.has_type(w.target()))
    throw LookupError("path " + w.to_string() + " uses an undeclared type");
  for (const auto& a : w.arcs())
    if (std::find(o.aspects.begin(), o.aspects.end(), a) == o.aspects.end())
      throw LookupError("unknown aspect '" + a.name + "' : " + a.source + " -> " + a.target);
}

// Type sitting at arc offset `pos` of w (source for 0, else target of the
// preceding arc).
const TypeId& type_at(const PathWord& w, std::size_t pos) {
  return pos == 0 ? w.source() : w.arcs()[pos - 1].target;
}

}  // namespace

std::vector<RewriteStep> rewrites(const Ologism& o, const PathWord& w, std::size_t bound) {
  std::vector<RewriteStep> out;
  const auto& arcs = w.arcs();
  for (std::size_t fi = 0; fi < o.facts.size(); ++fi) {
    const auto& fact = o.facts[fi];
    for (bool ltr : {true, false}) {
      const PathWord& from = ltr ? fact.lhs : fact.rhs;
      const PathWord& to = ltr ? fact.rhs : fact.lhs;
      if (arcs.size() - std::min(arcs.size(), from.length()) + to.length() > bound) continue;
      if (from.length() > arcs.size()) continue;
      for (std::size_t pos = 0; pos + from.length() <= arcs.size(); ++pos) {
        if (from.empty()) {
          if (type_at(w, pos) != from.source()) continue;
        } else if (!std::equal(from.arcs().begin(), from.arcs().end(), arcs.begin() + static_cast<std::ptrdiff_t>(pos))) {
          continue;
        }
        std::vector<Aspect> next(arcs.begin(), arcs.begin() + static_cast<std::ptrdiff_t>(pos));
        next.insert(next.end(), to.arcs().begin(), to.arcs().end());
        next.insert(next.end(), arcs.begin() + static_cast<std::ptrdiff_t>(pos + from.length()), arcs.end());
        out.push_back({fi, ltr, pos, PathWord(w.source(), w.target(), std::move(next))});
      }
    }
  }
  return out;
}

EqualityResult equal_paths(const Ologism& o, const PathWord& p, const PathWord& q,
                           std::optional<std::size_t> bound, std::size_t state_cap) {
  if (p.source() != q.source() || p.target() != q.target())
    throw ParallelismError(p.to_string() + " : " + p.source() + " -> " + p.target() +
                           " is not parallel to " + q.to_string() + " : " + q.source() + " -> " +
                           q.target());
  require_known(o, p);
  require_known(o, q);
  const std::size_t b = bound.value_or(default_bound(o, p, q));
  if (p == q) return Equal{};
  if (p.length() > b || q.length() > b) return NotEqualWithinBound{b, 0, false};

  // parent links for trace reconstruction
  std::map<PathWord, std::optional<RewriteStep>> seen;
  std::map<PathWord, PathWord> parent;
  std::deque<PathWord> frontier{p};
  seen.emplace(p, std::nullopt);
  while (!frontier.empty()) {
    PathWord w = std::move(frontier.front());
    frontier.pop_front();
    for (auto& step : rewrites(o, w, b)) {
      if (seen.count(step.result)) continue;
      if (seen.size() >= state_cap) return NotEqualWithinBound{b, seen.size(), true};
      PathWord next = step.result;
      seen.emplace(next, step);
      parent.emplace(next, w);
      if (next == q) {
        std::vector<RewriteStep> trace;
        for (PathWord cur = q; cur != p; cur = parent.at(cur)) trace.push_back(*seen.at(cur));
        std::reverse(trace.begin(), trace.end());
        return Equal{std::move(trace)};
      }
      frontier.push_back(std::move(next));
    }
  }
  return NotEqualWithinBound{b, seen.size(), false};
}

bool replay_trace(const Ologism& o, const PathWord& p, const PathWord& q,
                  const std::vector<RewriteStep>& trace) {
  PathWord cur = p;
  for (const auto& step : trace) {
    auto options = rewrites(o, cur, std::max(step.result.length(), cur.length()));
    bool ok = std::any_of(options.begin(), options.end(), [&](const RewriteStep& s) {
      return s.fact == step.fact && s.left_to_right == step.left_to_right &&
             s.position == step.position && s.result == step.result;
    });
    if (!ok) return false;
    cur = step.result;
  }
  return cur == q;
}

CongruenceIndex::CongruenceIndex(const Ologism& o, const TypeId& source, const TypeId& target,
                                 std::size_t bound, std::size_t state_cap)
    : bound_(bound) {
  if (!o.has_type(source)) throw LookupError("unknown type '" + source + "'");
  if (!o.has_type(target)) throw LookupError("unknown type '" + target + "'");

  // Enumerate all words source -> target up to the bound. Prefixes ending
  // anywhere are kept during the walk; only complete words are indexed.
  std::vector<PathWord> words;
  std::vector<std::vector<Aspect>> layer{{}};
  std::size_t visited = 0;
  for (std::size_t len = 0; len <= bound && !layer.empty(); ++len) {
    std::vector<std::vector<Aspect>> next;
    for (auto& chain : layer) {
      const TypeId& at = chain.empty() ? source : chain.back().target;
      if (at == target) words.emplace_back(source, target, chain);
      if (len == bound) continue;
      for (const auto& a : o.aspects) {
        if (a.source != at) continue;
        if (++visited > state_cap) {
          cap_reached_ = true;
          break;
        }
        next.push_back(chain);
        next.back().push_back(a);
      }
      if (cap_reached_) break;
    }
    if (cap_reached_) break;
    layer = std::move(next);
  }

  std::sort(words.begin(), words.end());
  for (const auto& w : words) index_.emplace(w, SIZE_MAX);
  for (const auto& w : words) {
    if (index_.at(w) != SIZE_MAX) continue;
    std::size_t id = classes_.size();
    classes_.emplace_back();
    std::deque<PathWord> frontier{w};
    index_[w] = id;
    while (!frontier.empty()) {
      PathWord cur = std::move(frontier.front());
      frontier.pop_front();
      classes_[id].push_back(cur);
      for (auto& step : rewrites(o, cur, bound)) {
        auto it = index_.find(step.result);
        if (it == index_.end() || it->second != SIZE_MAX) continue;
        it->second = id;
        frontier.push_back(std::move(step.result));
      }
    }
    std::sort(classes_[id].begin(), classes_[id].end());
  }
}

std::optional<std::size_t> CongruenceIndex::class_of(const PathWord& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool CongruenceIndex::same_class(const PathWord& a, const PathWord& b) const {
  auto x = class_of(a);
  auto y = class_of(b);
  return x && y && *x == *y;
}

std::vector<std::vector<PathWord>> congruent_closure_classes(const Ologism& o, const TypeId& source,
                                                             const TypeId& target,
                                                             std::size_t bound) {
  CongruenceIndex index(o, source, target, bound);
  auto classes = index.classes();
  std::sort(classes.begin(), classes.end());
  return classes;
}

PathWord parse_path(const Ologism& o, const std::string& text, const std::optional<TypeId>& source) {
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
  };
  std::string t = trim(text);
  if (t.rfind("id(", 0) == 0 && t.back() == ')') {
    auto type = trim(t.substr(3, t.size() - 4));
    if (!o.has_type(type)) throw LookupError("unknown type '" + type + "'");
    return PathWord::identity(type);
  }
  if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = trim(t.substr(1, t.size() - 2));
  std::vector<std::string> names;
  std::size_t start = 0;
  for (;;) {
    auto semi = t.find_first_of(";,", start);
    names.push_back(trim(t.substr(start, semi == std::string::npos ? std::string::npos : semi - start)));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  auto candidates = resolve_path(o, names);
  if (source)
    std::erase_if(candidates, [&](const PathWord& w) { return w.source() != *source; });
  if (candidates.empty()) throw LookupError("no path of aspects reads as '" + t + "'");
  if (candidates.size() > 1) throw LookupError("path '" + t + "' is ambiguous");
  return candidates.front();
}

}  // namespace ologism::eq
