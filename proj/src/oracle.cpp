#include "ologism/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "ologism/deduce.hpp"

namespace ologism::oracle {

bool is_only(const Ologism& o) {
  return o.facts.empty() &&
         std::all_of(o.aspects.begin(), o.aspects.end(), [](const Aspect& a) { return a.is_inclusion(); });
}

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

bool holds(Form f, std::uint32_t s, std::uint32_t p) {
  switch (f) {
    case Form::A: return (s & ~p) == 0;
    case Form::E: return (s & p) == 0;
    case Form::I: return (s & p) != 0;
    case Form::O: return (s & ~p) != 0;
  }
  return false;
}

struct Constraint {
  Form form;
  std::size_t s, p;
};

struct Layout {
  std::vector<TypeId> types;
  std::map<TypeId, std::size_t> index;
  // constraints[i]: those whose larger type index is i
  std::vector<std::vector<Constraint>> constraints;
};

Layout layout_of(const Ologism& o, const OracleConfig& cfg) {
  if (cfg.universe_size == 0 || cfg.universe_size > 16)
    throw ScaleError("universe size must be between 1 and 16");
  Layout l;
  l.types = o.type_ids();
  if (l.types.size() > cfg.type_cap)
    throw ScaleError(std::to_string(l.types.size()) + " types exceed the cap of " +
                     std::to_string(cfg.type_cap));
  if (cfg.universe_size * l.types.size() > 40)
    throw ScaleError("2^(" + std::to_string(cfg.universe_size * l.types.size()) +
                     ") assignments are out of reach");
  for (std::size_t k = 0; k < l.types.size(); ++k) l.index[l.types[k]] = k;
  l.constraints.resize(l.types.size());
  auto idx = [&](const TypeId& t) {
    auto it = l.index.find(t);
    if (it == l.index.end()) throw LookupError("unknown type '" + t + "'");
    return it->second;
  };
  for (const auto& p : o.premisses) {
    Constraint c{p.form, idx(p.subject), idx(p.predicate)};
    l.constraints[std::max(c.s, c.p)].push_back(c);
  }
  for (const auto& a : o.aspects) {
    if (!a.is_inclusion()) continue;
    Constraint c{Form::A, idx(a.source), idx(a.target)};
    l.constraints[std::max(c.s, c.p)].push_back(c);
  }
  return l;
}

void dfs(const Layout& l, std::uint32_t full, std::vector<std::uint32_t>& masks, std::size_t i,
         const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  if (i == masks.size()) {
    visit(masks);
    return;
  }
  for (std::uint32_t m = 0; m <= full; ++m) {
    masks[i] = m;
    bool ok = true;
    for (const auto& c : l.constraints[i])
      if (!holds(c.form, masks[c.s], masks[c.p])) {
        ok = false;
        break;
      }
    if (ok) dfs(l, full, masks, i + 1, visit);
  }
}

}  // namespace

void for_each_model(const Ologism& o, const OracleConfig& cfg,
                    const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  if (!is_only(o))
    throw FragmentError("exhaustive enumeration needs an ologism without facts or non-'is' aspects");
  auto l = layout_of(o, cfg);
  std::vector<std::uint32_t> masks(l.types.size(), 0);
  std::uint32_t full = (1u << cfg.universe_size) - 1;
  dfs(l, full, masks, 0, visit);
}

std::size_t count_models(const Ologism& o, const OracleConfig& cfg) {
  std::size_t n = 0;
  for_each_model(o, cfg, [&](const std::vector<std::uint32_t>&) { ++n; });
  return n;
}

model::Model to_model(const Ologism& o, const std::vector<std::uint32_t>& masks) {
  model::Model m;
  m.name = "witness";
  m.ologism = o.name;
  auto ids = o.type_ids();
  for (std::size_t k = 0; k < ids.size(); ++k) {
    auto& set = m.carrier[ids[k]];
    for (std::uint32_t e = 0; e < 32; ++e)
      if (masks[k] & (1u << e)) set.insert(std::to_string(e));
  }
  return m;
}

std::vector<model::Model> enumerate_models(const Ologism& o, const OracleConfig& cfg) {
  std::vector<model::Model> out;
  for_each_model(o, cfg, [&](const std::vector<std::uint32_t>& masks) { out.push_back(to_model(o, masks)); });
  return out;
}

namespace {

std::vector<Proposition> all_propositions(const std::vector<TypeId>& types) {
  std::vector<Proposition> out;
  for (Form f : {Form::A, Form::E, Form::I, Form::O})
    for (const auto& s : types)
      for (const auto& p : types) out.push_back({f, s, p});
  return out;
}

}  // namespace

std::set<Proposition> semantic_consequences(const Ologism& o, const OracleConfig& cfg) {
  auto ids = o.type_ids();
  std::map<TypeId, std::size_t> index;
  for (std::size_t k = 0; k < ids.size(); ++k) index[ids[k]] = k;
  auto props = all_propositions(ids);
  std::vector<char> alive(props.size(), 1);
  for_each_model(o, cfg, [&](const std::vector<std::uint32_t>& masks) {
    for (std::size_t k = 0; k < props.size(); ++k)
      if (alive[k] && !holds(props[k].form, masks[index[props[k].subject]], masks[index[props[k].predicate]]))
        alive[k] = 0;
  });
  std::set<Proposition> out;
  for (std::size_t k = 0; k < props.size(); ++k)
    if (alive[k]) out.insert(props[k].canonical());
  return out;
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::optional<model::Model> random_candidate(const Ologism& o, const OracleConfig& cfg,
                                             std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  model::Model m;
  m.name = "sample";
  m.ologism = o.name;
  for (const auto& t : o.types) {
    auto& set = m.carrier[t.id];
    for (std::size_t e = 0; e < cfg.universe_size; ++e)
      if (coin(rng)) set.insert(std::to_string(e));
  }
  for (const auto& a : o.aspects) {
    if (a.is_inclusion()) continue;
    const auto& src = m.carrier[a.source];
    std::vector<std::string> tgt(m.carrier[a.target].begin(), m.carrier[a.target].end());
    if (!src.empty() && tgt.empty()) return std::nullopt;
    auto& fn = m.maps[a.name];
    for (const auto& x : src) {
      std::uniform_int_distribution<std::size_t> pick(0, tgt.size() - 1);
      fn[x] = tgt[pick(rng)];
    }
  }
  return m;
}

}  // namespace

std::optional<model::Model> sample_model(const Ologism& o, const OracleConfig& cfg, std::size_t index) {
  std::mt19937_64 rng(splitmix(cfg.seed ^ splitmix(index)));
  for (std::size_t attempt = 0; attempt < cfg.retry_cap; ++attempt) {
    auto m = random_candidate(o, cfg, rng);
    if (m && check_model(o, *m, model::Against::Premisses).empty()) return m;
  }
  return std::nullopt;
}

SoundnessVerdict check_soundness(const Ologism& o, const OracleConfig& cfg,
                                 const std::vector<Proposition>& claims) {
  SoundnessVerdict v;
  if (cfg.fragment == Fragment::IsOnly && is_only(o)) {
    v.exhaustive = true;
    auto ids = o.type_ids();
    std::map<TypeId, std::size_t> index;
    for (std::size_t k = 0; k < ids.size(); ++k) index[ids[k]] = k;
    for_each_model(o, cfg, [&](const std::vector<std::uint32_t>& masks) {
      ++v.models_checked;
      if (v.failing) return;
      for (const auto& c : claims) {
        if (!holds(c.form, masks[index.at(c.subject)], masks[index.at(c.predicate)])) {
          v.status = Status::Fail;
          v.failing = c;
          v.counter_model = to_model(o, masks);
          return;
        }
      }
    });
    v.note = "exhaustive over a universe of " + std::to_string(cfg.universe_size);
    return v;
  }
  v.exhaustive = false;
  for (std::size_t k = 0; k < cfg.sample_count; ++k) {
    auto m = sample_model(o, cfg, k);
    if (!m) {
      v.status = Status::Inconclusive;
      v.note = "sample " + std::to_string(k) + " not found within " + std::to_string(cfg.retry_cap) +
               " attempts";
      return v;
    }
    ++v.models_checked;
    for (const auto& c : claims) {
      if (!model::satisfies(*m, c)) {
        v.status = Status::Fail;
        v.failing = c;
        v.counter_model = std::move(m);
        return v;
      }
    }
  }
  v.note = std::to_string(v.models_checked) + " rejection-sampled models";
  return v;
}

SoundnessVerdict check_soundness(const Ologism& o, const OracleConfig& cfg) {
  return check_soundness(o, cfg, deduce::close(o).propositions());
}

CompletenessVerdict check_completeness(const Ologism& o, const OracleConfig& cfg) {
  if (!is_only(o))
    throw FragmentError("completeness is checked on ologisms without facts or non-'is' aspects");
  auto theory = deduce::close(o);
  auto gap_at = [&](std::size_t n, std::size_t& models) {
    OracleConfig c = cfg;
    c.universe_size = n;
    models = count_models(o, c);
    auto sem = semantic_consequences(o, c);
    std::vector<Proposition> gap;
    for (const auto& p : sem) {
      if (models == 0 && !(p.form == Form::O && p.subject == p.predicate)) continue;
      if (!theory.contains(p)) gap.push_back(p);
    }
    return gap;
  };
  CompletenessVerdict v;
  v.universe_size = cfg.universe_size;
  v.gap = gap_at(cfg.universe_size, v.models);
  v.consistent = v.models > 0;
  if (!v.consistent) {
    // Everything is a semantic consequence. Ask only for a contradiction.
    bool any = !deduce::contradictions(theory).empty();
    if (any) v.gap.clear();
  }
  if (!v.gap.empty()) {
    v.status = Status::Fail;
    std::size_t next = cfg.universe_size + 1;
    try {
      std::size_t models_next = 0;
      v.recheck_gap = gap_at(next, models_next);
      if (models_next == 0 && !deduce::contradictions(theory).empty()) v.recheck_gap.clear();
      v.recheck_universe = next;
    } catch (const ScaleError&) {
    }
  }
  return v;
}

}  // namespace ologism::oracle
