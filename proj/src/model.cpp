#include "ologism/model.hpp"

#include <algorithm>

#include "ologism/deduce.hpp"

namespace ologism::model {

std::string kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::MissingCarrier: return "MissingCarrier";
    case ViolationKind::UnknownAspect: return "UnknownAspect";
    case ViolationKind::AmbiguousAspect: return "AmbiguousAspect";
    case ViolationKind::MapNotTotal: return "MapNotTotal";
    case ViolationKind::ImageOutsideTarget: return "ImageOutsideTarget";
    case ViolationKind::IsNotInclusion: return "IsNotInclusion";
    case ViolationKind::FactBroken: return "FactBroken";
    case ViolationKind::PrescriptionBroken: return "PrescriptionBroken";
    case ViolationKind::InternalConsistencyAlarm: return "InternalConsistencyAlarm";
  }
  return "?";
}

std::size_t ViolationReport::count(ViolationKind k) const {
  return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                [&](const Violation& v) { return v.kind == k; }));
}

namespace {

const std::set<Element>& carrier_of(const Model& m, const TypeId& t) {
  auto it = m.carrier.find(t);
  if (it == m.carrier.end()) throw LookupError("model has no carrier for type '" + t + "'");
  return it->second;
}

}  // namespace

bool satisfies(const Model& m, const Proposition& p) {
  const auto& s = carrier_of(m, p.subject);
  const auto& q = carrier_of(m, p.predicate);
  bool meets = std::any_of(s.begin(), s.end(), [&](const Element& x) { return q.count(x) > 0; });
  bool escapes = std::any_of(s.begin(), s.end(), [&](const Element& x) { return q.count(x) == 0; });
  switch (p.form) {
    case Form::A: return !escapes;
    case Form::E: return !meets;
    case Form::I: return meets;
    case Form::O: return escapes;
  }
  return false;
}

std::optional<Element> witness(const Model& m, const Proposition& p) {
  const auto& s = carrier_of(m, p.subject);
  const auto& q = carrier_of(m, p.predicate);
  bool want_inside = p.form == Form::E || p.form == Form::I;
  for (const auto& x : s)
    if ((q.count(x) > 0) == want_inside) return x;
  return std::nullopt;
}

namespace {

struct Checker {
  const Ologism& o;
  const Model& m;
  ViolationReport report;

  void add(ViolationKind k, std::string subject, std::optional<Element> w, std::string msg) {
    report.violations.push_back({k, std::move(subject), std::move(w), std::move(msg)});
  }

  bool carriers_present() {
    bool ok = true;
    for (const auto& t : o.types) {
      if (!m.carrier.count(t.id)) {
        add(ViolationKind::MissingCarrier, t.id, std::nullopt, "no set given for type " + t.id);
        ok = false;
      }
    }
    return ok;
  }

  void check_maps() {
    for (const auto& [name, fn] : m.maps) {
      if (name == kIsAspect) {
        for (const auto& [x, y] : fn)
          if (x != y)
            add(ViolationKind::IsNotInclusion, name, x,
                "'is' must be an inclusion, but sends " + x + " to " + y);
        continue;
      }
      auto n = std::count_if(o.aspects.begin(), o.aspects.end(),
                             [&](const Aspect& a) { return a.name == name; });
      if (n == 0)
        add(ViolationKind::UnknownAspect, name, std::nullopt, "map for undeclared aspect " + name);
      else if (n > 1)
        add(ViolationKind::AmbiguousAspect, name, std::nullopt,
            "aspect name " + name + " is declared between several pairs of types");
    }
    for (const auto& a : o.aspects) {
      const auto& src = m.carrier.at(a.source);
      const auto& tgt = m.carrier.at(a.target);
      if (a.is_inclusion()) {
        for (const auto& x : src)
          if (!tgt.count(x)) {
            add(ViolationKind::IsNotInclusion, a.source + " is " + a.target, x,
                x + " lies in " + a.source + " but not in " + a.target);
            break;
          }
        continue;
      }
      auto it = m.maps.find(a.name);
      if (it == m.maps.end()) {
        if (!src.empty())
          add(ViolationKind::MapNotTotal, a.name, *src.begin(), "no map given for aspect " + a.name);
        continue;
      }
      const auto& fn = it->second;
      for (const auto& x : src)
        if (!fn.count(x)) {
          add(ViolationKind::MapNotTotal, a.name, x, a.name + " is undefined on " + x);
        }
      for (const auto& [x, y] : fn) {
        if (!src.count(x))
          add(ViolationKind::MapNotTotal, a.name, x,
              a.name + " is defined on " + x + ", which is not in " + a.source);
        else if (!tgt.count(y))
          add(ViolationKind::ImageOutsideTarget, a.name, x,
              a.name + " sends " + x + " to " + y + ", which is not in " + a.target);
      }
    }
  }

  std::optional<Element> apply(const PathWord& w, Element x) const {
    for (const auto& a : w.arcs()) {
      if (a.is_inclusion()) continue;
      auto it = m.maps.find(a.name);
      if (it == m.maps.end()) return std::nullopt;
      auto jt = it->second.find(x);
      if (jt == it->second.end()) return std::nullopt;
      x = jt->second;
    }
    return x;
  }

  void check_facts() {
    for (std::size_t k = 0; k < o.facts.size(); ++k) {
      const auto& f = o.facts[k];
      std::string label = f.name ? *f.name : "fact #" + std::to_string(k + 1);
      auto src = m.carrier.find(f.lhs.source());
      if (src == m.carrier.end()) continue;
      for (const auto& x : src->second) {
        auto l = apply(f.lhs, x);
        auto r = apply(f.rhs, x);
        if (!l || !r) continue;  // partiality already reported
        if (*l != *r) {
          add(ViolationKind::FactBroken, label, x,
              label + ": " + f.lhs.to_string() + " sends " + x + " to " + *l + " but " +
                  f.rhs.to_string() + " sends it to " + *r);
          break;
        }
      }
    }
  }

  void check_props(const std::vector<Proposition>& props) {
    for (const auto& p : props) {
      if (satisfies(m, p)) continue;
      auto w = witness(m, p);
      std::string why;
      switch (p.form) {
        case Form::A: why = *w + " is in " + p.subject + " but not in " + p.predicate; break;
        case Form::E: why = *w + " is in both " + p.subject + " and " + p.predicate; break;
        case Form::I: why = p.subject + " and " + p.predicate + " do not meet"; break;
        case Form::O: why = p.subject + " is contained in " + p.predicate; break;
      }
      add(ViolationKind::PrescriptionBroken, p.to_string(), w, p.to_string() + " fails: " + why);
    }
  }
};

}  // namespace

ViolationReport check_model(const Ologism& o, const Model& m, Against against) {
  Checker c{o, m, {}};
  if (!c.carriers_present()) return c.report;
  c.check_maps();
  c.check_facts();

  Checker premiss_check{o, m, {}};
  premiss_check.check_props(o.premisses);
  if (against == Against::Premisses) {
    for (auto& v : premiss_check.report.violations) c.report.violations.push_back(std::move(v));
    return c.report;
  }
  Checker closure_check{o, m, {}};
  closure_check.check_props(deduce::close(o).propositions());
  bool premisses_ok = premiss_check.report.empty();
  for (auto& v : closure_check.report.violations) c.report.violations.push_back(std::move(v));
  if (premisses_ok && !closure_check.report.empty())
    c.add(ViolationKind::InternalConsistencyAlarm, o.name, std::nullopt,
          "model satisfies every premiss but not the closure");
  return c.report;
}

}  // namespace ologism::model
