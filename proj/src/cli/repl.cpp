#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "common.hpp"
#include "ologism/eqtheory.hpp"
#include "ologism/oracle.hpp"

namespace ologism::cli {

namespace {

const char* kHelp =
    "commands:\n"
    "  load FILE          replace the session with a document\n"
    "  add ITEM           add one item, e.g. add E M A\n"
    "  retract ITEM       remove one item\n"
    "  why PROP           derivation of a proposition, e.g. why O:A,B\n"
    "  derived            propositions derived beyond the premisses\n"
    "  contradictions     derivable O(X,X)\n"
    "  models N           count models over a universe of N elements\n"
    "  equal P = Q        decide a path equation, e.g. equal f ; g = h\n"
    "  show               print the current document\n"
    "  save FILE          write the current document\n"
    "  quit\n";

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

void print_diagnostics(std::ostream& out, const std::vector<dsl::SourceDiagnostic>& ds, const Options& opt) {
  for (const auto& d : ds) {
    std::string sev = d.severity == dsl::Severity::Error ? detail::red(opt, "error") : detail::yellow(opt, "warning");
    out << sev << ": [" << d.code << "] " << d.message << "\n";
  }
}

bool has_error(const std::vector<dsl::SourceDiagnostic>& ds) {
  for (const auto& d : ds)
    if (d.severity == dsl::Severity::Error) return true;
  return false;
}

}  // namespace

void Session::recompute() { theory_ = deduce::close(ologism_); }

void Session::report_changes(const deduce::Theory& before, std::ostream& out) const {
  auto was = before.propositions();
  auto now = theory_.propositions();
  std::set<Proposition> old_set(was.begin(), was.end());
  std::set<Proposition> new_set(now.begin(), now.end());
  auto derived = deduce::derived_beyond_premisses(theory_, ologism_);
  std::set<Proposition> derived_set(derived.begin(), derived.end());
  for (const auto& p : now)
    if (!old_set.count(p) && derived_set.count(p))
      out << "+ " << p.to_string() << "  " << reading(p, ologism_) << "\n";
  for (const auto& p : was)
    if (!new_set.count(p) && !(p.form == Form::A && p.subject == p.predicate)) out << "- " << p.to_string() << "\n";

  std::set<TypeId> old_contra;
  for (const auto& c : deduce::contradictions(before)) old_contra.insert(c.type);
  for (const auto& c : deduce::contradictions(theory_)) {
    if (old_contra.count(c.type)) continue;
    Proposition p{Form::O, c.type, c.type};
    out << detail::red(opt_, "! contradiction") << " " << p.to_string() << "  " << reading(p, ologism_) << "\n";
    std::istringstream lines(deduce::render(*c.derivation));
    for (std::string l; std::getline(lines, l);) out << "    " << l << "\n";
  }
}

bool Session::execute(const std::string& raw, std::ostream& out) {
  std::string line = trim(raw);
  if (line.empty() || line[0] == '#') return true;
  auto space = line.find_first_of(" \t");
  std::string cmd = line.substr(0, space);
  std::string arg = space == std::string::npos ? "" : trim(line.substr(space));

  if (cmd == "quit" || cmd == "exit") return false;
  if (cmd == "help") {
    out << kHelp;
    return true;
  }
  if (cmd == "load") {
    auto text = detail::read_file(arg);
    if (!text) {
      out << detail::red(opt_, "error") << ": cannot read " << arg << "\n";
      return true;
    }
    auto parsed = dsl::parse_ologism(*text);
    print_diagnostics(out, parsed.diagnostics, opt_);
    if (!parsed.ok()) return true;
    auto before = deduce::close(Ologism{});
    ologism_ = std::move(*parsed.value);
    recompute();
    out << "loaded \"" << ologism_.name << "\": " << ologism_.types.size() << " types, "
        << ologism_.premisses.size() << " premisses\n";
    report_changes(before, out);
    return true;
  }
  if (cmd == "add" || cmd == "retract") {
    auto diags = cmd == "add" ? dsl::add_item(ologism_, arg) : dsl::retract_item(ologism_, arg);
    print_diagnostics(out, diags, opt_);
    if (has_error(diags)) return true;
    auto before = theory_;
    recompute();
    out << (cmd == "add" ? "added" : "retracted") << "\n";
    report_changes(before, out);
    return true;
  }
  if (cmd == "why") {
    auto p = parse_proposition_literal(arg);
    if (!p) {
      out << detail::red(opt_, "error") << ": expected a proposition such as O:A,B\n";
      return true;
    }
    if (!ologism_.has_type(p->subject) || !ologism_.has_type(p->predicate)) {
      out << detail::red(opt_, "error") << ": unknown type in " << p->to_string() << "\n";
      return true;
    }
    auto d = deduce::explain(theory_, *p);
    if (!d) {
      out << p->to_string() << " is not derivable\n";
      return true;
    }
    out << p->to_string() << "  " << reading(*p, ologism_) << "\n" << deduce::render(*d);
    return true;
  }
  if (cmd == "derived") {
    auto ds = deduce::derived_beyond_premisses(theory_, ologism_);
    if (ds.empty()) out << "none\n";
    for (const auto& p : ds) out << p.to_string() << "  " << reading(p, ologism_) << "\n";
    return true;
  }
  if (cmd == "contradictions") {
    auto cs = deduce::contradictions(theory_);
    if (cs.empty()) out << "none\n";
    for (const auto& c : cs) {
      Proposition p{Form::O, c.type, c.type};
      out << p.to_string() << "  " << reading(p, ologism_) << "\n";
    }
    return true;
  }
  if (cmd == "models") {
    oracle::OracleConfig cfg;
    try {
      cfg.universe_size = arg.empty() ? 3 : std::stoul(arg);
      auto n = oracle::count_models(ologism_, cfg);
      out << "models at n=" << cfg.universe_size << ": " << n << "\n";
    } catch (const std::logic_error&) {
      out << detail::red(opt_, "error") << ": expected a universe size\n";
    } catch (const std::runtime_error& e) {
      out << detail::red(opt_, "error") << ": " << e.what() << "\n";
    }
    return true;
  }
  if (cmd == "equal") {
    auto eq = arg.find('=');
    if (eq == std::string::npos) {
      out << detail::red(opt_, "error") << ": expected P = Q\n";
      return true;
    }
    try {
      auto p = eq::parse_path(ologism_, trim(arg.substr(0, eq)));
      auto q = eq::parse_path(ologism_, trim(arg.substr(eq + 1)), p.source());
      auto r = eq::equal_paths(ologism_, p, q, path_bound_from_env());
      if (auto* e = std::get_if<eq::Equal>(&r)) {
        out << "equal (" << e->trace.size() << " rewrites)\n";
        for (const auto& s : e->trace) out << "  " << s.result.to_string() << "\n";
      } else {
        const auto& n = std::get<eq::NotEqualWithinBound>(r);
        out << "not equal within bound " << n.bound << " (" << n.explored << " words"
            << (n.cap_reached ? ", state cap reached" : "") << ")\n";
      }
    } catch (const std::exception& e) {
      out << detail::red(opt_, "error") << ": " << e.what() << "\n";
    }
    return true;
  }
  if (cmd == "show" || cmd == "save") {
    std::string text;
    try {
      text = dsl::serialize(ologism_);
    } catch (const dsl::SerializeError& e) {
      out << detail::red(opt_, "error") << ": [" << e.diagnostic.code << "] " << e.what() << "\n";
      return true;
    }
    if (cmd == "show") {
      out << text;
      return true;
    }
    std::ofstream f(arg, std::ios::binary);
    if (!(f << text)) {
      out << detail::red(opt_, "error") << ": cannot write " << arg << "\n";
      return true;
    }
    out << "saved " << arg << "\n";
    return true;
  }
  out << detail::red(opt_, "error") << ": unknown command '" << cmd << "' (try help)\n";
  return true;
}

int cmd_repl(std::istream& in, std::ostream& out, const ReplOptions& opt) {
  Session s(opt.output);
  for (;;) {
    if (opt.prompt) out << "ologism> " << std::flush;
    std::string line;
    if (!std::getline(in, line)) break;
    if (!s.execute(line, out)) break;
  }
  return kExitOk;
}

}  // namespace ologism::cli
