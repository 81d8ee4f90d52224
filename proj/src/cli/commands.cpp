#include <algorithm>
#include <sstream>

#include "common.hpp"
#include "ologism/oracle.hpp"
#include "ologism/syll.hpp"

namespace ologism::cli {

using detail::Json;

namespace {

void indent(std::ostream& out, const std::string& block, const std::string& pad) {
  std::istringstream in(block);
  for (std::string line; std::getline(in, line);) out << pad << line << "\n";
}

std::string fixed_width(const std::string& s, std::size_t w) {
  return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' ');
}

}  // namespace

// ---------------------------------------------------------------- check

int cmd_check(const std::string& path, const Options& opt, std::ostream& out, std::ostream& err) {
  Report report;
  report.command = "check";
  auto loaded = detail::load_ologism(path, report, opt, err);
  if (loaded.exit_code == kExitIo) return kExitIo;
  if (!loaded.value) {
    if (opt.format == Format::Json) detail::print_json(out, report.to_json());
    else out << "status: " << detail::red(opt, status_name(report.status)) << "\n";
    return kExitInvalid;
  }
  const Ologism& o = *loaded.value;
  auto theory = deduce::close(o);
  auto derived = deduce::derived_beyond_premisses(theory, o);
  auto contra = deduce::contradictions(theory);
  if (!contra.empty()) report.raise(Status::Contradiction);

  report.sections["ologism"] = o.name;
  report.sections["counts"] = Json{{"types", o.types.size()},
                                   {"aspects", o.aspects.size()},
                                   {"facts", o.facts.size()},
                                   {"premisses", o.premisses.size()},
                                   {"closure", theory.size()}};
  Json dj = Json::array();
  for (const auto& p : derived) {
    auto j = detail::proposition_json(p, o);
    if (auto d = deduce::explain(theory, p)) j["rule"] = deduce::rule_tag_name(d->rule);
    dj.push_back(std::move(j));
  }
  report.sections["derived"] = std::move(dj);
  Json cj = Json::array();
  for (const auto& c : contra) {
    Proposition p{Form::O, c.type, c.type};
    auto j = detail::proposition_json(p, o);
    j["derivation"] = detail::derivation_json(*c.derivation);
    cj.push_back(std::move(j));
  }
  report.sections["contradictions"] = std::move(cj);

  if (opt.format == Format::Json) {
    detail::print_json(out, report.to_json());
  } else {
    out << "ologism \"" << o.name << "\": " << o.types.size() << " types, " << o.aspects.size() << " aspects, "
        << o.facts.size() << " facts, " << o.premisses.size() << " premisses\n";
    out << "closure: " << theory.size() << " propositions\n";
    if (derived.empty()) {
      out << "derived: none\n";
    } else {
      out << "derived:\n";
      for (const auto& p : derived) out << "  " << fixed_width(p.to_string(), 10) << reading(p, o) << "\n";
    }
    if (contra.empty()) {
      out << "contradictions: none\n";
    } else {
      out << "contradictions:\n";
      for (const auto& c : contra) {
        Proposition p{Form::O, c.type, c.type};
        out << "  " << detail::red(opt, p.to_string()) << "  " << reading(p, o) << "\n";
        indent(out, deduce::render(*c.derivation), "    ");
      }
    }
    std::string st = status_name(report.status);
    out << "status: " << (report.status == Status::Ok ? detail::green(opt, st) : detail::red(opt, st)) << "\n";
  }
  return contra.empty() ? kExitOk : kExitFound;
}

// ---------------------------------------------------------------- prove

namespace {

// With a single premiss the import premiss is passed as an ordinary second
// premiss; label its leaf as the import axiom it is.
void mark_import(syll::ProofTree& t, const Proposition& imp) {
  if (t.children.empty() && t.axiom == imp) t.rule = syll::Rule::AxiomExistentialImport;
  for (auto& c : t.children) mark_import(c, imp);
}

Json proof_json(const syll::ProofTree& t) {
  Json j{{"diagram", t.root.to_string()}, {"rule", syll::rule_name(t.rule)}};
  if (t.axiom) j["axiom"] = t.axiom->to_string();
  if (!t.middle.empty()) j["middle"] = t.middle;
  Json kids = Json::array();
  for (const auto& c : t.children) kids.push_back(proof_json(c));
  j["children"] = std::move(kids);
  return j;
}

}  // namespace

int cmd_prove(const std::vector<std::string>& premiss_text, const std::optional<std::string>& import_term,
              const std::string& conclusion_text, const Options& opt, std::ostream& out, std::ostream& err) {
  std::vector<Proposition> premisses;
  for (const auto& t : premiss_text) {
    auto p = parse_proposition_literal(t);
    if (!p) {
      err << "invalid proposition literal '" << t << "' (expected e.g. E:M,P)\n";
      return kExitInvalid;
    }
    premisses.push_back(*p);
  }
  auto conclusion = parse_proposition_literal(conclusion_text);
  if (!conclusion) {
    err << "invalid proposition literal '" << conclusion_text << "' (expected e.g. E:S,P)\n";
    return kExitInvalid;
  }
  if (import_term) premisses.push_back({Form::I, *import_term, *import_term});

  syll::ProofResult result;
  try {
    result = syll::prove(premisses, *conclusion);
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kExitInvalid;
  }

  Report report;
  report.command = "prove";
  Json given = Json::array();
  for (const auto& p : premisses) given.push_back(p.to_string());
  report.sections["premisses"] = std::move(given);
  report.sections["conclusion"] = conclusion->to_string();

  if (auto* tree = std::get_if<syll::ProofTree>(&result)) {
    if (import_term && premisses.size() == 2) mark_import(*tree, premisses.back());
    report.sections["proof"] = proof_json(*tree);
    if (opt.format == Format::Json) {
      detail::print_json(out, report.to_json());
    } else {
      out << detail::green(opt, "proved") << ": " << conclusion->to_string() << "\n";
      indent(out, syll::render(*tree), "  ");
    }
    return kExitOk;
  }
  const auto& rej = std::get<syll::Rejection>(result);
  report.raise(Status::Violation);
  report.sections["rejection"] = Json{{"reason", syll::reason_name(rej.reason)}, {"detail", rej.detail}};
  if (opt.format == Format::Json) {
    detail::print_json(out, report.to_json());
  } else {
    out << detail::red(opt, "rejected") << ": " << rej.detail << "\n";
    out << "reason: " << syll::reason_name(rej.reason) << "\n";
  }
  return kExitFound;
}

// ---------------------------------------------------------------- enumerate

int cmd_enumerate(bool with_import, const Options& opt, std::ostream& out) {
  auto table = syll::enumerate_moods(with_import);
  std::size_t plain = 0;
  for (const auto& f : table.forms) plain += f.valid ? 1 : 0;

  if (opt.format == Format::Json) {
    Report report;
    report.command = "enumerate";
    report.sections["with_import"] = with_import;
    Json forms = Json::array();
    for (const auto& f : table.forms) {
      Json j{{"figure", f.figure},
             {"mood", f.mood},
             {"major", f.major.to_string()},
             {"minor", f.minor.to_string()},
             {"conclusion", f.conclusion.to_string()},
             {"valid", f.valid},
             {"import_terms", f.import_terms}};
      if (!f.traditional_name.empty()) j["name"] = f.traditional_name;
      forms.push_back(std::move(j));
    }
    report.sections["forms"] = std::move(forms);
    report.sections["totals"] = Json{{"forms", table.forms.size()},
                                     {"valid", table.valid_count},
                                     {"valid_without_import", plain},
                                     {"import_only", table.import_only_count}};
    detail::print_json(out, report.to_json());
    return kExitOk;
  }

  out << "fig mood major   minor   concl.  verdict          name\n";
  for (const auto& f : table.forms) {
    std::string verdict = "-";
    std::string shown = verdict;
    if (f.valid) {
      shown = "valid";
      verdict = detail::green(opt, shown);
    } else if (with_import && !f.import_terms.empty()) {
      shown = "import";
      for (std::size_t k = 0; k < f.import_terms.size(); ++k) shown += (k ? "," : " ") + f.import_terms[k];
      verdict = detail::yellow(opt, shown);
    }
    std::ostringstream row;
    row << " " << f.figure << "  " << f.mood << "  " << fixed_width(f.major.to_string(), 7) << " "
        << fixed_width(f.minor.to_string(), 7) << " " << fixed_width(f.conclusion.to_string(), 7) << " "
        << verdict << fixed_width("", 17 - std::min<std::size_t>(shown.size(), 16)) << f.traditional_name;
    std::string text = row.str();
    text.erase(text.find_last_not_of(' ') + 1);
    out << text << "\n";
  }
  out << "forms: " << table.forms.size() << "\n";
  out << "valid without import: " << plain << "\n";
  if (with_import) {
    out << "valid with import: " << table.valid_count << "\n";
    out << "valid only with import: " << table.import_only_count << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- model-check

int cmd_model_check(const std::string& ologism_path, const std::string& model_path, model::Against against,
                    const Options& opt, std::ostream& out, std::ostream& err) {
  Report report;
  report.command = "model-check";
  auto o = detail::load_ologism(ologism_path, report, opt, err);
  if (o.exit_code == kExitIo) return kExitIo;
  auto m = detail::load_model(model_path, report, opt, err);
  if (m.exit_code == kExitIo) return kExitIo;
  if (o.value && m.value && m.value->ologism != o.value->name) {
    std::string msg = "model is for \"" + m.value->ologism + "\" but the ologism is \"" + o.value->name + "\"";
    report.sections["diagnostics"].push_back(Json{
        {"severity", "error"}, {"code", "OlogismMismatch"}, {"message", msg}, {"line", 1}, {"column", 1}});
    if (opt.format == Format::Text) err << model_path << ":1:1: " << detail::red(opt, "error") << ": [OlogismMismatch] " << msg << "\n";
    report.raise(Status::ParseError);
  }
  if (report.status == Status::ParseError) {
    if (opt.format == Format::Json) detail::print_json(out, report.to_json());
    else out << "status: " << detail::red(opt, status_name(report.status)) << "\n";
    return kExitInvalid;
  }

  auto violations = model::check_model(*o.value, *m.value, against);
  report.sections["ologism"] = o.value->name;
  report.sections["model"] = m.value->name;
  report.sections["against"] = against == model::Against::Closure ? "closure" : "premisses";
  Json vj = Json::array();
  for (const auto& v : violations.violations) {
    Json j{{"kind", model::kind_name(v.kind)}, {"subject", v.subject}, {"message", v.message}};
    if (v.witness) j["witness"] = *v.witness;
    vj.push_back(std::move(j));
  }
  report.sections["violations"] = std::move(vj);
  if (!violations.empty()) report.raise(Status::Violation);

  if (opt.format == Format::Json) {
    detail::print_json(out, report.to_json());
  } else {
    out << "model \"" << m.value->name << "\" for \"" << o.value->name << "\" against "
        << (against == model::Against::Closure ? "closure" : "premisses") << "\n";
    if (violations.empty()) out << "violations: none\n";
    for (const auto& v : violations.violations) {
      out << "  " << detail::red(opt, model::kind_name(v.kind)) << " " << v.subject;
      if (v.witness) out << " [witness " << *v.witness << "]";
      out << ": " << v.message << "\n";
    }
    std::string st = status_name(report.status);
    out << "status: " << (violations.empty() ? detail::green(opt, st) : detail::red(opt, st)) << "\n";
  }
  return violations.empty() ? kExitOk : kExitFound;
}

// ---------------------------------------------------------------- oracle

namespace {

std::string carriers_text(const model::Model& m) {
  std::string out;
  for (const auto& [t, elems] : m.carrier) {
    out += (out.empty() ? "" : " ") + t + "={";
    bool first = true;
    for (const auto& e : elems) {
      out += (first ? "" : ",") + e;
      first = false;
    }
    out += "}";
  }
  for (const auto& [a, fn] : m.maps) {
    out += " " + a + "=[";
    bool first = true;
    for (const auto& [x, y] : fn) {
      out += (first ? "" : ",") + x + "->" + y;
      first = false;
    }
    out += "]";
  }
  return out;
}

Json model_json(const model::Model& m) {
  Json carrier = Json::object();
  for (const auto& [t, elems] : m.carrier) carrier[t] = elems;
  Json maps = Json::object();
  for (const auto& [a, fn] : m.maps) maps[a] = fn;
  return Json{{"carrier", carrier}, {"maps", maps}};
}

Json props_json(const std::vector<Proposition>& ps) {
  Json j = Json::array();
  for (const auto& p : ps) j.push_back(p.to_string());
  return j;
}

std::string props_text(const std::vector<Proposition>& ps) {
  std::string out;
  for (const auto& p : ps) out += (out.empty() ? "" : " ") + p.to_string();
  return out.empty() ? "none" : out;
}

}  // namespace

int cmd_oracle(const std::string& path, const OracleArgs& args, const Options& opt, std::ostream& out,
               std::ostream& err) {
  Report report;
  report.command = "oracle";
  auto loaded = detail::load_ologism(path, report, opt, err);
  if (loaded.exit_code == kExitIo) return kExitIo;
  if (!loaded.value) {
    if (opt.format == Format::Json) detail::print_json(out, report.to_json());
    return kExitInvalid;
  }
  const Ologism& o = *loaded.value;
  oracle::OracleConfig cfg;
  cfg.universe_size = args.universe;
  cfg.seed = args.seed;
  cfg.sample_count = args.samples;
  cfg.fragment = oracle::is_only(o) ? oracle::Fragment::IsOnly : oracle::Fragment::Full;
  report.sections["ologism"] = o.name;
  report.sections["universe"] = args.universe;

  auto finish = [&](int code, const std::string& text) {
    if (opt.format == Format::Json) detail::print_json(out, report.to_json());
    else out << text;
    return code;
  };

  try {
    switch (args.mode) {
      case OracleMode::Soundness: {
        report.sections["mode"] = "soundness";
        auto v = oracle::check_soundness(o, cfg);
        report.sections["verdict"] = oracle::status_name(v.status);
        report.sections["exhaustive"] = v.exhaustive;
        report.sections["models_checked"] = v.models_checked;
        report.sections["note"] = v.note;
        std::ostringstream t;
        t << "soundness: " << oracle::status_name(v.status) << " (" << v.note << ", " << v.models_checked
          << " models)\n";
        if (v.failing) {
          report.raise(Status::Violation);
          report.sections["failing"] = v.failing->to_string();
          t << "failing: " << v.failing->to_string() << "\n";
          if (v.counter_model) {
            report.sections["counter_model"] = model_json(*v.counter_model);
            t << "counter-model: " << carriers_text(*v.counter_model) << "\n";
          }
        }
        int code = v.status == oracle::Status::Pass   ? kExitOk
                   : v.status == oracle::Status::Fail ? kExitFound
                                                      : kExitNotDecided;
        return finish(code, t.str());
      }
      case OracleMode::Completeness: {
        report.sections["mode"] = "completeness";
        auto v = oracle::check_completeness(o, cfg);
        report.sections["verdict"] = oracle::status_name(v.status);
        report.sections["models"] = v.models;
        report.sections["consistent"] = v.consistent;
        report.sections["gap"] = props_json(v.gap);
        std::ostringstream t;
        t << "completeness at n=" << v.universe_size << ": " << oracle::status_name(v.status) << " ("
          << v.models << " models)\n";
        t << "gap: " << props_text(v.gap) << "\n";
        if (v.recheck_universe) {
          report.sections["recheck"] = Json{{"universe", *v.recheck_universe}, {"gap", props_json(v.recheck_gap)}};
          t << "gap at n=" << *v.recheck_universe << ": " << props_text(v.recheck_gap) << "\n";
        }
        if (v.status == oracle::Status::Fail) report.raise(Status::Violation);
        return finish(v.status == oracle::Status::Pass ? kExitOk : kExitFound, t.str());
      }
      case OracleMode::Models: {
        report.sections["mode"] = "models";
        auto models = oracle::enumerate_models(o, cfg);
        report.sections["count"] = models.size();
        std::ostringstream t;
        t << "models at n=" << args.universe << ": " << models.size() << "\n";
        Json listed = Json::array();
        for (std::size_t k = 0; k < models.size() && k < args.list_limit; ++k) {
          listed.push_back(model_json(models[k]));
          t << "  " << carriers_text(models[k]) << "\n";
        }
        if (models.size() > args.list_limit) t << "  ... " << models.size() - args.list_limit << " more\n";
        report.sections["listed"] = std::move(listed);
        if (models.empty()) report.raise(Status::Contradiction);
        return finish(models.empty() ? kExitFound : kExitOk, t.str());
      }
    }
  } catch (const oracle::ScaleError& e) {
    err << "oracle: " << e.what() << "\n";
    return kExitNotDecided;
  } catch (const oracle::FragmentError& e) {
    err << "oracle: " << e.what() << "\n";
    return kExitNotDecided;
  }
  return kExitUsage;
}

}  // namespace ologism::cli
