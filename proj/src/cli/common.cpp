#include "common.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace ologism::cli {

std::string status_name(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::Violation: return "violation";
    case Status::Contradiction: return "contradiction";
    case Status::ParseError: return "parse_error";
  }
  return "?";
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["status"] = status_name(status);
  for (const auto& [k, v] : sections.items()) j[k] = v;
  return j;
}

std::optional<std::size_t> path_bound_from_env() {
  const char* raw = std::getenv("OLOGISM_PATH_BOUND");
  if (!raw || !*raw) return std::nullopt;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) return std::nullopt;
  return static_cast<std::size_t>(v);
}

namespace detail {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return ss.str();
}

std::string paint(const Options& opt, const char* ansi, const std::string& text) {
  if (!opt.color || opt.format == Format::Json) return text;
  return std::string("\033[") + ansi + "m" + text + "\033[0m";
}

Json diagnostic_json(const dsl::SourceDiagnostic& d) {
  return Json{{"severity", d.severity == dsl::Severity::Error ? "error" : "warning"},
              {"code", d.code},
              {"message", d.message},
              {"line", d.line},
              {"column", d.column}};
}

Json derivation_json(const deduce::Derivation& d) {
  Json j{{"conclusion", d.conclusion.to_string()}, {"rule", deduce::rule_tag_name(d.rule)}};
  Json kids = Json::array();
  for (const auto& c : d.children) kids.push_back(derivation_json(*c));
  j["children"] = std::move(kids);
  return j;
}

Json proposition_json(const Proposition& p, const Ologism& o) {
  return Json{{"proposition", p.to_string()},
              {"form", std::string(1, form_letter(p.form))},
              {"subject", p.subject},
              {"predicate", p.predicate},
              {"reading", reading(p, o)}};
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

namespace {

template <class T, class Parse>
Loaded<T> load(const std::string& path, Report& report, const Options& opt, std::ostream& err, Parse parse) {
  Loaded<T> out;
  auto text = read_file(path);
  if (!text) {
    err << path << ": cannot read file\n";
    out.exit_code = kExitIo;
    return out;
  }
  auto parsed = parse(*text);
  Json diags = Json::array();
  for (const auto& d : parsed.diagnostics) {
    diags.push_back(diagnostic_json(d));
    if (opt.format == Format::Text) {
      std::string sev = d.severity == dsl::Severity::Error ? red(opt, "error") : yellow(opt, "warning");
      err << path << ":" << d.line << ":" << d.column << ": " << sev << ": [" << d.code << "] " << d.message
          << "\n";
    }
  }
  auto& slot = report.sections["diagnostics"];
  if (slot.is_null()) slot = Json::array();
  for (auto& d : diags) slot.push_back(std::move(d));
  if (!parsed.ok()) {
    report.raise(Status::ParseError);
    out.exit_code = kExitInvalid;
    return out;
  }
  out.value = std::move(parsed.value);
  return out;
}

}  // namespace

Loaded<Ologism> load_ologism(const std::string& path, Report& report, const Options& opt, std::ostream& err) {
  auto out = load<Ologism>(path, report, opt, err, [](const std::string& t) { return dsl::parse_ologism(t); });
  if (!out.value) return out;
  // Structural checks beyond the parser.
  auto problems = validate(*out.value);
  for (const auto& p : problems) {
    report.sections["diagnostics"].push_back(
        Json{{"severity", "error"}, {"code", p.code}, {"message", p.message}, {"line", 1}, {"column", 1}});
    if (opt.format == Format::Text) err << path << ": " << red(opt, "error") << ": [" << p.code << "] " << p.message << "\n";
  }
  if (!problems.empty()) {
    report.raise(Status::ParseError);
    out.value.reset();
    out.exit_code = kExitInvalid;
  }
  return out;
}

Loaded<model::Model> load_model(const std::string& path, Report& report, const Options& opt,
                                std::ostream& err) {
  return load<model::Model>(path, report, opt, err, [](const std::string& t) { return dsl::parse_model(t); });
}

}  // namespace detail
}  // namespace ologism::cli
