#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ologism/cli.hpp"
#include "ologism/deduce.hpp"
#include "ologism/dsl.hpp"
#include "ologism/eqtheory.hpp"
#include "ologism/model.hpp"
#include "ologism/syll.hpp"

namespace py = pybind11;
using namespace ologism;

namespace {

std::string diagnostics_text(const std::vector<dsl::SourceDiagnostic>& ds) {
  std::string out;
  for (const auto& d : ds) out += (out.empty() ? "" : "\n") + d.to_string();
  return out;
}

template <class T>
T unwrap(dsl::ParseResult<T> r) {
  if (!r.ok()) throw py::value_error(diagnostics_text(r.diagnostics));
  return std::move(*r.value);
}

Proposition literal(const std::string& s) {
  auto p = parse_proposition_literal(s);
  if (!p) throw py::value_error("invalid proposition literal '" + s + "'");
  return *p;
}

std::vector<std::string> names(const std::vector<Proposition>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

using Captured = std::tuple<int, std::string, std::string>;

template <class F>
Captured capture(F f) {
  std::ostringstream out, err;
  int code = f(out, err);
  return {code, out.str(), err.str()};
}

cli::Options options(const std::string& format) {
  cli::Options o;
  if (format == "json") o.format = cli::Format::Json;
  else if (format != "text") throw py::value_error("format must be 'text' or 'json'");
  return o;
}

}  // namespace

PYBIND11_MODULE(_ologism, m) {
  m.doc() = "Ologisms: olog types and aspects with categorical premisses.";

  py::class_<Ologism>(m, "Ologism")
      .def_readonly("name", &Ologism::name)
      .def_property_readonly("types",
                             [](const Ologism& o) {
                               std::vector<std::pair<std::string, std::string>> out;
                               for (const auto& t : o.types) out.emplace_back(t.id, t.label);
                               return out;
                             })
      .def_property_readonly("premisses", [](const Ologism& o) { return names(o.premisses); })
      .def_property_readonly("fact_count", [](const Ologism& o) { return o.facts.size(); })
      .def("__repr__", [](const Ologism& o) { return "<Ologism '" + o.name + "'>"; });

  py::class_<model::Model>(m, "Model")
      .def_readonly("name", &model::Model::name)
      .def_readonly("ologism", &model::Model::ologism)
      .def_readonly("carrier", &model::Model::carrier)
      .def_readonly("maps", &model::Model::maps);

  m.def("parse_ologism", [](const std::string& text) { return unwrap(dsl::parse_ologism(text)); },
        "Parse an ologism document; raises ValueError with positioned diagnostics.");
  m.def("parse_model", [](const std::string& text) { return unwrap(dsl::parse_model(text)); });
  m.def("serialize", [](const Ologism& o) { return dsl::serialize(o); });
  m.def("serialize_model", [](const model::Model& mo) { return dsl::serialize(mo); });

  m.def("closure", [](const Ologism& o) { return names(deduce::close(o).propositions()); });
  m.def("derived", [](const Ologism& o) {
    auto th = deduce::close(o);
    return names(deduce::derived_beyond_premisses(th, o));
  });
  m.def("contradictions", [](const Ologism& o) {
    std::vector<std::string> out;
    for (const auto& c : deduce::contradictions(deduce::close(o)))
      out.push_back(Proposition{Form::O, c.type, c.type}.to_string());
    return out;
  });
  m.def("explain", [](const Ologism& o, const std::string& prop) -> std::optional<std::string> {
    auto d = deduce::explain(deduce::close(o), literal(prop));
    if (!d) return std::nullopt;
    return deduce::render(*d);
  });

  m.def(
      "prove",
      [](const std::vector<std::string>& premisses, const std::string& conclusion) {
        std::vector<Proposition> ps;
        for (const auto& p : premisses) ps.push_back(literal(p));
        auto r = syll::prove(ps, literal(conclusion));
        py::dict out;
        if (auto* t = std::get_if<syll::ProofTree>(&r)) {
          out["proved"] = true;
          out["tree"] = syll::render(*t);
          out["reversals"] = t->count(syll::Rule::Reversal);
        } else {
          const auto& rej = std::get<syll::Rejection>(r);
          out["proved"] = false;
          out["reason"] = syll::reason_name(rej.reason);
          out["detail"] = rej.detail;
        }
        return out;
      },
      py::arg("premisses"), py::arg("conclusion"));

  m.def(
      "mood_counts",
      [](bool with_import) {
        auto t = syll::enumerate_moods(with_import);
        return std::make_tuple(t.forms.size(), t.valid_count, t.import_only_count);
      },
      py::arg("with_import") = false);

  m.def(
      "check_model",
      [](const Ologism& o, const model::Model& mo, const std::string& against) {
        auto a = against == "premisses" ? model::Against::Premisses : model::Against::Closure;
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& v : model::check_model(o, mo, a).violations)
          out.emplace_back(model::kind_name(v.kind), v.message);
        return out;
      },
      py::arg("ologism"), py::arg("model"), py::arg("against") = "closure");

  m.def("equal_paths", [](const Ologism& o, const std::string& p, const std::string& q) {
    auto lhs = eq::parse_path(o, p);
    auto rhs = eq::parse_path(o, q, lhs.source());
    return std::holds_alternative<eq::Equal>(eq::equal_paths(o, lhs, rhs));
  });

  // Command front end: each returns (exit code, stdout, stderr).
  m.def(
      "cmd_check",
      [](const std::string& path, const std::string& format) {
        return capture([&](auto& o, auto& e) { return cli::cmd_check(path, options(format), o, e); });
      },
      py::arg("path"), py::arg("format") = "text");
  m.def(
      "cmd_export_dot",
      [](const std::string& path, bool derived) {
        return capture([&](auto& o, auto& e) { return cli::cmd_export_dot(path, derived, o, e); });
      },
      py::arg("path"), py::arg("derived") = false);
  m.def("to_dot", &cli::to_dot, py::arg("ologism"), py::arg("derived") = false);
}
