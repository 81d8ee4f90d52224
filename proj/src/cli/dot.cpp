#include <sstream>

#include "common.hpp"

namespace ologism::cli {

namespace {

std::string id(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

std::string path_label(const PathWord& w) {
  if (w.empty()) return "id(" + w.source() + ")";
  std::string out;
  for (const auto& a : w.arcs()) out += (out.empty() ? "" : " ; ") + a.name;
  return out;
}

}  // namespace

std::string to_dot(const Ologism& o, bool derived) {
  std::ostringstream os;
  os << "digraph " << id(o.name) << " {\n";
  for (const auto& t : o.types)
    os << "  " << id(t.id) << " [shape=box, label=" << id(t.id + ": " + t.label) << "];\n";
  for (const auto& a : o.aspects)
    os << "  " << id(a.source) << " -> " << id(a.target) << " [label=" << id(a.name) << "];\n";

  // E/I/O premisses: unlabelled bullet nodes, arrows as in their diagrams.
  int bullets = 0;
  auto bullet = [&] {
    std::string b = "_bullet" + std::to_string(++bullets);
    os << "  " << id(b) << " [shape=point, label=\"\"];\n";
    return b;
  };
  auto edge = [&](const std::string& from, const std::string& to) {
    os << "  " << id(from) << " -> " << id(to) << " [arrowhead=normal];\n";
  };
  for (const auto& p : o.premisses) {
    switch (p.form) {
      case Form::A: break;  // drawn as the is aspect
      case Form::E: {
        auto b = bullet();
        edge(p.subject, b);
        edge(p.predicate, b);
        break;
      }
      case Form::I: {
        auto b = bullet();
        edge(b, p.subject);
        edge(b, p.predicate);
        break;
      }
      case Form::O: {
        auto b1 = bullet();
        auto b2 = bullet();
        edge(b1, p.subject);
        edge(b1, b2);
        edge(p.predicate, b2);
        break;
      }
    }
  }

  for (std::size_t k = 0; k < o.facts.size(); ++k) {
    const auto& f = o.facts[k];
    std::string name = f.name ? *f.name : "fact " + std::to_string(k + 1);
    for (const auto* side : {&f.lhs, &f.rhs})
      os << "  " << id(f.lhs.source()) << " -> " << id(f.lhs.target()) << " [style=bold, color=gray40, label="
         << id("✓ " + name + ": " + path_label(*side)) << "];\n";
  }

  if (derived) {
    auto theory = deduce::close(o);
    for (const auto& p : deduce::derived_beyond_premisses(theory, o))
      os << "  " << id(p.subject) << " -> " << id(p.predicate) << " [style=dashed, label="
         << id(std::string(1, form_letter(p.form))) << "];\n";
  }
  os << "}\n";
  return os.str();
}

int cmd_export_dot(const std::string& path, bool derived, std::ostream& out, std::ostream& err) {
  Report report;
  report.command = "export-dot";
  auto loaded = detail::load_ologism(path, report, Options{}, err);
  if (loaded.exit_code != kExitOk) return loaded.exit_code;
  out << to_dot(*loaded.value, derived);
  return kExitOk;
}

}  // namespace ologism::cli
