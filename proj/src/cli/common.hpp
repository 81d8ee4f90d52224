#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "json.hpp"
#include "ologism/cli.hpp"
#include "ologism/deduce.hpp"
#include "ologism/dsl.hpp"

namespace ologism::cli::detail {

using Json = nlohmann::ordered_json;

std::optional<std::string> read_file(const std::string& path);

std::string paint(const Options& opt, const char* ansi, const std::string& text);
inline std::string red(const Options& o, const std::string& t) { return paint(o, "31", t); }
inline std::string green(const Options& o, const std::string& t) { return paint(o, "32", t); }
inline std::string yellow(const Options& o, const std::string& t) { return paint(o, "33", t); }

Json diagnostic_json(const dsl::SourceDiagnostic& d);
Json derivation_json(const deduce::Derivation& d);
Json proposition_json(const Proposition& p, const Ologism& o);

void print_json(std::ostream& out, const Json& j);

/// Outcome of reading and parsing a document. `exit_code` is set on failure,
/// after the diagnostics have been written (text) or stored in `report`.
template <class T>
struct Loaded {
  std::optional<T> value;
  int exit_code = kExitOk;
};

Loaded<Ologism> load_ologism(const std::string& path, Report& report, const Options& opt, std::ostream& err);
Loaded<model::Model> load_model(const std::string& path, Report& report, const Options& opt,
                                std::ostream& err);

}  // namespace ologism::cli::detail
