#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ologism/core.hpp"
#include "ologism/model.hpp"

namespace ologism::dsl {

enum class Severity { Error, Warning };

struct SourceDiagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;
  int line = 1;
  int column = 1;

  /// "3:7: error: [UnknownType] ..."
  std::string to_string() const;
};

template <class T>
struct ParseResult {
  std::optional<T> value;  // set when there is no error-severity diagnostic
  std::vector<SourceDiagnostic> diagnostics;

  bool ok() const { return value.has_value(); }
};

ParseResult<Ologism> parse_ologism(std::string_view source);
ParseResult<model::Model> parse_model(std::string_view source);

/// Applies one item written in document syntax (e.g. "E M A") to `o`.
/// Nothing changes when a diagnostic of error severity is returned.
std::vector<SourceDiagnostic> add_item(Ologism& o, std::string_view item);

/// Removes the declaration written as `item`. Refuses to remove a type or
/// aspect that something else still uses.
std::vector<SourceDiagnostic> retract_item(Ologism& o, std::string_view item);

struct SerializeError : std::runtime_error {
  SourceDiagnostic diagnostic;
  explicit SerializeError(SourceDiagnostic d)
      : std::runtime_error(d.message), diagnostic(std::move(d)) {}
};

/// Canonical text: types, aspects, A, E, I, O, facts, each sorted.
std::string serialize(const Ologism& o);
std::string serialize(const model::Model& m);

bool is_ident(std::string_view s);
std::string quote(std::string_view s);

}  // namespace ologism::dsl
