#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ologism/core.hpp"
#include "ologism/deduce.hpp"
#include "ologism/model.hpp"

namespace ologism::cli {

enum class Format { Text, Json };

struct Options {
  Format format = Format::Text;
  bool color = false;
};

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFound = 1;       // contradiction, violation, rejection, failed oracle
inline constexpr int kExitInvalid = 2;     // parse or validation error, bad literal
inline constexpr int kExitIo = 3;          // unreadable or unwritable file
inline constexpr int kExitNotDecided = 4;  // oracle inconclusive or out of scale
inline constexpr int kExitUsage = 64;

// Ordered by severity.
enum class Status { Ok, Violation, Contradiction, ParseError };

std::string status_name(Status s);

struct Report {
  std::string command;
  Status status = Status::Ok;
  nlohmann::ordered_json sections = nlohmann::ordered_json::object();

  void raise(Status s) {
    if (s > status) status = s;
  }
  nlohmann::ordered_json to_json() const;
};

/// OLOGISM_PATH_BOUND, when set to a positive integer.
std::optional<std::size_t> path_bound_from_env();

int cmd_check(const std::string& path, const Options& opt, std::ostream& out, std::ostream& err);

/// Literals are "E:M,P" or "E(M,P)". `import_term` adds I(X,X) as a third premiss.
int cmd_prove(const std::vector<std::string>& premisses, const std::optional<std::string>& import_term,
              const std::string& conclusion, const Options& opt, std::ostream& out, std::ostream& err);

int cmd_enumerate(bool with_import, const Options& opt, std::ostream& out);

int cmd_model_check(const std::string& ologism_path, const std::string& model_path,
                    model::Against against, const Options& opt, std::ostream& out, std::ostream& err);

enum class OracleMode { Soundness, Completeness, Models };

struct OracleArgs {
  std::size_t universe = 3;
  OracleMode mode = OracleMode::Soundness;
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  std::size_t list_limit = 10;  // models printed in text mode
};

int cmd_oracle(const std::string& path, const OracleArgs& args, const Options& opt, std::ostream& out,
               std::ostream& err);

int cmd_export_dot(const std::string& path, bool derived, std::ostream& out, std::ostream& err);

/// DOT text for `o`; derived propositions become dashed edges.
std::string to_dot(const Ologism& o, bool derived);

struct ReplOptions {
  Options output;
  bool prompt = false;
};

/// REPL state. The theory is recomputed from scratch after every change.
class Session {
 public:
  explicit Session(Options opt = {}) : opt_(opt) { recompute(); }

  /// Runs one command line. Returns false on "quit".
  bool execute(const std::string& line, std::ostream& out);

  const Ologism& ologism() const { return ologism_; }
  const deduce::Theory& theory() const { return theory_; }

 private:
  void recompute();
  void report_changes(const deduce::Theory& before, std::ostream& out) const;

  Options opt_;
  Ologism ologism_;
  deduce::Theory theory_;
};

/// Reads commands until end of input or "quit". Returns 0.
int cmd_repl(std::istream& in, std::ostream& out, const ReplOptions& opt);

}  // namespace ologism::cli
