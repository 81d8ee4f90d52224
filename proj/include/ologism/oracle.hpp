#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ologism/core.hpp"
#include "ologism/model.hpp"

namespace ologism::oracle {

struct ScaleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when exhaustive enumeration is asked of an ologism with facts or
/// non-"is" aspects.
struct FragmentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Fragment { IsOnly, Full };

struct OracleConfig {
  std::size_t universe_size = 3;
  Fragment fragment = Fragment::IsOnly;
  std::uint64_t seed = 0;
  std::size_t sample_count = 1000;
  std::size_t type_cap = 6;
  /// Rejection-sampling attempts allowed per accepted sample.
  std::size_t retry_cap = 20000;
};

/// Only "is" aspects and propositions: no facts, no other aspects.
bool is_only(const Ologism& o);

/// Calls `visit` with one carrier bitmask per type (declaration order) for
/// every assignment satisfying the premisses and "is" inclusions. Bit k set
/// means element k belongs to the type. Deterministic order.
void for_each_model(const Ologism& o, const OracleConfig& cfg,
                    const std::function<void(const std::vector<std::uint32_t>&)>& visit);

std::size_t count_models(const Ologism& o, const OracleConfig& cfg);

/// Materialised models, elements named "0", "1", ...
std::vector<model::Model> enumerate_models(const Ologism& o, const OracleConfig& cfg);

model::Model to_model(const Ologism& o, const std::vector<std::uint32_t>& masks);

/// Canonical propositions over the declared types satisfied by every model
/// (every proposition when there is no model).
std::set<Proposition> semantic_consequences(const Ologism& o, const OracleConfig& cfg);

enum class Status { Pass, Fail, Inconclusive };

std::string status_name(Status s);

struct SoundnessVerdict {
  Status status = Status::Pass;
  bool exhaustive = true;
  std::size_t models_checked = 0;
  std::optional<Proposition> failing;
  std::optional<model::Model> counter_model;
  std::string note;
};

/// Checks that every model satisfies the closure.
SoundnessVerdict check_soundness(const Ologism& o, const OracleConfig& cfg);

/// Same check for an arbitrary claim set (used to exercise the failure path).
SoundnessVerdict check_soundness(const Ologism& o, const OracleConfig& cfg,
                                 const std::vector<Proposition>& claims);

/// One random model of the premisses drawn by rejection sampling, or nullopt
/// when the retry cap is exhausted. Sample `index` depends only on the seed
/// and the index.
std::optional<model::Model> sample_model(const Ologism& o, const OracleConfig& cfg,
                                         std::size_t index);

struct CompletenessVerdict {
  Status status = Status::Pass;
  std::size_t universe_size = 0;
  std::size_t models = 0;
  bool consistent = true;
  std::vector<Proposition> gap;  // semantic consequences missing from the closure
  std::optional<std::size_t> recheck_universe;
  std::vector<Proposition> recheck_gap;
};

/// gap = semantic_consequences \ close. When no model exists the semantic
/// side is everything; the check then only asks for the O(X,X) forms.
CompletenessVerdict check_completeness(const Ologism& o, const OracleConfig& cfg);

}  // namespace ologism::oracle
