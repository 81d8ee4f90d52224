#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ologism/core.hpp"

namespace ologism::eq {

struct ParallelismError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultStateCap = 100000;

struct RewriteStep {
  std::size_t fact = 0;     // index into Ologism::facts
  bool left_to_right = true;
  std::size_t position = 0; // arc offset where the rewrite applies
  PathWord result;          // word after the step
};

struct Equal {
  std::vector<RewriteStep> trace;
};

struct NotEqualWithinBound {
  std::size_t bound = 0;
  std::size_t explored = 0;
  bool cap_reached = false;
};

using EqualityResult = std::variant<Equal, NotEqualWithinBound>;

/// max(2 * longest fact side + 2, 8), raised to the lengths of the inputs.
std::size_t default_bound(const Ologism& o, const PathWord& p, const PathWord& q);

/// Breadth-first search from p using single fact rewrites in either direction
/// at any position, through words of length <= bound. Throws
/// ParallelismError for non-parallel inputs and LookupError for arcs that are
/// not aspects of `o`.
EqualityResult equal_paths(const Ologism& o, const PathWord& p, const PathWord& q,
                           std::optional<std::size_t> bound = std::nullopt,
                           std::size_t state_cap = kDefaultStateCap);

/// All words obtained from `w` by one rewrite, bounded by `bound`.
std::vector<RewriteStep> rewrites(const Ologism& o, const PathWord& w, std::size_t bound);

/// True if applying the steps in order turns p into q.
bool replay_trace(const Ologism& o, const PathWord& p, const PathWord& q,
                  const std::vector<RewriteStep>& trace);

/// Partition of every path word source -> target of length <= bound into
/// congruence classes. Immutable after construction.
class CongruenceIndex {
 public:
  CongruenceIndex(const Ologism& o, const TypeId& source, const TypeId& target, std::size_t bound,
                  std::size_t state_cap = kDefaultStateCap);

  const std::vector<std::vector<PathWord>>& classes() const { return classes_; }
  std::size_t bound() const { return bound_; }
  bool cap_reached() const { return cap_reached_; }
  /// nullopt if the word was not enumerated (too long or wrong endpoints).
  std::optional<std::size_t> class_of(const PathWord& w) const;
  bool same_class(const PathWord& a, const PathWord& b) const;

 private:
  std::size_t bound_;
  bool cap_reached_ = false;
  std::vector<std::vector<PathWord>> classes_;
  std::map<PathWord, std::size_t> index_;
};

/// Convenience wrapper returning the classes, each sorted, in sorted order.
std::vector<std::vector<PathWord>> congruent_closure_classes(const Ologism& o, const TypeId& source,
                                                             const TypeId& target,
                                                             std::size_t bound);

/// Resolves "a ; b ; c" or "id(X)" against the aspects of `o`. Ambiguous
/// names are resolved by chaining from `source` when given.
PathWord parse_path(const Ologism& o, const std::string& text,
                    const std::optional<TypeId>& source = std::nullopt);

}  // namespace ologism::eq
