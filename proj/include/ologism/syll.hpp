#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ologism/core.hpp"

namespace ologism::syll {

struct SuperpositionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Arrow { Right, Left };

inline Arrow flip(Arrow a) { return a == Arrow::Right ? Arrow::Left : Arrow::Right; }

struct Node {
  bool bullet = false;
  std::string term;  // empty for bullets

  static Node term_node(std::string name) { return Node{false, std::move(name)}; }
  static Node bullet_node() { return Node{true, {}}; }

  friend bool operator==(const Node&, const Node&) = default;
};

/// Alternating nodes and oriented arrows, e.g. S -> • <- P.
/// Always arrows.size() + 1 == nodes.size().
struct Diagram {
  std::vector<Node> nodes;
  std::vector<Arrow> arrows;

  std::size_t bullet_count() const;
  /// Terms at both extremes, at least one node, arrow count consistent.
  bool is_diagram() const;
  /// "S → • ← P"
  std::string to_string() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

Diagram diagram_of(const Proposition& p);
Diagram reverse(const Diagram& d);
/// Joins two diagrams on the shared extremal term (last of d1, first of d2).
Diagram superpose(const Diagram& d1, const Diagram& d2);
/// Proposition whose diagram is d or reverse(d), in d's reading direction.
std::optional<Proposition> classify(const Diagram& d);
/// Splits at interior terms; every segment must be a syllogistic diagram or
/// a reversal of one.
bool is_well_formed(const Diagram& d);
inline std::size_t bullet_count(const Diagram& d) { return d.bullet_count(); }

struct Rejection {
  enum class Reason { BulletCountMismatch, DiscordantArrows, ResultNotWellFormed, ConclusionMismatch };
  Reason reason;
  std::string detail;
};

std::string reason_name(Rejection::Reason r);

/// Removes the leftmost interior occurrence of `middle` sitting between two
/// concordant arrows, replacing `-> m ->` by `->` (resp. `<-`).
std::variant<Diagram, Rejection> delete_middle(const Diagram& d, const std::string& middle);

enum class Rule { AxiomPremiss, AxiomExistentialImport, Reversal, Superposition, Composition };

std::string rule_name(Rule r);

struct ProofTree {
  Diagram root;
  Rule rule = Rule::AxiomPremiss;
  std::vector<ProofTree> children;
  std::optional<Proposition> axiom;  // leaves only
  std::string middle;                // Composition only: deleted term

  std::size_t count(Rule r) const;
};

/// Recomputes the root diagram from the leaves, checking each step.
/// Returns nullopt if some node does not instantiate its rule.
std::optional<Diagram> replay(const ProofTree& tree);

/// Indented rendering, one diagram per line, leaves deepest.
std::string render(const ProofTree& tree);

using ProofResult = std::variant<ProofTree, Rejection>;

/// Premisses are two propositions, optionally followed by an existential
/// import premiss I(X,X). A single premiss is an immediate inference. Searches premiss orders and per-premiss reversals
/// for a superposition chain whose junction terms all delete and whose result
/// classifies to the conclusion (up to reversal).
ProofResult prove(const std::vector<Proposition>& premisses, const Proposition& conclusion);

/// Diagonal pairs {A(S,P),O(S,P)} or {I(S,P),E(S,P)} yield a proof of O(X,X).
std::optional<ProofTree> derive_contradiction(const Proposition& p, const Proposition& q);

struct MoodResult {
  int figure = 1;           // 1..4
  std::string mood;         // e.g. "EAE"
  Proposition major;
  Proposition minor;
  Proposition conclusion;
  bool valid = false;       // without import
  std::vector<std::string> import_terms;  // terms whose I(X,X) makes it valid
  std::string traditional_name;           // empty for invalid forms

  bool valid_with_import() const { return valid || !import_terms.empty(); }
};

struct MoodTable {
  std::vector<MoodResult> forms;  // figure-major, then mood in AEIO order
  std::size_t valid_count = 0;    // counts import-valid forms when enabled
  std::size_t import_only_count = 0;
  bool with_import = false;
};

MoodTable enumerate_moods(bool with_import);

}  // namespace ologism::syll
