#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ologism/core.hpp"

namespace ologism::deduce {

enum class RuleTag { Premiss, Identity, Symmetry, R1, R2, R3, R4, R5, R6, R7, R8 };

std::string rule_tag_name(RuleTag r);

struct Derivation;
using DerivationPtr = std::shared_ptr<const Derivation>;

struct Derivation {
  Proposition conclusion;
  RuleTag rule = RuleTag::Premiss;
  std::vector<DerivationPtr> children;
  std::size_t depth = 0;  // 0 for leaves
};

/// The layered closure of an ologism's premisses. E and I members are stored
/// canonically in the star sets; derivations are kept for every orientation.
struct Theory {
  std::vector<TypeId> types;
  std::set<Proposition> alpha_star;
  std::set<Proposition> epsilon_star;
  std::set<Proposition> iota_star;
  std::set<Proposition> o_star;
  std::map<Proposition, DerivationPtr> derivations;

  bool contains(const Proposition& p) const;
  /// Canonical members of all four sets, identities included, sorted.
  std::vector<Proposition> propositions() const;
  std::size_t size() const;

  friend bool operator==(const Theory& a, const Theory& b) {
    return a.alpha_star == b.alpha_star && a.epsilon_star == b.epsilon_star &&
           a.iota_star == b.iota_star && a.o_star == b.o_star;
  }
};

Theory close(const Ologism& o);

/// Canonical closure members that are neither premisses nor identities.
std::vector<Proposition> derived_beyond_premisses(const Theory& t, const Ologism& o);

struct Contradiction {
  TypeId type;
  DerivationPtr derivation;
};

/// Every X with O(X,X) in the closure.
std::vector<Contradiction> contradictions(const Theory& t);

/// nullptr when the proposition is not derivable.
DerivationPtr explain(const Theory& t, const Proposition& p);

/// Checks that every node instantiates its rule and every Premiss leaf is a
/// premiss of `o` exactly as written.
bool replays(const Derivation& d, const Ologism& o);

/// Indented tree, conclusion first, premisses below.
std::string render(const Derivation& d);

}  // namespace ologism::deduce
