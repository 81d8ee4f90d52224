#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ologism/core.hpp"

namespace ologism::model {

using Element = std::string;

/// Finite-set interpretation. Maps are keyed by aspect name; maps for "is"
/// aspects may be omitted and are then read as inclusions.
struct Model {
  std::string name;
  std::string ologism;  // name of the ologism the model is for
  std::map<TypeId, std::set<Element>> carrier;
  std::map<std::string, std::map<Element, Element>> maps;

  friend bool operator==(const Model&, const Model&) = default;
};

enum class ViolationKind {
  MissingCarrier,
  UnknownAspect,
  AmbiguousAspect,
  MapNotTotal,
  ImageOutsideTarget,
  IsNotInclusion,
  FactBroken,
  PrescriptionBroken,
  InternalConsistencyAlarm,
};

std::string kind_name(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::string subject;  // aspect, type, fact label or proposition
  std::optional<Element> witness;
  std::string message;
};

struct ViolationReport {
  std::vector<Violation> violations;

  bool empty() const { return violations.empty(); }
  std::size_t count(ViolationKind k) const;
};

enum class Against { Premisses, Closure };

/// A: subset, E: disjoint, I: intersecting, O: not a subset.
/// Throws LookupError when a term has no carrier.
bool satisfies(const Model& m, const Proposition& p);

/// Element of the subject witnessing why p fails (A, E) or holds (I, O).
std::optional<Element> witness(const Model& m, const Proposition& p);

ViolationReport check_model(const Ologism& o, const Model& m, Against against);

}  // namespace ologism::model
