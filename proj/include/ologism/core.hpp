#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ologism {

using TypeId = std::string;

/// Name reserved for aspects that denote inclusion ("Every X is Y").
inline constexpr std::string_view kIsAspect = "is";

struct LookupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CompositionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A box of the olog: a short id plus the singular indefinite phrase it carries.
struct TypeDecl {
  TypeId id;
  std::string label;

  friend auto operator<=>(const TypeDecl&, const TypeDecl&) = default;
};

/// A labelled functional arrow between two types. Identity is the triple
/// (name, source, target).
struct Aspect {
  std::string name;
  TypeId source;
  TypeId target;

  bool is_inclusion() const { return name == kIsAspect; }

  friend auto operator<=>(const Aspect&, const Aspect&) = default;
};

/// A path of aspects in the free category over the olog graph. The empty
/// word on a type is its identity.
class PathWord {
 public:
  /// Throws CompositionError when the arcs do not chain or the endpoints
  /// disagree with them.
  PathWord(TypeId source, TypeId target, std::vector<Aspect> arcs);

  static PathWord identity(TypeId on);
  static PathWord of(const Aspect& arc);

  const TypeId& source() const { return source_; }
  const TypeId& target() const { return target_; }
  const std::vector<Aspect>& arcs() const { return arcs_; }
  std::size_t length() const { return arcs_.size(); }
  bool empty() const { return arcs_.empty(); }

  std::string to_string() const;

  friend auto operator<=>(const PathWord&, const PathWord&) = default;

 private:
  TypeId source_;
  TypeId target_;
  std::vector<Aspect> arcs_;
};

/// Concatenation; throws CompositionError unless target(p) == source(q).
PathWord compose(const PathWord& p, const PathWord& q);

/// Declared equality of two parallel paths.
struct Fact {
  std::optional<std::string> name;
  PathWord lhs;
  PathWord rhs;

  friend auto operator<=>(const Fact&, const Fact&) = default;
};

enum class Form { A, E, I, O };

char form_letter(Form f);
std::optional<Form> form_from_letter(char c);

/// A categorical proposition, kept in the orientation it was written in.
/// E and I are symmetric; canonical() sorts their terms so that E(X,Y) and
/// E(Y,X) compare equal after canonicalization.
struct Proposition {
  Form form = Form::A;
  TypeId subject;
  TypeId predicate;

  Proposition canonical() const;
  /// Same proposition up to E/I symmetry.
  bool same_as(const Proposition& other) const { return canonical() == other.canonical(); }
  bool is_universal() const { return form == Form::A || form == Form::E; }
  bool is_affirmative() const { return form == Form::A || form == Form::I; }

  /// "E(B,M)"
  std::string to_string() const;

  friend auto operator<=>(const Proposition&, const Proposition&) = default;
};

/// Parses "E:S,P" or "E(S,P)". Returns nullopt on malformed input.
std::optional<Proposition> parse_proposition_literal(std::string_view text);

struct Diagnostic {
  std::string code;
  std::string message;

  friend auto operator<=>(const Diagnostic&, const Diagnostic&) = default;
};

/// An olog extended with categorical premisses. The bullet node and its arcs
/// are not stored: E/I/O premisses are kept as propositions and rebuilt as
/// bullet diagrams only when rendering. Every A premiss is mirrored by an
/// "is" aspect between the same types.
struct Ologism {
  std::string name;
  std::vector<TypeDecl> types;
  std::vector<Aspect> aspects;
  std::vector<Fact> facts;
  std::vector<Proposition> premisses;

  const TypeDecl* find_type(std::string_view id) const;
  bool has_type(std::string_view id) const { return find_type(id) != nullptr; }
  std::vector<Proposition> premisses_of(Form f) const;
  std::vector<TypeId> type_ids() const;

  friend bool operator==(const Ologism&, const Ologism&) = default;
};

/// Helpers that keep the A-premiss / is-aspect pairing intact.
void add_type(Ologism& o, TypeId id, std::string label);
void add_aspect(Ologism& o, Aspect a);
void add_premiss(Ologism& o, Proposition p);

/// Copy of `o` whose premisses are replaced by `props`. Identity
/// A(X,X) entries are skipped (they are implicit).
Ologism with_premisses(const Ologism& o, const std::vector<Proposition>& props);

/// Sorted, deduplicated copy used for structural comparison.
Ologism canonicalize(const Ologism& o);

std::vector<Diagnostic> validate(const Ologism& o);

/// Every way of reading `names` as a chain of declared aspects (aspect names
/// need not be unique, e.g. several "is" arcs).
std::vector<PathWord> resolve_path(const Ologism& o, const std::vector<std::string>& names);

/// English rendering: "Every bird is not a mammal".
std::string reading(const Proposition& p, const Ologism& o);

}  // namespace ologism
