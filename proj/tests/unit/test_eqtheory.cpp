#include <random>

#include "doctest.h"
#include "ologism/eqtheory.hpp"
#include "support/fixtures.hpp"
#include "support/union_find_oracle.hpp"

using namespace ologism;
using namespace ologism::eq;

namespace {

std::set<std::set<uf::Word>> as_words(const std::vector<std::vector<PathWord>>& classes) {
  std::set<std::set<uf::Word>> out;
  for (const auto& c : classes) {
    std::set<uf::Word> s;
    for (const auto& w : c) s.insert(w.arcs());
    out.insert(s);
  }
  return out;
}

// f;g = h;k plus g;m = n over X -f-> Y -g-> Z, X -h-> W -k-> Z, Z -m-> Q, Y -n-> Q
Ologism chain_doc() {
  Ologism o;
  for (const char* t : {"X", "Y", "Z", "W", "Q"}) add_type(o, t, std::string("a ") + t);
  Aspect f{"f", "X", "Y"}, g{"g", "Y", "Z"}, h{"h", "X", "W"}, k{"k", "W", "Z"}, m{"m", "Z", "Q"},
      n{"n", "Y", "Q"}, r{"r", "Q", "Q"};
  for (const auto& a : {f, g, h, k, m, n, r}) add_aspect(o, a);
  o.facts.push_back({"square", PathWord("X", "Z", {f, g}), PathWord("X", "Z", {h, k})});
  o.facts.push_back({"tri", PathWord("Y", "Q", {g, m}), PathWord::of(n)});
  return o;
}

// An endomorphism with an idempotence fact and an identity fact.
Ologism loop_doc() {
  Ologism o;
  add_type(o, "X", "an x");
  Aspect e{"e", "X", "X"}, s{"s", "X", "X"};
  add_aspect(o, e);
  add_aspect(o, s);
  o.facts.push_back({"idem", PathWord("X", "X", {e, e}), PathWord::of(e)});
  o.facts.push_back({"inv", PathWord("X", "X", {s, s}), PathWord::identity("X")});
  return o;
}

}  // namespace

TEST_CASE("has-mother fact") {
  auto o = fixtures::has_mother();
  auto lhs = parse_path(o, "hasAsMother");
  auto rhs = parse_path(o, "hasAsParents ; w");
  auto r = equal_paths(o, lhs, rhs);
  REQUIRE(std::holds_alternative<Equal>(r));
  const auto& trace = std::get<Equal>(r).trace;
  CHECK(trace.size() == 1);
  CHECK(replay_trace(o, lhs, rhs, trace));
  CHECK(parse_path(o, "(hasAsParents, w)") == rhs);

  auto classes = congruent_closure_classes(o, "P", "W", 4);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0] == std::vector<PathWord>{lhs, rhs});
}

TEST_CASE("reflexivity, parallelism and lookups") {
  auto o = fixtures::animals();
  auto bv = parse_path(o, "is", std::string("B"));
  auto mv = parse_path(o, "is", std::string("M"));
  auto r = equal_paths(o, bv, bv);
  REQUIRE(std::holds_alternative<Equal>(r));
  CHECK(std::get<Equal>(r).trace.empty());
  CHECK_THROWS_AS(equal_paths(o, bv, mv), ParallelismError);
  CHECK_THROWS_AS(parse_path(o, "is"), LookupError);  // ambiguous without a source
  CHECK_THROWS_AS(parse_path(o, "has"), LookupError);

  Ologism two;
  add_type(two, "X", "an x");
  add_type(two, "Y", "a y");
  add_aspect(two, {"f", "X", "Y"});
  add_aspect(two, {"g", "X", "Y"});
  auto ne = equal_paths(two, parse_path(two, "f"), parse_path(two, "g"));
  REQUIRE(std::holds_alternative<NotEqualWithinBound>(ne));
  CHECK_FALSE(std::get<NotEqualWithinBound>(ne).cap_reached);
  CHECK(std::get<NotEqualWithinBound>(ne).bound == 8);
  CHECK(congruent_closure_classes(two, "X", "Y", 3).size() == 2);
}

TEST_CASE("classes match the brute-force union-find") {
  auto o = chain_doc();
  for (auto [s, t] : std::vector<std::pair<std::string, std::string>>{
           {"X", "Z"}, {"X", "Q"}, {"Y", "Q"}, {"Q", "Q"}, {"X", "W"}}) {
    CAPTURE(s);
    CAPTURE(t);
    CHECK(as_words(congruent_closure_classes(o, s, t, 4)) == uf::classes(o, s, t, 4));
  }
  auto l = loop_doc();
  CHECK(as_words(congruent_closure_classes(l, "X", "X", 5)) == uf::classes(l, "X", "X", 5));

  // f;g;m -> h;k;m and f;g;m -> f;n
  auto fgm = parse_path(o, "f;g;m");
  CHECK(std::holds_alternative<Equal>(equal_paths(o, fgm, parse_path(o, "h;k;m"))));
  CHECK(std::holds_alternative<Equal>(equal_paths(o, fgm, parse_path(o, "f;n"))));
  auto r = equal_paths(o, parse_path(o, "h;k;m"), parse_path(o, "f;n"));
  REQUIRE(std::holds_alternative<Equal>(r));
  CHECK(std::get<Equal>(r).trace.size() == 2);
}

TEST_CASE("identity facts insert and delete") {
  auto o = loop_doc();
  auto id = PathWord::identity("X");
  auto ss = parse_path(o, "s;s");
  auto r = equal_paths(o, id, ss);
  REQUIRE(std::holds_alternative<Equal>(r));
  CHECK(replay_trace(o, id, ss, std::get<Equal>(r).trace));
  CHECK(std::holds_alternative<Equal>(equal_paths(o, parse_path(o, "e;s;s;e;e"), parse_path(o, "e"))));
  CHECK(std::holds_alternative<NotEqualWithinBound>(equal_paths(o, parse_path(o, "s"), id)));
}

TEST_CASE("equivalence and congruence laws on random words") {
  auto o = loop_doc();
  CongruenceIndex index(o, "X", "X", 4);
  std::vector<PathWord> words;
  for (const auto& c : index.classes()) words.insert(words.end(), c.begin(), c.end());
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  auto eq = [&](const PathWord& a, const PathWord& b, std::size_t bound) {
    return std::holds_alternative<Equal>(equal_paths(o, a, b, bound));
  };
  for (int k = 0; k < 300; ++k) {
    const auto& a = words[pick(rng)];
    const auto& b = words[pick(rng)];
    const auto& c = words[pick(rng)];
    bool ab = eq(a, b, 6), ba = eq(b, a, 6), bc = eq(b, c, 6);
    CHECK(eq(a, a, 6));
    CHECK(ab == ba);
    if (ab && bc) CHECK(eq(a, c, 6));
    if (ab) {
      CHECK(eq(a, b, 9));  // monotone in the bound
      auto r = parse_path(o, "e");
      auto ra = compose(r, a), rb = compose(r, b);
      if (ra.length() <= 6 && rb.length() <= 6) CHECK(eq(ra, rb, 7));
      auto res = equal_paths(o, a, b, 6);
      CHECK(replay_trace(o, a, b, std::get<Equal>(res).trace));
    }
  }
}

TEST_CASE("state cap") {
  auto o = loop_doc();
  auto r = equal_paths(o, parse_path(o, "s"), PathWord::identity("X"), 12, 3);
  REQUIRE(std::holds_alternative<NotEqualWithinBound>(r));
  CHECK(std::get<NotEqualWithinBound>(r).cap_reached);
  CongruenceIndex capped(o, "X", "X", 10, 50);
  CHECK(capped.cap_reached());
}
