#include <random>

#include "doctest.h"
#include "ologism/deduce.hpp"
#include "ologism/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/random_ologism.hpp"

using namespace ologism;
using namespace ologism::oracle;

namespace {

Proposition P(Form f, const char* s, const char* p) { return {f, s, p}; }

Ologism doc(std::initializer_list<const char*> types, std::initializer_list<Proposition> props) {
  Ologism o;
  o.name = "doc";
  for (const char* t : types) add_type(o, t, std::string("a ") + t);
  for (const auto& p : props) add_premiss(o, p);
  return o;
}

}  // namespace

TEST_CASE("model counts") {
  OracleConfig cfg;
  CHECK(count_models(doc({"X"}, {}), cfg) == 8);
  CHECK(count_models(doc({"X"}, {P(Form::I, "X", "X")}), cfg) == 7);
  CHECK(count_models(doc({"S", "P"}, {P(Form::A, "S", "P"), P(Form::O, "S", "P")}), cfg) == 0);
  CHECK(count_models(doc({"S", "P"}, {P(Form::I, "S", "P"), P(Form::E, "S", "P")}), cfg) == 0);
  // A(S,P) alone: 3^3 pairs with S a subset of P.
  CHECK(count_models(doc({"S", "P"}, {P(Form::A, "S", "P")}), cfg) == 27);
  auto models = enumerate_models(doc({"X"}, {P(Form::I, "X", "X")}), cfg);
  CHECK(models.size() == 7);
  CHECK(models.front().carrier.at("X") == std::set<std::string>{"0"});
}

TEST_CASE("counts invariant under renaming") {
  std::mt19937_64 rng(21);
  OracleConfig cfg;
  for (int k = 0; k < 50; ++k) {
    auto o = gen::random_is_only(rng, 4, 6);
    Ologism renamed;
    renamed.name = o.name;
    auto rename = [](const TypeId& t) { return "Z" + t; };
    for (auto it = o.types.rbegin(); it != o.types.rend(); ++it) add_type(renamed, rename(it->id), it->label);
    for (const auto& p : o.premisses) add_premiss(renamed, {p.form, rename(p.subject), rename(p.predicate)});
    CHECK(count_models(o, cfg) == count_models(renamed, cfg));
  }
}

TEST_CASE("scale and fragment limits") {
  OracleConfig cfg;
  Ologism big;
  for (int k = 0; k < 7; ++k) add_type(big, "T" + std::to_string(k), "a t");
  CHECK_THROWS_AS(count_models(big, cfg), ScaleError);
  CHECK_THROWS_AS(count_models(fixtures::has_mother(), cfg), FragmentError);
  CHECK_THROWS_AS(check_completeness(fixtures::custodian(), cfg), FragmentError);
}

TEST_CASE("semantic consequences") {
  OracleConfig cfg;
  auto a = semantic_consequences(doc({"A", "B"}, {P(Form::A, "A", "B")}), cfg);
  CHECK(a.count(P(Form::A, "A", "B")));
  CHECK_FALSE(a.count(P(Form::I, "A", "B")));
  auto imp = semantic_consequences(doc({"S", "P"}, {P(Form::I, "S", "S"), P(Form::A, "S", "P")}), cfg);
  CHECK(imp.count(P(Form::I, "P", "S").canonical()));
  auto none = semantic_consequences(doc({"S", "P"}, {P(Form::A, "S", "P"), P(Form::O, "S", "P")}), cfg);
  CHECK(none.size() == 4 * 4 - 2);  // E/I collapse their two orientations

  auto animals = fixtures::animals();
  auto sem = semantic_consequences(animals, cfg);
  for (const auto& p : deduce::close(animals).propositions()) CHECK(sem.count(p));
}

TEST_CASE("animals: existence consequences the rules miss") {
  // I(M,A) inhabits M and A, O(B,A) inhabits B. With B in V, M in V and B, M
  // disjoint, every model also satisfies the propositions below, none of
  // which the eight rules reach.
  OracleConfig cfg;
  auto v = check_completeness(fixtures::animals(), cfg);
  std::vector<Proposition> expected{
      P(Form::I, "A", "A"), P(Form::I, "B", "B"), P(Form::I, "B", "V"), P(Form::I, "M", "M"),
      P(Form::I, "M", "V"), P(Form::I, "V", "V"), P(Form::O, "B", "M"), P(Form::O, "M", "B"),
      P(Form::O, "V", "B"), P(Form::O, "V", "M")};
  CHECK(v.status == Status::Fail);
  CHECK(v.gap == expected);
  CHECK(v.recheck_gap == expected);
}

TEST_CASE("soundness") {
  OracleConfig cfg;
  auto v = check_soundness(fixtures::animals(), cfg);
  CHECK(v.status == Status::Pass);
  CHECK(v.exhaustive);
  CHECK(v.models_checked > 0);

  OracleConfig sampled;
  sampled.fragment = Fragment::Full;
  sampled.seed = 42;
  sampled.sample_count = 1000;
  auto c = check_soundness(fixtures::custodian(), sampled);
  CHECK(c.status == Status::Pass);
  CHECK_FALSE(c.exhaustive);
  CHECK(c.models_checked == 1000);
  auto h = check_soundness(fixtures::has_mother(), sampled);
  CHECK(h.status == Status::Pass);

  auto claims = deduce::close(fixtures::animals()).propositions();
  claims.push_back(P(Form::E, "M", "V"));
  auto bad = check_soundness(fixtures::animals(), cfg, claims);
  CHECK(bad.status == Status::Fail);
  REQUIRE(bad.failing);
  CHECK(*bad.failing == P(Form::E, "M", "V"));
  REQUIRE(bad.counter_model);
  CHECK_FALSE(model::satisfies(*bad.counter_model, P(Form::E, "M", "V")));

  auto bad_sampled = check_soundness(fixtures::animals(), sampled, claims);
  CHECK(bad_sampled.status == Status::Fail);
}

TEST_CASE("sampling is reproducible per index") {
  OracleConfig cfg;
  cfg.seed = 9;
  auto o = fixtures::custodian();
  auto a = sample_model(o, cfg, 17);
  auto b = sample_model(o, cfg, 17);
  REQUIRE(a);
  CHECK(*a == *b);
  CHECK(check_model(o, *a, model::Against::Closure).empty());
}

TEST_CASE("sampling gives up when no model exists") {
  OracleConfig cfg;
  cfg.fragment = Fragment::Full;
  cfg.retry_cap = 50;
  cfg.sample_count = 3;
  auto v = check_soundness(doc({"S", "P"}, {P(Form::A, "S", "P"), P(Form::O, "S", "P")}), cfg);
  CHECK(v.status == Status::Inconclusive);
}

TEST_CASE("completeness on paper examples") {
  OracleConfig cfg;
  auto barbara = check_completeness(doc({"A", "B", "C"}, {P(Form::A, "A", "B"), P(Form::A, "B", "C")}), cfg);
  CHECK(barbara.gap.empty());
  CHECK(deduce::close(doc({"A", "B", "C"}, {P(Form::A, "A", "B"), P(Form::A, "B", "C")}))
            .contains(P(Form::A, "A", "C")));

  auto clash = check_completeness(doc({"A", "B"}, {P(Form::I, "A", "B"), P(Form::E, "A", "B")}), cfg);
  CHECK_FALSE(clash.consistent);
  CHECK(clash.status == Status::Pass);
}

TEST_CASE("completeness gap: I(A,B) entails I(A,A)") {
  OracleConfig cfg;
  auto v = check_completeness(doc({"A", "B"}, {P(Form::I, "A", "B")}), cfg);
  CHECK(v.status == Status::Fail);
  CHECK(std::find(v.gap.begin(), v.gap.end(), P(Form::I, "A", "A")) != v.gap.end());
  REQUIRE(v.recheck_universe);
  CHECK(*v.recheck_universe == 4);
  CHECK_FALSE(v.recheck_gap.empty());
}

TEST_CASE("soundness on random is-only ologisms") {
  std::mt19937_64 rng(77);
  OracleConfig cfg;
  for (int k = 0; k < 100; ++k) {
    auto o = gen::random_is_only(rng);
    auto th = deduce::close(o);
    auto sem = semantic_consequences(o, cfg);
    for (const auto& p : th.propositions()) CHECK(sem.count(p));
    if (!deduce::contradictions(th).empty()) CHECK(count_models(o, cfg) == 0);
  }
}
