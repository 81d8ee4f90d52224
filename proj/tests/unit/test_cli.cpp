#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "ologism/cli.hpp"
#include "ologism/dsl.hpp"

using namespace ologism;
using namespace ologism::cli;
using Json = nlohmann::json;

namespace {

std::string data(const std::string& name) { return std::string(OLOGISM_DATA_DIR) + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

template <class F>
Run run(F f) {
  std::ostringstream out, err;
  int code = f(out, err);
  return {code, out.str(), err.str()};
}

Options json_opts() {
  Options o;
  o.format = Format::Json;
  return o;
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto p = std::filesystem::temp_directory_path() / ("ologism_cli_" + name);
  std::ofstream(p) << content;
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("check: animals derives three propositions with readings") {
  auto r = run([](auto& o, auto& e) { return cmd_check(data("animals.olgm"), {}, o, e); });
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("I(A,V)    Some animal that is able to fly is a vertebrate") != std::string::npos);
  CHECK(r.out.find("O(A,B)    Some animal that is able to fly is not a bird") != std::string::npos);
  CHECK(r.out.find("O(V,A)    Some vertebrate is not an animal that is able to fly") != std::string::npos);
  CHECK(r.out.find("status: ok") != std::string::npos);

  auto j = Json::parse(run([](auto& o, auto& e) { return cmd_check(data("animals.olgm"), json_opts(), o, e); }).out);
  CHECK(j["status"] == "ok");
  std::set<std::string> derived;
  for (const auto& d : j["derived"]) derived.insert(d["proposition"]);
  CHECK(derived == std::set<std::string>{"I(A,V)", "O(A,B)", "O(V,A)"});
}

TEST_CASE("check: the square with its contradictory is reported") {
  auto r = run([](auto& o, auto& e) { return cmd_check(data("contradiction.olgm"), {}, o, e); });
  CHECK(r.code == kExitFound);
  CHECK(r.out.find("O(S,S)  Some square is not a square") != std::string::npos);
  CHECK(r.out.find("status: contradiction") != std::string::npos);

  auto j = Json::parse(run([](auto& o, auto& e) { return cmd_check(data("contradiction.olgm"), json_opts(), o, e); }).out);
  CHECK(j["status"] == "contradiction");
  bool found = false;
  for (const auto& c : j["contradictions"])
    if (c["proposition"] == "O(S,S)") {
      found = true;
      CHECK(c["derivation"]["children"].size() == 2);
    }
  CHECK(found);
}

TEST_CASE("check: malformed and missing files") {
  auto bad = temp_file("bad.olgm", "ologism \"b\" {\n  type X \"x\"\n  E X Nope\n}\n");
  auto r = run([&](auto& o, auto& e) { return cmd_check(bad, {}, o, e); });
  CHECK(r.code == kExitInvalid);
  CHECK(r.err.find(":3:7: error: [UnknownType]") != std::string::npos);
  auto j = Json::parse(run([&](auto& o, auto& e) { return cmd_check(bad, json_opts(), o, e); }).out);
  CHECK(j["status"] == "parse_error");
  CHECK(j["diagnostics"][0]["line"] == 3);

  auto missing = run([](auto& o, auto& e) { return cmd_check("/nonexistent/x.olgm", {}, o, e); });
  CHECK(missing.code == kExitIo);
  CHECK(missing.out.empty());
}

TEST_CASE("prove: paper examples") {
  auto ok = run([](auto& o, auto& e) { return cmd_prove({"E:M,P", "A:S,M"}, std::nullopt, "E:S,P", {}, o, e); });
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.rfind("proved: E(S,P)", 0) == 0);

  auto rej = run([](auto& o, auto& e) { return cmd_prove({"E:M,P", "I:M,S"}, std::nullopt, "I:S,P", {}, o, e); });
  CHECK(rej.code == kExitFound);
  CHECK(rej.out.rfind("rejected: bullet count 2 ≠ 1\n", 0) == 0);

  auto imp = run([](auto& o, auto& e) { return cmd_prove({"A:S,P"}, std::string("S"), "I:S,P", {}, o, e); });
  CHECK(imp.code == kExitOk);
  CHECK(imp.out.find("Axiom-ExistentialImport I(S,S)") != std::string::npos);

  auto j = Json::parse(run([](auto& o, auto& e) {
                         return cmd_prove({"E:M,P", "E:S,M"}, std::nullopt, "O:S,P", json_opts(), o, e);
                       }).out);
  CHECK(j["rejection"]["reason"] == "DiscordantArrows");

  auto lit = run([](auto& o, auto& e) { return cmd_prove({"X:M,P", "A:S,M"}, std::nullopt, "E:S,P", {}, o, e); });
  CHECK(lit.code == kExitInvalid);
}

TEST_CASE("enumerate: totals and stable output") {
  auto plain = run([](auto& o, auto&) { return cmd_enumerate(false, {}, o); });
  CHECK(plain.out.find("forms: 256\nvalid without import: 15\n") != std::string::npos);
  auto j1 = run([](auto& o, auto&) { return cmd_enumerate(true, json_opts(), o); });
  auto j2 = run([](auto& o, auto&) { return cmd_enumerate(true, json_opts(), o); });
  CHECK(j1.out == j2.out);
  auto j = Json::parse(j1.out);
  CHECK(j["forms"].size() == 256);
  CHECK(j["totals"]["valid"] == 24);
  CHECK(j["totals"]["valid_without_import"] == 15);
  CHECK(j["totals"]["import_only"] == 9);
  CHECK(j["forms"][0]["figure"] == 1);
  CHECK(j["forms"][0]["mood"] == "AAA");
  CHECK(j["forms"][255]["figure"] == 4);
  CHECK(j["forms"][255]["mood"] == "OOO");
}

TEST_CASE("model-check: paper models and a mutation") {
  for (auto [o, m] : {std::pair{"has_mother.olgm", "has_mother.olgmodel"}, std::pair{"custodian.olgm", "custodian.olgmodel"}}) {
    auto r = run([&](auto& out, auto& err) {
      return cmd_model_check(data(o), data(m), model::Against::Closure, {}, out, err);
    });
    CAPTURE(r.out);
    CHECK(r.code == kExitOk);
  }
  auto mutated = slurp(data("has_mother.olgmodel"));
  mutated.replace(mutated.find("John -> Elen1"), 13, "John -> Susan");
  auto path = temp_file("mutated.olgmodel", mutated);
  auto r = run([&](auto& out, auto& err) {
    return cmd_model_check(data("has_mother.olgm"), path, model::Against::Premisses, json_opts(), out, err);
  });
  CHECK(r.code == kExitFound);
  auto j = Json::parse(r.out);
  CHECK(j["status"] == "violation");
  REQUIRE(j["violations"].size() == 1);
  CHECK(j["violations"][0]["kind"] == "FactBroken");
  CHECK(j["violations"][0]["witness"] == "John");

  auto other = run([&](auto& out, auto& err) {
    return cmd_model_check(data("animals.olgm"), data("custodian.olgmodel"), model::Against::Closure, {}, out, err);
  });
  CHECK(other.code == kExitInvalid);
  CHECK(other.err.find("OlogismMismatch") != std::string::npos);
}

TEST_CASE("oracle: direct runs") {
  OracleArgs a;
  auto sound = run([&](auto& o, auto& e) { return cmd_oracle(data("animals.olgm"), a, json_opts(), o, e); });
  CHECK(sound.code == kExitOk);
  CHECK(Json::parse(sound.out)["verdict"] == "pass");

  a.mode = OracleMode::Models;
  auto none = run([&](auto& o, auto& e) { return cmd_oracle(data("contradiction.olgm"), a, json_opts(), o, e); });
  CHECK(none.code == kExitFound);
  CHECK(Json::parse(none.out)["count"] == 0);

  // The closure misses semantic consequences of the animals premisses; the
  // gap is reported rather than hidden.
  a.mode = OracleMode::Completeness;
  auto comp = run([&](auto& o, auto& e) { return cmd_oracle(data("animals.olgm"), a, json_opts(), o, e); });
  auto j = Json::parse(comp.out);
  CHECK(comp.code == (j["gap"].empty() ? kExitOk : kExitFound));
  CHECK(j["models"] == 42);

  a.mode = OracleMode::Soundness;
  a.samples = 100;
  auto sampled = run([&](auto& o, auto& e) { return cmd_oracle(data("has_mother.olgm"), a, json_opts(), o, e); });
  CHECK(sampled.code == kExitOk);
  CHECK(Json::parse(sampled.out)["exhaustive"] == false);

  a.mode = OracleMode::Models;
  auto frag = run([&](auto& o, auto& e) { return cmd_oracle(data("has_mother.olgm"), a, {}, o, e); });
  CHECK(frag.code == kExitNotDecided);
}

TEST_CASE("export-dot") {
  auto r = run([](auto& o, auto& e) { return cmd_export_dot(data("animals.olgm"), true, o, e); });
  CHECK(r.code == kExitOk);
  CHECK(count(r.out, "style=dashed") == 3);
  CHECK(count(r.out, "shape=point") == 4);  // E and I one bullet each, O two

  Ologism empty;
  empty.name = "empty";
  CHECK(to_dot(empty, true) == "digraph \"empty\" {\n}\n");

  auto h = run([](auto& o, auto& e) { return cmd_export_dot(data("has_mother.olgm"), false, o, e); });
  CHECK(count(h.out, "✓ mother") == 2);
}

TEST_CASE("identical inputs give byte-identical output") {
  for (auto fmt : {Format::Text, Format::Json}) {
    Options o;
    o.format = fmt;
    auto a = run([&](auto& out, auto& err) { return cmd_check(data("contradiction.olgm"), o, out, err); });
    auto b = run([&](auto& out, auto& err) { return cmd_check(data("contradiction.olgm"), o, out, err); });
    CHECK(a.out == b.out);
  }
}

TEST_CASE("repl: immediate contradiction and retraction") {
  Session s;
  std::ostringstream out;
  s.execute("load " + data("animals.olgm"), out);
  out.str("");
  s.execute("add E M A", out);
  CHECK(out.str().find("! contradiction O(M,M)") != std::string::npos);
  CHECK(out.str().find("[R6]") != std::string::npos);
  out.str("");
  s.execute("contradictions", out);
  CHECK(out.str().find("O(M,M)") != std::string::npos);

  s.execute("retract E M A", out);
  auto animals = dsl::parse_ologism(slurp(data("animals.olgm")));
  CHECK(s.theory() == deduce::close(*animals.value));
  out.str("");
  s.execute("contradictions", out);
  CHECK(out.str() == "none\n");
  CHECK_FALSE(s.execute("quit", out));
}

TEST_CASE("repl: state always equals the closure of the current document") {
  std::mt19937_64 rng(3);
  const char* types[] = {"B", "V", "M", "A"};
  const char* forms[] = {"A", "E", "I", "O"};
  Session s;
  std::ostringstream sink;
  s.execute("load " + data("animals.olgm"), sink);
  for (int k = 0; k < 300; ++k) {
    std::string item = std::string(forms[rng() % 4]) + " " + types[rng() % 4] + " " + types[rng() % 4];
    s.execute(std::string(rng() % 3 == 0 ? "retract " : "add ") + item, sink);
    REQUIRE(s.theory() == deduce::close(s.ologism()));
  }
}

TEST_CASE("repl: scripted session through the stream interface") {
  std::istringstream in("load " + data("has_mother.olgm") +
                        "\nequal hasAsMother = hasAsParents ; w\nsave " +
                        std::filesystem::temp_directory_path().string() + "/ologism_cli_saved.olgm\nnonsense\n");
  std::ostringstream out;
  CHECK(cmd_repl(in, out, {}) == 0);
  CHECK(out.str().find("equal (1 rewrites)") != std::string::npos);
  CHECK(out.str().find("unknown command 'nonsense'") != std::string::npos);
  auto saved = dsl::parse_ologism(slurp(std::filesystem::temp_directory_path().string() + "/ologism_cli_saved.olgm"));
  REQUIRE(saved.ok());
  CHECK(saved.value->facts.size() == 1);
}

TEST_CASE("path bound from the environment") {
  ::setenv("OLOGISM_PATH_BOUND", "3", 1);
  CHECK(path_bound_from_env() == 3u);
  Session s;
  std::ostringstream out;
  s.execute("load " + data("has_mother.olgm"), out);
  out.str("");
  s.execute("equal hasAsMother = hasAsParents ; w", out);
  CHECK(out.str().rfind("equal", 0) == 0);
  ::setenv("OLOGISM_PATH_BOUND", "zero", 1);
  CHECK_FALSE(path_bound_from_env().has_value());
  ::unsetenv("OLOGISM_PATH_BOUND");
  CHECK_FALSE(path_bound_from_env().has_value());
}
