#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "morphdet/session.hpp"

using namespace morphdet;

namespace {

const char* kMinimal = R"j({
  "field": "Q",
  "quiver": {"vertices": ["1", "2"], "arrows": [{"name": "a", "source": "2", "target": "1"}]},
  "modules": {"P2": "P(2)"},
  "morphisms": {"alpha": "zero(0, P2)"},
  "commands": [{"op": "minimal-determiner", "morphism": "alpha"}]
})j";

std::string error_of(const std::string& text) {
  try {
    Session s = parse_session(text);
    run(s);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

const Json& result(const Report& r, std::size_t i) { return r.json.at("results").at(i).at("result"); }

}  // namespace

TEST_CASE("minimal session") {
  Session s = parse_session(kMinimal);
  CHECK(s.vertices.size() == 2);
  Report r = run(s);
  CHECK(result(r, 0).at("summands") == Json::array({"S(1)"}));
  CHECK_FALSE(r.assertions);
}

TEST_CASE("four-vertex fixture") {
  Session s = parse_session(fixture("ex6-bound-quiver").text);
  CHECK(s.vertices.size() == 4);
  CHECK(s.relations.size() == 2);
  Workspace w(s);
  for (const auto& [name, def] : s.modules) w.module(name);
  for (const auto& [name, def] : s.morphisms) w.morphism(name);
  CHECK(w.resolved_count() == 12);
  Report r = run(s);
  CHECK(r.passed);
  bool found = false;
  for (const auto& e : r.json.at("results"))
    if (e.at("op") == "kernel-determined-extensions") {
      CHECK(e.at("result").at("count") == 6);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("uniserial fixture") {
  Workspace w(parse_session(fixture("uniserial-x3").text));
  CHECK(w.algebra()->nilpotency_index() == 3);
}

TEST_CASE("fixtures replay") {
  CHECK(fixtures().size() == 5);
  for (const auto& f : fixtures()) {
    CAPTURE(f.name);
    Session s = parse_session(f.text);
    Report a = run(s), b = run(s);
    CHECK(a.assertions);
    CHECK(a.passed);
    CHECK(a.json.dump() == b.json.dump());
    CHECK(run_oracle(s).passed);
  }
  CHECK_THROWS_AS(fixture("missing"), InputError);
}

TEST_CASE("check-determines on the A3 fixture") {
  Report r = run(parse_session(fixture("a3-example1").text));
  const Json& first = result(r, 1);
  CHECK(first.at("verdict") == false);
  CHECK(first.at("witness_domain") == "P(2)");
  Report r3 = run(parse_session(fixture("a3-example3").text));
  CHECK(result(r3, 1).at("summands") == Json::array({"S(2)", "P(3)"}));
}

TEST_CASE("round trip") {
  for (const auto& f : fixtures()) {
    Session s = parse_session(f.text);
    CHECK(parse_session(render_session(s)) == s);
  }
}

TEST_CASE("seed and jobs do not change results") {
  Session s = parse_session(fixture("a3-example3").text);
  RunOptions opts;
  opts.seed = 12345;
  opts.jobs = 4;
  Report r = run(s, opts);
  CHECK(r.passed);
  CHECK(r.json.at("seed") == 12345);
  Report base = run(s);
  CHECK(base.json.at("results").dump() == r.json.at("results").dump());
}

TEST_CASE("input errors") {
  CHECK(error_of("{").find("invalid JSON") != std::string::npos);
  CHECK(error_of(R"j({"field": "Q", "quiver": {"vertices": ["1"], "arrows": [{"name": "a", "source": "1", "target": "7"}]}})j")
            .find("arrow 'a'") != std::string::npos);
  CHECK(error_of(R"j({"field": "F4", "quiver": {"vertices": ["1"]}})j").rfind("$.field", 0) == 0);
  CHECK(error_of(R"j({"field": "Q", "quiver": {"vertices": ["1"]}, "modules": {"A": "B"}})j").find("unknown module 'B'") !=
        std::string::npos);
  CHECK(error_of(R"j({"field": "Q", "quiver": {"vertices": ["1"]}, "modules": {"A": "B", "B": "A"}})j").find("cyclic") !=
        std::string::npos);
  CHECK(error_of(R"j({"field": "Q", "quiver": {"vertices": ["1", "2"], "arrows": [{"name": "a", "source": "2", "target": "1"}]},
                    "modules": {"M": {"dims": [1, 1], "arrows": {"a": [["1"], ["0"]]}}}})j")
            .find("$.modules.M.arrows.a") != std::string::npos);
  // A module violating x^2 = 0.
  CHECK(error_of(R"j({"field": "Q", "quiver": {"vertices": ["1"], "arrows": [{"name": "x", "source": "1", "target": "1"}]},
                    "relations": [[{"path": ["x", "x"]}]],
                    "modules": {"M": {"dims": [1], "arrows": {"x": [["1"]]}}}})j")
            .rfind("$.modules.M", 0) == 0);
  CHECK(error_of(R"j({"field": "Q", "quiver": {"vertices": ["1", "2"], "arrows": [{"name": "a", "source": "2", "target": "1"}]},
                    "commands": [{"op": "tau"}, {"op": "ar-sequence", "module": "P(1)"}]})j")
            .rfind("$.commands[0]", 0) == 0);
  CHECK(error_of(R"j({"field": "Q", "quiver": {"vertices": ["1", "2"], "arrows": [{"name": "a", "source": "2", "target": "1"}]},
                    "commands": [{"op": "tau", "module": "S(1)"}, {"op": "ar-sequence", "module": "P(1)"}]})j")
            .rfind("$.commands[1]", 0) == 0);
  CHECK(error_of(R"j({"field": "Q", "quiver": {"vertices": ["1"]}, "extra": 1})j").find("unknown key 'extra'") != std::string::npos);
}

TEST_CASE("expect mismatches are reported") {
  std::string text = fixture("a2-example2").text;
  Json j = Json::parse(text);
  j["commands"][0]["expect"]["summands"] = Json::array({"P(2)"});
  Report r = run(session_from_json(j));
  CHECK(r.assertions);
  CHECK_FALSE(r.passed);
  CHECK(r.json.at("results").at(0).at("mismatches").size() == 1);
  CHECK(render_text(r).find("MISMATCH") != std::string::npos);
}

TEST_CASE("explicit matrices and expressions") {
  const char* text = R"j({
    "field": "F5",
    "quiver": {"vertices": ["1", "2"], "arrows": [{"name": "a", "source": "2", "target": "1"}]},
    "modules": {"M": {"dims": {"1": 1, "2": 1}, "arrows": {"a": [["3"]]}}, "T": "S(1) + S(2)"},
    "morphisms": {"f": {"from": "S(1)", "to": "M", "matrices": {"1": [["2"]]}}, "g": "scale(3, f)", "h": "f + g"},
    "commands": [{"op": "describe", "module": "M"}, {"op": "decompose", "module": "T"},
                 {"op": "isomorphic", "left": "M", "right": "P(2)"}, {"op": "in-add", "module": "S(2)", "of": "T"}]
  })j";
  Session s = parse_session(text);
  Workspace w(s);
  CHECK(w.morphism("h").at(0)(0, 0).str() == "3");  // 2 + 3*2 = 8 = 3 mod 5
  Report r = run(s);
  CHECK(result(r, 0).at("name") == "P(2)");
  CHECK(result(r, 0).at("arrows").at("a") == Json::array({Json::array({"3"})}));
  CHECK(result(r, 1).at("summands").size() == 2);
  CHECK(result(r, 2).at("verdict") == true);
  CHECK(result(r, 3).at("verdict") == true);
}
