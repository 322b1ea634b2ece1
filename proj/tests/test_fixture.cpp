#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "helpers.hpp"

#include <doctest.h>

#include <string>

using namespace nabelh1;

TEST_CASE("all bundled fixtures load") {
  for (const char* name : {"T1", "T2", "T3", "T4", "T5", "CONJ", "PX"}) {
    Document doc = th::load_fixture(std::string(name) + ".json");
    CHECK(doc.groups.size() >= 1);
    CHECK(doc.bimodules.size() >= 1);
  }
}

TEST_CASE("the two element fixture carries its torsors") {
  Document doc = th::load_fixture("T1.json");
  CHECK(doc.groups.size() == 3);
  CHECK(doc.bimodules.count("M") == 1);
  CHECK(doc.torsors.size() == 2);
  const Bimodule& m = find_bimodule(doc, "M").bim;
  CHECK(m.level == CrossLevel::Crossed);
  validate_torsor(m, find_torsor(doc, "P_triv").torsor);
  validate_torsor(m, find_torsor(doc, "P_tw").torsor);
  CHECK_THROWS_AS(find_torsor(doc, "P_missing"), ReferenceError);
}

TEST_CASE("emit then load is the identity on the canonical form") {
  for (const char* name : {"T1", "T2", "T3", "T4", "T5", "CONJ", "PX"}) {
    Document doc = th::load_fixture(std::string(name) + ".json");
    std::string once = emit_document(doc);
    Document again = load_document_string(once);
    std::string twice = emit_document(again);
    CHECK(once == twice);
  }
}

// T4 and CONJ are deliberately non-canonical: T4 omits the section so loading
// exercises the section search, and CONJ uses the conjugation shorthand that
// the emitter expands.
TEST_CASE("bundled fixtures are already canonical") {
  for (const char* name : {"T1", "T2", "T3", "T5", "PX"}) {
    std::string path = th::fixture_path(std::string(name) + ".json");
    std::string raw = th::slurp(path);
    Document doc = load_document_file(path);
    CHECK(emit_document(doc) == raw);
  }
}

TEST_CASE("malformed json is a parse error") {
  CHECK_THROWS_AS(load_document_string("{ not json"), ParseError);
  CHECK_THROWS_AS(load_document_string("[1,2,3]"), ParseError);
  try {
    load_document_string(R"({"groups": {"G": {"order": 2, "cayley": [[0,1],[1,0]],
                            "open_subgroup": [], "extra": 1}}})");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.kind == "SchemaViolation");
  }
}

TEST_CASE("unresolved references are reported by name") {
  const char* text = R"({
    "groups": {"G": {"order": 2, "cayley": [[0,1],[1,0]], "open_subgroup": []}},
    "maps": {"f": {"domain": "G", "codomain": "Q8", "images": [0,0]}}
  })";
  try {
    load_document_string(text);
    FAIL("expected a reference error");
  } catch (const ReferenceError& e) {
    CHECK(std::string(e.what()).find("Q8") != std::string::npos);
  }
}

TEST_CASE("semantic failures name the offending object") {
  // non-associative table: every entry 1
  const char* text = R"({
    "groups": {"B": {"order": 2, "cayley": [[1,1],[1,1]], "open_subgroup": []}}
  })";
  try {
    load_document_string(text);
    FAIL("expected a validation error");
  } catch (const ReferenceError&) {
    FAIL("wrong category");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("B") != std::string::npos);
  }
}

TEST_CASE("several broken objects are all reported") {
  const char* text = R"({
    "groups": {
      "B1": {"order": 2, "cayley": [[1,1],[1,1]], "open_subgroup": []},
      "B2": {"order": 2, "cayley": [[0,1],[1,0]], "open_subgroup": [0,1,2]},
      "G":  {"order": 2, "cayley": [[0,1],[1,0]], "open_subgroup": []}
    }
  })";
  try {
    load_document_string(text);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    std::string what = e.what();
    CHECK(what.find("groups/B1") != std::string::npos);
    CHECK(what.find("groups/B2") != std::string::npos);
    CHECK(what.find("groups/G") == std::string::npos);
  }
}

TEST_CASE("identity away from index zero is reindexed on load") {
  const char* text = R"({
    "groups": {"G": {"order": 2, "cayley": [[1,0],[0,1]], "open_subgroup": [0,1]}}
  })";
  Document doc = load_document_string(text);
  const GroupPtr& g = find_group(doc, "G");
  CHECK(g->mul(0, 0) == 0);
  CHECK(g->indiscrete());
  CHECK(g->reindexing() == std::vector<Elem>{1, 0});
}

TEST_CASE("conjugation bimodules synthesize their components") {
  Document doc = th::load_fixture("CONJ.json");
  const BimoduleEntry& entry = find_bimodule(doc, "M");
  CHECK(entry.bim.level == CrossLevel::Crossed);
  CHECK(entry.bim.R->order() == 6);
  CHECK(doc.groups.count("M/R") == 1);
  CHECK(doc.maps.count("M/mu") == 1);
  CHECK(doc.actions.count("M/act_G_on_R") == 1);
  CHECK(doc.actions.count("M/act_R_on_A") == 1);
  CHECK(entry.mu == "M/mu");

  // synthesized names must not collide with explicit ones
  std::string bad = th::slurp(th::fixture_path("CONJ.json"));
  auto pos = bad.find("\"G\":");
  REQUIRE(pos != std::string::npos);
  bad.insert(pos, R"("M/R": {"order": 1, "cayley": [[0]], "open_subgroup": []}, )");
  CHECK_THROWS_AS(load_document_string(bad), ValidationError);
}

TEST_CASE("extension entries resolve their sections") {
  Document doc = th::load_fixture("T4.json");
  const ExtensionEntry& e = find_extension(doc, "E");
  CHECK(e.ext.section == std::vector<Elem>{0, 1});
  CHECK(e.a_bim == "MA");
  CHECK(e.ext.a_bim.A->order() == 2);
  CHECK(e.ext.b_bim.A->order() == 4);
}

TEST_CASE("file errors are parse errors") {
  CHECK_THROWS_AS(load_document_file("/nonexistent/nowhere.json"), ParseError);
}
