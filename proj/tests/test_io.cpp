#include <algorithm>
#include <filesystem>
#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "helpers.hpp"
#include "json.hpp"
#include "nodal/errors.hpp"
#include "nodal/io.hpp"

using namespace nodal;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::size_t count_lines_containing(const std::string& text, const std::string& needle) {
  const auto ls = lines_of(text);
  return std::count_if(ls.begin(), ls.end(), [&](const auto& l) { return l.find(needle) != std::string::npos; });
}

}  // namespace

TEST_SUITE("cli_io") {
  TEST_CASE("parsing a small datum") {
    const auto d = parse_datum("vertices 1 2\narrow a : 1 -> 2\nglue 1 2");
    CHECK(d.base.vertices() == std::vector<std::string>{"1", "2"});
    REQUIRE(d.base.arrow_count() == 1);
    CHECK(d.base.arrow(0).id == "a");
    CHECK(d.glue_pairs == std::vector<GluePair>{{"1", "2"}});
    CHECK(d.blow_vertices.empty());

    const auto spaced = parse_datum("  # comment\nvertices   1\t2 # trailing\n\narrow a:1->2\n");
    CHECK(spaced.base.arrow(0).id == "a");
    CHECK(parse_datum("vertices (x) y_1\narrow A0 : (x) -> y_1\n").base.vertex_count() == 2);
  }

  TEST_CASE("the worked example file") {
    const auto file = parse_datum_file(helpers::read_data("worked_example.datum"));
    const auto& d = file.datum;
    CHECK(d.base.vertex_count() == 7);
    CHECK(d.base.arrow_count() == 6);
    CHECK(d.glue_pairs == std::vector<GluePair>{{"v2", "v4"}, {"v5", "v7"}});
    CHECK(d.blow_vertices == std::vector<std::string>{"v6"});
    CHECK(file.arrow_lines.count("a6") == 1);
    CHECK(file.vertex_lines.count("v7") == 1);
  }

  TEST_CASE("syntax errors carry positions") {
    try {
      parse_datum(helpers::read_data("bad_syntax.datum"));
      FAIL("no error");
    } catch (const SyntaxError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 9);
      CHECK(std::string(e.what()) == "2:9: expected ':'");
    }
    try {
      parse_datum("vertices 1 2\nglue 1 2 3\n");
      FAIL("no error");
    } catch (const SyntaxError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 10);
    }
    CHECK_THROWS_AS(parse_datum("vertices 1 $\n"), SyntaxError);
    CHECK_THROWS_AS(parse_datum("vertex 1\n"), SyntaxError);
    CHECK_THROWS_AS(parse_datum("vertices 1 2\narrow a : 1 ->\n"), SyntaxError);
  }

  TEST_CASE("semantic errors") {
    CHECK_THROWS_AS(parse_datum("vertices 1\nblow v\n"), SemanticError);
    CHECK_THROWS_AS(parse_datum("vertices 1 1\n"), SemanticError);
    CHECK_THROWS_AS(parse_datum("vertices 1 2\narrow a : 1 -> 2\narrow a : 2 -> 1\n"), SemanticError);
    CHECK_THROWS_AS(parse_datum("vertices 1 2\narrow a : 1 -> 3\n"), SemanticError);
    CHECK_THROWS_AS(parse_datum("vertices 1 2\nglue 1 1\n"), SemanticError);
    try {
      parse_datum("vertices 1 2 3\nglue 1 2\nblow 2\n");
      FAIL("no error");
    } catch (const SemanticError& e) {
      CHECK(e.line() == 3);
    }
  }

  TEST_CASE("serialization round trips") {
    for (const auto& entry : std::filesystem::directory_iterator(NODAL_DATA_DIR)) {
      if (entry.path().extension() != ".datum" || entry.path().filename() == "bad_syntax.datum") continue;
      CAPTURE(entry.path().filename().string());
      const auto d = helpers::load(entry.path().filename().string());
      const auto once = serialize_datum(d);
      CHECK(parse_datum(once) == d);
      CHECK(serialize_datum(parse_datum(once)) == once);
    }
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
      auto d = gen::random_gluing_datum(rng);
      CHECK(parse_datum(serialize_datum(d)) == d);
    }
  }

  TEST_CASE("text output") {
    const auto loop = emit_presentation(*helpers::built(helpers::load("glued_a2.datum")), OutputFormat::Text);
    CHECK(count_lines_containing(loop, " = ") == 1);
    CHECK(count_lines_containing(loop, "a·a = 0") == 1);

    const auto chain = emit_presentation(*helpers::built(helpers::load("blown_chain.datum")), OutputFormat::Text);
    CHECK(lines_of(chain) == std::vector<std::string>{"vertices: 1 2' 2'' 3", "arrows:", "  a' : 1 -> 2'",
                                                      "  a'' : 1 -> 2''", "  b' : 2' -> 3", "  b'' : 2'' -> 3",
                                                      "relations:", "  b'·a' = b''·a''"});
  }

  TEST_CASE("JSON output round trips") {
    for (const char* name : {"glued_a2.datum", "blown_chain.datum", "worked_example.datum", "super_exceptional.datum"}) {
      CAPTURE(name);
      const auto p = helpers::built(helpers::load(name));
      const auto text = emit_presentation(*p, OutputFormat::Json);
      CHECK(parse_presentation_json(text).canonical() == p->canonical());
    }
    const auto j = nlohmann::json::parse(
        emit_presentation(*helpers::built(helpers::load("blown_chain.datum")), OutputFormat::Json));
    CHECK(j["relations"][0]["kind"] == "commutation");
    CHECK(j["arrows"].size() == 4);
    CHECK_THROWS_AS(parse_presentation_json("{"), InvalidPresentation);
    CHECK_THROWS_AS(parse_presentation_json(R"({"vertices":["1"],"arrows":[],"relations":[{"kind":"odd"}]})"),
                    InvalidPresentation);
  }

  TEST_CASE("DOT output") {
    const auto b = build_presentation(helpers::load("worked_example.datum"));
    const auto dot = emit_presentation(b.presentation, OutputFormat::Dot, &b.vertex_map);
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(count_lines_containing(dot, "// relation:") == 5);
    CHECK(count_lines_containing(dot, "[shape=box]") == 2);
    CHECK(count_lines_containing(dot, "subgraph cluster_blow") == 1);
    CHECK(count_lines_containing(dot, "[shape=circle]") == 2);
    CHECK(count_lines_containing(dot, " -> ") == 8);
    CHECK(emit_presentation(b.presentation, OutputFormat::Dot, &b.vertex_map) == dot);
  }
}
