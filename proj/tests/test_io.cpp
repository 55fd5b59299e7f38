#include <doctest.h>

#include <sstream>

#include "modcyc/errors.hpp"
#include "modcyc/generators.hpp"
#include "modcyc/io.hpp"

using namespace modcyc;

namespace {

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

std::size_t error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("edge list round trip") {
  Graph pet = petersen_graph();
  std::ostringstream out;
  write_edge_list(out, pet);
  CHECK(parse(out.str()) == pet);
}

TEST_CASE("comments and blank lines") {
  Graph g = parse("# triangle\n3 3\n\n0 1\n1 2 # closing soon\n2 0\n");
  CHECK(g == complete_graph(3));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_line("") == 0);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK(error_line("3 2\n0 1\n1 x\n") == 3);
  CHECK(error_line("3 2\n0 1\n1 3\n") == 3);
  CHECK(error_line("3 2\n0 0\n") == 2);
  CHECK(error_line("3 2\n0 1\n1 0\n") == 3);
  CHECK(error_line("3 1\n0 1\n1 2\n") == 3);
  CHECK(error_line("3 2 7\n") == 1);
  CHECK(error_line("3 -2\n") == 1);
  CHECK_THROWS_AS(parse("3 3\n0 1\n"), ParseError);
  try {
    parse("4 1\n\n0 9\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("vertex lists") {
  std::istringstream ok("0\n# skip\n4\n");
  CHECK(parse_vertex_list(ok, 5) == std::vector<Vertex>{0, 4});
  std::istringstream bad("0\n5\n");
  CHECK_THROWS_AS(parse_vertex_list(bad, 5), ParseError);
}

TEST_CASE("json shapes") {
  auto j = to_json(spectrum_mod_k(complete_graph(4), 3));
  CHECK(j["lengths"] == nlohmann::json::array({3, 4}));
  CHECK(j["residues"] == nlohmann::json::array({0, 1}));
  auto d = to_json(verify_divisibility(cycle_graph(6), 3));
  CHECK(d["divisible"] == true);
  CHECK(d["certificate"]["kind"] == "series_classes");
}

}
