#include "lalg/fixtures.hpp"
#include "lalg/json_io.hpp"

#include <doctest.h>

#include <cmath>

using namespace lalg;

namespace {

const std::filesystem::path kData = LALG_DATA_DIR;

}  // namespace

TEST_SUITE("json_io") {

TEST_CASE("bundled documents match the fixtures") {
  CHECK(io::raw_table_from_json(io::load_document(kData / "four-element.json")) ==
        fixtures::four_element_table());
  CHECK(io::raw_table_from_json(io::load_document(kData / "bounded-five.json")) ==
        fixtures::bounded_five_table());
  CHECK(io::raw_table_from_json(io::load_document(kData / "unbounded-five.json")) ==
        fixtures::unbounded_five_table());
  CHECK(io::raw_table_from_json(io::load_document(kData / "degenerate-four.json")) ==
        fixtures::degenerate_four_table());
  CHECK(io::raw_table_from_json(io::load_document(kData / "lukasiewicz-3.json")) ==
        fixtures::lukasiewicz_chain(3).table());
  CHECK(io::raw_table_from_json(io::load_document(kData / "boolean-square.json")) ==
        fixtures::boolean_square().table());

  const auto l = io::operator_from_json(
      io::load_document(kData / "sample-closure.json"), Mode::strict, kData);
  CHECK(l == fixtures::sample_closure());

  const auto m = io::state_from_json(
      io::load_document(kData / "degenerate-state.json"), Mode::lenient, kData);
  CHECK(m == fixtures::degenerate_state());
  const auto xi = io::partition_from_json(
      io::load_document(kData / "degenerate-xi.json"), Mode::lenient, kData);
  CHECK(xi == fixtures::degenerate_xi());
}

TEST_CASE("strict mode rejects the degenerate table") {
  CHECK_THROWS_AS(io::algebra_from_json(
                      io::load_document(kData / "degenerate-four.json"),
                      Mode::strict, kData),
                  AxiomError);
}

TEST_CASE("algebra round trip") {
  const auto A = fixtures::bounded_five();
  const auto j = io::to_json(A);
  const auto back = io::raw_table_from_json(io::Json::parse(j.dump()));
  CHECK(back == A.table());
}

TEST_CASE("rationals are written as strings") {
  const auto j = io::to_json(fixtures::boolean_square_state());
  CHECK(j.dump().find("\"1/2\"") != std::string::npos);
}

TEST_CASE("parse errors carry line and column") {
  try {
    io::parse_json("{\n  \"elements\": [\"a\",\n  ]\n}", "doc");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() >= 1);
  }
}

TEST_CASE("structural errors in documents") {
  auto bad = io::Json::parse(R"({"elements": ["a", "1"], "unit": "1",
                                 "arrow": [["1", "1"], ["a"]]})");
  CHECK_THROWS_AS(io::raw_table_from_json(bad), StructuralError);
  auto unknown = io::Json::parse(R"({"elements": ["a", "1"], "unit": "u",
                                     "arrow": [["1", "1"], ["a", "1"]]})");
  CHECK_THROWS_AS(io::raw_table_from_json(unknown), StructuralError);
  CHECK_THROWS_AS(io::load_document(kData / "missing.json"), Error);
}

TEST_CASE("values accept objects and arrays") {
  const auto L = fixtures::lukasiewicz_chain(3);
  const auto a = io::values_from_json(io::Json::parse(R"(["0", "1/2", 1])"), L);
  const auto b = io::values_from_json(
      io::Json::parse(R"({"0": "0", "1/2": "1/2", "1": "1"})"), L);
  CHECK(a == b);
  CHECK_THROWS_AS(io::values_from_json(io::Json::parse(R"(["0", "x", "1"])"), L),
                  StructuralError);
}

TEST_CASE("non-finite numbers become null") {
  CHECK(io::number(std::nan("")).is_null());
  CHECK(io::number(0.5) == 0.5);
}

}  // TEST_SUITE
