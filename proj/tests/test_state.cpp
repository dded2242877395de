#include "lalg/fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace lalg;

TEST_SUITE("state") {

TEST_CASE("m(x) = x is a state on Lukasiewicz chains") {
  for (std::size_t k = 2; k <= 9; ++k) {
    const auto chain = fixtures::lukasiewicz_chain(k);
    const auto m = fixtures::lukasiewicz_state(chain);
    CHECK(is_faithful(m));
  }
}

TEST_CASE("(.) on a Lukasiewicz chain is the Lukasiewicz t-norm") {
  for (std::size_t k = 2; k <= 9; ++k) {
    const auto L = fixtures::lukasiewicz_chain(k);
    const int top = int(k - 1);
    for (int x = 0; x <= top; ++x)
      for (int y = 0; y <= top; ++y) {
        const auto r = odot(L, Element(x), Element(y));
        REQUIRE(r.defined());
        CHECK(int(r.value) == oracle::luk_odot(x, y, top));
        if (x + y <= top) {
          CHECK(orthogonal(L, Element(x), Element(y)));
          CHECK(int(oplus(L, Element(x), Element(y))) == x + y);
        } else {
          CHECK_FALSE(orthogonal(L, Element(x), Element(y)));
          CHECK_THROWS_AS(oplus(L, Element(x), Element(y)),
                          OrthogonalityViolation);
        }
      }
  }
}

TEST_CASE("corrupted valuation fails additivity at (1/2, 1/2)") {
  const auto L = fixtures::lukasiewicz_chain(3);
  const std::vector<Rational> values = {Rational(0), Rational(1, 3), Rational(1)};
  const auto report = check_state_conditions(L, values);
  const auto* v = report.find(2);
  REQUIRE(v != nullptr);
  CHECK(v->witness == std::vector<Element>{1, 1});
  CHECK_THROWS_AS(validate_state(L, values), StateError);
  try {
    validate_state(L, values);
  } catch (const StateError& e) {
    CHECK(std::string(e.what()).find("(2) at (1/2,1/2)") != std::string::npos);
  }
}

TEST_CASE("degenerate valuation is a state in lenient mode") {
  const auto m = fixtures::degenerate_state();
  CHECK(m.algebra().mode() == Mode::lenient);
  CHECK(m.values() == std::vector<Rational>{Rational(0), Rational(1),
                                            Rational(1), Rational(1)});
  CHECK(is_faithful(m));
}

TEST_CASE("bounded five-element table admits exactly one state on a grid") {
  // Scan all valuations with values in {0, 1/4, ..., 1}.
  const auto L = fixtures::bounded_five();
  std::size_t found = 0;
  std::vector<int> v(L.size(), 0);
  while (true) {
    std::vector<Rational> values;
    for (int x : v) values.emplace_back(x, 4);
    if (check_state_conditions(L, values).passed()) {
      ++found;
      CHECK(values == fixtures::bounded_five_state().values());
    }
    std::size_t k = v.size();
    while (k > 0 && ++v[k - 1] == 5) v[--k] = 0;
    if (k == 0) break;
  }
  CHECK(found == 1);
}

TEST_CASE("the one-element algebra has no state") {
  const auto L = fixtures::singleton();
  CHECK_FALSE(check_state_conditions(L, {Rational(1)}).passed());
  CHECK_FALSE(check_state_conditions(L, {Rational(0)}).passed());
}

TEST_CASE("state contracts") {
  const auto L = fixtures::lukasiewicz_chain(3);
  CHECK_THROWS_AS(validate_state(L, {Rational(0), Rational(3, 2), Rational(1)}),
                  RangeError);
  CHECK_THROWS_AS(validate_state(L, {Rational(0), Rational(1)}), StructuralError);
  CHECK_THROWS_AS(validate_state(fixtures::four_element(),
                                 std::vector<Rational>(4, Rational(1))),
                  ContractError);
}

TEST_CASE("odot is degenerate on the Boolean square") {
  const auto L = fixtures::boolean_square();
  const auto p = L.find("p");
  const auto r = odot(L, p, p);
  REQUIRE(r.defined());
  CHECK(r.value == L.bottom());
}

}  // TEST_SUITE
