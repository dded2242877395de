#include "lalg/dynamics.hpp"
#include "lalg/fixtures.hpp"

#include <doctest.h>

#include <cmath>

using namespace lalg;

namespace {

std::vector<State> fixture_states() {
  return {fixtures::lukasiewicz_state(fixtures::lukasiewicz_chain(3)),
          fixtures::lukasiewicz_state(fixtures::lukasiewicz_chain(5)),
          fixtures::boolean_chain_state(), fixtures::boolean_square_state(),
          fixtures::bounded_five_state()};
}

LSystem identity_system(const State& m) {
  return validate_system(UnaryOperator::identity(m.algebra()), m);
}

LSystem square_swap_system() {
  return validate_system(
      UnaryOperator(fixtures::boolean_square(), fixtures::square_swap()),
      fixtures::boolean_square_state());
}

}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("system conditions") {
  const auto m = fixtures::lukasiewicz_state(fixtures::lukasiewicz_chain(3));
  const auto& L = m.algebra();
  const UnaryOperator flip(L, {2, 1, 0});
  const auto report = check_system_conditions(flip, m);
  CHECK_FALSE(report.passed());
  REQUIRE(report.find(2) != nullptr);
  CHECK(report.find(2)->witness == std::vector<Element>{L.unit()});
  CHECK(report.find(3) != nullptr);
  CHECK_THROWS_AS(validate_system(flip, m), SystemError);
  CHECK(identity_system(m).is_identity());
}

TEST_CASE("identity has zero entropy rate for every partition") {
  for (const auto& m : fixture_states()) {
    const auto sys = identity_system(m);
    for (const auto& xi : enumerate_partitions(m, 3)) {
      const auto est = entropy_rate(sys, xi);
      CHECK(std::abs(est.estimate) <= 1e-9);
    }
    CHECK(std::abs(system_entropy(sys).value) <= 1e-9);
  }
}

TEST_CASE("images preserve entropy exactly") {
  const auto sys = square_swap_system();
  for (const auto& xi : enumerate_partitions(sys.state(), 3)) {
    for (std::size_t n = 0; n <= 3; ++n) {
      const auto image = image_partition(sys, xi, n);
      CHECK(entropy(image).exact_terms.size() == entropy(xi).exact_terms.size());
      auto a = entropy(image).exact_terms, b = entropy(xi).exact_terms;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
    }
  }
}

TEST_CASE("subadditivity certificate and estimator agreement") {
  for (const auto& m : fixture_states()) {
    const auto sys = identity_system(m);
    for (const auto& xi : enumerate_partitions(m, 3)) {
      const auto est = entropy_rate(sys, xi, 8);
      CHECK(est.values.size() == 8);
      CHECK(est.conditional.size() == 8);
      if (!est.joins_valid) continue;
      CHECK(est.subadditive);
      for (std::size_t n = 1; n <= 8; ++n)
        for (std::size_t p = 1; n + p <= 8; ++p)
          CHECK(est.values[n + p - 1] <= est.values[n - 1] + est.values[p - 1] + 1e-9);
      if (est.converged && est.conditional_converged) {
        CHECK(std::abs(est.rate - est.estimate) <= 1e-6);
      }
    }
  }
}

TEST_CASE("truncation contract") {
  const auto m = fixtures::boolean_chain_state();
  CHECK_THROWS_AS(entropy_rate(identity_system(m), unit_partition(m), 0),
                  ContractError);
}

TEST_CASE("powers and inverses") {
  const auto sys = square_swap_system();
  CHECK(power(sys, 2).is_identity());
  CHECK(inverse(sys).map() == sys.map());
  const auto m = fixtures::boolean_chain_state();
  CHECK(power(identity_system(m), 3).is_identity());
}

TEST_CASE("power rule at matched truncation on small fixtures") {
  for (const auto& m : {fixtures::boolean_chain_state(),
                        fixtures::lukasiewicz_state(fixtures::lukasiewicz_chain(3))}) {
    const auto sys = identity_system(m);
    const auto h1 = system_entropy(sys, 4, 16);
    const auto h2 = system_entropy(power(sys, 2), 4, 8);
    CHECK(std::abs(h2.value - 2 * h1.value) <= 1e-6);
  }
}

TEST_CASE("isomorphism via the a-b swap") {
  const auto m = fixtures::bounded_five_state();
  const auto& L = m.algebra();
  const auto id = identity_system(m);
  const auto swap = validate_system(UnaryOperator(L, fixtures::swap_ab()), m);
  const auto r1 = are_isomorphic(id, id, fixtures::swap_ab());
  CHECK(r1.is_isomorphic());
  CHECK(r1.derived_hold());
  const auto r2 = are_isomorphic(swap, swap, fixtures::swap_ab());
  CHECK(r2.is_isomorphic());
  CHECK(std::abs(system_entropy(id).value - system_entropy(swap).value) <= 1e-6);
  // A map that is not a homomorphism breaks condition (i).
  const auto bad = are_isomorphic(id, id, {0, 2, 1, 3, 4});
  CHECK_FALSE(bad.is_isomorphic());
}

TEST_CASE("generators attain h(T)") {
  for (const auto& sys : {square_swap_system(),
                          identity_system(fixtures::boolean_chain_state())}) {
    const auto h = system_entropy(sys);
    for (const auto& xi : enumerate_partitions(sys.state(), 3)) {
      const auto g = is_generator(sys, xi, 1);
      CHECK(g.checked > 0);
      if (!g.is_generator) continue;
      CHECK(std::abs(entropy_rate(sys, xi).estimate - h.value) <= 1e-6);
    }
  }
}

}  // TEST_SUITE
