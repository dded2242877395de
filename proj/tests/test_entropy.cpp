#include "lalg/entropy.hpp"
#include "lalg/fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace lalg;

namespace {

std::vector<int> numerators(const Partition& p) {
  return std::vector<int>(p.blocks().begin(), p.blocks().end());
}

}  // namespace

TEST_SUITE("entropy") {

TEST_CASE("H agrees with the direct formula on Lukasiewicz partitions") {
  for (int top = 2; top <= 8; top += 2) {
    const auto m = fixtures::lukasiewicz_state(
        fixtures::lukasiewicz_chain(std::size_t(top + 1)));
    for (const auto& xi : enumerate_partitions(m, 3)) {
      std::vector<double> probs;
      for (int b : numerators(xi)) probs.push_back(double(b) / top);
      CHECK(entropy(xi).value == doctest::Approx(oracle::entropy(probs)).epsilon(1e-12));
      CHECK(entropy(xi).recompute() == doctest::Approx(entropy(xi).value));
    }
  }
}

TEST_CASE("H(xi|eta) agrees with the t-norm formula") {
  const int top = 4;
  const auto m = fixtures::lukasiewicz_state(fixtures::lukasiewicz_chain(top + 1));
  const auto parts = enumerate_partitions(m, 3);
  for (const auto& xi : parts)
    for (const auto& eta : parts) {
      const double expected =
          oracle::luk_conditional(numerators(xi), numerators(eta), top);
      CHECK(conditional_entropy(xi, eta).value ==
            doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("special values") {
  const auto m = fixtures::lukasiewicz_state(fixtures::lukasiewicz_chain(3));
  const auto unit = unit_partition(m);
  CHECK(entropy(unit).value == 0.0);
  CHECK(entropy(unit).exactly_zero());
  for (std::size_t n : {2u, 4u, 8u}) {
    const auto chain = fixtures::lukasiewicz_chain(n + 1);
    const auto s = fixtures::lukasiewicz_state(chain);
    const auto xi = validate_partition(std::vector<Element>(n, 1), s);
    CHECK(std::abs(entropy(xi).value - std::log2(double(n))) <= 1e-12);
    CHECK(std::abs(entropy(xi, LogBase::e).value - std::log(double(n))) <= 1e-12);
  }
}

TEST_CASE("conditioning on the unit partition changes nothing") {
  const auto m = fixtures::lukasiewicz_state(fixtures::lukasiewicz_chain(5));
  const auto unit = unit_partition(m);
  for (const auto& xi : enumerate_partitions(m, 3)) {
    CHECK(conditional_entropy(xi, unit).value ==
          doctest::Approx(entropy(xi).value).epsilon(1e-12));
  }
}

TEST_CASE("phi contract") {
  CHECK(phi(Rational(0)) == 0.0);
  CHECK(phi(Rational(1)) == 0.0);
  CHECK(phi(Rational(1, 2)) == doctest::Approx(-0.5));
  CHECK_THROWS_AS(phi(Rational(3, 2)), ContractError);
}

TEST_CASE("degenerate pair carries no information") {
  const auto gain = info_gain(fixtures::degenerate_xi(), fixtures::degenerate_eta());
  CHECK(std::abs(gain.value) <= 1e-12);
}

TEST_CASE("information gain is H(xi) - H(xi|eta)") {
  const auto m = fixtures::lukasiewicz_state(fixtures::lukasiewicz_chain(5));
  const auto parts = enumerate_partitions(m, 3);
  for (const auto& xi : parts)
    for (const auto& eta : parts) {
      const auto g = info_gain(xi, eta);
      CHECK(g.value == doctest::Approx(entropy(xi).value -
                                       conditional_entropy(xi, eta).value));
    }
}

TEST_CASE("H(xi|eta) = 0 exactly when xi is interior to eta, under Bayes") {
  std::size_t gated = 0;
  for (auto m : {fixtures::lukasiewicz_state(fixtures::lukasiewicz_chain(3)),
                 fixtures::lukasiewicz_state(fixtures::lukasiewicz_chain(5)),
                 fixtures::boolean_square_state()}) {
    const auto parts = enumerate_partitions(m, 3);
    for (const auto& xi : parts) {
      for (const auto& eta : parts) {
        const auto bayes = bayes_against(xi, eta);
        if (!bayes.def_holds || !bayes.decomposition_holds) continue;
        ++gated;
        CHECK(conditional_entropy(xi, eta).exactly_zero() ==
              interior_subset(xi, eta));
      }
    }
  }
  CHECK(gated > 0);
}

TEST_CASE("without Bayes, interior subset and zero entropy can disagree") {
  // On the 3-chain 1/2 (.) 1/2 = 0, so every conditional term of (1/2, 1/2)
  // against itself vanishes, yet no block carries m(1/2). The decomposition
  // sum is 0, not 1/2.
  const auto m = fixtures::lukasiewicz_state(fixtures::lukasiewicz_chain(3));
  const auto h = m.algebra().find("1/2");
  const auto xi = validate_partition({h, h}, m);
  CHECK(conditional_entropy(xi, xi).exactly_zero());
  CHECK_FALSE(interior_subset(xi, xi));
  CHECK(bayes_against(xi, xi).def_holds);
  CHECK_FALSE(bayes_against(xi, xi).decomposition_holds);
}

}  // TEST_SUITE
