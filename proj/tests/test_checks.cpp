#include "lalg/checks.hpp"
#include "lalg/fixtures.hpp"

#include <doctest.h>

using namespace lalg;

namespace {

CheckContext context(const State& m, std::string name) {
  CheckContext ctx;
  ctx.scenario = std::move(name);
  ctx.flags = odot_flags(m.algebra());
  return ctx;
}

}  // namespace

TEST_SUITE("checks") {

TEST_CASE("decide helpers") {
  auto rec = make_claim("entropy.nonnegative", "s");
  CHECK(decide_equal(rec, 1.0, 1.0 + 1e-12, 1e-9).verdict == Verdict::holds);
  CHECK(decide_equal(rec, 1.0, 1.1, 1e-9).verdict == Verdict::fails);
  CHECK(decide_at_most(rec, 1.0, 1.0, 0).verdict == Verdict::holds);
  auto gated = make_claim("entropy.nonnegative", "s", {{"h", false}});
  CHECK(decide(gated, false, "w").verdict == Verdict::hypothesis_not_met);
  CHECK(gated.witness.empty());
  CHECK_THROWS_AS(make_claim("no.such.claim", "s"), ContractError);
}

TEST_CASE("registry ids are unique") {
  const auto& reg = claim_registry();
  for (std::size_t i = 0; i < reg.size(); ++i)
    for (std::size_t j = i + 1; j < reg.size(); ++j) CHECK(reg[i].id != reg[j].id);
}

TEST_CASE("chain rule holds wherever Bayes holds on the 3-chain") {
  const auto m = fixtures::lukasiewicz_state(fixtures::lukasiewicz_chain(3));
  const auto ctx = context(m, "l3");
  const auto parts = enumerate_partitions(m, 3);
  std::size_t asserted = 0;
  for (const auto& xi : parts)
    for (const auto& eta : parts) {
      const auto rec = check_chain_rule(ctx, xi, eta);
      CHECK(rec.verdict != Verdict::fails);
      asserted += rec.verdict == Verdict::holds;
    }
  CHECK(asserted > 0);
}

TEST_CASE("three-partition chain needs independence") {
  const auto m = fixtures::lukasiewicz_state(fixtures::lukasiewicz_chain(3));
  const auto ctx = context(m, "l3");
  const auto halves = validate_partition({1, 1}, m);
  const auto rec = check_three_partition_chain(ctx, halves, halves, halves);
  CHECK(rec.verdict == Verdict::hypothesis_not_met);
}

TEST_CASE("claims that are never asserted") {
  const auto m = fixtures::lukasiewicz_state(fixtures::lukasiewicz_chain(3));
  const auto ctx = context(m, "l3");
  const auto unit = unit_partition(m);
  const auto halves = validate_partition({1, 1}, m);
  CHECK(check_info_product_corollary(ctx, halves, halves).verdict ==
        Verdict::not_assertable);
  const auto refinement = check_refinement_monotone(ctx, unit, halves);
  CHECK(refinement.verdict == Verdict::not_assertable);
  CHECK_FALSE(refinement.note.empty());
}

TEST_CASE("special-value checkers") {
  const auto m = fixtures::lukasiewicz_state(fixtures::lukasiewicz_chain(5));
  const auto ctx = context(m, "l5");
  CHECK(check_trivial_partition(ctx, m).verdict == Verdict::holds);
  const auto quarters = validate_partition({1, 1, 1, 1}, m);
  CHECK(check_uniform(ctx, quarters).verdict == Verdict::holds);
  const auto uneven = validate_partition({1, 3}, m);
  CHECK(check_uniform(ctx, uneven).verdict == Verdict::hypothesis_not_met);
}

TEST_CASE("information-gain calculus never fails on the 3-chain") {
  const auto m = fixtures::lukasiewicz_state(fixtures::lukasiewicz_chain(3));
  const auto ctx = context(m, "l3");
  const auto parts = enumerate_partitions(m, 2);
  for (const auto& xi : parts)
    for (const auto& eta : parts)
      for (const auto& zeta : parts)
        for (const auto& rec : check_info_gain_calculus(ctx, xi, eta, zeta))
          CHECK(rec.verdict != Verdict::fails);
}

}  // TEST_SUITE
