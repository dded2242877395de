#include "lalg/json_io.hpp"
#include "lalg/verify.hpp"

#include <doctest.h>

#include <set>

using namespace lalg;

namespace {

ClaimRecord record(std::string id, Verdict v) {
  auto rec = make_claim(id, "s");
  rec.verdict = v;
  return rec;
}

const VerifyReport& full_bundle() {
  static const VerifyReport report = run_bundle("paper");
  return report;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("aggregation picks the strongest verdict") {
  auto report = aggregate({record("entropy.nonnegative", Verdict::holds),
                           record("entropy.nonnegative", Verdict::fails),
                           record("entropy.uniform", Verdict::hypothesis_not_met),
                           record("entropy.uniform", Verdict::holds),
                           record("info.product_corollary", Verdict::not_assertable),
                           record("info.symmetric", Verdict::hypothesis_not_met)},
                          false);
  REQUIRE(report.claims.size() == 4);
  CHECK(report.find("entropy.nonnegative")->verdict == Verdict::fails);
  CHECK(report.find("entropy.nonnegative")->representative->verdict ==
        Verdict::fails);
  CHECK(report.find("entropy.uniform")->verdict == Verdict::holds);
  CHECK(report.find("info.product_corollary")->verdict == Verdict::not_assertable);
  CHECK(report.find("info.symmetric")->verdict == Verdict::hypothesis_not_met);
  CHECK(report.failures() == 1);
  CHECK_FALSE(report.passed());
}

TEST_CASE("full registry rows appear in registry order") {
  const auto report = aggregate({}, true);
  REQUIRE(report.claims.size() == claim_registry().size());
  for (std::size_t i = 0; i < report.claims.size(); ++i) {
    CHECK(report.claims[i].id == claim_registry()[i].id);
    CHECK(report.claims[i].evaluations() == 0);
  }
}

TEST_CASE("full bundle covers every registered claim exactly once") {
  const auto& report = full_bundle();
  std::set<std::string> ids;
  for (const auto& c : report.claims) {
    CHECK(ids.insert(c.id).second);
    CHECK(c.evaluations() > 0);
  }
  CHECK(ids.size() == claim_registry().size());
  CHECK(report.lenient_scenarios == std::vector<std::string>{"degenerate-four"});
}

TEST_CASE("full bundle verdicts for the worked examples") {
  const auto& report = full_bundle();
  for (const char* id : {"lalg.axioms", "lalg.swap_homomorphism",
                         "omega.sample_closure", "state.degenerate_state",
                         "partition.degenerate_interior_equal",
                         "info.degenerate_pair_zero", "entropy.trivial_partition",
                         "entropy.uniform", "dynamics.identity_zero"}) {
    CAPTURE(id);
    CHECK(report.find(id)->verdict == Verdict::holds);
  }
  CHECK(report.find("info.product_corollary")->verdict == Verdict::not_assertable);
  CHECK(report.find("lalg.degenerate_table_axiom5")->verdict ==
        Verdict::not_assertable);
}

TEST_CASE("full bundle reports the counterexamples it finds") {
  const auto& report = full_bundle();
  const auto* exchange = report.find("lalg.corollary_exchange");
  CHECK(exchange->verdict == Verdict::fails);
  CHECK(exchange->representative->witness == "(a,c)");
  const auto* bayes = report.find("partition.bayes_decomposition");
  CHECK(bayes->verdict == Verdict::fails);
  CHECK(bayes->representative->witness == "(1/2, 1/2), y = 1/2");
}

TEST_CASE("bundles are deterministic") {
  const auto again = run_bundle("paper");
  const auto& first = full_bundle();
  REQUIRE(again.records.size() == first.records.size());
  for (std::size_t i = 0; i < first.records.size(); ++i) {
    CHECK(io::to_json(first.records[i]).dump() ==
          io::to_json(again.records[i]).dump());
  }
}

TEST_CASE("small bundles") {
  CHECK(run_bundle("empty").claims.empty());
  CHECK(run_bundle("empty").passed());
  const auto corrupted = run_bundle("corrupted");
  REQUIRE(corrupted.claims.size() == 1);
  CHECK(corrupted.claims[0].verdict == Verdict::fails);
  CHECK(corrupted.claims[0].representative->witness == "condition 2 at (1/2,1/2)");
  CHECK_THROWS_AS(run_bundle("nope"), ContractError);
}

}  // TEST_SUITE
