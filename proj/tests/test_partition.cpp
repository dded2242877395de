#include "lalg/fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace lalg;

namespace {

// Block sequences of numerators summing to top, at most `cap` blocks.
std::set<std::vector<Element>> luk_partitions(int top, std::size_t cap) {
  std::set<std::vector<Element>> out;
  std::vector<Element> seq;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (!seq.empty() && remaining == 0) out.insert(seq);
    if (seq.size() == cap) return;
    for (int b = 0; b <= remaining; ++b) {
      seq.push_back(Element(b));
      self(self, remaining - b);
      seq.pop_back();
    }
  };
  rec(rec, top);
  return out;
}

}  // namespace

TEST_SUITE("partition") {

TEST_CASE("enumerated partitions of Lukasiewicz chains match the oracle") {
  for (int k = 2; k <= 5; ++k) {
    const auto L = fixtures::lukasiewicz_chain(std::size_t(k));
    const auto m = fixtures::lukasiewicz_state(L);
    for (std::size_t cap = 1; cap <= 3; ++cap) {
      std::set<std::vector<Element>> got;
      for (const auto& p : enumerate_partitions(m, cap)) got.insert(p.blocks());
      CHECK(got == luk_partitions(k - 1, cap));
    }
  }
}

TEST_CASE("validation errors") {
  const auto m = fixtures::lukasiewicz_state(fixtures::lukasiewicz_chain(3));
  CHECK_THROWS_AS(validate_partition({}, m), PartitionError);
  CHECK_THROWS_AS(validate_partition({1}, m), MeasureNotOne);
  CHECK_THROWS_AS(validate_partition({2, 1}, m), BlockOrthogonalityError);
  try {
    validate_partition({1, 1, 1}, m);
  } catch (const BlockOrthogonalityError& e) {
    CHECK(e.index() == 2);
  }
  const auto p = validate_partition({1, 1}, m);
  CHECK(p.sum() == 2);
  CHECK(describe(p) == "(1/2, 1/2)");
}

TEST_CASE("join blocks are the pairwise (.) products") {
  const int top = 4;
  const auto L = fixtures::lukasiewicz_chain(top + 1);
  const auto m = fixtures::lukasiewicz_state(L);
  const auto parts = enumerate_partitions(m, 3);
  for (const auto& xi : parts)
    for (const auto& eta : parts) {
      const auto blocks = join_blocks(xi, eta);
      REQUIRE(blocks.size() == xi.size() * eta.size());
      std::size_t k = 0;
      for (auto x : xi.blocks())
        for (auto y : eta.blocks())
          CHECK(int(blocks[k++]) == oracle::luk_odot(int(x), int(y), top));
    }
}

TEST_CASE("the join lemma has counterexamples under the sum refinement") {
  // (c) and (a) are one-block partitions; their join (c) is a partition
  // but (a) is not a (+)-sum of its blocks.
  const auto m = fixtures::bounded_five_state();
  const auto& L = m.algebra();
  const auto xi = validate_partition({L.find("c")}, m);
  const auto eta = validate_partition({L.find("a")}, m);
  const auto join = check_join(xi, eta);
  CHECK(join.defined);
  CHECK(join.is_partition);
  CHECK(join.refines_left);
  CHECK_FALSE(join.refines_right);
  CHECK(bayes_against(xi, eta).def_holds);
  CHECK(bayes_against(eta, xi).def_holds);
}

TEST_CASE("Bayes decomposition fails on (1/2, 1/2) with y = 1/2") {
  const auto m = fixtures::lukasiewicz_state(fixtures::lukasiewicz_chain(3));
  const auto xi = validate_partition({1, 1}, m);
  const auto c = has_bayes_property(xi, 1);
  CHECK(c.defined);
  CHECK(c.def_holds);
  CHECK_FALSE(c.decomposition_holds);
  CHECK(c.sum == Rational(0));
  CHECK(c.target == Rational(1, 2));
}

TEST_CASE("degenerate example: (0,a) and (0,b) are interior-equal") {
  const auto xi = fixtures::degenerate_xi();
  const auto eta = fixtures::degenerate_eta();
  CHECK(interior_subset(xi, eta));
  CHECK(interior_subset(eta, xi));
  CHECK(interior_equal(xi, eta));
}

TEST_CASE("refinement by (+)-sums") {
  const auto m = fixtures::lukasiewicz_state(fixtures::lukasiewicz_chain(5));
  const auto coarse = validate_partition({2, 2}, m);
  const auto fine = validate_partition({1, 1, 2}, m);
  CHECK(refines(fine, coarse));
  CHECK_FALSE(refines(coarse, fine));
  CHECK(refines(coarse, unit_partition(m)));
}

TEST_CASE("odot flags on the fixtures") {
  CHECK(is_odot_commutative(fixtures::lukasiewicz_chain(3)).holds);
  CHECK_FALSE(is_self_distributive(fixtures::lukasiewicz_chain(3)).holds());
  CHECK(is_self_distributive(fixtures::boolean_chain()).holds());
}

TEST_CASE("independence on a product-like pair") {
  const auto m = fixtures::boolean_chain_state();
  const auto unit = unit_partition(m);
  CHECK(independent(unit, unit));
}

TEST_CASE("pruning drops only measure-zero blocks") {
  const auto m = fixtures::lukasiewicz_state(fixtures::lukasiewicz_chain(3));
  const auto p = validate_partition({0, 2, 0}, m);
  CHECK(prune_zero_blocks(p).blocks() == std::vector<Element>{2});
  CHECK(nonzero_blocks(m, {0, 1, 0, 1}) == std::vector<Element>{1, 1});
}

}  // TEST_SUITE
