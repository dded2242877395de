#include "lalg/enumerate.hpp"
#include "lalg/fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace lalg;

namespace {

oracle::Table to_oracle(const FiniteLAlgebra& A) {
  oracle::Table out(A.size(), std::vector<int>(A.size()));
  for (Element x = 0; x < A.size(); ++x)
    for (Element y = 0; y < A.size(); ++y) out[x][y] = int(A.arrow(x, y));
  return out;
}

std::vector<FiniteLAlgebra> small_algebras() {
  std::vector<FiniteLAlgebra> out;
  for (std::size_t n = 1; n <= 4; ++n)
    for (auto& A : enumerate_l_algebras(n)) out.push_back(std::move(A));
  out.push_back(fixtures::four_element());
  out.push_back(fixtures::boolean_square());
  return out;
}

}  // namespace

TEST_SUITE("closure") {

TEST_CASE("closure operators match map-space filtering for order <= 4") {
  for (const auto& A : small_algebras()) {
    const auto omega = enumerate_closure_operators(A);
    std::set<std::vector<int>> got;
    for (const auto& l : omega.operators()) {
      got.insert(std::vector<int>(l.values().begin(), l.values().end()));
    }
    CHECK(got.size() == omega.size());
    CHECK(got == oracle::closure_operators(to_oracle(A), int(A.unit())));
  }
}

TEST_CASE("sample operator is a closure operator with simple elements 1, b, c") {
  const auto l = fixtures::sample_closure();
  CHECK(is_extensive(l));
  CHECK(is_monotone(l));
  CHECK(is_idempotent(l));
  CHECK(is_closure_operator(l));
  const auto& A = l.algebra();
  CHECK(simple_elements(l) ==
        std::vector<Element>{A.find("1"), A.find("b"), A.find("c")});
  CHECK(check_inf_simple_characterization(l).holds());
}

TEST_CASE("simple elements require an L-operator") {
  const auto A = fixtures::unbounded_five();
  CHECK_THROWS_AS(simple_elements(UnaryOperator::constant(A, A.find("a"))),
                  ContractError);
}

TEST_CASE("constant 1 is the greatest closure operator") {
  for (const auto& A : small_algebras()) {
    const auto omega = enumerate_closure_operators(A);
    CHECK(omega.top_is_greatest());
    CHECK(omega.contains(UnaryOperator::top(A)));
    CHECK(omega.contains(UnaryOperator::identity(A)));
  }
}

TEST_CASE("sup fixed points are the common fixed points for |F| <= 3") {
  for (const auto& A : small_algebras()) {
    const auto omega = enumerate_closure_operators(A);
    const auto& ops = omega.operators();
    for (std::size_t i = 0; i < ops.size(); ++i)
      for (std::size_t j = i; j < ops.size(); ++j)
        for (std::size_t k = j; k < ops.size(); ++k) {
          try {
            CHECK(check_sup_fixed_points({ops[i], ops[j], ops[k]}, omega).holds());
          } catch (const SupUndefined&) {
          }
        }
  }
}

TEST_CASE("pointwise infimum, where defined, is the greatest lower bound") {
  for (const auto& A : small_algebras()) {
    const auto omega = enumerate_closure_operators(A);
    const auto& ops = omega.operators();
    for (std::size_t i = 0; i < ops.size(); ++i)
      for (std::size_t j = i; j < ops.size(); ++j) {
        try {
          const auto inf = inf_operators({ops[i], ops[j]});
          CHECK(verify_inf({ops[i], ops[j]}, inf, omega).holds());
        } catch (const InfUndefined&) {
        }
      }
  }
}

TEST_CASE("l_c on the four-element table is not a closure operator") {
  const auto A = fixtures::four_element();
  const auto l = l_a_operator(A, A.find("c"));
  CHECK(l(A.find("c")) == A.find("c"));
  CHECK(l(A.find("a")) == A.unit());
  CHECK_FALSE(is_closure_operator(l));
  CHECK_THROWS_AS(l_a_operator(A, A.unit()), ContractError);
}

TEST_CASE("two-valued operators and maximal elements on a chain") {
  // On the Boolean chain {0, 1} the only non-top closure operator is the
  // identity, which is l_0.
  const auto A = fixtures::boolean_chain();
  const auto report = maximal_operators(A);
  REQUIRE(report.maximal.size() == 1);
  CHECK(report.maximal[0] == UnaryOperator::identity(A));
  CHECK(report.every_two_valued_is_closure());
  CHECK(report.every_two_valued_is_maximal());
  CHECK(report.every_maximal_is_two_valued());
}

TEST_CASE("operator algebra") {
  const auto A = fixtures::bounded_five();
  const UnaryOperator f(A, fixtures::swap_ab());
  CHECK(f.is_bijective());
  CHECK(f.power(2) == UnaryOperator::identity(A));
  CHECK(f.inverse() == f);
  CHECK(f.after(f) == f.power(2));
  CHECK_THROWS_AS(UnaryOperator::constant(A, 0).inverse(), ContractError);
  CHECK_THROWS_AS(UnaryOperator(A, {0, 1}), StructuralError);
  CHECK(leq_operator(UnaryOperator::identity(A), UnaryOperator::top(A)));
}

TEST_CASE("carrier cap") {
  CHECK_THROWS_AS(enumerate_closure_operators(fixtures::lukasiewicz_chain(6)),
                  CapacityError);
}

}  // TEST_SUITE
