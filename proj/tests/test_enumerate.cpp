#include "lalg/enumerate.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace lalg;

namespace {

std::set<oracle::Table> as_set(const std::vector<RawTable>& tables) {
  std::set<oracle::Table> out;
  for (const auto& t : tables) {
    oracle::Table o(t.size(), std::vector<int>(t.size()));
    for (std::size_t x = 0; x < t.size(); ++x)
      for (std::size_t y = 0; y < t.size(); ++y) o[x][y] = int(t.arrow[x][y]);
    out.insert(o);
  }
  return out;
}

}  // namespace

TEST_SUITE("enumerate") {

TEST_CASE("labeled counts for orders 1 to 4") {
  CHECK(enumerate_tables(1).size() == 1);
  CHECK(enumerate_tables(2).size() == 1);
  CHECK(enumerate_tables(3).size() == 8);
  CHECK(enumerate_tables(4).size() == 204);
}

TEST_CASE("orders up to 3 match the naive filter exactly") {
  for (int n = 1; n <= 3; ++n) {
    const auto tables = enumerate_tables(std::size_t(n));
    const auto got = as_set(tables);
    CHECK(got.size() == tables.size());
    CHECK(got == oracle::all_l_algebras(n));
  }
}

TEST_CASE("every enumerated table of order 4 passes the oracle") {
  for (const auto& t : as_set(enumerate_tables(4))) {
    CHECK(oracle::is_l_algebra(t, 3));
  }
}

TEST_CASE("isomorphism classes partition the labeled tables") {
  EnumerateOptions iso;
  iso.up_to_iso = true;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto classes = enumerate_tables(n, iso);
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t j = i + 1; j < classes.size(); ++j)
        CHECK_FALSE(isomorphic_tables(classes[i], classes[j]));
    for (const auto& t : enumerate_tables(n)) {
      std::size_t matches = 0;
      for (const auto& c : classes) matches += isomorphic_tables(t, c);
      CHECK(matches == 1);
    }
  }
}

TEST_CASE("canonical form is invariant under relabeling") {
  for (const auto& t : enumerate_tables(4)) {
    const auto relabeled = relabel(t, {2, 0, 1, 3});
    CHECK(canonical_form(relabeled).arrow == canonical_form(t).arrow);
  }
}

TEST_CASE("sharded enumeration keeps the sequential order") {
  EnumerateOptions one, many;
  one.threads = 1;
  many.threads = 4;
  CHECK(enumerate_tables(4, one) == enumerate_tables(4, many));
}

TEST_CASE("caps and contracts") {
  EnumerateOptions small;
  small.max_order = 3;
  CHECK_THROWS_AS(enumerate_tables(4, small), CapacityError);
  CHECK_THROWS_AS(enumerate_tables(0), ContractError);
  try {
    enumerate_tables(4, small);
  } catch (const CapacityError& e) {
    CHECK(e.limit() == 3);
    CHECK(e.requested() == 4);
  }
}

}  // TEST_SUITE
