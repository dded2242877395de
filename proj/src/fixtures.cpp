#include "lalg/fixtures.hpp"

#include <algorithm>
#include <cstdint>

namespace lalg::fixtures {

namespace {

std::vector<Rational> values(std::initializer_list<Rational> v) { return v; }

}  // namespace

RawTable four_element_table() {
  return RawTable::from_names({"a", "b", "c", "1"},
                              {{"1", "1", "a", "1"},
                               {"a", "1", "c", "1"},
                               {"a", "1", "1", "1"},
                               {"a", "b", "c", "1"}},
                              "1");
}

FiniteLAlgebra four_element() { return FiniteLAlgebra(four_element_table()); }

RawTable bounded_five_table() {
  return RawTable::from_names({"0", "c", "a", "b", "1"},
                              {{"1", "1", "1", "1", "1"},
                               {"0", "1", "1", "1", "1"},
                               {"0", "b", "1", "b", "1"},
                               {"0", "a", "a", "1", "1"},
                               {"0", "c", "a", "b", "1"}},
                              "1", "0");
}

FiniteLAlgebra bounded_five() { return FiniteLAlgebra(bounded_five_table()); }

ElementMap swap_ab() { return {0, 1, 3, 2, 4}; }

State bounded_five_state() {
  return validate_state(bounded_five(), values({0, 1, 1, 1, 1}));
}

RawTable unbounded_five_table() {
  return RawTable::from_names({"1", "a", "b", "c", "d"},
                              {{"1", "a", "b", "c", "d"},
                               {"1", "1", "b", "c", "b"},
                               {"1", "a", "1", "b", "a"},
                               {"1", "a", "1", "1", "a"},
                               {"1", "1", "1", "b", "1"}},
                              "1");
}

FiniteLAlgebra unbounded_five() { return FiniteLAlgebra(unbounded_five_table()); }

UnaryOperator sample_closure() {
  // elements: 1 a b c d
  return UnaryOperator(unbounded_five(), {0, 0, 2, 3, 2});
}

RawTable degenerate_four_table() {
  return RawTable::from_names({"0", "a", "b", "1"},
                              {{"1", "1", "1", "1"},
                               {"0", "1", "1", "1"},
                               {"0", "1", "1", "1"},
                               {"0", "a", "b", "1"}},
                              "1", "0");
}

FiniteLAlgebra degenerate_four() {
  return FiniteLAlgebra(degenerate_four_table(), Mode::lenient);
}

State degenerate_state() {
  return validate_state(degenerate_four(), values({0, 1, 1, 1}));
}

Partition degenerate_xi() { return validate_partition({0, 1}, degenerate_state()); }

Partition degenerate_eta() {
  return validate_partition({0, 2}, degenerate_state());
}

FiniteLAlgebra singleton() {
  return FiniteLAlgebra(RawTable::from_indices({{0}}, 0, {"1"}));
}


FiniteLAlgebra boolean_chain() { return lukasiewicz_chain(2); }

State boolean_chain_state() { return lukasiewicz_state(boolean_chain()); }

FiniteLAlgebra boolean_square() {
  // x -> y = not x or y on {0, p, q, 1}
  return FiniteLAlgebra(RawTable::from_names({"0", "p", "q", "1"},
                                             {{"1", "1", "1", "1"},
                                              {"q", "1", "q", "1"},
                                              {"p", "p", "1", "1"},
                                              {"0", "p", "q", "1"}},
                                             "1", "0"));
}

ElementMap square_swap() { return {0, 2, 1, 3}; }

State boolean_square_state() {
  return validate_state(boolean_square(),
                        values({0, Rational(1, 2), Rational(1, 2), 1}));
}

FiniteLAlgebra lukasiewicz_chain(std::size_t k) {
  if (k < 2) throw ContractError("a Lukasiewicz chain needs at least 2 elements");
  const auto top = static_cast<std::int64_t>(k - 1);
  std::vector<std::string> names;
  for (std::int64_t i = 0; i <= top; ++i) {
    names.push_back(to_string(Rational(i, top)));
  }
  std::vector<std::vector<Element>> rows(k, std::vector<Element>(k));
  for (std::int64_t x = 0; x <= top; ++x) {
    for (std::int64_t y = 0; y <= top; ++y) {
      rows[x][y] = static_cast<Element>(std::min(top, top - x + y));
    }
  }
  return FiniteLAlgebra(RawTable::from_indices(std::move(rows), k - 1,
                                               std::move(names)));
}

State lukasiewicz_state(const FiniteLAlgebra& chain) {
  const auto top = static_cast<std::int64_t>(chain.size() - 1);
  std::vector<Rational> v;
  for (std::int64_t i = 0; i <= top; ++i) v.emplace_back(i, top);
  return validate_state(chain, std::move(v));
}

}  // namespace lalg::fixtures
