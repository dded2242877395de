#pragma once

#include "lalg/closure.hpp"
#include "lalg/partition.hpp"

#include <cstddef>

/// Small algebras, states and maps used by the verification harness, the
/// tests and the data/ documents.
namespace lalg::fixtures {

/// {a, b, c, 1}, unbounded.
RawTable four_element_table();
FiniteLAlgebra four_element();

/// {0, c, a, b, 1} with 0 < c < a, b < 1.
RawTable bounded_five_table();
FiniteLAlgebra bounded_five();
/// The homomorphism exchanging a and b on bounded_five.
ElementMap swap_ab();
/// m(0) = 0 and 1 elsewhere. Every y != 0 has y'' = 1, so additivity at
/// (0, y) leaves no other state.
State bounded_five_state();

/// {1, a, b, c, d}, unbounded.
RawTable unbounded_five_table();
FiniteLAlgebra unbounded_five();
/// a -> 1, 1 -> 1, b -> b, c -> c, d -> b on unbounded_five.
UnaryOperator sample_closure();

/// {0, a, b, 1} with a -> b = b -> a = 1; fails antisymmetry, so it is
/// only accepted in lenient mode.
RawTable degenerate_four_table();
FiniteLAlgebra degenerate_four();
/// m(0) = 0 and 1 elsewhere.
State degenerate_state();
Partition degenerate_xi();   // (0, a)
Partition degenerate_eta();  // (0, b)

/// The one-element algebra {1}. It carries no state: 1 is orthogonal to
/// itself and 1 (+) 1 = 1.
FiniteLAlgebra singleton();

/// Two-element Boolean algebra {0, 1}.
FiniteLAlgebra boolean_chain();
State boolean_chain_state();

/// Four-element Boolean algebra {0, p, q, 1}.
FiniteLAlgebra boolean_square();
/// Exchanges p and q.
ElementMap square_swap();
/// m(p) = m(q) = 1/2.
State boolean_square_state();

/// Lukasiewicz chain {0, 1/(k-1), ..., 1} with x -> y = min(1, 1 - x + y),
/// k >= 2. Elements are named by their value.
FiniteLAlgebra lukasiewicz_chain(std::size_t k);
/// m(x) = x on a Lukasiewicz chain.
State lukasiewicz_state(const FiniteLAlgebra& chain);

}  // namespace lalg::fixtures
