#pragma once

#include "lalg/algebra.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace lalg {

inline constexpr std::size_t kDefaultMaxOrder = 5;

struct EnumerateOptions {
  bool up_to_iso = false;
  std::size_t max_order = kDefaultMaxOrder;
  /// Worker count; 0 reads LALG_THREADS and falls back to the hardware count.
  unsigned threads = 0;
};

/// Worker count after applying LALG_THREADS; always at least 1.
unsigned resolve_threads(unsigned requested);

/// Relabels `table` so that element i becomes perm[i]. Names move with their
/// elements.
RawTable relabel(const RawTable& table, const std::vector<Element>& perm);

/// Least relabeling of `table` (row-major cell order) over all permutations
/// that fix the unit.
RawTable canonical_form(const RawTable& table);

/// True iff some unit-fixing relabeling maps one table onto the other.
bool isomorphic_tables(const RawTable& a, const RawTable& b);

/// Visits every L-algebra table of order n with unit n-1, in lexicographic
/// row-major order. Throws CapacityError when n exceeds the cap and
/// ContractError for n == 0.
void for_each_l_algebra(std::size_t n, const EnumerateOptions& options,
                        const std::function<void(const RawTable&)>& visit);

/// Same tables as for_each_l_algebra, collected. Runs sharded across workers
/// when more than one is configured; the result order is identical to the
/// single-threaded order.
std::vector<RawTable> enumerate_tables(std::size_t n,
                                       const EnumerateOptions& options = {});

std::vector<FiniteLAlgebra> enumerate_l_algebras(
    std::size_t n, const EnumerateOptions& options = {});

}  // namespace lalg
