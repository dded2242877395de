#pragma once

#include "lalg/claims.hpp"
#include "lalg/entropy.hpp"

#include <string>
#include <vector>

namespace lalg {

/// Properties of (.) on one algebra that gate several inequalities.
struct OdotFlags {
  bool self_distributive = false;
  bool commutative = false;
};

OdotFlags odot_flags(const FiniteLAlgebra& algebra);

/// Hypotheses stating that m has the Bayes property for `a` against every
/// block of `b`: one for the defining identity and one for the
/// decomposition sum_i m(a_i (.) b_j) = m(b_j).
std::vector<Hypothesis> bayes_hypotheses(const Partition& a, const Partition& b,
                                         const std::string& label);

/// "join_is_partition[label]".
Hypothesis join_hypothesis(const Partition& a, const Partition& b,
                           const std::string& label);

/// Inputs shared by every checker.
struct CheckContext {
  std::string scenario;
  OdotFlags flags;
  LogBase base = LogBase::two;
  double tolerance = kStructuralTolerance;
};

ClaimRecord check_nonnegative(const CheckContext& ctx, const Partition& xi);
ClaimRecord check_trivial_partition(const CheckContext& ctx, const State& m);
/// Requires every block of xi to carry measure 1/n.
ClaimRecord check_uniform(const CheckContext& ctx, const Partition& xi);
ClaimRecord check_condition_on_unit(const CheckContext& ctx,
                                    const Partition& xi);

ClaimRecord check_chain_rule(const CheckContext& ctx, const Partition& xi,
                             const Partition& eta);
ClaimRecord check_three_partition_chain(const CheckContext& ctx,
                                        const Partition& xi,
                                        const Partition& eta,
                                        const Partition& zeta);
ClaimRecord check_interior_iff_zero(const CheckContext& ctx,
                                    const Partition& xi, const Partition& eta);
ClaimRecord check_interior_equal_same_entropy(const CheckContext& ctx,
                                              const Partition& xi,
                                              const Partition& eta);
ClaimRecord check_interior_equal_condition_left(const CheckContext& ctx,
                                                const Partition& xi,
                                                const Partition& eta,
                                                const Partition& zeta);
ClaimRecord check_interior_equal_condition_right(const CheckContext& ctx,
                                                 const Partition& xi,
                                                 const Partition& eta,
                                                 const Partition& zeta);
/// parts must be nonempty.
ClaimRecord check_join_chain(const CheckContext& ctx,
                             const std::vector<Partition>& parts);
ClaimRecord check_conditional_join_chain(const CheckContext& ctx,
                                         const std::vector<Partition>& parts,
                                         const Partition& eta);
/// Checked with eta as the refinement of xi.
ClaimRecord check_refinement_monotone(const CheckContext& ctx,
                                      const Partition& xi,
                                      const Partition& eta);
ClaimRecord check_conditioning_reduces(const CheckContext& ctx,
                                       const Partition& xi,
                                       const Partition& eta);
ClaimRecord check_refinement_conditional_monotone(const CheckContext& ctx,
                                                  const Partition& xi,
                                                  const Partition& eta,
                                                  const Partition& zeta);
ClaimRecord check_subadditive(const CheckContext& ctx, const Partition& xi,
                              const Partition& eta);
ClaimRecord check_independence_equivalence(const CheckContext& ctx,
                                           const Partition& xi,
                                           const Partition& eta);

/// The refinement, conditioning and subadditivity inequalities for one
/// triple.
std::vector<ClaimRecord> check_entropy_inequalities(const CheckContext& ctx,
                                                    const Partition& xi,
                                                    const Partition& eta,
                                                    const Partition& zeta);

ClaimRecord check_info_two_forms(const CheckContext& ctx, const Partition& xi,
                                 const Partition& eta);
ClaimRecord check_info_symmetric(const CheckContext& ctx, const Partition& xi,
                                 const Partition& eta);
ClaimRecord check_info_bounds(const CheckContext& ctx, const Partition& xi,
                              const Partition& eta);
ClaimRecord check_info_interior_equal_invariance(const CheckContext& ctx,
                                                 const Partition& xi,
                                                 const Partition& eta,
                                                 const Partition& zeta);
ClaimRecord check_info_join_chain(const CheckContext& ctx,
                                  const std::vector<Partition>& parts,
                                  const Partition& eta);
/// Evaluated and reported; never asserted.
ClaimRecord check_info_product_corollary(const CheckContext& ctx,
                                         const Partition& xi,
                                         const Partition& eta);
ClaimRecord check_conditional_independence_symmetric(const CheckContext& ctx,
                                                     const Partition& xi,
                                                     const Partition& eta,
                                                     const Partition& zeta);
ClaimRecord check_info_chain_two_ways(const CheckContext& ctx,
                                      const Partition& xi, const Partition& eta,
                                      const Partition& zeta);
ClaimRecord check_markov_join(const CheckContext& ctx, const Partition& xi,
                              const Partition& eta, const Partition& zeta);
ClaimRecord check_markov_split(const CheckContext& ctx, const Partition& xi,
                               const Partition& eta, const Partition& zeta);
ClaimRecord check_markov_conditioning(const CheckContext& ctx,
                                      const Partition& xi, const Partition& eta,
                                      const Partition& zeta);

/// Every information-gain identity and inequality for one triple.
std::vector<ClaimRecord> check_info_gain_calculus(const CheckContext& ctx,
                                                  const Partition& xi,
                                                  const Partition& eta,
                                                  const Partition& zeta);

}  // namespace lalg
