#include "lalg/claims.hpp"

#include "lalg/errors.hpp"

#include <algorithm>
#include <cmath>

namespace lalg {

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::hypothesis_not_met:
      return "hypothesis-not-met";
    case Verdict::not_assertable:
      return "not-assertable";
  }
  return "?";
}

bool ClaimRecord::hypotheses_met() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(),
                     [](const auto& h) { return h.met; });
}

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> registry = {
      // algebra
      {"lalg.axioms", "bundled tables satisfy axioms (1)-(5)"},
      {"lalg.degenerate_table_axiom5",
       "{0,a,b,1} table with a->b = b->a = 1 is an L-algebra"},
      {"lalg.unit_unique", "the logical unit is unique"},
      {"lalg.order_partial", "x <= y iff x->y = 1 is a partial order"},
      {"lalg.corollary_exchange", "x->(y->x) = y->(x->y)"},
      {"lalg.corollary_unit_distribution",
       "(x->y)->1 = (x->1)->(y->1) and 1->(x->y) = (1->x)->(1->y)"},
      {"lalg.monotone_right", "x <= y implies z->x <= z->y"},
      {"lalg.equivalence_x_le_y_to_x",
       "x <= y->x  iff  (x <= z implies z->y <= x->y)  iff  "
       "((x->y)->z)->z <= ((x->y)->z)->((y->x)->z)"},
      {"lalg.swap_algebra_bounded", "{0,c,a,b,1} has least element 0"},
      {"lalg.swap_homomorphism", "a<->b swap on {0,c,a,b,1} is a homomorphism"},
      // closure operators
      {"omega.sample_closure",
       "l = {a:1, 1:1, b:b, d:b, c:c} on {1,a,b,c,d} is a closure operator"},
      {"omega.inf_simple", "l(a) = inf{x simple : a <= x}"},
      {"omega.inf_is_glb", "pointwise inf of closure operators is their g.l.b."},
      {"omega.top", "constant 1 is the greatest closure operator"},
      {"omega.sup_fixed_points", "Fix(sup F) = intersection of Fix(l), l in F"},
      {"omega.l_a_maximal",
       "for a != 1, l_a (a below a, 1 elsewhere) is a maximal closure operator"},
      {"omega.maximal_is_l_a", "every maximal closure operator equals some l_a"},
      // states and partitions
      {"state.degenerate_state",
       "m(0) = 0, m(a) = m(b) = m(1) = 1 is a state on {0,a,b,1}"},
      {"state.conditions", "bundled valuations satisfy the state conditions"},
      {"partition.join_is_partition",
       "xi v eta is a partition refining xi and eta"},
      {"partition.bayes_decomposition",
       "m((+)x_i (.) y) = m(y) implies sum_i m(x_i (.) y) = m(y)"},
      {"partition.degenerate_interior_equal",
       "(0,a) =o (0,b) on {0,a,b,1}"},
      // entropy
      {"entropy.nonnegative", "H(xi) >= 0"},
      {"entropy.trivial_partition", "H((1)) = 0"},
      {"entropy.uniform", "m(x_i) = 1/n for all i gives H(xi) = log n"},
      {"entropy.chain_rule", "H(xi v eta) = H(xi|eta) + H(eta)"},
      {"entropy.interior_iff_zero", "xi <=o eta iff H(xi|eta) = 0"},
      {"entropy.interior_equal_same_entropy", "xi =o eta implies H(xi) = H(eta)"},
      {"entropy.interior_equal_condition_left",
       "xi =o eta implies H(xi|zeta) = H(eta|zeta)"},
      {"entropy.interior_equal_condition_right",
       "eta =o zeta implies H(xi|zeta) = H(xi|eta)"},
      {"entropy.condition_on_unit", "H(xi|(1)) = H(xi)"},
      {"entropy.three_chain",
       "H(xi v eta|zeta) = H(xi|zeta) + H(eta|xi v zeta)"},
      {"entropy.join_chain",
       "H(xi_1 v ... v xi_n) = sum_i H(xi_i | xi_0 v ... v xi_{i-1}), "
       "xi_0 = (1)"},
      {"entropy.conditional_join_chain",
       "H(xi_1 v ... v xi_n | eta) = "
       "sum_i H(xi_i | xi_0 v ... v xi_{i-1} v eta)"},
      {"entropy.refinement_monotone", "eta refines xi implies H(xi) <= H(eta)"},
      {"entropy.conditioning_reduces", "H(xi|eta) <= H(xi)"},
      {"entropy.refinement_conditional_monotone",
       "eta refines xi implies H(xi|zeta) <= H(eta|zeta)"},
      {"entropy.subadditive", "H(xi v eta) <= H(xi) + H(eta)"},
      {"entropy.independence_equivalence",
       "H(xi|eta) = H(xi)  iff  H(xi v eta) = H(xi) + H(eta)  iff  "
       "xi, eta independent"},
      // dynamics
      {"dynamics.image_partition", "T^n(xi) is a partition"},
      {"dynamics.image_entropy", "H(T^n xi) = H(xi)"},
      {"dynamics.image_conditional", "H(T^n xi | T^n eta) = H(xi|eta)"},
      {"dynamics.join_decomposition",
       "H(v_{i<n} T^i xi) = H(xi) + sum_{j<n} H(xi | v_{1<=i<=j} T^i xi)"},
      {"dynamics.subadditive_sequence", "a_{n+p} <= a_n + a_p"},
      {"dynamics.rate_bounded", "h(T,xi) <= H(xi)"},
      {"dynamics.rate_subadditive", "h(T, xi v eta) <= h(T,xi) + h(T,eta)"},
      {"dynamics.rate_interior_monotone",
       "xi <=o eta implies h(T,xi) <= h(T,eta)"},
      {"dynamics.rate_conditional_bound", "h(T,xi) <= h(T,eta) + H(xi|eta)"},
      {"dynamics.rate_shift_invariant", "h(T, T xi) = h(T, xi)"},
      {"dynamics.rate_join_invariant", "h(T, v_{i<k} T^i xi) = h(T, xi)"},
      {"dynamics.identity_zero", "h(id) = 0"},
      {"dynamics.isomorphism_derived",
       "phi(0) = 0, phi(1) = 1, phi(a(+)b) = phi(a)(+)phi(b), "
       "phi(a(.)b) = phi(a)(.)phi(b), a <= b implies phi(a) <= phi(b)"},
      {"dynamics.isomorphism_invariance", "isomorphic systems: h(T1) = h(T2)"},
      {"dynamics.power_rule", "h(T^k) = |k| h(T)"},
      {"dynamics.conditional_form",
       "h(T,xi) = lim H(xi | v_{1<=i<=n} T^i xi)"},
      {"dynamics.zero_rate_interior",
       "h(T,xi) = 0 iff xi <=o v_{i>=1} T^i xi"},
      {"dynamics.generator", "xi a generator implies h(T) = h(T,xi)"},
      // information gain
      {"info.two_forms", "I(xi,eta) = H(xi) + H(eta) - H(xi v eta)"},
      {"info.symmetric", "I(xi,eta) = I(eta,xi)"},
      {"info.bounds", "0 <= I(xi,eta) <= min(H(xi), H(eta))"},
      {"info.interior_equal_invariance",
       "xi =o eta implies I(xi,zeta) = I(eta,zeta)"},
      {"info.degenerate_pair_zero", "I((0,a), (0,b)) = 0 on {0,a,b,1}"},
      {"info.join_chain",
       "I(xi_1 v ... v xi_n, eta) = I(xi_1,eta) + "
       "sum_{i>=2} I(xi_i, eta | xi_1 v ... v xi_{i-1})"},
      {"info.product_corollary", "I(xi,eta) = H(xi) H(eta)"},
      {"info.conditional_independence_symmetric",
       "I(xi,zeta|eta) = 0 implies I(zeta,xi|eta) = 0"},
      {"info.chain_two_ways",
       "I(xi, eta v zeta) = I(xi,eta) + I(xi,zeta|eta) = "
       "I(xi,zeta) + I(xi,eta|zeta)"},
      {"info.markov_join", "I(xi,zeta|eta) = 0 implies I(xi v eta, zeta) = "
                           "I(eta,zeta)"},
      {"info.markov_split", "I(xi,zeta|eta) = 0 implies I(eta,zeta) = "
                            "I(xi,zeta) + I(zeta,eta|xi)"},
      {"info.markov_conditioning",
       "I(xi,zeta|eta) = 0 implies I(xi,eta|zeta) <= I(xi,eta)"},
  };
  return registry;
}

std::string_view claim_statement(std::string_view id) {
  for (const auto& c : claim_registry()) {
    if (c.id == id) return c.statement;
  }
  throw ContractError("unknown claim id '" + std::string(id) + "'");
}

ClaimRecord make_claim(std::string_view id, std::string scenario,
                       std::vector<Hypothesis> hypotheses) {
  ClaimRecord rec;
  rec.id = std::string(id);
  rec.statement = std::string(claim_statement(id));
  rec.scenario = std::move(scenario);
  rec.hypotheses = std::move(hypotheses);
  return rec;
}

ClaimRecord& decide_equal(ClaimRecord& rec, double lhs, double rhs,
                          double tolerance) {
  rec.lhs = lhs;
  rec.rhs = rhs;
  rec.delta = std::abs(lhs - rhs);
  if (!rec.hypotheses_met()) {
    rec.verdict = Verdict::hypothesis_not_met;
  } else {
    rec.verdict = *rec.delta <= tolerance ? Verdict::holds : Verdict::fails;
  }
  return rec;
}

ClaimRecord& decide_at_most(ClaimRecord& rec, double lhs, double rhs,
                            double tolerance) {
  rec.lhs = lhs;
  rec.rhs = rhs;
  rec.delta = lhs - rhs;
  if (!rec.hypotheses_met()) {
    rec.verdict = Verdict::hypothesis_not_met;
  } else {
    rec.verdict = lhs <= rhs + tolerance ? Verdict::holds : Verdict::fails;
  }
  return rec;
}

ClaimRecord& decide(ClaimRecord& rec, bool holds, std::string witness) {
  if (!rec.hypotheses_met()) {
    rec.verdict = Verdict::hypothesis_not_met;
  } else {
    rec.verdict = holds ? Verdict::holds : Verdict::fails;
    if (!holds) rec.witness = std::move(witness);
  }
  return rec;
}

}  // namespace lalg
