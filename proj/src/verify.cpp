#include "lalg/verify.hpp"

#include "lalg/enumerate.hpp"
#include "lalg/fixtures.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lalg {

namespace {

std::string element_list(const FiniteLAlgebra& algebra,
                         const std::vector<Element>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += algebra.name(xs[i]);
  }
  return out + ")";
}

struct NamedAlgebra {
  std::string scenario;
  FiniteLAlgebra algebra;
};

std::vector<NamedAlgebra> strict_fixtures() {
  using namespace fixtures;
  return {
      {"four-element", four_element()},
      {"bounded-five", bounded_five()},
      {"unbounded-five", unbounded_five()},
      {"singleton", singleton()},
      {"boolean-2", boolean_chain()},
      {"lukasiewicz-3", lukasiewicz_chain(3)},
      {"boolean-square", boolean_square()},
      {"lukasiewicz-5", lukasiewicz_chain(5)},
  };
}

// Isomorphism classes of order <= 4, named by order and position.
std::vector<NamedAlgebra> enumerated_algebras(std::size_t max_order) {
  std::vector<NamedAlgebra> out;
  EnumerateOptions options;
  options.up_to_iso = true;
  for (std::size_t n = 1; n <= max_order; ++n) {
    auto algebras = enumerate_l_algebras(n, options);
    for (std::size_t i = 0; i < algebras.size(); ++i) {
      out.push_back({"enumerated-" + std::to_string(n) + "." +
                         std::to_string(i + 1),
                     algebras[i]});
    }
  }
  return out;
}

// ---------------------------------------------------------------- algebra

void algebra_claims(const NamedAlgebra& na, std::vector<ClaimRecord>& out) {
  const auto& A = na.algebra;
  {
    auto rec = make_claim("lalg.axioms", na.scenario);
    const auto report = check_axioms(A.table());
    std::string witness;
    if (!report.passed()) {
      const auto& v = report.violations.front();
      witness = "axiom " + std::to_string(v.axiom) + " at " +
                element_list(A, v.witness);
    }
    out.push_back(decide(rec, report.passed(), witness));
  }
  const auto laws = check_derived_laws(A);
  auto law = [&](std::string_view id, std::vector<std::string_view> names) {
    auto rec = make_claim(id, na.scenario);
    bool holds = true;
    std::string witness;
    for (auto name : names) {
      const auto* c = laws.find(name);
      if (c == nullptr) throw ContractError("law not checked: " + std::string(name));
      if (!c->holds && holds) {
        holds = false;
        witness = element_list(A, c->witness);
      }
    }
    out.push_back(decide(rec, holds, witness));
  };
  law("lalg.unit_unique", {laws::unit_unique});
  law("lalg.corollary_exchange", {laws::exchange});
  law("lalg.corollary_unit_distribution", {laws::unit_right, laws::unit_left});
  law("lalg.monotone_right", {laws::monotone});
  law("lalg.equivalence_x_le_y_to_x", {laws::equivalence});
  {
    auto rec = make_claim("lalg.order_partial", na.scenario);
    const auto order = induced_order(A);
    std::string witness;
    if (!order.reflexive()) witness = "not reflexive";
    else if (!order.antisymmetric()) witness = "not antisymmetric";
    else if (!order.transitive()) witness = "not transitive";
    out.push_back(decide(rec, order.is_partial_order(), witness));
  }
}

void table_algebra_claims(std::vector<ClaimRecord>& out,
                          std::vector<std::string>& lenient) {
  using namespace fixtures;
  const auto T2 = bounded_five();
  {
    auto rec = make_claim("lalg.swap_algebra_bounded", "bounded-five");
    const auto least = least_element(T2);
    out.push_back(decide(rec, least && T2.name(*least) == "0",
                         least ? T2.name(*least) : "no least element"));
  }
  {
    auto rec = make_claim("lalg.swap_homomorphism", "bounded-five");
    out.push_back(decide(rec, is_homomorphism(swap_ab(), T2, T2)));
  }
  {
    // The table is presented as an L-algebra but fails antisymmetry.
    const auto report = check_axioms(degenerate_four_table());
    auto rec = make_claim("lalg.degenerate_table_axiom5", "degenerate-four");
    rec.verdict = Verdict::not_assertable;
    rec.note = "axiom 5 fails";
    if (const auto* v = report.find(5)) {
      rec.witness = "axiom 5 at " +
                    element_list(degenerate_four(), v->witness);
    }
    out.push_back(rec);
  }
  lenient.push_back("degenerate-four");
}

// ---------------------------------------------------------------- closure

void omega_claims(const NamedAlgebra& na, std::vector<ClaimRecord>& out) {
  const auto& A = na.algebra;
  const auto omega = enumerate_closure_operators(A);
  const auto& ops = omega.operators();
  {
    auto rec = make_claim("omega.top", na.scenario);
    out.push_back(decide(rec, omega.top_is_greatest()));
  }
  {
    auto rec = make_claim("omega.inf_simple", na.scenario);
    bool holds = true;
    std::string witness;
    for (const auto& l : ops) {
      if (!check_inf_simple_characterization(l).holds()) {
        holds = false;
        witness = describe(l);
        break;
      }
    }
    rec.note = std::to_string(ops.size()) + " closure operators";
    out.push_back(decide(rec, holds, witness));
  }

  // Families of size 1..3, as index combinations.
  std::vector<std::vector<std::size_t>> families;
  const auto n = ops.size();
  for (std::size_t i = 0; i < n; ++i) {
    families.push_back({i});
    for (std::size_t j = i + 1; j < n; ++j) {
      families.push_back({i, j});
      for (std::size_t k = j + 1; k < n; ++k) families.push_back({i, j, k});
    }
  }
  std::size_t inf_defined = 0, inf_undefined = 0;
  std::size_t sup_defined = 0, sup_undefined = 0;
  bool inf_holds = true, sup_holds = true;
  std::string inf_witness, sup_witness;
  for (const auto& idx : families) {
    std::vector<UnaryOperator> family;
    for (auto i : idx) family.push_back(ops[i]);
    try {
      const auto inf = inf_operators(family);
      ++inf_defined;
      if (inf_holds && !verify_inf(family, inf, omega).holds()) {
        inf_holds = false;
        for (const auto& l : family) inf_witness += describe(l) + " ";
      }
    } catch (const InfUndefined&) {
      ++inf_undefined;
    }
    try {
      const auto report = check_sup_fixed_points(family, omega);
      ++sup_defined;
      if (sup_holds && !report.holds()) {
        sup_holds = false;
        for (const auto& l : family) sup_witness += describe(l) + " ";
      }
    } catch (const SupUndefined&) {
      ++sup_undefined;
    }
  }
  {
    auto rec = make_claim("omega.inf_is_glb", na.scenario,
                          {{"pointwise_glb_exists", inf_defined > 0}});
    rec.note = std::to_string(inf_defined) + " families with |F| <= 3, " +
               std::to_string(inf_undefined) + " without a pointwise g.l.b.";
    out.push_back(decide(rec, inf_holds, inf_witness));
  }
  {
    auto rec = make_claim("omega.sup_fixed_points", na.scenario,
                          {{"sup_exists", sup_defined > 0}});
    rec.note = std::to_string(sup_defined) + " families with |F| <= 3, " +
               std::to_string(sup_undefined) + " without a supremum";
    out.push_back(decide(rec, sup_holds, sup_witness));
  }

  const auto maximal = maximal_operators(omega);
  {
    auto rec = make_claim("omega.l_a_maximal", na.scenario,
                          {{"has_non_unit_element", !maximal.two_valued.empty()}});
    std::string witness;
    for (const auto& e : maximal.two_valued) {
      if (!e.closure || !e.maximal) {
        witness = "l_" + A.name(e.a) + " = " + describe(e.op) +
                  (e.closure ? " is not maximal" : " is not a closure operator");
        break;
      }
    }
    out.push_back(decide(rec, witness.empty(), witness));
  }
  {
    auto rec = make_claim("omega.maximal_is_l_a", na.scenario);
    std::string witness;
    if (!maximal.unmatched_maximal.empty()) {
      witness = describe(maximal.unmatched_maximal.front());
    }
    rec.note = std::to_string(maximal.maximal.size()) + " maximal operators";
    out.push_back(decide(rec, maximal.every_maximal_is_two_valued(), witness));
  }
}

void sample_closure_claim(std::vector<ClaimRecord>& out) {
  const auto l = fixtures::sample_closure();
  auto rec = make_claim("omega.sample_closure", "unbounded-five");
  const bool closure = is_closure_operator(l);
  std::string simple;
  if (closure) simple = element_list(l.algebra(), simple_elements(l));
  std::vector<Element> expected = {l.algebra().find("1"), l.algebra().find("b"),
                                   l.algebra().find("c")};
  std::sort(expected.begin(), expected.end());
  const bool simple_ok = closure && simple == element_list(l.algebra(), expected);
  rec.note = "simple elements " + simple;
  out.push_back(decide(rec, closure && simple_ok,
                       closure ? "simple elements " + simple
                               : "not a closure operator"));
}

// ---------------------------------------------------------------- states

struct NamedState {
  std::string scenario;
  State state;
  std::size_t sweep_blocks;
  bool triples;
};

std::vector<NamedState> sweep_states(const VerifyOptions& options) {
  using namespace fixtures;
  const auto l3 = lukasiewicz_chain(3);
  return {
      {"lukasiewicz-3", lukasiewicz_state(l3), options.sweep_blocks, true},
      {"boolean-square", boolean_square_state(), options.sweep_blocks, true},
      {"bounded-five", bounded_five_state(), options.sweep_blocks, true},
      {"boolean-2", boolean_chain_state(), options.sweep_blocks, true},
      {"degenerate-four (lenient)", degenerate_state(), 2, true},
  };
}

void state_claims(std::vector<ClaimRecord>& out) {
  using namespace fixtures;
  {
    auto rec = make_claim("state.degenerate_state", "degenerate-four (lenient)");
    const auto A = degenerate_four();
    const auto report = check_state_conditions(A, degenerate_state().values());
    std::string witness;
    if (!report.passed()) {
      const auto& v = report.violations.front();
      witness = "condition " + std::to_string(v.condition) + " at " +
                element_list(A, v.witness);
    }
    out.push_back(decide(rec, report.passed(), witness));
  }
  const auto l5 = lukasiewicz_chain(5);
  const std::vector<std::pair<std::string, State>> states = {
      {"lukasiewicz-3", lukasiewicz_state(lukasiewicz_chain(3))},
      {"lukasiewicz-5", lukasiewicz_state(l5)},
      {"boolean-2", boolean_chain_state()},
      {"boolean-square", boolean_square_state()},
      {"bounded-five", bounded_five_state()},
  };
  for (const auto& [scenario, m] : states) {
    auto rec = make_claim("state.conditions", scenario);
    const auto report = check_state_conditions(m.algebra(), m.values());
    out.push_back(decide(rec, report.passed()));
  }
}

void partition_claims(const NamedState& ns, const std::vector<Partition>& parts,
                      std::vector<ClaimRecord>& out) {
  const auto& A = ns.state.algebra();
  for (const auto& xi : parts) {
    for (const auto& eta : parts) {
      auto hyps = bayes_hypotheses(xi, eta, "xi|eta");
      auto other = bayes_hypotheses(eta, xi, "eta|xi");
      hyps.insert(hyps.end(), other.begin(), other.end());
      auto rec = make_claim("partition.join_is_partition", ns.scenario,
                            std::move(hyps));
      const auto join = check_join(xi, eta);
      const bool holds = join.defined && join.is_partition &&
                         join.refines_left && join.refines_right;
      out.push_back(decide(rec, holds,
                           describe(xi) + " v " + describe(eta) + " = " +
                               element_list(A, join.blocks)));
    }
    for (Element y = 0; y < A.size(); ++y) {
      const auto bayes = has_bayes_property(xi, y);
      auto rec = make_claim(
          "partition.bayes_decomposition", ns.scenario,
          {{"defined", bayes.defined}, {"bayes_def", bayes.def_holds}});
      if (rec.hypotheses_met()) {
        rec.lhs = to_double(bayes.sum);
        rec.rhs = to_double(bayes.target);
      }
      out.push_back(decide(rec, bayes.decomposition_holds,
                           describe(xi) + ", y = " + A.name(y)));
    }
  }
}

void degenerate_claims(const VerifyOptions& options,
                       std::vector<ClaimRecord>& out) {
  using namespace fixtures;
  const std::string scenario = "degenerate-four (lenient)";
  const auto xi = degenerate_xi();
  const auto eta = degenerate_eta();
  {
    auto rec = make_claim("partition.degenerate_interior_equal", scenario);
    out.push_back(decide(rec, interior_equal(xi, eta)));
  }
  {
    auto rec = make_claim("info.degenerate_pair_zero", scenario);
    out.push_back(decide_equal(rec, info_gain(xi, eta, options.base).value, 0.0, 1e-12));
  }
}

// ---------------------------------------------------------------- entropy

void entropy_sweep(const NamedState& ns, const std::vector<Partition>& parts,
                   const VerifyOptions& options, std::vector<ClaimRecord>& out) {
  CheckContext ctx;
  ctx.scenario = ns.scenario;
  ctx.flags = odot_flags(ns.state.algebra());
  ctx.base = options.base;
  ctx.tolerance = options.tolerance;

  out.push_back(check_trivial_partition(ctx, ns.state));
  for (const auto& xi : parts) {
    out.push_back(check_nonnegative(ctx, xi));
    out.push_back(check_condition_on_unit(ctx, xi));
    for (const auto& eta : parts) {
      out.push_back(check_chain_rule(ctx, xi, eta));
      out.push_back(check_interior_iff_zero(ctx, xi, eta));
      out.push_back(check_interior_equal_same_entropy(ctx, xi, eta));
      out.push_back(check_refinement_monotone(ctx, xi, eta));
      out.push_back(check_conditioning_reduces(ctx, xi, eta));
      out.push_back(check_subadditive(ctx, xi, eta));
      out.push_back(check_independence_equivalence(ctx, xi, eta));
      out.push_back(check_join_chain(ctx, {xi, eta}));
      out.push_back(check_info_two_forms(ctx, xi, eta));
      out.push_back(check_info_symmetric(ctx, xi, eta));
      out.push_back(check_info_bounds(ctx, xi, eta));
      out.push_back(check_info_product_corollary(ctx, xi, eta));
      if (!ns.triples) continue;
      for (const auto& zeta : parts) {
        out.push_back(check_three_partition_chain(ctx, xi, eta, zeta));
        out.push_back(check_interior_equal_condition_left(ctx, xi, eta, zeta));
        out.push_back(check_interior_equal_condition_right(ctx, xi, eta, zeta));
        out.push_back(check_refinement_conditional_monotone(ctx, xi, eta, zeta));
        out.push_back(check_join_chain(ctx, {xi, eta, zeta}));
        out.push_back(check_conditional_join_chain(ctx, {xi, eta}, zeta));
        for (auto& r : check_info_gain_calculus(ctx, xi, eta, zeta)) {
          out.push_back(std::move(r));
        }
      }
    }
  }
}

void uniform_claims(const VerifyOptions& options, std::vector<ClaimRecord>& out) {
  for (std::size_t n : {2u, 4u, 8u}) {
    const auto chain = fixtures::lukasiewicz_chain(n + 1);
    const auto m = fixtures::lukasiewicz_state(chain);
    // Element 1 of the chain carries measure 1/n.
    const auto xi = validate_partition(std::vector<Element>(n, 1), m);
    CheckContext ctx;
    ctx.scenario = "lukasiewicz-" + std::to_string(n + 1);
    ctx.flags = odot_flags(chain);
    ctx.base = options.base;
    ctx.tolerance = 1e-12;
    out.push_back(check_uniform(ctx, xi));
  }
}

// ---------------------------------------------------------------- dynamics

struct NamedSystem {
  std::string scenario;
  LSystem system;
};

std::vector<NamedSystem> systems() {
  using namespace fixtures;
  const auto l3 = lukasiewicz_chain(3);
  const auto l3_state = lukasiewicz_state(l3);
  const auto T2 = bounded_five();
  const auto sq = boolean_square();
  auto id = [](const State& m) {
    return validate_system(UnaryOperator::identity(m.algebra()), m);
  };
  return {
      {"lukasiewicz-3 identity", id(l3_state)},
      {"boolean-2 identity", id(boolean_chain_state())},
      {"boolean-square identity", id(boolean_square_state())},
      {"bounded-five identity", id(bounded_five_state())},
      {"boolean-square swap",
       validate_system(UnaryOperator(sq, square_swap()), boolean_square_state())},
      {"bounded-five swap",
       validate_system(UnaryOperator(T2, swap_ab()), bounded_five_state())},
  };
}

void dynamics_claims(const VerifyOptions& options, std::vector<ClaimRecord>& out) {
  for (const auto& ns : systems()) {
    const auto& sys = ns.system;
    DynamicsContext ctx;
    ctx.scenario = ns.scenario;
    ctx.truncation = options.truncation;
    ctx.max_blocks = options.max_blocks;
    ctx.tolerance = options.dynamical_tolerance;
    ctx.base = options.base;
    ctx.flags = odot_flags(sys.algebra());

    const auto parts = enumerate_partitions(sys.state(), options.sweep_blocks);
    for (const auto& xi : parts) {
      for (const auto& eta : parts) {
        for (auto& r : check_partition_dynamics(ctx, sys, xi, eta)) {
          out.push_back(std::move(r));
        }
        for (auto& r : check_rate_properties(ctx, sys, xi, eta)) {
          out.push_back(std::move(r));
        }
      }
      out.push_back(check_generator_theorem(ctx, sys, xi, 1));
    }
    if (sys.is_identity()) out.push_back(check_identity_zero(ctx, sys));
    out.push_back(check_power_rule(ctx, sys, 2));
    if (sys.is_invertible()) out.push_back(check_power_rule(ctx, sys, -1));
  }

  // Isomorphic pairs: phi maps each system onto itself.
  using namespace fixtures;
  const auto T2 = bounded_five();
  const auto sq = boolean_square();
  const std::vector<std::tuple<std::string, LSystem, ElementMap>> pairs = {
      {"bounded-five identity via a<->b",
       validate_system(UnaryOperator::identity(T2), bounded_five_state()),
       swap_ab()},
      {"bounded-five swap via a<->b",
       validate_system(UnaryOperator(T2, swap_ab()), bounded_five_state()),
       swap_ab()},
      {"boolean-square swap via p<->q",
       validate_system(UnaryOperator(sq, square_swap()), boolean_square_state()),
       square_swap()},
  };
  for (const auto& [scenario, sys, phi] : pairs) {
    DynamicsContext ctx;
    ctx.scenario = scenario;
    ctx.truncation = options.truncation;
    ctx.max_blocks = options.max_blocks;
    ctx.tolerance = options.dynamical_tolerance;
    ctx.base = options.base;
    ctx.flags = odot_flags(sys.algebra());
    out.push_back(check_isomorphism_derived(ctx, sys, sys, phi));
    out.push_back(check_isomorphism_invariance(ctx, sys, sys, phi));
  }
}

// ---------------------------------------------------------------- bundles

VerifyReport full_bundle(const VerifyOptions& options) {
  std::vector<ClaimRecord> records;
  std::vector<std::string> lenient;

  auto algebras = strict_fixtures();
  for (auto& na : enumerated_algebras(4)) algebras.push_back(std::move(na));
  for (const auto& na : algebras) algebra_claims(na, records);
  table_algebra_claims(records, lenient);

  sample_closure_claim(records);
  for (const auto& na : algebras) omega_claims(na, records);

  state_claims(records);
  for (const auto& ns : sweep_states(options)) {
    const auto parts = enumerate_partitions(ns.state, ns.sweep_blocks);
    partition_claims(ns, parts, records);
    entropy_sweep(ns, parts, options, records);
  }
  degenerate_claims(options, records);
  uniform_claims(options, records);
  dynamics_claims(options, records);

  auto report = aggregate(std::move(records), true);
  report.bundle = "paper";
  report.lenient_scenarios = std::move(lenient);
  return report;
}

VerifyReport degenerate_bundle(const VerifyOptions& options) {
  std::vector<ClaimRecord> records;
  std::vector<std::string> lenient;
  table_algebra_claims(records, lenient);
  std::erase_if(records, [](const ClaimRecord& r) {
    return r.id != "lalg.degenerate_table_axiom5";
  });
  state_claims(records);
  std::erase_if(records, [](const ClaimRecord& r) {
    return r.id == "state.conditions";
  });
  degenerate_claims(options, records);
  auto report = aggregate(std::move(records), false);
  report.bundle = "degenerate-four";
  report.lenient_scenarios = std::move(lenient);
  return report;
}

VerifyReport corrupted_bundle() {
  // m(1/2) = 1/3 breaks additivity at 1/2 (+) 1/2 = 1.
  const auto chain = fixtures::lukasiewicz_chain(3);
  const std::vector<Rational> values = {Rational(0), Rational(1, 3), Rational(1)};
  const auto report = check_state_conditions(chain, values);
  auto rec = make_claim("state.conditions", "lukasiewicz-3 corrupted");
  std::string witness;
  for (const auto& v : report.violations) {
    if (!witness.empty()) witness += "; ";
    witness += "condition " + std::to_string(v.condition) + " at " +
               element_list(chain, v.witness);
  }
  std::vector<ClaimRecord> records;
  records.push_back(decide(rec, report.passed(), witness));
  auto out = aggregate(std::move(records), false);
  out.bundle = "corrupted";
  return out;
}

}  // namespace

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(claims.begin(), claims.end(),
                    [](const auto& c) { return c.verdict == Verdict::fails; }));
}

const ClaimSummary* VerifyReport::find(std::string_view id) const {
  for (const auto& c : claims) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

VerifyReport aggregate(std::vector<ClaimRecord> records, bool full_registry) {
  std::map<std::string, ClaimSummary, std::less<>> by_id;
  for (const auto& rec : records) {
    auto& s = by_id[rec.id];
    s.id = rec.id;
    s.statement = rec.statement;
    switch (rec.verdict) {
      case Verdict::holds: ++s.holds; break;
      case Verdict::fails: ++s.fails; break;
      case Verdict::hypothesis_not_met: ++s.not_met; break;
      case Verdict::not_assertable: ++s.not_assertable; break;
    }
    const bool better =
        !s.representative ||
        (rec.verdict == Verdict::fails &&
         s.representative->verdict != Verdict::fails) ||
        (rec.verdict == Verdict::holds &&
         s.representative->verdict != Verdict::fails &&
         s.representative->verdict != Verdict::holds);
    if (better) s.representative = rec;
  }
  VerifyReport report;
  for (const auto& info : claim_registry()) {
    auto it = by_id.find(info.id);
    if (it == by_id.end()) {
      if (!full_registry) continue;
      ClaimSummary s;
      s.id = std::string(info.id);
      s.statement = std::string(info.statement);
      report.claims.push_back(std::move(s));
      continue;
    }
    auto& s = it->second;
    if (s.fails) s.verdict = Verdict::fails;
    else if (s.holds) s.verdict = Verdict::holds;
    else if (s.not_assertable) s.verdict = Verdict::not_assertable;
    else s.verdict = Verdict::hypothesis_not_met;
    report.claims.push_back(std::move(s));
    by_id.erase(it);
  }
  if (!by_id.empty()) {
    throw ContractError("record for unregistered claim '" +
                        by_id.begin()->first + "'");
  }
  report.records = std::move(records);
  return report;
}

const std::vector<std::string>& bundle_names() {
  static const std::vector<std::string> names = {"paper", "degenerate-four", "empty",
                                                "corrupted"};
  return names;
}

VerifyReport run_bundle(const std::string& name, const VerifyOptions& options) {
  if (name == "paper") return full_bundle(options);
  if (name == "empty") {
    auto report = aggregate({}, false);
    report.bundle = "empty";
    return report;
  }
  if (name == "degenerate-four") return degenerate_bundle(options);
  if (name == "corrupted") return corrupted_bundle();
  throw ContractError("unknown bundle '" + name + "'");
}

}  // namespace lalg
