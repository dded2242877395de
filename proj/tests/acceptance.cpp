// Acceptance gate: one PASS/FAIL line per criterion. With an argument N only
// criterion N runs.

#include "lalg/checks.hpp"
#include "lalg/cli.hpp"
#include "lalg/dynamics.hpp"
#include "lalg/enumerate.hpp"
#include "lalg/fixtures.hpp"
#include "lalg/verify.hpp"
#include "oracles.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace lalg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail.clear();
    if (!detail.empty()) detail += "; ";
    detail += why;
    pass = false;
  }
  void note(const std::string& what) {
    if (!pass) return;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

oracle::Table to_oracle(const RawTable& t) {
  oracle::Table out(t.size(), std::vector<int>(t.size()));
  for (std::size_t x = 0; x < t.size(); ++x)
    for (std::size_t y = 0; y < t.size(); ++y) out[x][y] = int(t.arrow[x][y]);
  return out;
}

std::vector<FiniteLAlgebra> algebras_up_to(std::size_t n) {
  std::vector<FiniteLAlgebra> out;
  for (std::size_t k = 1; k <= n; ++k) {
    for (auto& A : enumerate_l_algebras(k)) out.push_back(std::move(A));
  }
  return out;
}

// ------------------------------------------------------------------ 1

Outcome axiom_suite() {
  Outcome o;
  const std::vector<std::pair<std::string, RawTable>> valid = {
      {"four-element", fixtures::four_element_table()},
      {"bounded-five", fixtures::bounded_five_table()},
      {"unbounded-five", fixtures::unbounded_five_table()}};
  for (const auto& [name, t] : valid) {
    if (!check_axioms(t).passed()) o.fail(name + " rejected");
  }
  const auto t4 = fixtures::degenerate_four_table();
  const auto report = check_axioms(t4);
  const auto* v5 = report.find(5);
  if (!v5) {
    o.fail("degenerate table passes axiom 5");
  } else if (v5->witness.size() != 2 || t4.names[v5->witness[0]] != "a" ||
             t4.names[v5->witness[1]] != "b") {
    o.fail("axiom 5 witness is not (a,b)");
  }
  if (!report.passed_except(5)) o.fail("degenerate table fails another axiom");
  try {
    FiniteLAlgebra strict(t4);
    o.fail("strict mode accepted the degenerate table");
  } catch (const AxiomError&) {
  }
  o.note("three tables valid, degenerate table: axiom (5) at (a,b)");
  return o;
}

// ------------------------------------------------------------------ 2

Outcome example_fidelity() {
  Outcome o;
  const auto T2 = fixtures::bounded_five();
  if (!is_homomorphism(fixtures::swap_ab(), T2, T2)) o.fail("a<->b not a homomorphism");

  const auto l = fixtures::sample_closure();
  if (!is_closure_operator(l)) {
    o.fail("sample operator not a closure operator");
  } else {
    std::set<std::string> simple;
    for (auto e : simple_elements(l)) simple.insert(l.algebra().name(e));
    if (simple != std::set<std::string>{"1", "b", "c"}) o.fail("simple elements differ");
  }

  const auto D = fixtures::degenerate_four();
  if (D.mode() != Mode::lenient) o.fail("degenerate algebra not lenient");
  std::vector<Rational> values(D.size(), Rational(1));
  values[D.find("0")] = Rational(0);
  if (!check_state_conditions(D, values).passed()) o.fail("valuation rejected as a state");

  const auto xi = fixtures::degenerate_xi();
  const auto eta = fixtures::degenerate_eta();
  if (!interior_equal(xi, eta)) o.fail("xi =o eta does not hold");
  const double I = info_gain(xi, eta).value;
  if (std::fabs(I) > 1e-12) o.fail("I(xi,eta) = " + fmt(I));
  o.note("homomorphism, closure operator {1,b,c}, lenient state, I = " + fmt(I));
  return o;
}

// ------------------------------------------------------------------ 3

Outcome closure_lattice() {
  Outcome o;
  std::size_t algebras = 0, top_bad = 0, fix_bad = 0, families = 0, max_bad = 0,
              two_valued_bad = 0;
  std::string first_max, first_two;
  for (const auto& A : algebras_up_to(4)) {
    ++algebras;
    const auto omega = enumerate_closure_operators(A);
    if (!omega.top_is_greatest()) ++top_bad;
    const auto& ops = omega.operators();
    const std::size_t n = ops.size();
    bool fix_ok = true;
    auto visit = [&](const std::vector<UnaryOperator>& F) {
      ++families;
      try {
        if (!check_sup_fixed_points(F, omega).holds()) fix_ok = false;
      } catch (const SupUndefined&) {
        fix_ok = false;
      }
    };
    for (std::size_t i = 0; i < n; ++i) {
      visit({ops[i]});
      for (std::size_t j = i + 1; j < n; ++j) {
        visit({ops[i], ops[j]});
        for (std::size_t k = j + 1; k < n; ++k) visit({ops[i], ops[j], ops[k]});
      }
    }
    if (!fix_ok) ++fix_bad;
    const auto report = maximal_operators(omega);
    if (!report.every_maximal_is_two_valued()) {
      if (max_bad++ == 0) first_max = describe(report.unmatched_maximal.front());
    }
    if (!report.every_two_valued_is_closure() || !report.every_two_valued_is_maximal()) {
      if (two_valued_bad++ == 0) {
        for (const auto& e : report.two_valued) {
          if (!e.closure || !e.maximal) {
            first_two = "l_" + A.name(e.a) + " = " + describe(e.op) +
                        (e.closure ? " not maximal" : " not a closure operator");
            break;
          }
        }
      }
    }
  }
  if (top_bad) o.fail(std::to_string(top_bad) + " algebras where the constant 1 is not greatest");
  if (fix_bad) o.fail(std::to_string(fix_bad) + " algebras with Fix(sup F) mismatches");
  if (max_bad) {
    o.fail(std::to_string(max_bad) + " algebras with a maximal operator that is no l_a, first " +
           first_max);
  }
  if (two_valued_bad) {
    o.fail(std::to_string(two_valued_bad) +
           " algebras with an l_a that is not a maximal closure operator, first " +
           first_two);
  }
  o.note(std::to_string(algebras) + " algebras, " + std::to_string(families) +
         " families");
  return o;
}

// ------------------------------------------------------------------ 4

Outcome entropy_identities() {
  Outcome o;
  const auto m = fixtures::lukasiewicz_state(fixtures::lukasiewicz_chain(3));
  const auto parts = enumerate_partitions(m, 3);
  CheckContext ctx;
  ctx.scenario = "lukasiewicz-3";
  ctx.flags = odot_flags(m.algebra());
  std::map<std::string, std::map<Verdict, std::size_t>> tally;
  auto add = [&](const ClaimRecord& r) {
    ++tally[r.id][r.verdict];
    if (r.verdict == Verdict::fails) {
      o.fail(r.id + " at " + r.witness);
    }
  };
  for (const auto& xi : parts) {
    for (const auto& eta : parts) {
      add(check_chain_rule(ctx, xi, eta));
      add(check_info_symmetric(ctx, xi, eta));
      add(check_info_bounds(ctx, xi, eta));
      add(check_subadditive(ctx, xi, eta));
      add(check_interior_iff_zero(ctx, xi, eta));
      // Decided again on exact terms where the Bayes hypotheses hold.
      const auto bayes = bayes_against(xi, eta);
      const bool gated = bayes.def_holds && bayes.decomposition_holds;
      const bool zero = conditional_entropy(xi, eta).exactly_zero();
      if (gated && zero != interior_subset(xi, eta)) {
        o.fail("H(xi|eta)=0 vs interior subset at " + describe(xi) + ", " +
               describe(eta));
      }
      for (const auto& zeta : parts) add(check_three_partition_chain(ctx, xi, eta, zeta));
    }
  }
  std::string counts;
  for (const auto& [id, v] : tally) {
    const auto held = v.count(Verdict::holds) ? v.at(Verdict::holds) : 0;
    if (held == 0) o.fail(id + " never evaluated with its hypotheses met");
    counts += (counts.empty() ? "" : ", ") + id + " " + std::to_string(held);
  }
  o.note(std::to_string(parts.size()) + " partitions; holds: " + counts);
  return o;
}

// ------------------------------------------------------------------ 5

Outcome special_values() {
  Outcome o;
  for (const auto& m : {fixtures::lukasiewicz_state(fixtures::lukasiewicz_chain(3)),
                        fixtures::boolean_square_state(), fixtures::bounded_five_state(),
                        fixtures::boolean_chain_state()}) {
    const auto h = entropy(unit_partition(m));
    if (h.value != 0.0 || !h.exactly_zero()) o.fail("H((1)) = " + fmt(h.value));
  }
  for (std::size_t n : {2, 4, 8}) {
    const auto chain = fixtures::lukasiewicz_chain(n + 1);
    const auto m = fixtures::lukasiewicz_state(chain);
    const auto xi = validate_partition(
        std::vector<Element>(n, chain.find("1/" + std::to_string(n))), m);
    const double h = entropy(xi).value;
    const double err = std::fabs(h - std::log2(double(n)));
    if (err > 1e-12) o.fail("n = " + std::to_string(n) + " off by " + fmt(err));
  }
  o.note("H((1)) = 0, uniform 2/4/8 blocks give log2 n");
  return o;
}

// ------------------------------------------------------------------ 6

Outcome dynamics_suite() {
  Outcome o;
  using namespace fixtures;
  const auto T2 = bounded_five();
  const auto sq = boolean_square();
  const auto l3 = lukasiewicz_chain(3);
  const auto b2 = boolean_chain();
  const std::vector<std::pair<std::string, LSystem>> systems = {
      {"lukasiewicz-3 identity",
       validate_system(UnaryOperator::identity(l3), lukasiewicz_state(l3))},
      {"boolean-2 identity", validate_system(UnaryOperator::identity(b2), boolean_chain_state())},
      {"boolean-square identity",
       validate_system(UnaryOperator::identity(sq), boolean_square_state())},
      {"bounded-five identity",
       validate_system(UnaryOperator::identity(T2), bounded_five_state())},
      {"boolean-square swap",
       validate_system(UnaryOperator(sq, square_swap()), boolean_square_state())},
      {"bounded-five swap",
       validate_system(UnaryOperator(T2, swap_ab()), bounded_five_state())},
  };
  std::size_t rates = 0, agreements = 0;
  for (const auto& [name, sys] : systems) {
    for (const auto& xi : enumerate_partitions(sys.state(), 3)) {
      EntropyRateEstimate est;
      try {
        est = entropy_rate(sys, xi, 8);
      } catch (const Error& e) {
        o.fail(name + ": rate undefined at " + describe(xi) + ": " + e.what());
        continue;
      }
      ++rates;
      if (sys.is_identity() && std::fabs(est.estimate) > 1e-9) {
        o.fail(name + ": h(T," + describe(xi) + ") = " + fmt(est.estimate));
      }
      if (!est.subadditive) o.fail(name + ": subadditivity fails at " + describe(xi));
      if (est.converged && est.conditional_converged) {
        ++agreements;
        if (std::fabs(est.rate - est.estimate) > 1e-6) {
          o.fail(name + ": estimators disagree at " + describe(xi));
        }
      }
      const auto h0 = entropy(xi).exact_terms;
      auto sorted0 = h0;
      std::sort(sorted0.begin(), sorted0.end());
      for (std::size_t n = 1; n <= 8; ++n) {
        try {
          auto hn = entropy(image_partition(sys, xi, n)).exact_terms;
          std::sort(hn.begin(), hn.end());
          if (hn != sorted0) o.fail(name + ": H(T^n xi) != H(xi) at " + describe(xi));
        } catch (const PartitionError&) {
          o.fail(name + ": T^n xi not a partition at " + describe(xi));
        }
      }
    }
  }
  for (const std::size_t i : {0, 1}) {
    DynamicsContext ctx;
    ctx.scenario = systems[i].first;
    ctx.flags = odot_flags(systems[i].second.algebra());
    const auto r = check_power_rule(ctx, systems[i].second, 2);
    if (r.verdict != Verdict::holds) o.fail(ctx.scenario + ": power rule " + r.witness);
  }
  {
    const auto& sys = systems[3].second;
    DynamicsContext ctx;
    ctx.scenario = "bounded-five via a<->b";
    ctx.flags = odot_flags(sys.algebra());
    const auto derived = check_isomorphism_derived(ctx, sys, sys, swap_ab());
    const auto inv = check_isomorphism_invariance(ctx, sys, sys, swap_ab());
    if (derived.verdict != Verdict::holds) o.fail("isomorphism facts: " + derived.witness);
    if (inv.verdict != Verdict::holds) o.fail("isomorphism invariance: " + inv.witness);
  }
  o.note(std::to_string(rates) + " rates, " + std::to_string(agreements) +
         " estimator comparisons");
  return o;
}

// ------------------------------------------------------------------ 7

Outcome oracle_equivalence() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    std::set<oracle::Table> ours;
    for (const auto& t : enumerate_tables(std::size_t(n))) ours.insert(to_oracle(t));
    const auto naive = oracle::all_l_algebras(n);
    if (ours != naive) {
      o.fail("order " + std::to_string(n) + ": " + std::to_string(ours.size()) +
             " tables vs " + std::to_string(naive.size()));
    }
  }
  std::size_t checked = 0;
  for (const auto& A : algebras_up_to(4)) {
    ++checked;
    std::set<std::vector<int>> ours;
    const auto omega = enumerate_closure_operators(A);
    for (const auto& l : omega.operators()) {
      ours.insert(std::vector<int>(l.values().begin(), l.values().end()));
    }
    if (ours != oracle::closure_operators(to_oracle(A.table()), int(A.unit()))) {
      o.fail("closure operators differ on " + std::to_string(A.size()) + "-element algebra");
    }
  }
  o.note("orders 1-3 match; closure operators match on " + std::to_string(checked) +
         " algebras");
  return o;
}

// ------------------------------------------------------------------ 8

Outcome verify_full_bundle() {
  Outcome o;
  std::ostringstream out, err;
  const int status = cli::run({"verify", "--bundle", "paper", "--format", "json"}, out, err);
  if (status == cli::kExitInputError) {
    o.fail("verify did not run: " + err.str());
    return o;
  }
  const auto j = nlohmann::json::parse(out.str());
  std::set<std::string> covered;
  std::vector<std::string> failing;
  for (const auto& c : j["claims"]) {
    const auto& counts = c["counts"];
    std::size_t evaluated = 0;
    for (const auto& [k, v] : counts.items()) evaluated += v.get<std::size_t>();
    if (evaluated > 0) covered.insert(c["id"].get<std::string>());
    if (c["verdict"] == "fails") failing.push_back(c["id"].get<std::string>());
  }
  std::size_t missing = 0;
  for (const auto& info : claim_registry()) {
    if (!covered.count(std::string(info.id))) ++missing;
  }
  if (missing) o.fail(std::to_string(missing) + " claims not evaluated");
  if (!failing.empty()) {
    std::string ids;
    for (const auto& id : failing) ids += (ids.empty() ? "" : ", ") + id;
    o.fail(std::to_string(failing.size()) + " claims fail: " + ids);
  }
  o.note(std::to_string(covered.size()) + " of " + std::to_string(claim_registry().size()) +
         " claims covered, no fails");
  return o;
}

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;  // 0: no limit
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "axiom suite", 1, axiom_suite},
      {2, "example fidelity", 0, example_fidelity},
      {3, "closure-lattice suite", 60, closure_lattice},
      {4, "entropy identities", 0, entropy_identities},
      {5, "special values", 0, special_values},
      {6, "dynamics suite", 0, dynamics_suite},
      {7, "oracle equivalence", 0, oracle_equivalence},
      {8, "verify bundle", 300, verify_full_bundle},
  };
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  if (only < 0 || only > int(criteria.size())) {
    std::cerr << "usage: acceptance [1-" << criteria.size() << "]\n";
    return 2;
  }
  bool all = true;
  for (const auto& c : criteria) {
    if (only && c.number != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.fail("took " + fmt(secs) + " s, limit " + fmt(c.limit_seconds) + " s");
    }
    std::printf("%s criterion %d (%s) [%.2f s]: %s\n", o.pass ? "PASS" : "FAIL", c.number,
                c.name.c_str(), secs, o.detail.c_str());
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
