#include "lalg/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>

namespace lalg {

const SystemViolation* SystemReport::find(int condition) const noexcept {
  for (const auto& v : violations) {
    if (v.condition == condition) return &v;
  }
  return nullptr;
}

SystemReport check_system_conditions(const UnaryOperator& T, const State& m) {
  const auto& L = m.algebra();
  if (!T.algebra().same_as(L)) {
    throw StructuralError("map and state are defined on different algebras");
  }
  SystemReport r;
  const auto n = L.size();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (T(L.arrow(a, b)) != L.arrow(T(a), T(b))) {
        r.violations.push_back({1, {a, b}});
      }
    }
  }
  if (T(L.unit()) != L.unit()) r.violations.push_back({2, {L.unit()}});
  for (Element a = 0; a < n; ++a) {
    if (m(T(a)) != m(a)) r.violations.push_back({3, {a}});
  }
  return r;
}

namespace {

std::string system_message(const SystemReport& r, const FiniteLAlgebra* L) {
  std::string s = "not a dynamical system:";
  for (const auto& v : r.violations) {
    s += " condition " + std::to_string(v.condition) + " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i) s += ", ";
      s += L ? L->name(v.witness[i]) : std::to_string(v.witness[i]);
    }
    s += ")";
    break;
  }
  if (r.violations.size() > 1) {
    s += " and " + std::to_string(r.violations.size() - 1) + " more";
  }
  return s;
}

}  // namespace

SystemError::SystemError(SystemReport report)
    : Error(system_message(report, nullptr)), report_(std::move(report)) {}

SystemError::SystemError(SystemReport report, const FiniteLAlgebra& algebra)
    : Error(system_message(report, &algebra)), report_(std::move(report)) {}

bool LSystem::is_identity() const {
  const auto& v = map_.values();
  for (Element x = 0; x < v.size(); ++x) {
    if (v[x] != x) return false;
  }
  return true;
}

LSystem validate_system(const UnaryOperator& T, const State& m) {
  auto report = check_system_conditions(T, m);
  if (!report.passed()) throw SystemError(std::move(report), T.algebra());
  return LSystem(T, m);
}

LSystem power(const LSystem& sys, std::size_t k) {
  return validate_system(sys.map().power(k), sys.state());
}

LSystem inverse(const LSystem& sys) {
  return validate_system(sys.map().inverse(), sys.state());
}

namespace {

std::vector<Element> apply(const UnaryOperator& T, std::vector<Element> blocks,
                           std::size_t times) {
  for (std::size_t t = 0; t < times; ++t) {
    for (auto& b : blocks) b = T(b);
  }
  return blocks;
}

/// Left fold of joins with pruning after each step.
class Folder {
 public:
  explicit Folder(const State& m) : m_(m) {}

  void add(const std::vector<Element>& next) {
    if (first_) {
      first_ = false;
      valid_ = valid_ && !partition_failure(next, m_);
      blocks_ = valid_ ? prune_zero_blocks(validate_partition(next, m_)).blocks()
                       : nonzero_blocks(m_, next);
      return;
    }
    auto raw = join_blocks(m_.algebra(), blocks_, next);
    if (partition_failure(raw, m_)) {
      valid_ = false;
      blocks_ = nonzero_blocks(m_, raw);
    } else {
      blocks_ = prune_zero_blocks(validate_partition(std::move(raw), m_)).blocks();
    }
  }

  FormalJoin result() const {
    if (first_) return {{m_.algebra().unit()}, true};
    return {blocks_, valid_};
  }
  const std::vector<Element>& blocks() const { return blocks_; }
  bool valid() const { return valid_; }

 private:
  const State& m_;
  std::vector<Element> blocks_;
  bool valid_ = true;
  bool first_ = true;
};

}  // namespace

Partition image_partition(const LSystem& sys, const Partition& xi,
                          std::size_t n) {
  return validate_partition(apply(sys.map(), xi.blocks(), n), sys.state());
}

FormalJoin iterated_join_blocks(const LSystem& sys, const Partition& xi,
                                std::size_t first, std::size_t count) {
  Folder f(sys.state());
  auto image = apply(sys.map(), xi.blocks(), first);
  for (std::size_t i = 0; i < count; ++i) {
    f.add(image);
    image = apply(sys.map(), std::move(image), 1);
  }
  return f.result();
}

Partition iterated_join(const LSystem& sys, const Partition& xi, std::size_t n) {
  if (n == 0) throw ContractError("iterated join needs n >= 1");
  Partition p = prune_zero_blocks(xi);
  for (std::size_t i = 1; i < n; ++i) {
    p = prune_zero_blocks(common_refinement(p, image_partition(sys, xi, i)));
  }
  return p;
}

EntropyRateEstimate entropy_rate(const LSystem& sys, const Partition& xi,
                                 std::size_t N, double tolerance,
                                 LogBase base) {
  if (N == 0) throw ContractError("truncation N must be at least 1");
  const State& m = sys.state();
  EntropyRateEstimate e;
  e.truncation = N;

  Folder whole(m);  // xi v T xi v ... v T^(n-1) xi
  Folder fine(m);   // T xi v ... v T^n xi
  auto image = xi.blocks();
  for (std::size_t n = 1; n <= N; ++n) {
    whole.add(image);
    image = apply(sys.map(), std::move(image), 1);
    fine.add(image);
    e.values.push_back(entropy(m, whole.blocks(), base).value);
    e.conditional.push_back(
        conditional_entropy(m, xi.blocks(), fine.blocks(), base).value);
  }
  e.joins_valid = whole.valid() && fine.valid();
  e.rate = e.values.back() / static_cast<double>(N);
  e.estimate = e.conditional.back();
  if (N >= 2) {
    const double prev = e.values[N - 2] / static_cast<double>(N - 1);
    e.converged = std::abs(e.rate - prev) <= tolerance;
    e.conditional_converged =
        std::abs(e.conditional[N - 1] - e.conditional[N - 2]) <= tolerance;
  }
  for (std::size_t n = 1; n < N && e.subadditive; ++n) {
    for (std::size_t p = 1; n + p <= N; ++p) {
      if (e.values[n + p - 1] > e.values[n - 1] + e.values[p - 1] + 1e-9) {
        e.subadditive = false;
        e.subadditivity_witness = {n, p};
        break;
      }
    }
  }
  for (std::size_t n = 1; n < N; ++n) {
    if (e.conditional[n] > e.conditional[n - 1] + 1e-9) {
      e.conditional_monotone = false;
    }
  }
  return e;
}

SystemEntropy system_entropy(const LSystem& sys, std::size_t max_blocks,
                             std::size_t N, double tolerance, LogBase base) {
  SystemEntropy s;
  s.max_blocks = max_blocks;
  s.truncation = N;
  const State& m = sys.state();
  std::set<std::vector<Element>> seen;
  for (const auto& xi : enumerate_partitions(m, max_blocks)) {
    auto key = nonzero_blocks(m, xi.blocks());
    std::sort(key.begin(), key.end());
    if (seen.count(key)) continue;
    EntropyRateEstimate e;
    try {
      e = entropy_rate(sys, xi, N, tolerance, base);
    } catch (const OdotUndefined&) {
      ++s.excluded;
      continue;
    }
    if (!e.joins_valid) {
      ++s.excluded;
      continue;
    }
    seen.insert(std::move(key));
    ++s.evaluated;
    s.all_converged = s.all_converged && e.conditional_converged;
    if (!s.argmax || e.estimate > s.value) {
      s.value = e.estimate;
      s.argmax = xi;
      s.argmax_estimate = e;
    }
  }
  return s;
}

GeneratorReport is_generator(const LSystem& sys, const Partition& xi,
                             std::size_t n, std::size_t max_blocks) {
  GeneratorReport r;
  FormalJoin fj;
  try {
    fj = iterated_join_blocks(sys, xi, 1, n);
  } catch (const OdotUndefined&) {
    return r;
  }
  r.join_blocks = fj.blocks;
  if (!fj.valid || partition_failure(fj.blocks, sys.state())) return r;
  r.join_valid = true;
  const auto fine = validate_partition(fj.blocks, sys.state());
  r.is_generator = true;
  for (const auto& eta : enumerate_partitions(sys.state(), max_blocks)) {
    ++r.checked;
    if (!refines(fine, eta)) {
      r.is_generator = false;
      if (r.failures.size() < 5) r.failures.push_back(eta);
    }
  }
  return r;
}

IsomorphismReport are_isomorphic(const LSystem& sys1, const LSystem& sys2,
                                 const ElementMap& phi) {
  const auto& L1 = sys1.algebra();
  const auto& L2 = sys2.algebra();
  if (phi.size() != L1.size()) {
    throw StructuralError("isomorphism map has " + std::to_string(phi.size()) +
                          " entries for " + std::to_string(L1.size()) +
                          " elements");
  }
  for (auto v : phi) {
    if (v >= L2.size()) throw StructuralError("isomorphism map leaves the target");
  }
  IsomorphismReport r;
  const auto n = L1.size();
  for (Element a = 0; a < n && !r.arrow_witness; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (phi[L1.arrow(a, b)] != L2.arrow(phi[a], phi[b])) {
        r.arrow_witness = {a, b};
        break;
      }
    }
  }
  for (Element a = 0; a < n; ++a) {
    if (phi[sys1.map()(a)] != sys2.map()(phi[a])) {
      r.commute_witness = a;
      break;
    }
  }
  for (Element a = 0; a < n; ++a) {
    if (sys2.state()(phi[a]) != sys1.state()(a)) {
      r.measure_witness = a;
      break;
    }
  }
  r.zero_preserved = phi[L1.bottom()] == L2.bottom();
  r.unit_preserved = phi[L1.unit()] == L2.unit();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (!r.oplus_witness && orthogonal(L1, a, b)) {
        if (!orthogonal(L2, phi[a], phi[b]) ||
            phi[oplus(L1, a, b)] != oplus(L2, phi[a], phi[b])) {
          r.oplus_witness = {a, b};
        }
      }
      if (!r.odot_witness) {
        const auto left = odot(L1, a, b);
        if (left.defined()) {
          const auto right = odot(L2, phi[a], phi[b]);
          if (!right.defined() || right.value != phi[left.value]) {
            r.odot_witness = {a, b};
          }
        }
      }
      if (!r.order_witness && L1.leq(a, b) && !L2.leq(phi[a], phi[b])) {
        r.order_witness = {a, b};
      }
    }
  }
  return r;
}

namespace {

template <class Body>
ClaimRecord run(std::string_view id, const DynamicsContext& ctx,
                std::string who, Body&& body) {
  ClaimRecord rec = make_claim(id, ctx.scenario);
  try {
    body(rec);
  } catch (const OdotUndefined& e) {
    rec.hypotheses.push_back({"odot_defined", false});
    rec.verdict = Verdict::hypothesis_not_met;
    rec.note = e.what();
  } catch (const JoinNotPartition& e) {
    rec.hypotheses.push_back({"join_is_partition", false});
    rec.verdict = Verdict::hypothesis_not_met;
    rec.note = e.what();
  }
  if (rec.verdict == Verdict::fails && rec.witness.empty()) {
    rec.witness = std::move(who);
  } else if (rec.note.empty()) {
    rec.note = std::move(who);
  }
  return rec;
}

std::string who(const LSystem& sys, const Partition* xi,
                const Partition* eta = nullptr) {
  std::string s = "T=" + describe(sys.map());
  if (xi) s += ", xi=" + describe(*xi);
  if (eta) s += ", eta=" + describe(*eta);
  return s;
}

void gate_estimate(ClaimRecord& rec, const EntropyRateEstimate& e,
                   const std::string& label) {
  rec.hypotheses.push_back({"joins_valid[" + label + "]", e.joins_valid});
  rec.hypotheses.push_back(
      {"converged[" + label + "]", e.conditional_converged});
}

EntropyRateEstimate rate(const DynamicsContext& ctx, const LSystem& sys,
                         const Partition& xi) {
  return entropy_rate(sys, xi, ctx.truncation, ctx.tolerance, ctx.base);
}

std::vector<Rational> measures(const State& m, const std::vector<Element>& b) {
  std::vector<Rational> out;
  for (auto x : b) out.push_back(m(x));
  return out;
}

}  // namespace

std::vector<ClaimRecord> check_partition_dynamics(const DynamicsContext& ctx,
                                                  const LSystem& sys,
                                                  const Partition& xi,
                                                  const Partition& eta) {
  const State& m = sys.state();
  const std::size_t N = ctx.truncation;
  std::vector<ClaimRecord> out;

  out.push_back(run("dynamics.image_partition", ctx, who(sys, &xi),
                    [&](ClaimRecord& rec) {
                      for (std::size_t n = 1; n <= N; ++n) {
                        auto blocks = apply(sys.map(), xi.blocks(), n);
                        if (partition_failure(blocks, m)) {
                          decide(rec, false,
                                 "n=" + std::to_string(n) + ", " + who(sys, &xi));
                          return;
                        }
                      }
                      decide(rec, true);
                    }));

  out.push_back(run("dynamics.image_entropy", ctx, who(sys, &xi),
                    [&](ClaimRecord& rec) {
                      const auto base = measures(m, xi.blocks());
                      rec.rhs = entropy(xi, ctx.base).value;
                      for (std::size_t n = 1; n <= N; ++n) {
                        const auto img = apply(sys.map(), xi.blocks(), n);
                        if (measures(m, img) != base) {
                          rec.lhs = entropy(m, img, ctx.base).value;
                          decide(rec, false,
                                 "n=" + std::to_string(n) + ", " + who(sys, &xi));
                          return;
                        }
                      }
                      rec.lhs = rec.rhs;
                      rec.delta = 0.0;
                      decide(rec, true);
                    }));

  out.push_back(run(
      "dynamics.image_conditional", ctx, who(sys, &xi, &eta),
      [&](ClaimRecord& rec) {
        const double base = conditional_entropy(xi, eta, ctx.base).value;
        double worst = 0;
        double worst_value = base;
        for (std::size_t n = 1; n <= N; ++n) {
          const double v =
              conditional_entropy(m, apply(sys.map(), xi.blocks(), n),
                                  apply(sys.map(), eta.blocks(), n), ctx.base)
                  .value;
          if (std::abs(v - base) > worst) {
            worst = std::abs(v - base);
            worst_value = v;
          }
        }
        decide_equal(rec, worst_value, base, kStructuralTolerance);
      }));

  const auto e = rate(ctx, sys, xi);

  out.push_back(run(
      "dynamics.join_decomposition", ctx, who(sys, &xi), [&](ClaimRecord& rec) {
        rec.hypotheses.push_back({"joins_valid[xi]", e.joins_valid});
        for (std::size_t j = 1; j < N; ++j) {
          const auto fj = iterated_join_blocks(sys, xi, 1, j);
          bool ok = false;
          if (fj.valid && !partition_failure(fj.blocks, m)) {
            const auto fine = validate_partition(fj.blocks, m);
            const auto s = bayes_against(xi, fine);
            ok = s.def_holds && s.decomposition_holds;
          }
          rec.hypotheses.push_back(
              {"bayes[xi|v_{1..." + std::to_string(j) + "} T^i xi]", ok});
        }
        const double h = entropy(xi, ctx.base).value;
        double sum = h;
        double worst = -1;
        for (std::size_t n = 1; n <= N; ++n) {
          if (n >= 2) sum += e.conditional[n - 2];
          const double d = std::abs(e.values[n - 1] - sum);
          if (d > worst) {
            worst = d;
            rec.lhs = e.values[n - 1];
            rec.rhs = sum;
          }
        }
        decide_equal(rec, *rec.lhs, *rec.rhs, kStructuralTolerance);
      }));

  out.push_back(run("dynamics.subadditive_sequence", ctx, who(sys, &xi),
                    [&](ClaimRecord& rec) {
                      rec.hypotheses.push_back({"joins_valid[xi]", e.joins_valid});
                      std::string w;
                      if (e.subadditivity_witness) {
                        w = "n=" + std::to_string(e.subadditivity_witness->first) +
                            ", p=" +
                            std::to_string(e.subadditivity_witness->second) +
                            ", " + who(sys, &xi);
                      }
                      decide(rec, e.subadditive, w);
                    }));

  out.push_back(run("dynamics.conditional_form", ctx, who(sys, &xi),
                    [&](ClaimRecord& rec) {
                      rec.hypotheses.push_back({"joins_valid[xi]", e.joins_valid});
                      rec.hypotheses.push_back({"cesaro_converged", e.converged});
                      rec.hypotheses.push_back(
                          {"conditional_converged", e.conditional_converged});
                      decide_equal(rec, e.rate, e.estimate, ctx.tolerance);
                    }));

  out.push_back(run(
      "dynamics.zero_rate_interior", ctx, who(sys, &xi), [&](ClaimRecord& rec) {
        gate_estimate(rec, e, "xi");
        const auto fj = iterated_join_blocks(sys, xi, 1, N);
        if (!fj.valid || partition_failure(fj.blocks, m)) {
          rec.hypotheses.push_back({"join_is_partition[v T^i xi]", false});
          decide(rec, false);
          return;
        }
        const auto fine = validate_partition(fj.blocks, m);
        const auto s = bayes_against(xi, fine);
        rec.hypotheses.push_back(
            {"bayes[xi|v T^i xi]", s.def_holds && s.decomposition_holds});
        const bool zero = std::abs(e.estimate) <= ctx.tolerance;
        const bool sub = interior_subset(xi, fine);
        rec.lhs = e.estimate;
        rec.rhs = 0.0;
        rec.delta = std::abs(e.estimate);
        decide(rec, zero == sub,
               std::string("rate zero: ") + (zero ? "true" : "false") +
                   ", interior subset: " + (sub ? "true" : "false") + ", " +
                   who(sys, &xi));
      }));
  return out;
}

std::vector<ClaimRecord> check_rate_properties(const DynamicsContext& ctx,
                                               const LSystem& sys,
                                               const Partition& xi,
                                               const Partition& eta) {
  std::vector<ClaimRecord> out;
  const auto ex = rate(ctx, sys, xi);
  const auto ee = rate(ctx, sys, eta);

  out.push_back(run("dynamics.rate_bounded", ctx, who(sys, &xi),
                    [&](ClaimRecord& rec) {
                      gate_estimate(rec, ex, "xi");
                      decide_at_most(rec, ex.estimate,
                                     entropy(xi, ctx.base).value, ctx.tolerance);
                    }));

  out.push_back(run(
      "dynamics.rate_subadditive", ctx, who(sys, &xi, &eta),
      [&](ClaimRecord& rec) {
        const auto joined = prune_zero_blocks(common_refinement(xi, eta));
        const auto ej = rate(ctx, sys, joined);
        gate_estimate(rec, ej, "xi v eta");
        gate_estimate(rec, ex, "xi");
        gate_estimate(rec, ee, "eta");
        decide_at_most(rec, ej.estimate, ex.estimate + ee.estimate,
                       ctx.tolerance);
      }));

  out.push_back(run("dynamics.rate_interior_monotone", ctx, who(sys, &xi, &eta),
                    [&](ClaimRecord& rec) {
                      rec.hypotheses.push_back(
                          {"xi <=o eta", interior_subset(xi, eta)});
                      gate_estimate(rec, ex, "xi");
                      gate_estimate(rec, ee, "eta");
                      decide_at_most(rec, ex.estimate, ee.estimate,
                                     ctx.tolerance);
                    }));

  out.push_back(run(
      "dynamics.rate_conditional_bound", ctx, who(sys, &xi, &eta),
      [&](ClaimRecord& rec) {
        rec.hypotheses.push_back({"self_distributive", ctx.flags.self_distributive});
        for (auto& h : bayes_hypotheses(xi, eta, "xi|eta")) {
          rec.hypotheses.push_back(h);
        }
        gate_estimate(rec, ex, "xi");
        gate_estimate(rec, ee, "eta");
        decide_at_most(rec, ex.estimate,
                       ee.estimate + conditional_entropy(xi, eta, ctx.base).value,
                       ctx.tolerance);
      }));

  out.push_back(run("dynamics.rate_shift_invariant", ctx, who(sys, &xi),
                    [&](ClaimRecord& rec) {
                      rec.hypotheses.push_back({"invertible", sys.is_invertible()});
                      const auto shifted = image_partition(sys, xi, 1);
                      const auto es = rate(ctx, sys, shifted);
                      gate_estimate(rec, es, "T xi");
                      gate_estimate(rec, ex, "xi");
                      decide_equal(rec, es.estimate, ex.estimate, ctx.tolerance);
                    }));

  out.push_back(run("dynamics.rate_join_invariant", ctx, who(sys, &xi),
                    [&](ClaimRecord& rec) {
                      const auto joined = iterated_join(sys, xi, 2);
                      const auto ej = rate(ctx, sys, joined);
                      gate_estimate(rec, ej, "xi v T xi");
                      gate_estimate(rec, ex, "xi");
                      decide_equal(rec, ej.estimate, ex.estimate, ctx.tolerance);
                    }));
  return out;
}

ClaimRecord check_identity_zero(const DynamicsContext& ctx, const LSystem& sys) {
  return run("dynamics.identity_zero", ctx, who(sys, nullptr),
             [&](ClaimRecord& rec) {
               rec.hypotheses.push_back({"T = id", sys.is_identity()});
               const auto s = system_entropy(sys, ctx.max_blocks, ctx.truncation,
                                             ctx.tolerance, ctx.base);
               decide_equal(rec, s.value, 0.0, kStructuralTolerance);
               if (rec.verdict == Verdict::fails && s.argmax) {
                 rec.witness = "argmax xi=" + describe(*s.argmax);
               }
             });
}

ClaimRecord check_power_rule(const DynamicsContext& ctx, const LSystem& sys,
                             int k) {
  if (k < 0 && !sys.is_invertible()) {
    throw ContractError("negative power of a non-invertible map");
  }
  const std::size_t mag = static_cast<std::size_t>(std::abs(k));
  const LSystem Tk = k >= 0 ? power(sys, mag) : power(inverse(sys), mag);
  return run("dynamics.power_rule", ctx,
             who(sys, nullptr) + ", k=" + std::to_string(k),
             [&](ClaimRecord& rec) {
               const auto hk = system_entropy(Tk, ctx.max_blocks, ctx.truncation,
                                              ctx.tolerance, ctx.base);
               const auto h1 = system_entropy(
                   sys, ctx.max_blocks, std::max<std::size_t>(1, mag) * ctx.truncation,
                   ctx.tolerance, ctx.base);
               rec.hypotheses.push_back({"converged[T^k]", hk.all_converged});
               rec.hypotheses.push_back({"converged[T]", h1.all_converged});
               decide_equal(rec, hk.value, static_cast<double>(mag) * h1.value,
                            ctx.tolerance);
             });
}

ClaimRecord check_generator_theorem(const DynamicsContext& ctx,
                                    const LSystem& sys, const Partition& xi,
                                    std::size_t n) {
  return run("dynamics.generator", ctx,
             who(sys, &xi) + ", n=" + std::to_string(n), [&](ClaimRecord& rec) {
               const auto g = is_generator(sys, xi, n, ctx.max_blocks);
               rec.hypotheses.push_back({"generator", g.is_generator});
               const auto s = system_entropy(sys, ctx.max_blocks, ctx.truncation,
                                             ctx.tolerance, ctx.base);
               const auto e = rate(ctx, sys, xi);
               rec.hypotheses.push_back({"converged[h(T)]", s.all_converged});
               gate_estimate(rec, e, "xi");
               decide_equal(rec, s.value, e.estimate, ctx.tolerance);
             });
}

namespace {

std::string pair_text(const FiniteLAlgebra& L,
                      const std::optional<std::pair<Element, Element>>& p) {
  return "(" + L.name(p->first) + ", " + L.name(p->second) + ")";
}

}  // namespace

ClaimRecord check_isomorphism_derived(const DynamicsContext& ctx,
                                      const LSystem& sys1, const LSystem& sys2,
                                      const ElementMap& phi) {
  return run("dynamics.isomorphism_derived", ctx, who(sys1, nullptr),
             [&](ClaimRecord& rec) {
               const auto r = are_isomorphic(sys1, sys2, phi);
               rec.hypotheses.push_back({"isomorphic", r.is_isomorphic()});
               std::string w;
               const auto& L = sys1.algebra();
               if (!r.zero_preserved) w = "phi(0) != 0";
               else if (!r.unit_preserved) w = "phi(1) != 1";
               else if (r.oplus_witness) w = "oplus at " + pair_text(L, r.oplus_witness);
               else if (r.odot_witness) w = "odot at " + pair_text(L, r.odot_witness);
               else if (r.order_witness) w = "order at " + pair_text(L, r.order_witness);
               decide(rec, r.derived_hold(), w);
             });
}

ClaimRecord check_isomorphism_invariance(const DynamicsContext& ctx,
                                         const LSystem& sys1,
                                         const LSystem& sys2,
                                         const ElementMap& phi) {
  return run(
      "dynamics.isomorphism_invariance", ctx, who(sys1, nullptr),
      [&](ClaimRecord& rec) {
        const auto r = are_isomorphic(sys1, sys2, phi);
        rec.hypotheses.push_back({"isomorphic", r.is_isomorphic()});
        if (!r.is_isomorphic()) {
          decide(rec, false);
          return;
        }
        const auto h1 = system_entropy(sys1, ctx.max_blocks, ctx.truncation,
                                       ctx.tolerance, ctx.base);
        const auto h2 = system_entropy(sys2, ctx.max_blocks, ctx.truncation,
                                       ctx.tolerance, ctx.base);
        decide_equal(rec, h1.value, h2.value, ctx.tolerance);
        for (const auto& xi : enumerate_partitions(sys1.state(), ctx.max_blocks)) {
          std::vector<Element> image;
          for (auto x : xi.blocks()) image.push_back(phi[x]);
          if (partition_failure(image, sys2.state())) continue;
          const auto pxi = validate_partition(std::move(image), sys2.state());
          double a = 0;
          double b = 0;
          try {
            a = rate(ctx, sys1, xi).estimate;
            b = rate(ctx, sys2, pxi).estimate;
          } catch (const OdotUndefined&) {
            continue;
          }
          if (std::abs(a - b) > *rec.delta) {
            rec.delta = std::abs(a - b);
            if (rec.delta > ctx.tolerance) {
              rec.verdict = Verdict::fails;
              rec.witness = "h(T2, phi xi) != h(T1, xi) at xi=" + describe(xi);
            }
          }
        }
      });
}

}  // namespace lalg
