#include "lalg/entropy.hpp"

#include <algorithm>
#include <cmath>

namespace lalg {

std::string_view to_string(LogBase base) noexcept {
  return base == LogBase::two ? "2" : "e";
}

namespace {

double log_in(double v, LogBase base) {
  return base == LogBase::two ? std::log2(v) : std::log(v);
}

double conditional_term(const ConditionalTerm& t, LogBase base) {
  if (t.joint == Rational(0)) return 0.0;
  const double p = to_double(t.joint);
  return p * log_in(to_double(t.joint / t.given), base);
}

}  // namespace

double phi(const Rational& p, LogBase base) {
  if (p < 0 || p > 1) {
    throw ContractError("phi argument " + to_string(p) + " is outside [0, 1]");
  }
  if (p == Rational(0)) return 0.0;
  const double v = to_double(p);
  return v * log_in(v, base);
}

bool EntropyValue::exactly_zero() const {
  return std::all_of(exact_terms.begin(), exact_terms.end(),
                     [](const Rational& p) { return p == Rational(0) || p == Rational(1); });
}

double EntropyValue::recompute() const {
  double sum = 0;
  for (const auto& p : exact_terms) sum -= phi(p, base);
  return sum + 0.0;  // normalizes -0
}

EntropyValue entropy(const State& m, const std::vector<Element>& blocks,
                     LogBase base) {
  EntropyValue v;
  v.base = base;
  for (auto b : blocks) v.exact_terms.push_back(m(b));
  v.value = v.recompute();
  return v;
}

EntropyValue entropy(const Partition& xi, LogBase base) {
  return entropy(xi.state(), xi.blocks(), base);
}

bool ConditionalEntropyValue::exactly_zero() const {
  return std::all_of(terms.begin(), terms.end(), [](const auto& t) {
    return t.joint == Rational(0) || t.joint == t.given;
  });
}

double ConditionalEntropyValue::recompute() const {
  double sum = 0;
  for (const auto& t : terms) sum -= conditional_term(t, base);
  return sum + 0.0;
}

ConditionalEntropyValue conditional_entropy(const State& m,
                                            const std::vector<Element>& xi,
                                            const std::vector<Element>& eta,
                                            LogBase base) {
  const auto& L = m.algebra();
  const auto joined = join_blocks(L, xi, eta);
  ConditionalEntropyValue v;
  v.base = base;
  for (std::size_t i = 0; i < xi.size(); ++i) {
    for (std::size_t j = 0; j < eta.size(); ++j) {
      if (m(eta[j]) == Rational(0)) continue;
      v.terms.push_back({i, j, m(joined[i * eta.size() + j]), m(eta[j])});
    }
  }
  v.value = v.recompute();
  return v;
}

ConditionalEntropyValue conditional_entropy(const Partition& xi,
                                            const Partition& eta,
                                            LogBase base) {
  require_same_state(xi, eta);
  return conditional_entropy(xi.state(), xi.blocks(), eta.blocks(), base);
}

InfoGainValue info_gain(const Partition& xi, const Partition& eta,
                        LogBase base) {
  InfoGainValue g;
  g.entropy = entropy(xi, base).value;
  g.conditional_entropy = conditional_entropy(xi, eta, base).value;
  g.value = g.entropy - g.conditional_entropy;
  auto blocks = join_blocks(xi, eta);
  if (!partition_failure(blocks, xi.state())) {
    g.alternative = g.entropy + entropy(eta, base).value -
                    entropy(xi.state(), blocks, base).value;
  }
  return g;
}

InfoGainValue conditional_info_gain(const Partition& xi, const Partition& eta,
                                    const Partition& zeta, LogBase base) {
  require_same_state(xi, eta);
  require_same_state(xi, zeta);
  const auto eta_zeta = common_refinement(eta, zeta);
  InfoGainValue g;
  g.entropy = conditional_entropy(xi, zeta, base).value;
  g.conditional_entropy = conditional_entropy(xi, eta_zeta, base).value;
  g.value = g.entropy - g.conditional_entropy;
  return g;
}

bool conditionally_independent(const Partition& xi, const Partition& eta,
                               const Partition& zeta, double tolerance,
                               LogBase base) {
  return std::abs(conditional_info_gain(xi, zeta, eta, base).value) <=
         tolerance;
}

}  // namespace lalg
