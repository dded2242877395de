#include "lalg/state.hpp"

namespace lalg {

bool orthogonal(const FiniteLAlgebra& algebra, Element x, Element y) {
  return algebra.leq(x, algebra.prime(y));
}

Element oplus(const FiniteLAlgebra& algebra, Element x, Element y) {
  if (!orthogonal(algebra, x, y)) {
    throw OrthogonalityViolation(x, y,
                                 "'" + algebra.name(x) +
                                     "' is not orthogonal to '" +
                                     algebra.name(y) + "'");
  }
  return algebra.arrow(algebra.prime(y), x);
}

std::string_view to_string(OdotResult::Kind kind) noexcept {
  switch (kind) {
    case OdotResult::Kind::value:
      return "value";
    case OdotResult::Kind::zero:
      return "zero";
    case OdotResult::Kind::no_difference:
      return "no-difference";
    case OdotResult::Kind::ambiguous:
      return "ambiguous";
  }
  return "?";
}

OdotResult minus(const FiniteLAlgebra& algebra, Element x, Element w) {
  algebra.check(x);
  OdotResult r;
  for (Element z = 0; z < algebra.size(); ++z) {
    if (orthogonal(algebra, z, w) && oplus(algebra, z, w) == x) {
      r.candidates.push_back(z);
    }
  }
  if (r.candidates.size() == 1) {
    r.kind = OdotResult::Kind::value;
    r.value = r.candidates.front();
  } else {
    r.kind = r.candidates.empty() ? OdotResult::Kind::no_difference
                                  : OdotResult::Kind::ambiguous;
  }
  return r;
}

OdotResult odot(const FiniteLAlgebra& algebra, Element x, Element y) {
  const auto y_prime = algebra.prime(y);
  if (algebra.leq(y_prime, x)) return minus(algebra, x, y_prime);
  OdotResult r;
  r.kind = OdotResult::Kind::zero;
  r.value = algebra.bottom();
  return r;
}

Element odot_value(const FiniteLAlgebra& algebra, Element x, Element y) {
  auto r = odot(algebra, x, y);
  if (!r.defined()) {
    auto msg = "'" + algebra.name(x) + "' (.) '" + algebra.name(y) +
               "' is undefined: " + std::string(to_string(r.kind));
    throw OdotUndefined(x, y, std::move(r), std::move(msg));
  }
  return r.value;
}

const StateViolation* StateReport::find(int condition) const noexcept {
  for (const auto& v : violations) {
    if (v.condition == condition) return &v;
  }
  return nullptr;
}

StateReport check_state_conditions(const FiniteLAlgebra& algebra,
                                   const std::vector<Rational>& values) {
  const auto n = algebra.size();
  if (values.size() != n) {
    throw StructuralError("state covers " + std::to_string(values.size()) +
                          " of " + std::to_string(n) + " elements");
  }
  for (Element x = 0; x < n; ++x) {
    if (values[x] < 0 || values[x] > 1) {
      throw RangeError(x, values[x],
                       "state value " + to_string(values[x]) + " of '" +
                           algebra.name(x) + "' is outside [0, 1]");
    }
  }
  StateReport report;
  if (values[algebra.unit()] != Rational(1)) {
    report.violations.push_back({1, {algebra.unit()}});
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (orthogonal(algebra, x, y) &&
          values[oplus(algebra, x, y)] != values[x] + values[y]) {
        report.violations.push_back({2, {x, y}});
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (algebra.leq(x, y) && values[x] > values[y]) {
        report.violations.push_back({3, {x, y}});
      }
    }
  }
  return report;
}

namespace {

std::string describe(const StateReport& report,
                     const FiniteLAlgebra* algebra) {
  std::string out = "state conditions fail:";
  for (const auto& v : report.violations) {
    out += " (" + std::to_string(v.condition) + ")";
    if (algebra == nullptr) continue;
    out += " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i) out += ",";
      out += algebra->name(v.witness[i]);
    }
    out += ")";
  }
  return out;
}

}  // namespace

StateError::StateError(StateReport report)
    : Error(describe(report, nullptr)), report_(std::move(report)) {}

StateError::StateError(StateReport report, const FiniteLAlgebra& algebra)
    : Error(describe(report, &algebra)), report_(std::move(report)) {}

State validate_state(const FiniteLAlgebra& algebra,
                     std::vector<Rational> values) {
  algebra.bottom();  // a state needs a bounded algebra
  auto report = check_state_conditions(algebra, values);
  if (!report.passed()) throw StateError(std::move(report), algebra);
  return State(algebra, std::move(values));
}

bool is_faithful(const State& m) {
  const auto& L = m.algebra();
  for (Element x = 0; x < L.size(); ++x) {
    if (m(x) == Rational(0) && x != L.bottom()) return false;
  }
  return true;
}

}  // namespace lalg
