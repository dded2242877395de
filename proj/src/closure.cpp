#include "lalg/closure.hpp"

#include <algorithm>
#include <numeric>

namespace lalg {

UnaryOperator::UnaryOperator(FiniteLAlgebra algebra, ElementMap values)
    : algebra_(std::move(algebra)), values_(std::move(values)) {
  if (values_.size() != algebra_.size()) {
    throw StructuralError("operator covers " + std::to_string(values_.size()) +
                          " of " + std::to_string(algebra_.size()) +
                          " elements");
  }
  for (auto v : values_) algebra_.check(v);
}

UnaryOperator UnaryOperator::identity(const FiniteLAlgebra& algebra) {
  ElementMap values(algebra.size());
  std::iota(values.begin(), values.end(), Element{0});
  return UnaryOperator(algebra, std::move(values));
}

UnaryOperator UnaryOperator::constant(const FiniteLAlgebra& algebra,
                                      Element value) {
  algebra.check(value);
  return UnaryOperator(algebra, ElementMap(algebra.size(), value));
}

UnaryOperator UnaryOperator::top(const FiniteLAlgebra& algebra) {
  return constant(algebra, algebra.unit());
}

UnaryOperator UnaryOperator::after(const UnaryOperator& inner) const {
  require_same_algebra(algebra_, inner.algebra_, "composed operators");
  ElementMap values(size());
  for (Element x = 0; x < size(); ++x) values[x] = values_[inner.values_[x]];
  return UnaryOperator(algebra_, std::move(values));
}

UnaryOperator UnaryOperator::power(std::size_t k) const {
  auto result = identity(algebra_);
  for (std::size_t i = 0; i < k; ++i) result = after(result);
  return result;
}

bool UnaryOperator::is_bijective() const {
  std::vector<char> seen(size(), 0);
  for (auto v : values_) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

UnaryOperator UnaryOperator::inverse() const {
  if (!is_bijective()) throw ContractError("operator is not invertible");
  ElementMap values(size());
  for (Element x = 0; x < size(); ++x) values[values_[x]] = x;
  return UnaryOperator(algebra_, std::move(values));
}

std::string describe(const UnaryOperator& op) {
  std::string out = "{";
  for (Element x = 0; x < op.size(); ++x) {
    if (x) out += ", ";
    out += op.algebra().name(x) + ":" + op.algebra().name(op(x));
  }
  return out + "}";
}

bool is_extensive(const UnaryOperator& l) {
  const auto& L = l.algebra();
  for (Element x = 0; x < L.size(); ++x) {
    if (!L.leq(x, l(x))) return false;
  }
  return true;
}

bool is_monotone(const UnaryOperator& l) {
  const auto& L = l.algebra();
  for (Element x = 0; x < L.size(); ++x) {
    for (Element y = 0; y < L.size(); ++y) {
      if (L.leq(x, y) && !L.leq(l(x), l(y))) return false;
    }
  }
  return true;
}

bool is_idempotent(const UnaryOperator& l) {
  for (Element x = 0; x < l.size(); ++x) {
    if (l(l(x)) != l(x)) return false;
  }
  return true;
}

bool is_l_operator(const UnaryOperator& l) {
  return is_extensive(l) && is_monotone(l) && is_idempotent(l);
}

namespace {

bool closure_inequality(const UnaryOperator& l) {
  const auto& L = l.algebra();
  for (Element x = 0; x < L.size(); ++x) {
    for (Element y = 0; y < L.size(); ++y) {
      if (!L.leq(l(L.arrow(x, y)), L.arrow(l(x), l(y)))) return false;
    }
  }
  return true;
}

void require_closure(const UnaryOperator& l, std::string_view what) {
  if (!is_closure_operator(l)) {
    throw ContractError(std::string(what) + ": " + describe(l) +
                        " is not a closure operator");
  }
}

void require_family(const std::vector<UnaryOperator>& family,
                    std::string_view what) {
  if (family.empty()) throw ContractError(std::string(what) + ": empty family");
  for (const auto& l : family) {
    require_same_algebra(family.front().algebra(), l.algebra(),
                         "family members");
    require_closure(l, what);
  }
}

}  // namespace

bool is_closure_operator(const UnaryOperator& l) {
  return is_l_operator(l) && closure_inequality(l);
}

std::vector<Element> simple_elements(const UnaryOperator& l) {
  if (!is_l_operator(l)) {
    throw ContractError("simple elements: " + describe(l) +
                        " is not an L-operator");
  }
  std::vector<Element> out;
  for (Element x = 0; x < l.size(); ++x) {
    if (l(x) == x) out.push_back(x);
  }
  return out;
}

bool InfSimpleReport::holds() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) {
    return !e.glb.has_value() || e.holds;
  });
}

std::vector<Element> InfSimpleReport::undefined() const {
  std::vector<Element> out;
  for (const auto& e : entries) {
    if (!e.glb) out.push_back(e.a);
  }
  return out;
}

InfSimpleReport check_inf_simple_characterization(const UnaryOperator& l) {
  require_closure(l, "inf characterization");
  const auto& L = l.algebra();
  const auto simple = simple_elements(l);
  InfSimpleReport report;
  for (Element a = 0; a < L.size(); ++a) {
    InfSimpleEntry entry;
    entry.a = a;
    for (auto s : simple) {
      if (L.leq(a, s)) entry.simple_above.push_back(s);
    }
    entry.glb = greatest_lower_bound(L, entry.simple_above);
    entry.holds = entry.glb && *entry.glb == l(a);
    report.entries.push_back(std::move(entry));
  }
  return report;
}

bool leq_operator(const UnaryOperator& l, const UnaryOperator& r) {
  require_same_algebra(l.algebra(), r.algebra(), "compared operators");
  const auto& L = l.algebra();
  for (Element x = 0; x < L.size(); ++x) {
    if (!L.leq(l(x), r(x))) return false;
  }
  return true;
}

OperatorPoset::OperatorPoset(FiniteLAlgebra algebra,
                             std::vector<UnaryOperator> operators)
    : algebra_(std::move(algebra)), operators_(std::move(operators)) {
  for (const auto& l : operators_) {
    require_same_algebra(algebra_, l.algebra(), "poset members");
  }
}

bool OperatorPoset::contains(const UnaryOperator& l) const {
  return index_of(l).has_value();
}

std::optional<std::size_t> OperatorPoset::index_of(
    const UnaryOperator& l) const {
  for (std::size_t i = 0; i < operators_.size(); ++i) {
    if (operators_[i] == l) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> OperatorPoset::top_index() const {
  return index_of(UnaryOperator::top(algebra_));
}

bool OperatorPoset::top_is_greatest() const {
  auto top = top_index();
  if (!top) return false;
  return std::all_of(operators_.begin(), operators_.end(), [&](const auto& l) {
    return leq_operator(l, operators_[*top]);
  });
}

OperatorPoset enumerate_closure_operators(const FiniteLAlgebra& algebra,
                                          std::size_t max_carrier) {
  const auto n = algebra.size();
  if (n > max_carrier) throw CapacityError("max_carrier", max_carrier, n);
  // Depth-first over value tables; a value is admissible only above its
  // argument, and monotonicity is enforced against already fixed arguments.
  std::vector<UnaryOperator> found;
  ElementMap values(n, 0);
  auto extend = [&](auto&& self, Element x) -> void {
    if (x == n) {
      UnaryOperator l(algebra, values);
      if (is_closure_operator(l)) found.push_back(std::move(l));
      return;
    }
    for (Element v = 0; v < n; ++v) {
      if (!algebra.leq(x, v)) continue;
      bool monotone = true;
      for (Element y = 0; y < x && monotone; ++y) {
        if (algebra.leq(y, x) && !algebra.leq(values[y], v)) monotone = false;
        if (algebra.leq(x, y) && !algebra.leq(v, values[y])) monotone = false;
      }
      if (!monotone) continue;
      values[x] = v;
      self(self, x + 1);
    }
  };
  extend(extend, 0);
  return OperatorPoset(algebra, std::move(found));
}

UnaryOperator inf_operators(const std::vector<UnaryOperator>& family) {
  require_family(family, "inf");
  const auto& L = family.front().algebra();
  ElementMap values(L.size());
  for (Element x = 0; x < L.size(); ++x) {
    std::vector<Element> images;
    for (const auto& l : family) images.push_back(l(x));
    auto glb = greatest_lower_bound(L, images);
    if (!glb) throw InfUndefined(x, L.name(x));
    values[x] = *glb;
  }
  return UnaryOperator(L, std::move(values));
}

InfVerification verify_inf(const std::vector<UnaryOperator>& family,
                           const UnaryOperator& inf,
                           const OperatorPoset& omega) {
  InfVerification v;
  v.is_closure = is_closure_operator(inf);
  v.below_all = std::all_of(family.begin(), family.end(), [&](const auto& l) {
    return leq_operator(inf, l);
  });
  v.greatest_lower = true;
  for (const auto& c : omega.operators()) {
    const bool lower = std::all_of(family.begin(), family.end(),
                                   [&](const auto& l) { return leq_operator(c, l); });
    if (lower && !leq_operator(c, inf)) v.greatest_lower = false;
  }
  return v;
}

UnaryOperator sup_operators(const std::vector<UnaryOperator>& family,
                            const OperatorPoset& omega) {
  require_family(family, "sup");
  require_same_algebra(family.front().algebra(), omega.algebra(),
                       "family and poset");
  std::vector<const UnaryOperator*> upper;
  for (const auto& c : omega.operators()) {
    if (std::all_of(family.begin(), family.end(),
                    [&](const auto& l) { return leq_operator(l, c); })) {
      upper.push_back(&c);
    }
  }
  for (const auto* c : upper) {
    if (std::all_of(upper.begin(), upper.end(),
                    [&](const auto* d) { return leq_operator(*c, *d); })) {
      return *c;
    }
  }
  throw SupUndefined();
}

UnaryOperator sup_operators(const std::vector<UnaryOperator>& family) {
  if (family.empty()) throw ContractError("sup: empty family");
  return sup_operators(family,
                       enumerate_closure_operators(family.front().algebra()));
}

FixedPointReport check_sup_fixed_points(const std::vector<UnaryOperator>& family,
                                        const OperatorPoset& omega) {
  const auto sup = sup_operators(family, omega);
  FixedPointReport report;
  for (Element x = 0; x < sup.size(); ++x) {
    const bool in_sup = sup(x) == x;
    const bool in_all = std::all_of(family.begin(), family.end(),
                                    [&](const auto& l) { return l(x) == x; });
    if (in_sup) report.sup_fixed.push_back(x);
    if (in_all) report.common_fixed.push_back(x);
    if (in_sup != in_all) report.mismatches.push_back(x);
  }
  return report;
}

UnaryOperator l_a_operator(const FiniteLAlgebra& algebra, Element a) {
  algebra.check(a);
  if (a == algebra.unit()) {
    throw ContractError("two-valued operator needs a non-unit element");
  }
  ElementMap values(algebra.size());
  for (Element x = 0; x < algebra.size(); ++x) {
    values[x] = algebra.leq(x, a) ? a : algebra.unit();
  }
  return UnaryOperator(algebra, std::move(values));
}

bool MaximalReport::every_two_valued_is_closure() const {
  return std::all_of(two_valued.begin(), two_valued.end(),
                     [](const auto& e) { return e.closure; });
}

bool MaximalReport::every_two_valued_is_maximal() const {
  return std::all_of(two_valued.begin(), two_valued.end(),
                     [](const auto& e) { return e.maximal; });
}

MaximalReport maximal_operators(const OperatorPoset& omega) {
  const auto& L = omega.algebra();
  const auto top = UnaryOperator::top(L);
  const auto& ops = omega.operators();
  MaximalReport report;
  auto strictly_below = [](const UnaryOperator& a, const UnaryOperator& b) {
    return a != b && leq_operator(a, b);
  };
  for (const auto& l : ops) {
    bool between = false, nonstrict_between = false;
    for (const auto& r : ops) {
      if (leq_operator(l, r) && leq_operator(r, top)) nonstrict_between = true;
      if (strictly_below(l, r) && strictly_below(r, top)) between = true;
    }
    if (!nonstrict_between) report.maximal_nonstrict.push_back(l);
    if (l != top && !between) report.maximal.push_back(l);
  }
  for (Element a = 0; a < L.size(); ++a) {
    if (a == L.unit()) continue;
    auto op = l_a_operator(L, a);
    const bool closure = omega.contains(op);
    const bool maximal = std::find(report.maximal.begin(), report.maximal.end(),
                                   op) != report.maximal.end();
    if (!closure) {
      report.discrepancies.push_back("l_" + L.name(a) + " = " + describe(op) +
                                     " is not a closure operator");
    } else if (!maximal) {
      report.discrepancies.push_back("l_" + L.name(a) + " = " + describe(op) +
                                     " is not maximal");
    }
    report.two_valued.push_back({a, std::move(op), closure, maximal});
  }
  for (const auto& m : report.maximal) {
    const bool matched =
        std::any_of(report.two_valued.begin(), report.two_valued.end(),
                    [&](const auto& e) { return e.op == m; });
    if (!matched) {
      report.unmatched_maximal.push_back(m);
      report.discrepancies.push_back("maximal operator " + describe(m) +
                                     " is not two-valued");
    }
  }
  return report;
}

MaximalReport maximal_operators(const FiniteLAlgebra& algebra) {
  return maximal_operators(enumerate_closure_operators(algebra));
}

}  // namespace lalg
