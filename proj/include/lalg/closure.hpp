#pragma once

#include "lalg/algebra.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lalg {

/// A total self-map on the elements of one algebra. No law is assumed.
class UnaryOperator {
 public:
  /// Throws StructuralError unless `values` is a total map into `algebra`.
  UnaryOperator(FiniteLAlgebra algebra, ElementMap values);

  static UnaryOperator identity(const FiniteLAlgebra& algebra);
  static UnaryOperator constant(const FiniteLAlgebra& algebra, Element value);
  /// The constant-unit operator, greatest in the closure-operator lattice.
  static UnaryOperator top(const FiniteLAlgebra& algebra);

  Element operator()(Element x) const {
    algebra_.check(x);
    return values_[x];
  }

  const FiniteLAlgebra& algebra() const noexcept { return algebra_; }
  const ElementMap& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  /// (this o inner)(x) = this(inner(x)).
  UnaryOperator after(const UnaryOperator& inner) const;
  /// k-fold composite; k = 0 gives the identity.
  UnaryOperator power(std::size_t k) const;
  bool is_bijective() const;
  /// Throws ContractError when the map is not bijective.
  UnaryOperator inverse() const;

  friend bool operator==(const UnaryOperator& a, const UnaryOperator& b) {
    return a.values_ == b.values_ && a.algebra_.same_as(b.algebra_);
  }

 private:
  FiniteLAlgebra algebra_;
  ElementMap values_;
};

/// "{a:1, b:b, ...}" using element names.
std::string describe(const UnaryOperator& op);

bool is_extensive(const UnaryOperator& l);
bool is_monotone(const UnaryOperator& l);
bool is_idempotent(const UnaryOperator& l);
/// Extensive, monotone and idempotent.
bool is_l_operator(const UnaryOperator& l);
/// An L-operator with l(x -> y) <= l(x) -> l(y) for all x, y.
bool is_closure_operator(const UnaryOperator& l);

/// Fixed points of an L-operator. Throws ContractError otherwise.
std::vector<Element> simple_elements(const UnaryOperator& l);

struct InfSimpleEntry {
  Element a = 0;
  std::vector<Element> simple_above;
  std::optional<Element> glb;  // absent when the set has no g.l.b.
  bool holds = false;          // glb present and equal to l(a)
};

struct InfSimpleReport {
  std::vector<InfSimpleEntry> entries;

  /// Every entry whose g.l.b. exists agrees with l(a).
  bool holds() const;
  std::vector<Element> undefined() const;
};

/// For each a, compares l(a) with the g.l.b. of the simple elements above a.
/// Throws ContractError unless l is a closure operator.
InfSimpleReport check_inf_simple_characterization(const UnaryOperator& l);

/// Pointwise l <= r. Throws StructuralError on different algebras.
bool leq_operator(const UnaryOperator& l, const UnaryOperator& r);

inline constexpr std::size_t kDefaultMaxOperatorCarrier = 5;

/// All closure operators on one algebra, ordered pointwise.
class OperatorPoset {
 public:
  OperatorPoset(FiniteLAlgebra algebra, std::vector<UnaryOperator> operators);

  const FiniteLAlgebra& algebra() const noexcept { return algebra_; }
  const std::vector<UnaryOperator>& operators() const noexcept {
    return operators_;
  }
  std::size_t size() const noexcept { return operators_.size(); }
  bool contains(const UnaryOperator& l) const;
  std::optional<std::size_t> index_of(const UnaryOperator& l) const;
  /// Index of the constant-unit operator.
  std::optional<std::size_t> top_index() const;
  bool top_is_greatest() const;

 private:
  FiniteLAlgebra algebra_;
  std::vector<UnaryOperator> operators_;
};

/// Materializes every closure operator, in lexicographic order of value
/// tables. Throws CapacityError above `max_carrier` elements.
OperatorPoset enumerate_closure_operators(
    const FiniteLAlgebra& algebra,
    std::size_t max_carrier = kDefaultMaxOperatorCarrier);

class InfUndefined : public Error {
 public:
  InfUndefined(Element x, std::string name)
      : Error("pointwise infimum undefined at '" + name + "'"), element_(x) {}
  Element element() const noexcept { return element_; }

 private:
  Element element_;
};

class SupUndefined : public Error {
 public:
  SupUndefined() : Error("no least common upper bound among closure operators") {}
};

/// Pointwise g.l.b. of a nonempty family of closure operators. Throws
/// InfUndefined(x) where {l_i(x)} has no g.l.b., ContractError for an empty
/// family or a non-closure member.
UnaryOperator inf_operators(const std::vector<UnaryOperator>& family);

struct InfVerification {
  bool is_closure = false;
  bool below_all = false;
  /// Every common lower bound in the poset lies below the result.
  bool greatest_lower = false;

  bool holds() const { return is_closure && below_all && greatest_lower; }
};

InfVerification verify_inf(const std::vector<UnaryOperator>& family,
                           const UnaryOperator& inf,
                           const OperatorPoset& omega);

/// Least element of the common upper bounds of `family` inside `omega`.
/// Throws SupUndefined when the upper bounds have no least element and
/// ContractError for an empty family.
UnaryOperator sup_operators(const std::vector<UnaryOperator>& family,
                            const OperatorPoset& omega);
UnaryOperator sup_operators(const std::vector<UnaryOperator>& family);

struct FixedPointReport {
  std::vector<Element> sup_fixed;
  std::vector<Element> common_fixed;
  std::vector<Element> mismatches;  // symmetric difference

  bool holds() const { return mismatches.empty(); }
};

/// Compares the fixed points of the family's supremum with the common fixed
/// points of its members.
FixedPointReport check_sup_fixed_points(const std::vector<UnaryOperator>& family,
                                        const OperatorPoset& omega);

/// x maps to a when x <= a and to 1 otherwise. The result is not asserted to
/// be a closure operator. Throws ContractError when a is the unit.
UnaryOperator l_a_operator(const FiniteLAlgebra& algebra, Element a);

struct TwoValuedEntry {
  Element a = 0;
  UnaryOperator op;
  bool closure = false;
  bool maximal = false;
};

struct MaximalReport {
  /// Maximal elements of the poset without its top, with l < l' < top read
  /// strictly.
  std::vector<UnaryOperator> maximal;
  /// Operators with no l' satisfying l <= l' <= top, read non-strictly; l' = l
  /// always qualifies, so this is empty by construction.
  std::vector<UnaryOperator> maximal_nonstrict;
  std::vector<TwoValuedEntry> two_valued;
  /// Maximal operators not equal to any two-valued operator.
  std::vector<UnaryOperator> unmatched_maximal;
  std::vector<std::string> discrepancies;

  bool every_two_valued_is_closure() const;
  bool every_two_valued_is_maximal() const;
  bool every_maximal_is_two_valued() const { return unmatched_maximal.empty(); }
  bool consistent() const { return discrepancies.empty(); }
};

MaximalReport maximal_operators(const OperatorPoset& omega);
MaximalReport maximal_operators(const FiniteLAlgebra& algebra);

}  // namespace lalg
