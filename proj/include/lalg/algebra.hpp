#pragma once

#include "lalg/errors.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lalg {

/// Dense index of an element inside its algebra.
using Element = std::size_t;

/// Total self-map or cross-map on elements, indexed by source element.
using ElementMap = std::vector<Element>;

/// `lenient` admits tables that fail only the antisymmetry axiom (5).
enum class Mode { strict, lenient };

std::string_view to_string(Mode mode) noexcept;

/// An unvalidated operation table. `arrow[x][y]` is the value of x -> y.
struct RawTable {
  std::vector<std::string> names;
  std::vector<std::vector<Element>> arrow;
  Element unit = 0;
  std::optional<Element> zero;

  std::size_t size() const noexcept { return names.size(); }

  /// Builds a table from element names. Throws StructuralError on a
  /// non-square table, unknown or duplicate names, or empty names.
  static RawTable from_names(std::vector<std::string> names,
                             const std::vector<std::vector<std::string>>& rows,
                             std::string_view unit,
                             std::optional<std::string_view> zero = {});

  /// Builds a table from indices; elements are named "x0".."x{n-2}" with the
  /// unit named "1" unless `names` is given.
  static RawTable from_indices(std::vector<std::vector<Element>> rows,
                               Element unit,
                               std::vector<std::string> names = {});

  /// Throws StructuralError unless the table is square, total and in range.
  void check_shape() const;

  friend bool operator==(const RawTable&, const RawTable&) = default;
};

struct AxiomViolation {
  int axiom = 0;  // 1..5
  std::vector<Element> witness;

  friend bool operator==(const AxiomViolation&,
                         const AxiomViolation&) = default;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;

  bool passed() const noexcept { return violations.empty(); }
  bool violates(int axiom) const noexcept;
  const AxiomViolation* find(int axiom) const noexcept;
  /// Passed, ignoring any violation of the axioms in `ignored`.
  bool passed_except(int ignored) const noexcept;
};

/// Checks the five L-algebra axioms; one lexicographically first witness per
/// failing axiom. Throws StructuralError if the table is malformed.
AxiomReport check_axioms(const RawTable& table);

class AxiomError : public Error {
 public:
  explicit AxiomError(AxiomReport report);
  /// Names the witnesses in the message.
  AxiomError(AxiomReport report, const RawTable& table);
  const AxiomReport& report() const noexcept { return report_; }

 private:
  AxiomReport report_;
};

/// A validated finite L-algebra. Copies share one immutable table.
class FiniteLAlgebra {
 public:
  /// Validates `table`. Throws StructuralError for malformed input and
  /// AxiomError when an axiom fails (axiom 5 is skipped in lenient mode).
  explicit FiniteLAlgebra(RawTable table, Mode mode = Mode::strict);

  std::size_t size() const noexcept { return impl_->size; }
  Element unit() const noexcept { return impl_->table.unit; }
  std::optional<Element> zero() const noexcept { return impl_->zero; }
  bool bounded() const noexcept { return impl_->zero.has_value(); }
  Mode mode() const noexcept { return impl_->mode; }

  /// Least element; throws ContractError on an unbounded algebra.
  Element bottom() const;

  Element arrow(Element x, Element y) const {
    check(x);
    check(y);
    return impl_->flat[x * impl_->size + y];
  }

  bool leq(Element x, Element y) const {
    check(x);
    check(y);
    return impl_->order[x * impl_->size + y] != 0;
  }

  /// y' = y -> 0.
  Element prime(Element y) const { return arrow(y, bottom()); }

  const std::string& name(Element x) const {
    check(x);
    return impl_->table.names[x];
  }
  Element find(std::string_view name) const;
  std::span<const std::string> names() const noexcept {
    return impl_->table.names;
  }
  const RawTable& table() const noexcept { return impl_->table; }
  const AxiomReport& axiom_report() const noexcept { return impl_->report; }

  void check(Element x) const {
    if (x >= impl_->size) throw_unknown(x);
  }

  /// Same carrier and table, by identity or by value.
  bool same_as(const FiniteLAlgebra& other) const noexcept {
    return impl_ == other.impl_ || impl_->table == other.impl_->table;
  }

  friend bool operator==(const FiniteLAlgebra& a, const FiniteLAlgebra& b) {
    return a.same_as(b) && a.mode() == b.mode();
  }

 private:
  struct Impl {
    RawTable table;
    Mode mode;
    std::size_t size;
    std::vector<Element> flat;
    std::vector<char> order;
    std::optional<Element> zero;
    AxiomReport report;
  };

  [[noreturn]] void throw_unknown(Element x) const;

  std::shared_ptr<const Impl> impl_;
};

/// Throws StructuralError if `a` and `b` are different algebras.
void require_same_algebra(const FiniteLAlgebra& a, const FiniteLAlgebra& b,
                          std::string_view what);

bool leq(const FiniteLAlgebra& algebra, Element x, Element y);

/// The induced order x <= y iff x -> y = 1.
class OrderRelation {
 public:
  explicit OrderRelation(const FiniteLAlgebra& algebra);

  std::size_t size() const noexcept { return size_; }
  bool holds(Element x, Element y) const { return rel_.at(x * size_ + y) != 0; }
  std::vector<std::pair<Element, Element>> pairs() const;

  bool reflexive() const;
  bool antisymmetric() const;
  bool transitive() const;
  bool is_partial_order() const {
    return reflexive() && antisymmetric() && transitive();
  }

 private:
  std::size_t size_;
  std::vector<char> rel_;
};

OrderRelation induced_order(const FiniteLAlgebra& algebra);

/// The unique element below every other element, if any.
std::optional<Element> least_element(const FiniteLAlgebra& algebra);

/// Greatest lower bound of `subset` in the induced order, if it exists.
/// The empty subset has the unit as its g.l.b.
std::optional<Element> greatest_lower_bound(const FiniteLAlgebra& algebra,
                                            std::span<const Element> subset);

/// True iff 1 is in `subset` and the subset is closed under ->.
bool is_subalgebra(const FiniteLAlgebra& algebra,
                   std::span<const Element> subset);

/// True iff f(1) = 1 and f(x -> y) = f(x) -> f(y). Throws StructuralError when
/// `f` is not a total map from `src` into `dst`.
bool is_homomorphism(const ElementMap& f, const FiniteLAlgebra& src,
                     const FiniteLAlgebra& dst);

struct LawCheck {
  std::string law;
  bool holds = true;
  std::vector<Element> witness;
};

struct LawReport {
  std::vector<LawCheck> checks;

  bool all_hold() const noexcept;
  const LawCheck* find(std::string_view law) const noexcept;
};

namespace laws {
inline constexpr std::string_view unit_unique = "logical unit is unique";
inline constexpr std::string_view exchange = "x->(y->x) = y->(x->y)";
inline constexpr std::string_view unit_right =
    "(x->y)->1 = (x->1)->(y->1)";
inline constexpr std::string_view unit_left = "1->(x->y) = (1->x)->(1->y)";
inline constexpr std::string_view monotone =
    "x<=y implies z->x <= z->y";
inline constexpr std::string_view equivalence =
    "x<=y->x  iff  (x<=z implies z->y<=x->y)  iff  "
    "((x->y)->z)->z <= ((x->y)->z)->((y->x)->z)";
}  // namespace laws

/// Exhaustive scan of the derived laws over all tuples.
LawReport check_derived_laws(const FiniteLAlgebra& algebra);

}  // namespace lalg
