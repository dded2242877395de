#pragma once

#include "lalg/algebra.hpp"
#include "lalg/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lalg {

/// x is orthogonal to y when x <= y'. Throws ContractError on an unbounded
/// algebra.
bool orthogonal(const FiniteLAlgebra& algebra, Element x, Element y);

class OrthogonalityViolation : public Error {
 public:
  OrthogonalityViolation(Element left, Element right, std::string message,
                         std::optional<std::size_t> index = {})
      : Error(std::move(message)), left_(left), right_(right), index_(index) {}

  Element left() const noexcept { return left_; }
  Element right() const noexcept { return right_; }
  /// Block index k when raised while folding a partition.
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  Element left_;
  Element right_;
  std::optional<std::size_t> index_;
};

/// x (+) y = y' -> x. Throws OrthogonalityViolation unless x is orthogonal
/// to y.
Element oplus(const FiniteLAlgebra& algebra, Element x, Element y);

/// Outcome of a difference x - w or a product x (.) y.
struct OdotResult {
  enum class Kind { value, zero, no_difference, ambiguous };

  Kind kind = Kind::no_difference;
  Element value = 0;               // meaningful for value and zero
  std::vector<Element> candidates;  // every z with z (+) w = x

  bool defined() const noexcept {
    return kind == Kind::value || kind == Kind::zero;
  }
  friend bool operator==(const OdotResult&, const OdotResult&) = default;
};

std::string_view to_string(OdotResult::Kind kind) noexcept;

/// The unique z orthogonal to w with z (+) w = x, found by exhaustive search.
OdotResult minus(const FiniteLAlgebra& algebra, Element x, Element w);

/// x - y' when y' <= x, otherwise the bottom element.
OdotResult odot(const FiniteLAlgebra& algebra, Element x, Element y);

class OdotUndefined : public Error {
 public:
  OdotUndefined(Element x, Element y, OdotResult result, std::string message,
                std::optional<std::pair<std::size_t, std::size_t>> at = {})
      : Error(std::move(message)), x_(x), y_(y), result_(std::move(result)),
        at_(at) {}

  Element x() const noexcept { return x_; }
  Element y() const noexcept { return y_; }
  const OdotResult& result() const noexcept { return result_; }
  /// Block indices (i, j) when raised while forming a join.
  std::optional<std::pair<std::size_t, std::size_t>> at() const noexcept {
    return at_;
  }

 private:
  Element x_;
  Element y_;
  OdotResult result_;
  std::optional<std::pair<std::size_t, std::size_t>> at_;
};

/// Throws OdotUndefined when x (.) y is ambiguous or has no difference.
Element odot_value(const FiniteLAlgebra& algebra, Element x, Element y);

class RangeError : public Error {
 public:
  RangeError(Element element, Rational value, std::string message)
      : Error(std::move(message)), element_(element), value_(value) {}
  Element element() const noexcept { return element_; }
  const Rational& value() const noexcept { return value_; }

 private:
  Element element_;
  Rational value_;
};

struct StateViolation {
  int condition = 0;  // 1: m(1) = 1, 2: additivity, 3: monotonicity
  std::vector<Element> witness;
  friend bool operator==(const StateViolation&,
                         const StateViolation&) = default;
};

struct StateReport {
  std::vector<StateViolation> violations;
  bool passed() const noexcept { return violations.empty(); }
  const StateViolation* find(int condition) const noexcept;
};

/// Every failing instance of the three state conditions, in lexicographic
/// order of witnesses. Throws RangeError for values outside [0, 1].
StateReport check_state_conditions(const FiniteLAlgebra& algebra,
                                   const std::vector<Rational>& values);

class StateError : public Error {
 public:
  explicit StateError(StateReport report);
  /// Names the witnesses in the message.
  StateError(StateReport report, const FiniteLAlgebra& algebra);
  const StateReport& report() const noexcept { return report_; }

 private:
  StateReport report_;
};

/// A validated state: exact values in [0, 1], indexed by element.
class State {
 public:
  const FiniteLAlgebra& algebra() const noexcept { return algebra_; }
  const std::vector<Rational>& values() const noexcept { return values_; }
  const Rational& operator()(Element x) const {
    algebra_.check(x);
    return values_[x];
  }

  friend bool operator==(const State& a, const State& b) {
    return a.algebra_.same_as(b.algebra_) && a.values_ == b.values_;
  }

 private:
  friend State validate_state(const FiniteLAlgebra&, std::vector<Rational>);
  State(FiniteLAlgebra algebra, std::vector<Rational> values)
      : algebra_(std::move(algebra)), values_(std::move(values)) {}

  FiniteLAlgebra algebra_;
  std::vector<Rational> values_;
};

/// Throws ContractError (unbounded algebra), StructuralError (wrong length),
/// RangeError, or StateError carrying every violated condition.
State validate_state(const FiniteLAlgebra& algebra, std::vector<Rational> values);

bool is_faithful(const State& m);

}  // namespace lalg
