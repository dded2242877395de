#pragma once

#include "lalg/partition.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace lalg {

enum class LogBase { two, e };

std::string_view to_string(LogBase base) noexcept;

/// p log p with 0 log 0 = 0. Throws ContractError outside [0, 1].
double phi(const Rational& p, LogBase base = LogBase::two);

/// H = -sum phi(m(x_i)); the exact block measures are kept.
struct EntropyValue {
  double value = 0;
  std::vector<Rational> exact_terms;
  LogBase base = LogBase::two;

  /// Every term is 0 or 1, so the value is exactly zero.
  bool exactly_zero() const;
  /// Re-evaluates the sum from exact_terms.
  double recompute() const;
};

EntropyValue entropy(const Partition& xi, LogBase base = LogBase::two);
/// The same formula on an arbitrary block sequence.
EntropyValue entropy(const State& m, const std::vector<Element>& blocks,
                     LogBase base = LogBase::two);

struct ConditionalTerm {
  std::size_t i = 0;
  std::size_t j = 0;
  Rational joint;  // m(x_i (.) y_j)
  Rational given;  // m(y_j), never zero
};

/// H(xi | eta); terms with m(y_j) = 0 are omitted and terms with
/// m(x_i (.) y_j) = 0 contribute 0.
struct ConditionalEntropyValue {
  double value = 0;
  std::vector<ConditionalTerm> terms;
  LogBase base = LogBase::two;

  /// Every term has joint 0 or joint = given.
  bool exactly_zero() const;
  double recompute() const;
};

/// Throws OdotUndefined when some x_i (.) y_j is undefined.
ConditionalEntropyValue conditional_entropy(const Partition& xi,
                                            const Partition& eta,
                                            LogBase base = LogBase::two);
ConditionalEntropyValue conditional_entropy(const State& m,
                                            const std::vector<Element>& xi,
                                            const std::vector<Element>& eta,
                                            LogBase base = LogBase::two);

/// I(xi, eta) = H(xi) - H(xi | eta).
struct InfoGainValue {
  double value = 0;
  double entropy = 0;              // H(xi), or H(xi | zeta) when conditional
  double conditional_entropy = 0;  // H(xi | eta), or H(xi | eta v zeta)
  /// H(xi) + H(eta) - H(xi v eta) when the join is a partition.
  std::optional<double> alternative;
};

InfoGainValue info_gain(const Partition& xi, const Partition& eta,
                        LogBase base = LogBase::two);

/// I(xi, eta | zeta) = H(xi | zeta) - H(xi | eta v zeta). Throws
/// JoinNotPartition when eta v zeta is not a partition.
InfoGainValue conditional_info_gain(const Partition& xi, const Partition& eta,
                                    const Partition& zeta,
                                    LogBase base = LogBase::two);

inline constexpr double kStructuralTolerance = 1e-9;

/// |I(xi, zeta | eta)| <= tolerance.
bool conditionally_independent(const Partition& xi, const Partition& eta,
                               const Partition& zeta,
                               double tolerance = kStructuralTolerance,
                               LogBase base = LogBase::two);

}  // namespace lalg
