#pragma once

#include "lalg/checks.hpp"
#include "lalg/closure.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lalg {

inline constexpr std::size_t kDefaultTruncation = 8;
inline constexpr std::size_t kDefaultMaxBlocks = 4;
inline constexpr double kDynamicalTolerance = 1e-6;

struct SystemViolation {
  /// 1: T(a->b) = T(a)->T(b), witness (a, b); 2: T(1) = 1, witness (1);
  /// 3: m(T(a)) = m(a), witness (a).
  int condition = 0;
  std::vector<Element> witness;
  friend bool operator==(const SystemViolation&,
                         const SystemViolation&) = default;
};

struct SystemReport {
  std::vector<SystemViolation> violations;
  bool passed() const noexcept { return violations.empty(); }
  const SystemViolation* find(int condition) const noexcept;
};

/// Every failing instance of the three conditions, lexicographic by witness.
/// Throws StructuralError when T and m live on different algebras.
SystemReport check_system_conditions(const UnaryOperator& T, const State& m);

class SystemError : public Error {
 public:
  explicit SystemError(SystemReport report);
  /// Names the witnesses in the message.
  SystemError(SystemReport report, const FiniteLAlgebra& algebra);
  const SystemReport& report() const noexcept { return report_; }

 private:
  SystemReport report_;
};

/// A validated dynamical system (L, T, m) on a bounded algebra.
class LSystem {
 public:
  const FiniteLAlgebra& algebra() const noexcept { return state_.algebra(); }
  const UnaryOperator& map() const noexcept { return map_; }
  const State& state() const noexcept { return state_; }

  bool is_identity() const;
  bool is_invertible() const { return map_.is_bijective(); }

 private:
  friend LSystem validate_system(const UnaryOperator&, const State&);
  LSystem(UnaryOperator map, State state)
      : map_(std::move(map)), state_(std::move(state)) {}

  UnaryOperator map_;
  State state_;
};

/// Throws StructuralError or SystemError.
LSystem validate_system(const UnaryOperator& T, const State& m);

/// (L, T^k, m). Conditions are preserved under composition.
LSystem power(const LSystem& sys, std::size_t k);
/// (L, T^-1, m). Throws ContractError unless T is bijective.
LSystem inverse(const LSystem& sys);

/// T^n applied blockwise, re-validated. Throws PartitionError when the
/// image is not a partition.
Partition image_partition(const LSystem& sys, const Partition& xi,
                          std::size_t n);

/// A left-folded join evaluated formally: measure-zero blocks are pruned
/// after each step and `valid` records whether every step validated.
struct FormalJoin {
  std::vector<Element> blocks;
  bool valid = true;
};

/// T^first xi v T^(first+1) xi v ... (count terms). count = 0 gives (1).
/// Throws OdotUndefined.
FormalJoin iterated_join_blocks(const LSystem& sys, const Partition& xi,
                                std::size_t first, std::size_t count);

/// xi v T xi v ... v T^(n-1) xi as a partition. Throws OdotUndefined or
/// JoinNotPartition.
Partition iterated_join(const LSystem& sys, const Partition& xi, std::size_t n);

struct EntropyRateEstimate {
  std::size_t truncation = 0;
  /// a_n = H(v_{i<n} T^i xi), n = 1..N.
  std::vector<double> values;
  /// a_N / N.
  double rate = 0;
  bool converged = false;
  /// c_n = H(xi | v_{1<=i<=n} T^i xi), n = 1..N.
  std::vector<double> conditional;
  bool conditional_converged = false;
  /// The reported value of h(T, xi): c_N.
  double estimate = 0;
  /// Every join used was a partition.
  bool joins_valid = true;
  /// a_{n+p} <= a_n + a_p + 1e-9 for all n + p <= N.
  bool subadditive = true;
  std::optional<std::pair<std::size_t, std::size_t>> subadditivity_witness;
  /// c_n non-increasing within 1e-9.
  bool conditional_monotone = true;
};

/// Throws ContractError when N = 0, OdotUndefined when some join is
/// undefined.
EntropyRateEstimate entropy_rate(const LSystem& sys, const Partition& xi,
                                 std::size_t N = kDefaultTruncation,
                                 double tolerance = kDynamicalTolerance,
                                 LogBase base = LogBase::two);

struct SystemEntropy {
  double value = 0;
  std::optional<Partition> argmax;
  std::optional<EntropyRateEstimate> argmax_estimate;
  std::size_t evaluated = 0;  // partitions whose estimate was used
  std::size_t excluded = 0;   // partitions with an invalid or undefined join
  std::size_t max_blocks = 0;
  std::size_t truncation = 0;
  /// Every used estimate flagged conditional convergence.
  bool all_converged = true;
};

/// Supremum of h(T, xi) over valid partitions with at most max_blocks
/// blocks. Partitions with the same multiset of positive-measure blocks are
/// evaluated once.
SystemEntropy system_entropy(const LSystem& sys,
                             std::size_t max_blocks = kDefaultMaxBlocks,
                             std::size_t N = kDefaultTruncation,
                             double tolerance = kDynamicalTolerance,
                             LogBase base = LogBase::two);

struct GeneratorReport {
  bool is_generator = false;
  bool join_valid = false;  // v_{1<=i<=n} T^i xi is a partition
  std::vector<Element> join_blocks;
  std::size_t checked = 0;
  std::vector<Partition> failures;  // first few eta that are not refined
};

GeneratorReport is_generator(const LSystem& sys, const Partition& xi,
                             std::size_t n,
                             std::size_t max_blocks = kDefaultMaxBlocks);

struct IsomorphismReport {
  std::optional<std::pair<Element, Element>> arrow_witness;  // condition i
  std::optional<Element> commute_witness;                    // condition ii
  std::optional<Element> measure_witness;                    // condition iii
  bool zero_preserved = false;
  bool unit_preserved = false;
  std::optional<std::pair<Element, Element>> oplus_witness;
  std::optional<std::pair<Element, Element>> odot_witness;
  std::optional<std::pair<Element, Element>> order_witness;

  bool is_isomorphic() const {
    return !arrow_witness && !commute_witness && !measure_witness;
  }
  bool derived_hold() const {
    return zero_preserved && unit_preserved && !oplus_witness &&
           !odot_witness && !order_witness;
  }
};

/// Throws StructuralError unless phi is a total map from sys1 into sys2.
IsomorphismReport are_isomorphic(const LSystem& sys1, const LSystem& sys2,
                                 const ElementMap& phi);

/// Caps and tolerance shared by the dynamical claim checkers.
struct DynamicsContext {
  std::string scenario;
  std::size_t truncation = kDefaultTruncation;
  std::size_t max_blocks = kDefaultMaxBlocks;
  double tolerance = kDynamicalTolerance;
  LogBase base = LogBase::two;
  OdotFlags flags;
};

/// Image, decomposition, subadditivity, conditional-form and zero-rate
/// claims for one partition.
std::vector<ClaimRecord> check_partition_dynamics(const DynamicsContext& ctx,
                                                  const LSystem& sys,
                                                  const Partition& xi,
                                                  const Partition& eta);

/// The rate inequalities and invariances for a pair of partitions.
std::vector<ClaimRecord> check_rate_properties(const DynamicsContext& ctx,
                                               const LSystem& sys,
                                               const Partition& xi,
                                               const Partition& eta);

/// h(T) = 0 when T is the identity.
ClaimRecord check_identity_zero(const DynamicsContext& ctx, const LSystem& sys);

/// h(T^k) against |k| h(T) with T^k truncated at N and T at |k| N. Negative
/// k requires an invertible T (ContractError otherwise).
ClaimRecord check_power_rule(const DynamicsContext& ctx, const LSystem& sys,
                             int k);

ClaimRecord check_generator_theorem(const DynamicsContext& ctx,
                                    const LSystem& sys, const Partition& xi,
                                    std::size_t n);

/// The derived facts about phi.
ClaimRecord check_isomorphism_derived(const DynamicsContext& ctx,
                                      const LSystem& sys1, const LSystem& sys2,
                                      const ElementMap& phi);

/// h(T1) = h(T2), plus h(T2, phi(xi)) = h(T1, xi) for every enumerated xi.
ClaimRecord check_isomorphism_invariance(const DynamicsContext& ctx,
                                         const LSystem& sys1,
                                         const LSystem& sys2,
                                         const ElementMap& phi);

}  // namespace lalg
