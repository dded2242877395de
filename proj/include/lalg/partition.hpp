#pragma once

#include "lalg/state.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lalg {

class PartitionError : public Error {
 public:
  using Error::Error;
};

/// Block k is not orthogonal to the (+)-fold of the blocks before it.
class BlockOrthogonalityError : public PartitionError {
 public:
  BlockOrthogonalityError(std::size_t index, std::string message)
      : PartitionError(std::move(message)), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class MeasureNotOne : public PartitionError {
 public:
  MeasureNotOne(Rational total, std::string message)
      : PartitionError(std::move(message)), total_(total) {}
  const Rational& total() const noexcept { return total_; }

 private:
  Rational total_;
};

struct PartitionFailure {
  enum class Kind { empty, orthogonality, measure };
  Kind kind = Kind::empty;
  std::size_t index = 0;  // first failing block for orthogonality
  Rational total;         // measure of the fold for measure failures
};

/// Why `blocks` is not a partition under m, if it is not.
std::optional<PartitionFailure> partition_failure(
    const std::vector<Element>& blocks, const State& m);

/// A validated partition of unity: an ordered block sequence, repeats
/// allowed, whose left-to-right (+)-fold is defined and has measure 1.
class Partition {
 public:
  const State& state() const noexcept { return state_; }
  const FiniteLAlgebra& algebra() const noexcept { return state_.algebra(); }
  const std::vector<Element>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  Element operator[](std::size_t i) const { return blocks_.at(i); }
  /// Measure of block i.
  const Rational& measure(std::size_t i) const { return state_(blocks_.at(i)); }
  /// The (+)-fold of all blocks.
  Element sum() const noexcept { return sum_; }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.blocks_ == b.blocks_ && a.state_ == b.state_;
  }

 private:
  friend Partition validate_partition(std::vector<Element>, const State&);
  Partition(State state, std::vector<Element> blocks, Element sum)
      : state_(std::move(state)), blocks_(std::move(blocks)), sum_(sum) {}

  State state_;
  std::vector<Element> blocks_;
  Element sum_;
};

/// Throws PartitionError for an empty sequence, BlockOrthogonalityError(k),
/// or MeasureNotOne(total).
Partition validate_partition(std::vector<Element> blocks, const State& m);

/// The one-block partition (1).
Partition unit_partition(const State& m);

/// "(a, b, ...)" using element names.
std::string describe(const Partition& p);

/// Throws StructuralError unless both partitions share algebra and state.
void require_same_state(const Partition& a, const Partition& b);

/// True iff the fine blocks can be split into disjoint index subsequences,
/// jointly covering all of them, whose increasing-order (+)-folds equal the
/// coarse blocks one by one. An empty subsequence folds to 0.
bool refines(const Partition& fine, const Partition& coarse);

/// Blocks x_i (.) y_j in row-major order (i outer). Throws OdotUndefined
/// naming (i, j).
std::vector<Element> join_blocks(const Partition& xi, const Partition& eta);
std::vector<Element> join_blocks(const FiniteLAlgebra& algebra,
                                 const std::vector<Element>& xi,
                                 const std::vector<Element>& eta);

/// Blocks of nonzero measure, in order.
std::vector<Element> nonzero_blocks(const State& m,
                                    const std::vector<Element>& blocks);

class JoinNotPartition : public PartitionError {
 public:
  JoinNotPartition(std::vector<Element> blocks, PartitionFailure failure,
                   std::string message)
      : PartitionError(std::move(message)), blocks_(std::move(blocks)),
        failure_(failure) {}
  const std::vector<Element>& blocks() const noexcept { return blocks_; }
  const PartitionFailure& failure() const noexcept { return failure_; }

 private:
  std::vector<Element> blocks_;
  PartitionFailure failure_;
};

/// The common refinement, validated. Throws OdotUndefined or
/// JoinNotPartition.
Partition common_refinement(const Partition& xi, const Partition& eta);

/// Drops measure-zero blocks when the remainder is still a partition;
/// otherwise returns p unchanged.
Partition prune_zero_blocks(const Partition& p);

struct JoinCheck {
  std::vector<Element> blocks;
  bool defined = false;        // every x_i (.) y_j defined
  bool is_partition = false;
  bool refines_left = false;   // pruned join refines xi
  bool refines_right = false;  // pruned join refines eta
};

JoinCheck check_join(const Partition& xi, const Partition& eta);

struct BayesCheck {
  bool defined = false;  // every (.) involved is defined
  Rational lhs;          // m((+)xi (.) y)
  Rational sum;          // sum_i m(x_i (.) y)
  Rational target;       // m(y)
  bool def_holds = false;
  bool decomposition_holds = false;
};

/// Evaluates both m((+)xi (.) y) = m(y) and sum_i m(x_i (.) y) = m(y).
BayesCheck has_bayes_property(const Partition& xi, Element y);

struct BayesSummary {
  bool def_holds = true;
  bool decomposition_holds = true;
  std::optional<Element> def_witness;
  std::optional<Element> decomposition_witness;
};

/// Bayes checks of xi against every block of eta.
BayesSummary bayes_against(const Partition& xi, const Partition& eta);

/// Every eta-block has an xi-block with m(x_i (.) y_j) = m(y_j).
bool interior_subset(const Partition& xi, const Partition& eta);
bool interior_equal(const Partition& xi, const Partition& eta);

/// m(x_i (.) y_j) = m(x_i) m(y_j) for all i, j.
bool independent(const Partition& xi, const Partition& eta);

struct DistributivityReport {
  bool left = true;   // x(.)(y(.)z) = (x(.)y)(.)(x(.)z)
  bool right = true;  // (x(.)y)(.)z = (x(.)z)(.)(y(.)z)
  std::optional<std::vector<Element>> left_witness;
  std::optional<std::vector<Element>> right_witness;
  std::vector<std::vector<Element>> undefined;  // triples where (.) fails

  bool holds() const { return undefined.empty() && (left || right); }
};

/// Exhaustive triple scan; a triple where some (.) is undefined counts as a
/// failure of both variants and is listed.
DistributivityReport is_self_distributive(const FiniteLAlgebra& algebra);

struct CommutativityReport {
  bool holds = true;
  std::optional<std::pair<Element, Element>> witness;
  std::vector<std::pair<Element, Element>> undefined;
};

CommutativityReport is_odot_commutative(const FiniteLAlgebra& algebra);

/// Every valid partition with 1..max_blocks blocks, shorter sequences first,
/// then lexicographic. Throws CapacityError when size^max_blocks exceeds
/// `max_candidates`.
std::vector<Partition> enumerate_partitions(const State& m,
                                            std::size_t max_blocks,
                                            std::size_t max_candidates = 2'000'000);

}  // namespace lalg
