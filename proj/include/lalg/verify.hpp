#pragma once

#include "lalg/dynamics.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lalg {

/// One row of the traceability matrix: every evaluation of one claim.
struct ClaimSummary {
  std::string id;
  std::string statement;
  Verdict verdict = Verdict::hypothesis_not_met;
  std::size_t holds = 0;
  std::size_t fails = 0;
  std::size_t not_met = 0;
  std::size_t not_assertable = 0;
  /// First failing record, else first holding, else first of any kind.
  std::optional<ClaimRecord> representative;

  std::size_t evaluations() const {
    return holds + fails + not_met + not_assertable;
  }
};

struct VerifyReport {
  std::string bundle;
  std::vector<ClaimSummary> claims;
  std::vector<ClaimRecord> records;
  /// Scenarios evaluated in lenient mode.
  std::vector<std::string> lenient_scenarios;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
  const ClaimSummary* find(std::string_view id) const;
};

/// Groups records by claim id in registry order. With `full_registry` every
/// registered claim gets a row, evaluated or not.
VerifyReport aggregate(std::vector<ClaimRecord> records, bool full_registry);

struct VerifyOptions {
  LogBase base = LogBase::two;
  double tolerance = kStructuralTolerance;
  double dynamical_tolerance = kDynamicalTolerance;
  /// Block cap for entropy and information-gain sweeps.
  std::size_t sweep_blocks = 3;
  /// Block cap for h(T) and generator searches.
  std::size_t max_blocks = kDefaultMaxBlocks;
  std::size_t truncation = kDefaultTruncation;
};

/// Bundle names accepted by run_bundle.
const std::vector<std::string>& bundle_names();

/// "paper": every registered claim over the bundled fixtures.
/// "degenerate-four": the lenient {0,a,b,1} table, its state and (0,a), (0,b).
/// "empty": no scenarios.
/// "corrupted": one state that violates additivity.
/// Throws ContractError for other names.
VerifyReport run_bundle(const std::string& name,
                        const VerifyOptions& options = {});

}  // namespace lalg
