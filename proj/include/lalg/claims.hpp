#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lalg {

enum class Verdict { holds, fails, hypothesis_not_met, not_assertable };

std::string_view to_string(Verdict verdict) noexcept;

struct Hypothesis {
  std::string name;
  bool met = false;
};

/// One evaluation of one registered claim in one scenario.
struct ClaimRecord {
  std::string id;
  std::string statement;
  std::string scenario;
  std::vector<Hypothesis> hypotheses;
  std::optional<double> lhs;
  std::optional<double> rhs;
  std::optional<double> delta;
  Verdict verdict = Verdict::holds;
  std::string witness;
  std::string note;

  bool hypotheses_met() const;
};

struct ClaimInfo {
  std::string_view id;
  std::string_view statement;
};

/// Every claim the verification harness knows, in report order.
const std::vector<ClaimInfo>& claim_registry();

/// Statement text for a registered id. Throws ContractError for unknown ids.
std::string_view claim_statement(std::string_view id);

/// Starts a record for a registered claim.
ClaimRecord make_claim(std::string_view id, std::string scenario,
                       std::vector<Hypothesis> hypotheses = {});

/// Sets lhs/rhs/delta and the verdict for lhs = rhs within tolerance. Any
/// unmet hypothesis turns the verdict into hypothesis_not_met.
ClaimRecord& decide_equal(ClaimRecord& rec, double lhs, double rhs,
                          double tolerance);
/// Verdict for lhs <= rhs + tolerance.
ClaimRecord& decide_at_most(ClaimRecord& rec, double lhs, double rhs,
                            double tolerance);
/// Verdict for an exactly decided statement.
ClaimRecord& decide(ClaimRecord& rec, bool holds, std::string witness = {});

}  // namespace lalg
