#pragma once

/// @file consistency.hpp
/// @brief Bounds on the consistent assumption sets, the fixpoints of the
///        operator Phi(A) = {a | the analysis under A does not refute a}.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "paramax/condition.hpp"
#include "paramax/engine.hpp"

namespace paramax {

enum class Classification { InEveryConsistentSet, InSomeConsistentSet, NeverConsistent };
const char* to_string(Classification c);

/// B_a: the disjunction of the conditions of the rules at a's assume node
/// whose state is infeasible for a's constraint. Throws std::out_of_range
/// for an unknown assumption index.
Condition refuting_condition(const ParamAnalysisResult& param, const Cfg& cfg, std::size_t a);

/// Phi evaluated through the refuting conditions.
class PhiOperator {
 public:
  PhiOperator(const ParamAnalysisResult& param, const Cfg& cfg);

  [[nodiscard]] AssumptionSet operator()(AssumptionSet a) const;
  [[nodiscard]] std::size_t width() const { return refuting_.size(); }
  [[nodiscard]] const std::vector<Condition>& refuting_conditions() const { return refuting_; }

 private:
  std::vector<Condition> refuting_;
};

AssumptionSet phi(const ParamAnalysisResult& param, const Cfg& cfg, AssumptionSet a);

struct Bounds {
  /// Least fixpoint of Phi twice.
  AssumptionSet mu;
  /// Phi(mu), the greatest fixpoint of Phi twice.
  AssumptionSet nu;
  /// Iterating Phi twice downward from the full set reached nu.
  bool agree = true;
};

Bounds bounds(const PhiOperator& phi);
Bounds bounds(const ParamAnalysisResult& param, const Cfg& cfg);

inline constexpr std::size_t kBruteForceLimit = 12;

/// Every A with Phi(A) = A, ascending. Throws std::length_error for more
/// than kBruteForceLimit assumptions.
std::vector<AssumptionSet> brute_force_fixpoints(const PhiOperator& phi);
std::vector<AssumptionSet> brute_force_fixpoints(const ParamAnalysisResult& param,
                                                 const Cfg& cfg);

struct ConsistencyReport {
  AssumptionSet mu;
  AssumptionSet nu;
  bool bounds_agree = true;
  std::vector<Classification> classification;
  std::vector<Condition> refuting;
  /// Phi(A) for every A, indexed by bit field.
  std::optional<std::vector<AssumptionSet>> phi_table;
  std::optional<std::vector<AssumptionSet>> fixpoints;
  /// The analysis was approximated by a merge budget.
  bool approximate = false;
};

struct ConsistencyOptions {
  /// Include the phi table when |A| is at most this.
  std::size_t phi_table_limit = 6;
  /// Include brute-forced fixpoints when |A| is at most this.
  std::size_t fixpoint_limit = kBruteForceLimit;
};

ConsistencyReport report(const ParamAnalysisResult& param, const Cfg& cfg,
                         const ConsistencyOptions& options = {});

}  // namespace paramax
