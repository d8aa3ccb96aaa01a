#pragma once

/// @file verify.hpp
/// @brief Executable checks of the parameterized analysis against per-subset
///        baseline runs and against the collecting semantics.

#include <cstddef>
#include <string>
#include <vector>

#include "paramax/collecting.hpp"
#include "paramax/engine.hpp"

namespace paramax {

struct Mismatch {
  AssumptionSet subset;
  NodeId node = 0;
  /// Reference value (baseline state or concrete state), rendered.
  std::string expected;
  /// Parameterized state under the subset, rendered.
  std::string actual;
};

struct VerificationReport {
  std::string theorem;
  std::string program;
  std::size_t subsets_checked = 0;
  std::vector<Mismatch> mismatches;
  /// Subsets that could not be checked (non-converged analyses).
  std::vector<AssumptionSet> skipped;
  /// Subsets whose concrete exploration was truncated.
  std::vector<AssumptionSet> partial;
  /// "equality" or "containment" for the lock-step check, "membership" for
  /// soundness.
  std::string mode;

  [[nodiscard]] bool passed() const { return mismatches.empty() && skipped.empty(); }
};

/// For every subset A: the baseline on the restricted program against
/// rho(param, A) at every node. Exact equality when neither widening nor a
/// merge budget is configured, otherwise baseline below parameterized.
VerificationReport verify_theorem1(const Cfg& cfg, const AnalysisConfig& config,
                                   const std::string& program = {});
VerificationReport verify_theorem1(const Cfg& cfg, const AnalysisConfig& config,
                                   const ParamAnalysisResult& param,
                                   const std::string& program = {});

/// For every subset A: every state collected on the restricted program lies
/// in the concretization of rho(param, A) at its node.
VerificationReport verify_soundness(const Cfg& cfg, const AnalysisConfig& config,
                                    const CollectingConfig& collecting,
                                    const std::string& program = {});
VerificationReport verify_soundness(const Cfg& cfg, const ParamAnalysisResult& param,
                                    const CollectingConfig& collecting,
                                    const std::string& program = {});

}  // namespace paramax
