#pragma once

/// @file serialize.hpp
/// @brief JSON documents for analysis, synthesis, consistency and
///        verification results.

#include <string>
#include <vector>

#include <json.hpp>

#include "paramax/cfg.hpp"
#include "paramax/consistency.hpp"
#include "paramax/engine.hpp"
#include "paramax/synthesis.hpp"
#include "paramax/verify.hpp"

namespace paramax {

using Json = nlohmann::ordered_json;

/// [lo, hi] with "-inf" / "+inf" for the sentinels.
Json to_json(const Interval& i);
/// "bottom" or an object from variable name to interval.
Json to_json(const IntervalEnv& s, VarNames names);
Json to_json(AssumptionSet s, const std::vector<std::string>& labels);
/// List of {condition, condition_sets, state}.
Json to_json(const ParamState& x, const Cfg& cfg);
Json to_json(const AnalysisConfig& c);

/// {program, variables, assumptions, nodes, meta}.
Json analysis_document(const std::string& program, const Cfg& cfg,
                       const ParamAnalysisResult& r, const AnalysisConfig& config);

Json to_json(const SynthesisOutcome& o, const Cfg& cfg);
Json to_json(const SynthesisCheck& c, const Cfg& cfg);
Json to_json(const ConsistencyReport& r, const Cfg& cfg);
Json to_json(const VerificationReport& r, const Cfg& cfg);

}  // namespace paramax
