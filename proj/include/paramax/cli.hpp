#pragma once

/// @file cli.hpp
/// @brief The `paramax` command line as a library entry point.

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "paramax/engine.hpp"

namespace paramax::cli {

inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kNotConverged = 2;
inline constexpr int kUnknown = 3;
inline constexpr int kImpossible = 4;
inline constexpr int kMismatch = 5;

/// Replaceable pieces, for exercising failure paths in tests.
struct Hooks {
  std::function<ParamAnalysisResult(const Cfg&, const AnalysisConfig&)> analyze_param;
};

/// Runs one command; `args` excludes the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks& hooks = {});

}  // namespace paramax::cli
