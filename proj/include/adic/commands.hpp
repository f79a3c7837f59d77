#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "adic/spec_format.hpp"

namespace adic {

struct CommandOptions {
  std::optional<int> depth;
  std::optional<int> level;
  std::optional<int> vertex;
  std::optional<int> window;
  std::optional<int> period_bound;
  std::optional<std::string> seed;
  std::optional<int> base_level;  // for trace
  std::string format = "text";    // "text" or "json"
};

/// Result of one command run: a human-readable text body, the byte-stable
/// JSON report, and the process exit code (0 verified/constructed,
/// 1 refuted/witness found, 2 usage error).
struct RunReport {
  std::string command;
  std::string text;
  nlohmann::json body;
  int exit_code = 0;

  std::string json_string() const;
};

extern const char* const kToolVersion;

/// Dispatches one command over a parsed spec. Commands: validate, simple,
/// vershik, trace, skew, triple, quotient, square, loops, cohomology,
/// toeplitz, emit-dot, emit-json.
RunReport run_command(const SpecDocument& doc, const std::string& spec_text,
                      const std::string& command, const CommandOptions& options);

}  // namespace adic
