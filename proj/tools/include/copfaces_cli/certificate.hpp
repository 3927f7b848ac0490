#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "copfaces_cli/problem_file.hpp"

namespace copfaces::cli {

/// 64-bit FNV-1a of the canonical problem text, as "fnv1a64:<16 hex digits>".
std::string inputs_digest(const ProblemFile& problem);

/// Output document of one command. Transcript entries name the matrix they
/// evaluate so that they can be recomputed from the inputs:
///   "input", "generator/<i>" (0-based), "outputs/<key>", or "map" with "x".
struct Certificate {
  std::string operation;
  std::string digest;
  Json parameters = Json::object();
  Json outputs = Json::object();
  Json transcript = Json::array();
  /// Stable "key: value" lines for --format text.
  std::vector<std::pair<std::string, std::string>> report;
  int exit_code = 0;

  void record_quad(const std::string& matrix_ref, const SimplexVector& t, const Scalar& value, const Json& extra = {});
  /// k is 0-based; stored 1-based.
  void record_row(const std::string& matrix_ref, const SimplexVector& t, int k, const Scalar& value,
                  const Json& extra = {});
  void record_min(const std::string& matrix_ref, const Scalar& value, const Json& extra = {});
  void record_inner(const std::string& matrix_ref, const std::string& other_ref, const Scalar& value);
  void add(const std::string& key, std::string value) { report.emplace_back(key, std::move(value)); }

  [[nodiscard]] Json to_json() const;
  [[nodiscard]] std::string to_text() const;
};

struct ReplayResult {
  std::size_t checked = 0;
  std::vector<std::string> mismatches;
  [[nodiscard]] bool ok() const { return mismatches.empty(); }
};

/// Recomputes every transcript entry against the problem and the recorded
/// outputs.
ReplayResult replay_transcript(const ProblemFile& problem, const Json& certificate, const Limits& limits = {});

}  // namespace copfaces::cli
