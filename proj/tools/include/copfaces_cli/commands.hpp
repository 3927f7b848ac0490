#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "copfaces_cli/certificate.hpp"

namespace copfaces::cli {

struct Options {
  int grid = 8;
  std::uint64_t seed = 0;
  int max_p = 8;
  std::size_t budget = 200;

  [[nodiscard]] Limits limits() const;
  [[nodiscard]] Json to_json() const;
};

Certificate cmd_check_cop(const ProblemFile& problem, const Options& options);
Certificate cmd_zeros(const ProblemFile& problem, const Options& options);
Certificate cmd_minimal_zeros(const ProblemFile& problem, const Options& options);
Certificate cmd_face(const ProblemFile& problem, const Options& options);
/// Uses `decomposition` when given, else the one in the file, else a seeded
/// random G-tilde element.
Certificate cmd_dual(const ProblemFile& problem, const Options& options,
                     const std::optional<DualDecomposition>& decomposition = std::nullopt);
Certificate cmd_regularize(const ProblemFile& problem, const Options& options);
Certificate cmd_solve(const ProblemFile& problem, const Options& options);
Certificate cmd_verify(const ProblemFile& problem, const Json& certificate, const Options& options);

/// Dispatch by command name ("check-cop", "zeros", ...). Throws Error on an
/// unknown name.
Certificate run_command(const std::string& name, const ProblemFile& problem, const Options& options);

}  // namespace copfaces::cli
