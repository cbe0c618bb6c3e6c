#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "equicode/code.hpp"
#include "equicode/codes.hpp"
#include "equicode/matcore.hpp"

namespace equicode {

/// Distinct off-diagonal inner products, clustered within angle_tol, as a
/// point set; nullopt when there are more than `max_points` clusters.
std::optional<AngleSet> observed_angle_set(const Code& code, const Tolerance& tol, std::size_t max_points = 64);

namespace cli {

enum ExitCode : int { kPass = 0, kCertifiedFail = 1, kUsage = 2, kRuntime = 3 };

inline constexpr const char* kArtifactVersion = "0.1.0";

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cli
}  // namespace equicode
