#pragma once

namespace gsqg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitBlowUp = 3;

/// gsqg <simulate-beta|simulate-log|simulate-patch|verify-estimates>
///      --config <path> [--out <dir>] [--seed <int>] [--quiet]
int run_cli(int argc, const char* const* argv);

}  // namespace gsqg
