#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coinv {

/// Exit statuses of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInvalidInput = 2;

/// Runs one subcommand. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Segmented permutations of [n] next to their basis elements and statistics,
/// as CSV. Rows are ordered by block count, then bar positions, then permutation.
std::string bijection_csv(int n);

}  // namespace coinv
