#pragma once

#include "vpoly/bkk.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace vpoly::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitVerification = 2;

struct RunConfig {
  std::string subcommand;
  std::optional<std::string> input_path;
  std::optional<std::string> input_json;
  std::optional<std::string> output_path;
  std::optional<std::string> svg_path;
  std::uint64_t seed = 0;
  RootTolerances tol;
};

/// Names of every subcommand, in help order.
std::vector<std::string> subcommands();

/// Executes one subcommand. Result JSON (or the error object) goes to the
/// output path when set, else to `out`; the suite table always goes to `out`.
int run(const RunConfig& config, std::ostream& out);

/// Parses argv with CLI11 and runs. Usage errors exit with kExitInput.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace vpoly::cli
