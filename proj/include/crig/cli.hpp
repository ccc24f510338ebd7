#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "crig/report.hpp"
#include "crig/rotation.hpp"

namespace crig {

/// Everything a command needs, from flags or the TOML config.
struct RunConfig {
  std::string command;
  std::int64_t iters = kDefaultIterations;
  std::uint64_t seed = 42;
  std::optional<double> tol;  // overrides the relator tolerance of loaded representations
  int jobs = 1;
  std::filesystem::path out;

  std::filesystem::path rep;
  std::filesystem::path pants;
  std::string method = "both";  // relator | pants | both
  std::vector<std::string> words;
  int max_order = 64;

  std::string sig;  // literal "(0;3,3,4)" or a JSON file
  std::string hom;  // JSON file, or "2222g:G" / "334" for the shipped homs
  std::size_t kernel_words = 10000;
  int max_length = 12;

  std::string kind = "surface";  // surface | 2222g | 334
  int genus = 2;

  double lambda = 0.3;
  int depth = 8;
  double point = 0.1234567;
  std::size_t samples = 200;
  int census_depth = 5;
  int mesh = 4096;
  std::size_t sampled_words = 20;
  std::filesystem::path a;
  std::filesystem::path b;
  std::string correspondence = "auto";  // auto | identity | flip | collapse

  std::filesystem::path report;
};

/// A command's report plus the file it produced, if any.
struct CommandOutput {
  Report report;
  std::optional<Json> artifact;
};

CommandOutput cmd_rot(const RunConfig& cfg);
CommandOutput cmd_euler(const RunConfig& cfg);
CommandOutput cmd_orbifold_chi(const RunConfig& cfg);
CommandOutput cmd_verify_cover(const RunConfig& cfg);
CommandOutput cmd_fuchsian_build(const RunConfig& cfg);
CommandOutput cmd_denjoy_blow_up(const RunConfig& cfg);
CommandOutput cmd_denjoy_check(const RunConfig& cfg);
CommandOutput cmd_report_validate(const RunConfig& cfg);

/// Full command line handling: parses arguments (and --config TOML), runs
/// the command, prints the report on stdout and returns the exit code.
int run_cli(int argc, const char* const* argv);

}  // namespace crig
