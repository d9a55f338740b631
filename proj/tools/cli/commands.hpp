#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "rcyclic/metric.hpp"

namespace rcyclic::cli {

/// Process exit statuses shared by every command.
enum ExitStatus : int {
  kSuccess = 0,
  kNegative = 1,  // validation failed, decomposition undefined, or no convergence
  kUsage = 2,     // bad flags, unreadable or malformed input, refused preconditions
};

struct SamplingFlags {
  std::uint64_t seed = kDefaultSeed;
  std::size_t grid = 6;
  std::size_t random = 8;
};

struct ValidateArgs {
  std::string instance_path;
  SamplingFlags sampling;
};

struct DecomposeArgs {
  std::optional<std::string> instance_path;
  std::optional<int> m;
  std::optional<int> r;
  std::optional<std::string> dot_path;
};

struct SolveArgs {
  std::string instance_path;
  std::optional<std::string> mode;         // "sync" | "async"
  std::optional<std::string> x0;           // point spec
  std::optional<std::string> starts;       // ';'-separated point specs
  std::optional<int> start_set;            // asynchronous: set of the first start
  double eps = 1e-9;
  int max_iter = 10000;
  std::optional<std::string> trace_path;
  SamplingFlags sampling;
  bool timing = false;
};

struct GroupArgs {
  int m = 0;
};

struct GenerateArgs {
  std::string family;  // "finite-shift" | "sector-rotation"
  int m = 0;
  int r = 0;
  double scale = 0.5;
  int disks = 1;
  std::optional<std::string> output_path;
};

int cmd_validate(const ValidateArgs& args, std::ostream& out, std::ostream& err);
int cmd_decompose(const DecomposeArgs& args, std::ostream& out, std::ostream& err);
int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err);
int cmd_group(const GroupArgs& args, std::ostream& out, std::ostream& err);
int cmd_generate(const GenerateArgs& args, std::ostream& out, std::ostream& err);

}  // namespace rcyclic::cli
