#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

void add_sampling(CLI::App* app, rcyclic::cli::SamplingFlags& flags) {
  app->add_option("--seed", flags.seed, "seed for sampled evidence")->capture_default_str();
  app->add_option("--grid", flags.grid, "grid points per axis for continuous sets")->capture_default_str();
  app->add_option("--random", flags.random, "random points per continuous set")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace rcyclic::cli;

  CLI::App app{"rcyclic: r-cyclic coverings, circuit decompositions and fixed-point solvers"};
  app.require_subcommand(1);

  ValidateArgs validate;
  auto* validate_cmd = app.add_subcommand("validate", "check metric axioms and the r-cyclic inclusions of an instance");
  validate_cmd->add_option("instance", validate.instance_path, "instance file")->required();
  add_sampling(validate_cmd, validate.sampling);

  DecomposeArgs decompose;
  auto* decompose_cmd = app.add_subcommand("decompose", "split the index cycle into circuits");
  decompose_cmd->add_option("instance", decompose.instance_path, "instance file (alternative to --m/--r)");
  decompose_cmd->add_option("--m", decompose.m, "number of sets");
  decompose_cmd->add_option("--r", decompose.r, "shift");
  decompose_cmd->add_option("--dot", decompose.dot_path, "write a Graphviz file");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "certify the contraction and iterate to the fixed point(s)");
  solve_cmd->add_option("instance", solve.instance_path, "instance file")->required();
  solve_cmd->add_option("--mode", solve.mode, "sync or async (default: from the instance)");
  solve_cmd->add_option("--x0", solve.x0, "start point, e.g. '0.5 0.25' or a label");
  solve_cmd->add_option("--starts", solve.starts, "';'-separated start points (per circuit or per orbit)");
  solve_cmd->add_option("--start-set", solve.start_set, "asynchronous: set holding the first start");
  solve_cmd->add_option("--eps", solve.eps, "stopping tolerance")->capture_default_str();
  solve_cmd->add_option("--max-iter", solve.max_iter, "iteration cap")->capture_default_str();
  solve_cmd->add_option("--trace", solve.trace_path, "write the iterates to a file");
  solve_cmd->add_flag("--timing", solve.timing, "append wall-clock time to the report");
  add_sampling(solve_cmd, solve.sampling);

  GroupArgs group;
  auto* group_cmd = app.add_subcommand("group", "print the shift group table and check its axioms");
  group_cmd->add_option("--m", group.m, "group order")->required();

  GenerateArgs generate;
  auto* generate_cmd = app.add_subcommand("generate", "write a generated instance");
  generate_cmd->add_option("family", generate.family, "finite-shift or sector-rotation")->required();
  generate_cmd->add_option("--m", generate.m, "number of sets")->required();
  generate_cmd->add_option("--r", generate.r, "shift")->required();
  generate_cmd->add_option("--scale", generate.scale, "contraction factor (sector-rotation)")->capture_default_str();
  generate_cmd->add_option("--disks", generate.disks, "number of disks (sector-rotation)")->capture_default_str();
  generate_cmd->add_option("-o,--output", generate.output_path, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (*validate_cmd) return cmd_validate(validate, std::cout, std::cerr);
  if (*decompose_cmd) return cmd_decompose(decompose, std::cout, std::cerr);
  if (*solve_cmd) return cmd_solve(solve, std::cout, std::cerr);
  if (*group_cmd) return cmd_group(group, std::cout, std::cerr);
  return cmd_generate(generate, std::cout, std::cerr);
}
