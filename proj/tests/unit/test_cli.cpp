#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "rcyclic/instances.hpp"

using namespace rcyclic::cli;
namespace fs = std::filesystem;

namespace {

struct Output {
  int status;
  std::string out;
  std::string err;
};

template <class Args, class Fn>
Output run(Fn fn, const Args& args) {
  std::ostringstream out, err;
  const int status = fn(args, out, err);
  return {status, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("rcyclic_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const rcyclic::InstanceSpec& spec) {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << rcyclic::serialize(spec);
    return path;
  }

  fs::path dir_;
};

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

}  // namespace

TEST_F(CliTest, DecomposeFromFlags) {
  const auto res = run(cmd_decompose, DecomposeArgs{std::nullopt, 12, 8, std::nullopt});
  EXPECT_EQ(res.status, kSuccess);
  EXPECT_TRUE(has_line(res.out, "circuit 1: [1, 9, 5]"));
  EXPECT_TRUE(has_line(res.out, "k: 4"));
}

TEST_F(CliTest, DecomposeStatuses) {
  EXPECT_EQ(run(cmd_decompose, DecomposeArgs{std::nullopt, 6, 6, std::nullopt}).status, kNegative);
  EXPECT_EQ(run(cmd_decompose, DecomposeArgs{std::nullopt, 6, 0, std::nullopt}).status, kUsage);
  EXPECT_EQ(run(cmd_decompose, DecomposeArgs{std::nullopt, 6, std::nullopt, std::nullopt}).status, kUsage);
  const auto path = write("s.txt", rcyclic::gen_sector_rotation(4, 2, 0.5, 2));
  const auto dot = (dir_ / "g.dot").string();
  const auto res = run(cmd_decompose, DecomposeArgs{path, std::nullopt, std::nullopt, dot});
  EXPECT_EQ(res.status, kSuccess);
  EXPECT_TRUE(has_line(res.out, "circuit 2: [2, 4]"));
  EXPECT_TRUE(fs::exists(dot));
}

TEST_F(CliTest, ValidateReportsWitness) {
  auto spec = rcyclic::gen_finite_shift(4, 1);
  spec.r = 2;
  const auto res = run(cmd_validate, ValidateArgs{write("f.txt", spec), {}});
  EXPECT_EQ(res.status, kNegative);
  EXPECT_TRUE(has_line(res.out, "witness: (1, x1, x2)")) << res.out;
  EXPECT_TRUE(has_line(res.out, "evidence: PROVED"));
  EXPECT_TRUE(has_line(res.out, "seed: 20240611"));
  EXPECT_EQ(run(cmd_validate, ValidateArgs{write("g.txt", rcyclic::gen_finite_shift(4, 1)), {}}).status, kSuccess);
  EXPECT_EQ(run(cmd_validate, ValidateArgs{(dir_ / "missing.txt").string(), {}}).status, kUsage);
}

TEST_F(CliTest, SolveCoprimeSectorAndTrace) {
  SolveArgs args;
  args.instance_path = write("s.txt", rcyclic::gen_sector_rotation(5, 2, 0.5, 1));
  args.trace_path = (dir_ / "trace.txt").string();
  const auto res = run(cmd_solve, args);
  EXPECT_EQ(res.status, kSuccess) << res.err;
  EXPECT_TRUE(has_line(res.out, "status: converged"));
  EXPECT_TRUE(has_line(res.out, "count: 1"));
  std::ifstream trace(*args.trace_path);
  std::string first;
  std::getline(trace, first);
  EXPECT_EQ(first, "# rcyclic trace v1");
}

TEST_F(CliTest, SolveDecomposedAndAsync) {
  SolveArgs args;
  args.instance_path = write("s.txt", rcyclic::gen_sector_rotation(4, 2, 0.5, 2));
  auto res = run(cmd_solve, args);
  EXPECT_EQ(res.status, kSuccess) << res.err;
  EXPECT_TRUE(has_line(res.out, "partition: pairwise-disjoint")) << res.out;

  args.instance_path = write("a.txt", rcyclic::gen_sector_rotation(7, 4, 0.5, 1));
  args.mode = "async";
  res = run(cmd_solve, args);
  EXPECT_EQ(res.status, kSuccess) << res.err;
  EXPECT_TRUE(has_line(res.out, "solver: asynchronous, 4 lockstep orbits"));
}

TEST_F(CliTest, SolveRefusesNonContractions) {
  SolveArgs args;
  args.instance_path = write("f.txt", rcyclic::gen_finite_shift(5, 2));
  const auto res = run(cmd_solve, args);
  EXPECT_EQ(res.status, kUsage);
  EXPECT_NE(res.err.find("certificate refused"), std::string::npos);
  args.mode = "sideways";
  EXPECT_EQ(run(cmd_solve, args).status, kUsage);
}

TEST_F(CliTest, SolveUsesExplicitStart) {
  SolveArgs args;
  args.instance_path = write("s.txt", rcyclic::gen_sector_rotation(3, 1, 0.5, 1));
  args.x0 = "0.5, 0.1";
  const auto res = run(cmd_solve, args);
  EXPECT_EQ(res.status, kSuccess) << res.err;
  EXPECT_TRUE(has_line(res.out, "start: (0.5, 0.1)"));
  args.x0 = "0.5 abc";
  EXPECT_EQ(run(cmd_solve, args).status, kUsage);
}

TEST_F(CliTest, ReportsAreDeterministic) {
  SolveArgs args;
  args.instance_path = write("s.txt", rcyclic::gen_sector_rotation(6, 2, 0.5, 1));
  EXPECT_EQ(run(cmd_solve, args).out, run(cmd_solve, args).out);
  args.timing = true;
  EXPECT_NE(run(cmd_solve, args).out.find("elapsed seconds: "), std::string::npos);
}

TEST_F(CliTest, GroupTable) {
  const auto res = run(cmd_group, GroupArgs{3});
  EXPECT_EQ(res.status, kSuccess);
  EXPECT_TRUE(has_line(res.out, " 1 | 2 3 1"));
  EXPECT_TRUE(has_line(res.out, "result: abelian group"));
  EXPECT_EQ(run(cmd_group, GroupArgs{65}).status, kUsage);
}

TEST_F(CliTest, GenerateWritesLoadableDocument) {
  const auto path = (dir_ / "gen.txt").string();
  EXPECT_EQ(run(cmd_generate, GenerateArgs{"sector-rotation", 6, 2, 0.5, 2, path}).status, kSuccess);
  EXPECT_EQ(rcyclic::load_instance_file(path), rcyclic::gen_sector_rotation(6, 2, 0.5, 2));
  const auto res = run(cmd_generate, GenerateArgs{"finite-shift", 3, 1, 0.5, 1, std::nullopt});
  EXPECT_EQ(res.out, rcyclic::serialize(rcyclic::gen_finite_shift(3, 1)));
  EXPECT_EQ(run(cmd_generate, GenerateArgs{"spiral", 3, 1, 0.5, 1, std::nullopt}).status, kUsage);
  EXPECT_EQ(run(cmd_generate, GenerateArgs{"finite-shift", 1, 1, 0.5, 1, std::nullopt}).status, kUsage);
}
